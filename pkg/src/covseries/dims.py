"""Dimensions of the graded pieces of the covariant algebra of a binary form.

Three independent routes to ``dim(C_d)_{i,j}``:

* :func:`dim_cov`, a difference of two restricted partition counts;
* :func:`dim_cov_qbin`, a coefficient of ``(1 - t)`` times a Gaussian polynomial;
* the truncated expansion of the Poincaré series (see :mod:`covseries.springer`).

:func:`omega` is the shared combinatorial primitive.  It takes the already
resolved weighted sum ``m``; every parity question lives in the ``dim_*``
wrappers.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .poly import TPoly, exact_div_t, mul_t

__all__ = [
    "omega",
    "omega_row",
    "dim_cov",
    "dim_inv",
    "dim_cov_graded",
    "qbinomial",
    "dim_cov_qbin",
    "DimTable",
    "dim_table",
]


def _check_degree(d: int) -> None:
    if d < 1:
        raise ValueError(f"form degree must be positive, got {d}")


@lru_cache(maxsize=None)
def omega_row(d: int, n: int) -> tuple[int, ...]:
    """``(omega(d, n, 0), ..., omega(d, n, d*n))``.

    Counts partitions into at most ``n`` parts of size at most ``d``, built by
    a knapsack over part sizes ``1..d`` with state (parts used, sum).
    """
    _check_degree(d)
    if n < 0:
        raise ValueError("n must be nonnegative")
    top = d * n
    ways = np.zeros((n + 1, top + 1), dtype=object)
    ways[0, 0] = 1
    for part in range(1, d + 1):
        if part > top:
            break
        for used in range(1, n + 1):
            ways[used, part:] += ways[used - 1, : top + 1 - part]
    return tuple(int(x) for x in ways.sum(axis=0))


def omega(d: int, n: int, m: int) -> int:
    """Number of ``(a_0, ..., a_d) >= 0`` with ``sum a_k = n`` and ``sum k*a_k = m``."""
    if m < 0 or m > d * n:
        _check_degree(d)
        return 0
    return omega_row(d, n)[m]


def dim_cov(d: int, i: int, j: int) -> int:
    """Dimension of the covariants of degree ``i`` and order ``j``."""
    _check_degree(d)
    w = d * i - j
    if w < 0 or w % 2:
        return 0
    return omega(d, i, w // 2) - omega(d, i, w // 2 - 1)


def dim_inv(d: int, n: int) -> int:
    """Cayley-Sylvester count of the invariants of degree ``n``."""
    _check_degree(d)
    if (d * n) % 2:
        return 0
    return omega(d, n, d * n // 2) - omega(d, n, d * n // 2 - 1)


def dim_cov_graded(d: int, n: int) -> int:
    """Total dimension of the degree ``n`` covariants, all orders together.

    Of the two counts ``omega(d, n, dn/2)`` and ``omega(d, n, (dn-1)/2)`` only
    the one with an integral argument contributes.
    """
    _check_degree(d)
    dn = d * n
    return omega(d, n, dn // 2) if dn % 2 == 0 else omega(d, n, (dn - 1) // 2)


@lru_cache(maxsize=None)
def qbinomial(d: int, n: int) -> TPoly:
    """Gaussian polynomial ``(1-t^{d+1})...(1-t^{d+n}) / ((1-t)...(1-t^n))``."""
    if d < 0 or n < 0:
        raise ValueError("qbinomial arguments must be nonnegative")
    p = TPoly({0: 1})
    for k in range(d + 1, d + n + 1):
        p = mul_t(p, TPoly({0: 1, k: -1}))
    for k in range(1, n + 1):
        p = exact_div_t(p, TPoly({0: 1, k: -1}))
    return p


def dim_cov_qbin(d: int, i: int, j: int) -> int:
    """``dim(C_d)_{i,j}`` read off ``(1 - t) * qbinomial(d, i)``."""
    _check_degree(d)
    w = d * i - j
    if w < 0 or w % 2:
        return 0
    return mul_t(TPoly({0: 1, 1: -1}), qbinomial(d, i))[w // 2]


@dataclass(frozen=True)
class DimTable:
    d: int
    imax: int
    jmax: int
    entries: np.ndarray

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries[key]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i\\j", *range(self.jmax + 1)])
        for i in range(self.imax + 1):
            w.writerow([i, *(int(x) for x in self.entries[i])])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "imax": self.imax,
            "jmax": self.jmax,
            "entries": [[int(x) for x in row] for row in self.entries],
        }


def dim_table(d: int, imax: int, jmax: int) -> DimTable:
    """Grid of :func:`dim_cov` values for ``i <= imax``, ``j <= jmax``."""
    _check_degree(d)
    if imax < 0 or jmax < 0:
        raise ValueError("table bounds must be nonnegative")
    grid = np.zeros((imax + 1, jmax + 1), dtype=object)
    for i in range(imax + 1):
        for j in range(min(jmax, d * i) + 1):
            v = dim_cov(d, i, j)
            if v < 0:
                raise ArithmeticError(f"negative dimension at d={d}, (i,j)=({i},{j})")
            grid[i, j] = v
    grid.flags.writeable = False
    return DimTable(d, imax, jmax, grid)
