"""The psi_n / Psi_n operator calculus.

``psi_n`` folds a power series in ``t`` into ``z`` and ``t``: the exponent ``m``
is written uniquely as ``m = n*i - j`` with ``0 <= j < n`` and ``t^m`` goes to
``z^i t^j``.  ``Psi_n`` reflects the t-exponent of a bivariate series,
``z^i t^j -> z^i t^(n*i - j)``, dropping terms that would go negative.

Applied to ``R(t) / prod (1 - t^k)``, psi_n reduces to a polynomial computation:
multiply ``R`` by ``Q_n(t^k) = 1 + t^k + ... + t^((n-1)k)`` for every factor,
fold the product, and put ``prod (1 - z^k)`` underneath.
"""
from __future__ import annotations

from typing import Iterable

import numpy as np

from .poly import BinomFactor, FactoredRational, TPoly, ZTPoly, mul_t

__all__ = [
    "psi_monomial",
    "psi_poly",
    "qgeom",
    "psi_rational",
    "big_psi_truncated",
]


def psi_monomial(n: int, m: int) -> ZTPoly:
    """Image of ``t^m`` under psi_n."""
    if m < 0:
        raise ValueError("exponent must be nonnegative")
    if n < 0:
        return ZTPoly()
    if n == 0:
        return ZTPoly({(0, 0): 1})
    i = -(-m // n)
    return ZTPoly.monomial(i, n * i - m)


def psi_poly(n: int, p: TPoly) -> ZTPoly:
    """Linear extension of :func:`psi_monomial` to a polynomial."""
    if n < 0 or p.is_zero():
        return ZTPoly()
    c = p.coeffs
    if n == 0:
        return ZTPoly({(0, 0): sum(c)})
    rows = -(-p.degree // n) + 1
    m = n * np.arange(rows)[:, None] - np.arange(n)[None, :]
    ok = (m >= 0) & (m <= p.degree)
    grid = np.zeros((rows, n), dtype=object)
    grid[ok] = c[m[ok]]
    return ZTPoly._wrap(grid)


def qgeom(n: int, k: int) -> TPoly:
    """``1 + t^k + t^(2k) + ... + t^((n-1)k)``."""
    if n < 1 or k < 1:
        raise ValueError("qgeom needs positive n and k")
    return TPoly({e * k: 1 for e in range(n)})


def psi_rational(n: int, numerator: TPoly, denom_exponents: Iterable[int]) -> FactoredRational:
    """psi_n of ``numerator / prod (1 - t^k)``, left unnormalised."""
    if n < 1:
        raise ValueError("psi_rational needs n >= 1")
    ks = sorted(denom_exponents)
    if any(k < 1 for k in ks):
        raise ValueError("denominator exponents must be positive")
    p = numerator
    for k in ks:
        p = mul_t(p, qgeom(n, k))
    return FactoredRational(psi_poly(n, p), tuple(BinomFactor(k, 0) for k in ks))


def big_psi_truncated(n: int, S: ZTPoly, imax: int, jmax: int) -> ZTPoly:
    """Psi_n(S) restricted to ``i <= imax``, ``j <= jmax``.

    The coefficient at ``(i, j)`` is read from ``S`` at ``(i, n*i - j)``, so
    ``S`` must be complete up to t-degree ``n*imax``.
    """
    if n < 1:
        raise ValueError("Psi_n needs n >= 1")
    if imax < 0 or jmax < 0:
        return ZTPoly()
    src = S.grid(imax, n * imax)
    i = np.arange(imax + 1)[:, None]
    src_j = n * i - np.arange(jmax + 1)[None, :]
    ok = src_j >= 0
    out = np.zeros((imax + 1, jmax + 1), dtype=object)
    out[ok] = src[np.broadcast_to(i, ok.shape)[ok], src_j[ok]]
    return ZTPoly._wrap(out)
