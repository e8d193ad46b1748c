"""Closed form of the bivariate Poincaré series ``P_d(z, t)``.

Each pole ``z = t^(-2k)`` of ``1/((1-z)(1-z t^2)...(1-z t^(2d)))`` with
``2k < d`` contributes one residue term

    (-1)^k t^(k(k+1)) (1 - t^2) / ((t^2; t^2)_k (t^2; t^2)_(d-k)),

which is folded by psi_(d-2k) and divided by ``1 - z t^(d-2k)``.  The terms are
summed over a common factored denominator and reduced.  :func:`verify_dimensions`
checks the result against the partition-count oracle in :mod:`covseries.dims`.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .dims import dim_cov_graded, dim_inv, dim_table
from .poly import (
    BinomFactor,
    FactoredRational,
    TPoly,
    expand_truncated,
    normalize,
    sum_rational,
)
from .psi import psi_rational

__all__ = [
    "ResidueTerm",
    "qpochhammer_exponents",
    "residue_term",
    "poincare_series",
    "VerificationReport",
    "verify_dimensions",
]


@dataclass(frozen=True)
class ResidueTerm:
    k: int
    sign: int
    tshift: int
    numerator: TPoly
    denom_exponents: tuple[int, ...]
    order: int
    cov_factor: BinomFactor

    def folded(self) -> FactoredRational:
        """psi_order of the residue times ``1/(1 - z t^order)``."""
        part = psi_rational(self.order, self.numerator, self.denom_exponents)
        return FactoredRational(part.numerator, part.denominator + (self.cov_factor,))


def qpochhammer_exponents(n: int) -> tuple[int, ...]:
    """t-exponents of the factors of ``(t^2; t^2)_n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(range(2, 2 * n + 1, 2))


def residue_term(d: int, k: int, cancel: bool = True) -> ResidueTerm:
    """Residue of ``f_d(z, t^2)`` at the pole ``z = t^(-2k)``.

    With ``cancel`` the numerator's ``(1 - t^2)`` is struck against one copy of
    ``(1 - t^2)`` in the denominator.
    """
    if d < 1:
        raise ValueError("form degree must be positive")
    if k < 0 or 2 * k >= d:
        raise ValueError(f"residue index k={k} outside 0 <= k < d/2 for d={d}")
    sign = -1 if k % 2 else 1
    tshift = k * (k + 1)
    exps = sorted(qpochhammer_exponents(k) + qpochhammer_exponents(d - k))
    if cancel:
        exps.remove(2)
        num = TPoly({tshift: sign})
    else:
        num = TPoly({tshift: sign, tshift + 2: -sign})
    return ResidueTerm(k, sign, tshift, num, tuple(exps), d - 2 * k, BinomFactor(1, d - 2 * k))


def poincare_series(d: int, cancel: bool = True) -> FactoredRational:
    """Reduced rational form of ``P_d(z, t)``."""
    if d < 1:
        raise ValueError("form degree must be positive")
    terms = [residue_term(d, k, cancel).folded() for k in range((d + 1) // 2)]
    return normalize(sum_rational(terms))


@dataclass
class VerificationReport:
    d: int
    imax: int
    jmax: int
    # (i, j, expected from the oracle, got from the series)
    mismatches: list[tuple[int, int, int, int]] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches and not self.failures

    def lines(self) -> list[str]:
        out = [f"({i},{j}): expected {e}, got {g}" for i, j, e, g in self.mismatches]
        return out + self.failures


def verify_dimensions(
    d: int, imax: int, jmax: int, series: FactoredRational | None = None
) -> VerificationReport:
    """Compare the series expansion with the dimension oracle, cell by cell."""
    if series is None:
        series = poincare_series(d)
    report = VerificationReport(d, imax, jmax)
    got = expand_truncated(series, imax, jmax).grid(imax, jmax)
    table = dim_table(d, imax, jmax)
    for i in range(imax + 1):
        for j in range(jmax + 1):
            if got[i, j] != table[i, j]:
                report.mismatches.append((i, j, int(table[i, j]), int(got[i, j])))
    for i in range(imax + 1):
        if table[i, 0] != dim_inv(d, i):
            report.failures.append(f"invariants at degree {i}: {table[i, 0]} != {dim_inv(d, i)}")
        if d * i <= jmax and sum(table.entries[i]) != dim_cov_graded(d, i):
            report.failures.append(
                f"row sum at degree {i}: {sum(table.entries[i])} != {dim_cov_graded(d, i)}"
            )
    return report
