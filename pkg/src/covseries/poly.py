"""Exact polynomial and factored rational function arithmetic over the integers.

Two polynomial types live here:

* :class:`TPoly`, a univariate polynomial in ``t``;
* :class:`ZTPoly`, a bivariate polynomial in ``z`` and ``t``.

Both expose sparse term views (``terms``) but keep their coefficients in dense
numpy arrays of Python ints (``dtype=object``), so coefficients never overflow
and shift-and-add kernels run vectorised.

A :class:`FactoredRational` is a :class:`ZTPoly` numerator over a product of
binomial factors ``(1 - z^a t^b)^m``.  Denominators stay factored; they are only
expanded inside :func:`equal_rational` and :func:`expand_truncated`.
"""
from __future__ import annotations

import json
import math
import operator
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

__all__ = [
    "DivisionFails",
    "TPoly",
    "ZTPoly",
    "BinomFactor",
    "FactoredRational",
    "mul_t",
    "exact_div_t",
    "exact_div_factor",
    "normalize",
    "equal_rational",
    "denom_poly",
    "expand_truncated",
    "render",
    "to_dict",
    "from_dict",
    "parse_json",
]


class DivisionFails(ArithmeticError):
    """Raised when a polynomial quotient is not exact."""


def _zeros(shape) -> np.ndarray:
    return np.zeros(shape, dtype=object)


def _as_int(c) -> int:
    return operator.index(c)


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


# ---------------------------------------------------------------------------
# univariate
# ---------------------------------------------------------------------------


class TPoly:
    """Univariate integer polynomial in ``t``.

    >>> TPoly({0: 1, 2: -1}) * TPoly({0: 1, 2: 1})
    TPoly([(0, 1), (4, -1)])
    """

    __slots__ = ("_c",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        if terms is None:
            self._c = _frozen(_zeros(0))
            return
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            e = _as_int(e)
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            acc[e] = acc.get(e, 0) + _as_int(c)
        deg = max((e for e, c in acc.items() if c), default=-1)
        arr = _zeros(deg + 1)
        for e, c in acc.items():
            if e <= deg:
                arr[e] = c
        self._c = _frozen(arr)

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "TPoly":
        nz = np.flatnonzero(arr != 0)
        out = cls.__new__(cls)
        out._c = _frozen(arr[: nz[-1] + 1].copy() if len(nz) else _zeros(0))
        return out

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "TPoly":
        """Build from a dense coefficient list, lowest degree first."""
        arr = np.array([_as_int(c) for c in coeffs] or [], dtype=object)
        return cls._wrap(arr.reshape(-1))

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "TPoly":
        return cls({e: c})

    @property
    def coeffs(self) -> np.ndarray:
        """Dense read-only coefficient array, index = exponent."""
        return self._c

    @property
    def terms(self) -> list[tuple[int, int]]:
        return [(int(e), self._c[e]) for e in np.flatnonzero(self._c != 0)]

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return len(self._c) == 0

    def __getitem__(self, e: int) -> int:
        return self._c[e] if 0 <= e < len(self._c) else 0

    def __add__(self, other: "TPoly | int") -> "TPoly":
        other = _coerce_t(other)
        n = max(len(self._c), len(other._c))
        arr = _zeros(n)
        arr[: len(self._c)] += self._c
        arr[: len(other._c)] += other._c
        return TPoly._wrap(arr)

    __radd__ = __add__

    def __neg__(self) -> "TPoly":
        return TPoly._wrap(-self._c)

    def __sub__(self, other: "TPoly | int") -> "TPoly":
        return self + (-_coerce_t(other))

    def __rsub__(self, other: "TPoly | int") -> "TPoly":
        return _coerce_t(other) - self

    def __mul__(self, other: "TPoly | int") -> "TPoly":
        return mul_t(self, _coerce_t(other))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = TPoly({0: other})
        if not isinstance(other, TPoly):
            return NotImplemented
        return len(self._c) == len(other._c) and bool(np.all(self._c == other._c))

    def __hash__(self) -> int:
        return hash(tuple(self.terms))

    def substitute_power(self, n: int) -> "TPoly":
        """Return ``p(t^n)``."""
        if n < 1:
            raise ValueError("n must be positive")
        if self.is_zero():
            return self
        arr = _zeros(n * self.degree + 1)
        arr[::n] = self._c
        return TPoly._wrap(arr)

    def __repr__(self) -> str:
        return f"TPoly({self.terms!r})"


def _coerce_t(p) -> TPoly:
    if isinstance(p, TPoly):
        return p
    return TPoly({0: _as_int(p)})


def mul_t(p: TPoly, q: TPoly) -> TPoly:
    """Exact product of two univariate polynomials."""
    if p.is_zero() or q.is_zero():
        return TPoly()
    # loop over the sparser side; each step is one vectorised shifted add
    if np.count_nonzero(p._c != 0) > np.count_nonzero(q._c != 0):
        p, q = q, p
    arr = _zeros(p.degree + q.degree + 1)
    n = len(q._c)
    for e, c in p.terms:
        arr[e : e + n] += c * q._c
    return TPoly._wrap(arr)


def exact_div_t(p: TPoly, q: TPoly) -> TPoly:
    """Return ``r`` with ``r * q == p``; raise :class:`DivisionFails` otherwise."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return TPoly()
    # strip a common power of t so the divisor has a unit-free constant term path
    shift = int(np.flatnonzero(q._c != 0)[0])
    if shift:
        low = np.flatnonzero(p._c != 0)[0]
        if low < shift:
            raise DivisionFails("divisor has a higher t-adic valuation")
        p = TPoly._wrap(p._c[shift:].copy())
        q = TPoly._wrap(q._c[shift:].copy())
    if p.degree < q.degree:
        raise DivisionFails("dividend degree below divisor degree")
    rem = p._c.copy()
    lead = q._c[-1]
    dq = q.degree
    quot = _zeros(p.degree - dq + 1)
    for k in range(p.degree - dq, -1, -1):
        c = rem[k + dq]
        if c == 0:
            continue
        s, r = divmod(c, lead)
        if r:
            raise DivisionFails("non-integral leading coefficient")
        quot[k] = s
        rem[k : k + dq + 1] -= s * q._c
    if np.any(rem != 0):
        raise DivisionFails("nonzero remainder")
    return TPoly._wrap(quot)


# ---------------------------------------------------------------------------
# bivariate
# ---------------------------------------------------------------------------


def _trim2(arr: np.ndarray) -> np.ndarray:
    if arr.size == 0:
        return _zeros((0, 0))
    nz = arr != 0
    rows = np.flatnonzero(nz.any(axis=1))
    if len(rows) == 0:
        return _zeros((0, 0))
    cols = np.flatnonzero(nz.any(axis=0))
    return arr[: rows[-1] + 1, : cols[-1] + 1]


def _series_div_inplace(q: np.ndarray, a: int, b: int) -> None:
    """Multiply the grid ``q`` by ``1/(1 - z^a t^b)`` as a truncated power series.

    Runs ``q[i, j] += q[i - a, j - b]`` in dependency order, one block of
    ``a`` rows (or ``b`` columns when ``a == 0``) at a time.
    """
    rows, cols = q.shape
    if a >= 1:
        if b >= cols:
            return
        for s in range(a, rows, a):
            h = min(a, rows - s)
            q[s : s + h, b:] += q[s - a : s - a + h, : cols - b]
    else:
        if b < 1:
            raise ValueError("factor (1 - 1) is not invertible")
        for s in range(b, cols, b):
            w = min(b, cols - s)
            q[:, s : s + w] += q[:, s - b : s - b + w]


def _mul_binom_arr(arr: np.ndarray, a: int, b: int) -> np.ndarray:
    r, c = arr.shape
    out = _zeros((r + a, c + b))
    out[:r, :c] = arr
    out[a:, b:] -= arr
    return out


class ZTPoly:
    """Bivariate integer polynomial in ``z`` and ``t``.

    ``terms`` maps ``(i, j)`` to the coefficient of ``z^i t^j`` and iterates in
    lexicographic ``(i, j)`` order.
    """

    __slots__ = ("_c",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] | None = None):
        if terms is None:
            self._c = _frozen(_zeros((0, 0)))
            return
        items = list(terms.items() if isinstance(terms, Mapping) else terms)
        if not items:
            self._c = _frozen(_zeros((0, 0)))
            return
        keys = [(_as_int(i), _as_int(j)) for (i, j), _ in items]
        if any(i < 0 or j < 0 for i, j in keys):
            raise ValueError("negative exponent")
        arr = _zeros((max(i for i, _ in keys) + 1, max(j for _, j in keys) + 1))
        for (i, j), (_, c) in zip(keys, items):
            arr[i, j] += _as_int(c)
        self._c = _frozen(_trim2(arr).copy())

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "ZTPoly":
        out = cls.__new__(cls)
        out._c = _frozen(_trim2(arr).copy())
        return out

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "ZTPoly":
        return cls({(i, j): c})

    @classmethod
    def from_t(cls, p: TPoly) -> "ZTPoly":
        """Embed a t-polynomial (z-degree 0)."""
        return cls._wrap(p.coeffs.reshape(1, -1).copy())

    @classmethod
    def from_z(cls, p: TPoly) -> "ZTPoly":
        """Embed a univariate polynomial with ``t`` renamed to ``z``."""
        return cls._wrap(p.coeffs.reshape(-1, 1).copy())

    @property
    def coeffs(self) -> np.ndarray:
        """Dense read-only grid, ``coeffs[i, j]`` = coefficient of ``z^i t^j``."""
        return self._c

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        ii, jj = np.nonzero(self._c != 0)
        return {(int(i), int(j)): self._c[i, j] for i, j in zip(ii, jj)}

    def __len__(self) -> int:
        return int(np.count_nonzero(self._c != 0))

    @property
    def shape(self) -> tuple[int, int]:
        return self._c.shape

    def is_zero(self) -> bool:
        return self._c.size == 0

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        r, c = self._c.shape
        return self._c[i, j] if 0 <= i < r and 0 <= j < c else 0

    def __add__(self, other: "ZTPoly | int") -> "ZTPoly":
        other = _coerce_zt(other)
        r = max(self._c.shape[0], other._c.shape[0])
        c = max(self._c.shape[1], other._c.shape[1])
        arr = _zeros((r, c))
        arr[: self._c.shape[0], : self._c.shape[1]] += self._c
        arr[: other._c.shape[0], : other._c.shape[1]] += other._c
        return ZTPoly._wrap(arr)

    __radd__ = __add__

    def __neg__(self) -> "ZTPoly":
        return ZTPoly._wrap(-self._c)

    def __sub__(self, other: "ZTPoly | int") -> "ZTPoly":
        return self + (-_coerce_zt(other))

    def __rsub__(self, other: "ZTPoly | int") -> "ZTPoly":
        return _coerce_zt(other) - self

    def __mul__(self, other: "ZTPoly | int") -> "ZTPoly":
        other = _coerce_zt(other)
        if self.is_zero() or other.is_zero():
            return ZTPoly()
        p, q = (self, other) if len(self) <= len(other) else (other, self)
        r, c = q._c.shape
        arr = _zeros((p._c.shape[0] + r - 1, p._c.shape[1] + c - 1))
        for (i, j), v in p.terms.items():
            arr[i : i + r, j : j + c] += v * q._c
        return ZTPoly._wrap(arr)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = ZTPoly({(0, 0): other})
        if not isinstance(other, ZTPoly):
            return NotImplemented
        return self._c.shape == other._c.shape and bool(np.all(self._c == other._c))

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def mul_binom(self, a: int, b: int, power: int = 1) -> "ZTPoly":
        """Multiply by ``(1 - z^a t^b)^power``."""
        arr = self._c
        if arr.size == 0:
            return self
        for _ in range(power):
            arr = _mul_binom_arr(arr, a, b)
        return ZTPoly._wrap(arr)

    def truncate(self, imax: int, jmax: int) -> "ZTPoly":
        """Keep only the terms with ``i <= imax`` and ``j <= jmax``."""
        if imax < 0 or jmax < 0:
            return ZTPoly()
        return ZTPoly._wrap(self._c[: imax + 1, : jmax + 1].copy())

    def grid(self, imax: int, jmax: int) -> np.ndarray:
        """Dense ``(imax+1, jmax+1)`` coefficient grid, zero padded."""
        out = _zeros((imax + 1, jmax + 1))
        sub = self._c[: imax + 1, : jmax + 1]
        out[: sub.shape[0], : sub.shape[1]] = sub
        return out

    def __repr__(self) -> str:
        return f"ZTPoly({self.terms!r})"


def _coerce_zt(p) -> ZTPoly:
    if isinstance(p, ZTPoly):
        return p
    if isinstance(p, TPoly):
        return ZTPoly.from_t(p)
    return ZTPoly({(0, 0): _as_int(p)})


# ---------------------------------------------------------------------------
# factored rational functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class BinomFactor:
    """The factor ``(1 - z^a t^b)^m``."""

    a: int
    b: int
    m: int = 1

    def __post_init__(self):
        for name in ("a", "b", "m"):
            _as_int(getattr(self, name))
        if self.a < 0 or self.b < 0:
            raise ValueError("exponents must be nonnegative")
        if self.a == 0 and self.b == 0:
            raise ValueError("(1 - z^0 t^0) is zero")
        if self.m < 1:
            raise ValueError("multiplicity must be positive")

    @property
    def key(self) -> tuple[int, int]:
        return (self.a, self.b)


def _canonical_factors(factors: Iterable[BinomFactor]) -> tuple[BinomFactor, ...]:
    acc: dict[tuple[int, int], int] = {}
    for f in factors:
        acc[f.key] = acc.get(f.key, 0) + f.m
    return tuple(BinomFactor(a, b, m) for (a, b), m in sorted(acc.items()))


@dataclass(frozen=True)
class FactoredRational:
    """``numerator / prod (1 - z^a t^b)^m``, with the factor multiset kept canonical."""

    numerator: ZTPoly
    denominator: tuple[BinomFactor, ...] = field(default=())

    def __post_init__(self):
        num = self.numerator
        if not isinstance(num, ZTPoly):
            num = _coerce_zt(num)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", _canonical_factors(self.denominator))

    def multiplicities(self) -> dict[tuple[int, int], int]:
        return {f.key: f.m for f in self.denominator}

    def __add__(self, other: "FactoredRational") -> "FactoredRational":
        """Sum over the least common factored denominator (no normalisation)."""
        mine, theirs = self.multiplicities(), other.multiplicities()
        lcd = {k: max(mine.get(k, 0), theirs.get(k, 0)) for k in mine.keys() | theirs.keys()}
        return FactoredRational(
            _scale_to(self.numerator, mine, lcd) + _scale_to(other.numerator, theirs, lcd),
            tuple(BinomFactor(a, b, m) for (a, b), m in lcd.items()),
        )

    def __neg__(self) -> "FactoredRational":
        return FactoredRational(-self.numerator, self.denominator)

    def __str__(self) -> str:
        return render(self, "text")


def _scale_to(num: ZTPoly, have: Mapping, want: Mapping) -> ZTPoly:
    arr = num.coeffs
    if arr.size == 0:
        return num
    for (a, b), m in sorted(want.items()):
        for _ in range(m - have.get((a, b), 0)):
            arr = _mul_binom_arr(arr, a, b)
    return ZTPoly._wrap(arr)


def sum_rational(terms: Iterable[FactoredRational]) -> FactoredRational:
    """Sum over the union-with-max-multiplicity denominator, in one pass."""
    terms = list(terms)
    lcd: dict[tuple[int, int], int] = {}
    for f in terms:
        for k, m in f.multiplicities().items():
            lcd[k] = max(lcd.get(k, 0), m)
    num = ZTPoly()
    for f in terms:
        num = num + _scale_to(f.numerator, f.multiplicities(), lcd)
    return FactoredRational(num, tuple(BinomFactor(a, b, m) for (a, b), m in lcd.items()))


def exact_div_factor(n: ZTPoly, f: BinomFactor) -> ZTPoly:
    """Divide ``n`` by one copy of ``(1 - z^a t^b)``; :class:`DivisionFails` if inexact."""
    if n.is_zero():
        return n
    r, c = n.shape
    if r - 1 < f.a or c - 1 < f.b:
        raise DivisionFails(f"(1 - z^{f.a} t^{f.b}) exceeds the numerator degree")
    q = n.coeffs[: r - f.a, : c - f.b].copy()
    _series_div_inplace(q, f.a, f.b)
    back = _mul_binom_arr(q, f.a, f.b)
    if back.shape != n.shape or not np.all(back == n.coeffs):
        raise DivisionFails(f"(1 - z^{f.a} t^{f.b}) does not divide the numerator")
    return ZTPoly._wrap(q)


def _shrink(num: ZTPoly, f: BinomFactor) -> tuple[ZTPoly, BinomFactor] | None:
    """Try to trade ``(1 - X^g)`` for ``(1 - X^e)``, ``e | g``, smallest ``e`` first.

    Here ``z^a t^b = X^g`` with ``g = gcd(a, b)``; the move divides the numerator
    by ``(1 - X^g)/(1 - X^e)``, done as a multiply then an exact binomial divide.
    """
    g = math.gcd(f.a, f.b)
    for e in range(1, g):
        if g % e:
            continue
        small = BinomFactor(f.a // g * e, f.b // g * e)
        try:
            q = exact_div_factor(num.mul_binom(small.a, small.b), BinomFactor(f.a, f.b))
        except DivisionFails:
            continue
        return q, small
    return None


def normalize(F: FactoredRational) -> FactoredRational:
    """Cancel denominator factors against the numerator, greedily in sorted order.

    A factor that divides the numerator is removed.  Otherwise, if the
    complementary part of ``(1 - X^g)`` over a smaller ``(1 - X^e)`` divides it,
    the factor is replaced by ``(1 - X^e)``.  Repeats until nothing changes.
    """
    num = F.numerator
    if num.is_zero():
        return FactoredRational(num, ())
    den = F.denominator
    changed = True
    while changed:
        changed = False
        kept = []
        for f in den:
            for _ in range(f.m):
                try:
                    num = exact_div_factor(num, f)
                    changed = True
                    continue
                except DivisionFails:
                    pass
                shrunk = _shrink(num, f)
                if shrunk is None:
                    kept.append(BinomFactor(f.a, f.b))
                else:
                    num, small = shrunk
                    kept.append(small)
                    changed = True
        den = _canonical_factors(kept)
    return FactoredRational(num, den)


def denom_poly(F: FactoredRational) -> ZTPoly:
    """Expand the denominator product into a polynomial."""
    return _scale_to(ZTPoly({(0, 0): 1}), {}, F.multiplicities())


def equal_rational(A: FactoredRational, B: FactoredRational) -> bool:
    """Decide equality of two rational functions by cross-multiplication."""
    ma, mb = A.multiplicities(), B.multiplicities()
    # shared factors cancel from both sides of num(A)*den(B) == num(B)*den(A)
    common = {k: min(ma[k], mb[k]) for k in ma.keys() & mb.keys()}
    a_only = {k: m - common.get(k, 0) for k, m in ma.items()}
    b_only = {k: m - common.get(k, 0) for k, m in mb.items()}
    return _scale_to(A.numerator, {}, b_only) == _scale_to(B.numerator, {}, a_only)


def expand_truncated(F: FactoredRational, imax: int, jmax: int) -> ZTPoly:
    """Power-series coefficients of ``F`` for ``z^i t^j``, ``i <= imax``, ``j <= jmax``."""
    if imax < 0 or jmax < 0:
        return ZTPoly()
    q = F.numerator.grid(imax, jmax)
    for f in F.denominator:
        for _ in range(f.m):
            _series_div_inplace(q, f.a, f.b)
    return ZTPoly._wrap(q)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _mono_text(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("z" if i == 1 else f"z^{i}")
    if j:
        parts.append("t" if j == 1 else f"t^{j}")
    return "*".join(parts)


def _mono_latex(i: int, j: int) -> str:
    out = ""
    if i:
        out += "z" if i == 1 else f"z^{{{i}}}"
    if j:
        out += "t" if j == 1 else f"t^{{{j}}}"
    return out


def _poly_string(p: ZTPoly, mono, times: str) -> str:
    if p.is_zero():
        return "0"
    chunks = []
    for (i, j), c in p.terms.items():
        m = mono(i, j)
        mag = abs(c)
        if not m:
            body = str(mag)
        elif mag == 1:
            body = m
        else:
            body = f"{mag}{times}{m}"
        sign = "-" if c < 0 else "+"
        if not chunks:
            chunks.append(("-" if c < 0 else "") + body)
        else:
            chunks.append(f"{sign}{body}")
    return "".join(chunks)


def render(F: FactoredRational, format: str = "text") -> str:
    """Serialise ``F`` as ``text``, ``latex`` or ``json``."""
    if format == "json":
        return json.dumps(to_dict(F))
    if format == "text":
        num = _poly_string(F.numerator, _mono_text, "*")
        if not F.denominator:
            return num
        facs = [
            f"(1-{_mono_text(f.a, f.b)})" + (f"^{f.m}" if f.m > 1 else "")
            for f in F.denominator
        ]
        if len(F.numerator) > 1:
            num = f"({num})"
        den = facs[0] if len(facs) == 1 else "(" + "*".join(facs) + ")"
        return f"{num}/{den}"
    if format == "latex":
        num = _poly_string(F.numerator, _mono_latex, "")
        if not F.denominator:
            return num
        den = "".join(
            f"(1-{_mono_latex(f.a, f.b)})" + (f"^{{{f.m}}}" if f.m > 1 else "")
            for f in F.denominator
        )
        return rf"\frac{{{num}}}{{{den}}}"
    raise ValueError(f"unknown format {format!r}")


def to_dict(F: FactoredRational) -> dict:
    return {
        "numerator": [{"z": i, "t": j, "c": str(c)} for (i, j), c in F.numerator.terms.items()],
        "denominator": [{"z": f.a, "t": f.b, "m": f.m} for f in F.denominator],
    }


def from_dict(obj: Mapping) -> FactoredRational:
    num = ZTPoly([((int(e["z"]), int(e["t"])), int(e["c"])) for e in obj["numerator"]])
    den = tuple(BinomFactor(int(e["z"]), int(e["t"]), int(e["m"])) for e in obj["denominator"])
    return FactoredRational(num, den)


def parse_json(text: str) -> FactoredRational:
    """Inverse of ``render(F, "json")``; extra top-level keys are ignored."""
    return from_dict(json.loads(text))
