"""
The folding operators psi_n and Psi_n
=====================================

``psi_n`` turns a power series in ``t`` into one in ``z`` and ``t`` by writing
each exponent as ``n*i - j`` with ``0 <= j < n``.  On a quotient by
``(1 - t^k)`` factors it reduces to polynomial work.
"""

from covseries.poly import TPoly, expand_truncated, normalize, render
from covseries.psi import psi_monomial, psi_poly, psi_rational

# t^4 under psi_3: 4 = 3*2 - 2, so z^2 t^2
print("psi_3(t^4) =", psi_monomial(3, 4).terms)

# linear extension
print("psi_2(1 + t^4) =", psi_poly(2, TPoly({0: 1, 4: 1})).terms)

# psi_2 of 1/(1 - t^4): multiply by 1 + t^4, fold, divide by 1 - z^4
folded = psi_rational(2, TPoly({0: 1}), [4])
print("unreduced:", render(folded))
print("reduced:  ", render(normalize(folded)))

# expansions agree either way
print(expand_truncated(folded, 6, 1) == expand_truncated(normalize(folded), 6, 1))
