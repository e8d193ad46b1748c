"""
Counting covariants three ways
==============================

The dimension of the space of covariants of degree ``i`` and order ``j`` of a
binary form of degree ``d`` can be read off restricted partition counts, or off
a Gaussian polynomial.  Both routes are exact and should always agree.
"""

from covseries import dim_cov, dim_cov_qbin, dim_inv, dim_table, omega, qbinomial

# omega(d, n, m): ways to write m as a sum of at most n parts, each at most d
print("omega(3, 2, m) for m = 0..6:", [omega(3, 2, m) for m in range(7)])

# the same numbers are the coefficients of a Gaussian polynomial
print("qbinomial(3, 2):", qbinomial(3, 2).terms)

# a difference of two counts gives a dimension: the cubic's Hessian
print("dim (C_3)_{2,2} =", dim_cov(3, 2, 2), "=", dim_cov_qbin(3, 2, 2))

# invariants are covariants of order 0; the cubic's first one is its discriminant
print("invariants of the cubic by degree:", [dim_inv(3, n) for n in range(13)])

# a whole grid, exported as CSV
print(dim_table(4, 4, 8).to_csv())
