"""
Closed forms of P_d(z, t)
=========================

Build the reduced rational function for small degrees, print it in text and
LaTeX, and check its expansion against the partition-count oracle.
"""

from covseries import poincare_series, render, verify_dimensions
from covseries.poly import expand_truncated

for d in range(1, 5):
    P = poincare_series(d)
    print(f"P_{d} =", render(P, "text"))

print(render(poincare_series(3), "latex"))

# the quintic: 32-term numerator over six binomial factors
P5 = poincare_series(5)
print("numerator terms:", len(P5.numerator), "denominator:", render(P5).split("/")[-1])

# first few coefficients, rows are degrees, columns are orders
grid = expand_truncated(P5, 4, 12).grid(4, 12)
for i, row in enumerate(grid):
    print(i, " ".join(str(c) for c in row))

report = verify_dimensions(5, 10, 50)
print("oracle agreement up to degree 10:", report.passed)
