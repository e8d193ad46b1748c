"""Exact bivariate Poincaré series for covariants of binary forms."""
from .dims import dim_cov, dim_cov_graded, dim_cov_qbin, dim_inv, dim_table, omega, qbinomial
from .poly import (
    BinomFactor,
    DivisionFails,
    FactoredRational,
    TPoly,
    ZTPoly,
    equal_rational,
    expand_truncated,
    normalize,
    parse_json,
    render,
)
from .springer import poincare_series, verify_dimensions

__version__ = "0.1.0"
