"""Exact derivatives of Chebyshev polynomials in the Chebyshev basis."""

from .combinatorics import binomial, factorial, falling_factorial, iverson
from .derivatives import (
    DiffMatrix,
    InnerSumCase,
    apply_diff_matrix,
    derivative_explicit,
    derivative_oracle,
    diff_matrix,
    inner_sum_pair,
    t_derivative_explicit,
    u_derivative_explicit,
    u_derivative_triple_sum,
)
from .polynomial import (
    ChebBasis,
    ChebExpansion,
    MonomialPoly,
    chebyshev_t_monomial,
    chebyshev_u_monomial,
    clenshaw_eval,
    expansion_to_monomial,
    format_rational,
    monomial_power_to_u,
    monomial_to_u,
    parse_rational,
)
from .verification import (
    VerificationReport,
    verify_all,
    verify_inner_sum,
    verify_inversion,
    verify_t_explicit,
    verify_triple_sum,
    verify_u_explicit,
)

__version__ = "0.1.0"
