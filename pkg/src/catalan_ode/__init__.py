"""Exact-arithmetic Catalan number library and identity verifier."""

from .algebraic import AlgebraicElement, Polynomial, RationalFunction
from .catalan import (
    catalan_asymptotic_ratio,
    catalan_closed,
    catalan_product,
    catalan_recurrence,
    higher_catalan,
)
from .coefficients import (
    CoeffTable,
    a_closed_form,
    a_table_recurrence,
    b_closed_form,
    b_table_recurrence,
    s_number,
)
from .exact import (
    Rational,
    binomial_general,
    double_factorial_odd,
    falling_factorial,
    rat_make,
    shifted_factorial,
)
from .identities import (
    VerificationReport,
    sum_eq59,
    sum_eq62,
    verify_asymptotic,
    verify_convolution_recurrences,
    verify_inverse_delta,
    verify_sqrt_expansion,
    verify_thm1,
    verify_thm2,
    verify_thm3,
    verify_thm4,
)
from .runner import RunConfig, emit_report, run_suite
from .series import (
    Series,
    binomial_power_series,
    catalan_series,
    first_mismatch,
    sqrt_one_plus_series,
)

__all__ = [
    "AlgebraicElement",
    "CoeffTable",
    "Polynomial",
    "Rational",
    "RationalFunction",
    "RunConfig",
    "Series",
    "VerificationReport",
    "a_closed_form",
    "a_table_recurrence",
    "b_closed_form",
    "b_table_recurrence",
    "binomial_general",
    "binomial_power_series",
    "catalan_asymptotic_ratio",
    "catalan_closed",
    "catalan_product",
    "catalan_recurrence",
    "catalan_series",
    "double_factorial_odd",
    "emit_report",
    "falling_factorial",
    "first_mismatch",
    "higher_catalan",
    "rat_make",
    "run_suite",
    "s_number",
    "shifted_factorial",
    "sqrt_one_plus_series",
    "sum_eq59",
    "sum_eq62",
    "verify_asymptotic",
    "verify_convolution_recurrences",
    "verify_inverse_delta",
    "verify_sqrt_expansion",
    "verify_thm1",
    "verify_thm2",
    "verify_thm3",
    "verify_thm4",
]
