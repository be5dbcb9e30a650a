"""Executable verifiers for the two ODE hierarchies and the companion
identities: the derivative/power expansions in both directions, the
Kronecker-delta inverse relation between the two coefficient families,
the square-root expansion, two convergent numeric sums, and the
convolution recurrences.

Every check is exact rational arithmetic end to end; the only inexactness
anywhere is the final comparison of the two numeric sums against hardcoded
>= 30-digit decimal enclosures of sqrt(2) and ln 2.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, isqrt

from .algebraic import AlgebraicElement
from .catalan import (
    catalan_asymptotic_ratio,
    catalan_closed,
    higher_catalan,
)
from .coefficients import (
    CoeffTable,
    a_closed_form,
    a_table_recurrence,
    b_table_recurrence,
)
from .exact import binomial_general, falling_factorial
from .series import (
    Series,
    binomial_power_series,
    catalan_series,
    first_mismatch,
    sqrt_one_plus_series,
)

IDENTITY_IDS = (
    "thm1",
    "thm2",
    "thm3",
    "thm4",
    "eq57",
    "eq58",
    "eq59",
    "eq62",
    "eq64",
    "eq66",
    "asymptotic",
)

# Slack for the decimal rounding of the hardcoded constants below.
EPS_CONST = Fraction(1, 10**25)

# sqrt(2) as an exact-rational lower enclosure accurate to 1e-40.
SQRT2_40 = Fraction(isqrt(2 * 10**80), 10**40)

# ln 2 to 36 significant digits.
LN2_36 = Fraction("0.693147180559945309417232121458176568")


@dataclass
class VerificationReport:
    identity: str
    parameters: dict[str, int]
    mode: str  # "series" | "symbolic" | "numeric"
    passed: bool
    witness: dict[str, str] | None = None
    cost: float = field(default=0.0, compare=False)


def _report(identity, parameters, mode, passed, witness, start):
    return VerificationReport(
        identity=identity,
        parameters=dict(parameters),
        mode=mode,
        passed=passed,
        witness=witness if not passed else None,
        cost=time.perf_counter() - start,
    )


def _mismatch_witness(mm) -> dict[str, str]:
    n, lhs, rhs = mm
    return {"index": str(n), "lhs": str(lhs), "rhs": str(rhs)}


def _symbolic_witness(lhs: AlgebraicElement, rhs: AlgebraicElement) -> dict[str, str]:
    # Expand far enough to exhibit a concrete mismatching coefficient.
    mm = first_mismatch(lhs.to_series(24), rhs.to_series(24))
    if mm is not None:
        return _mismatch_witness(mm)
    return {"index": "normal-form", "lhs": repr(lhs), "rhs": repr(rhs)}


def verify_thm1(n_deriv: int, mode: str, order: int = 64,
                a_table: CoeffTable | None = None) -> VerificationReport:
    """N-th derivative of the Catalan generating function versus the sum of
    a_i(N) (1-4t)^(-(2N-i)/2) C^(i+1), in series or symbolic mode."""
    start = time.perf_counter()
    N = n_deriv
    if N < 1:
        raise ValueError("N must be >= 1")
    if mode not in ("series", "symbolic"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "series" and order < N + 8:
        raise ValueError("series order must be at least N + 8")
    table = a_table if a_table is not None else a_table_recurrence(N)
    params = {"N": N, "K": order} if mode == "series" else {"N": N}

    if mode == "series":
        cat = catalan_series(order)
        lhs = cat
        for _ in range(N):
            lhs = lhs.derivative()
        rhs = Series.constant(0, order)
        for i in range(1, N + 1):
            power = binomial_power_series(Fraction(-(2 * N - i), 2), order)
            rhs = rhs + table.entry(i, N) * (power * cat ** (i + 1))
        mm = first_mismatch(lhs, rhs)
        return _report("thm1", params, mode, mm is None,
                       _mismatch_witness(mm) if mm else None, start)

    cat = AlgebraicElement.catalan()
    lhs = cat
    for _ in range(N):
        lhs = lhs.derivative()
    rhs = AlgebraicElement.from_rational(0)
    for i in range(1, N + 1):
        rhs = rhs + table.entry(i, N) * (
            AlgebraicElement.half_power(i - 2 * N) * cat ** (i + 1)
        )
    passed = (lhs - rhs).is_zero()
    return _report("thm1", params, mode, passed,
                   None if passed else _symbolic_witness(lhs, rhs), start)


def verify_thm2(n: int, n_deriv: int, a_source: str = "recurrence") -> VerificationReport:
    """C_{n+N} recovered from the forward expansion: a double sum over the
    a-family, half-integer binomials, and higher-order Catalan numbers."""
    start = time.perf_counter()
    N = n_deriv
    if n < 0 or N < 1:
        raise ValueError("need n >= 0 and N >= 1")
    if a_source == "recurrence":
        table = a_table_recurrence(N)
        a_of = lambda i: table.entry(i, N)
    elif a_source == "closed":
        a_of = lambda i: a_closed_form(i, N)
    else:
        raise ValueError(f"unknown a_source {a_source!r}")

    total = Fraction(0)
    for i in range(1, N + 1):
        ai = a_of(i)
        for m in range(n + 1):
            total += (
                4**m
                * binomial_general(Fraction(2 * N - i, 2) + m - 1, m)
                * ai
                * higher_catalan(i + 1, n - m)
            )
    value = total / falling_factorial(n + N, N)
    target = catalan_closed(n + N)
    passed = value == target
    witness = None if passed else {"index": str(n), "lhs": str(value), "rhs": str(target)}
    return _report("thm2", {"n": n, "N": N}, "numeric", passed, witness, start)


def verify_thm3(n_pow: int, mode: str, order: int = 64,
                b_table: CoeffTable | None = None) -> VerificationReport:
    """N! C^(N+1) versus the sum of b_i(N) (1-4t)^(N/2-i) C^((N-i))."""
    start = time.perf_counter()
    N = n_pow
    if N < 1:
        raise ValueError("N must be >= 1")
    if mode not in ("series", "symbolic"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "series" and order < N + 8:
        raise ValueError("series order must be at least N + 8")
    table = b_table if b_table is not None else b_table_recurrence(N)
    params = {"N": N, "K": order} if mode == "series" else {"N": N}

    if mode == "series":
        cat = catalan_series(order)
        lhs = factorial(N) * cat ** (N + 1)
        derivs = [cat]
        for _ in range(N):
            derivs.append(derivs[-1].derivative())
        rhs = Series.constant(0, order - N)
        for i in range(0, N // 2 + 1):
            power = binomial_power_series(Fraction(N - 2 * i, 2), order)
            rhs = rhs + table.entry(i, N) * (power * derivs[N - i])
        mm = first_mismatch(lhs, rhs)
        return _report("thm3", params, mode, mm is None,
                       _mismatch_witness(mm) if mm else None, start)

    cat = AlgebraicElement.catalan()
    lhs = factorial(N) * cat ** (N + 1)
    derivs = [cat]
    for _ in range(N):
        derivs.append(derivs[-1].derivative())
    rhs = AlgebraicElement.from_rational(0)
    for i in range(0, N // 2 + 1):
        rhs = rhs + table.entry(i, N) * (
            AlgebraicElement.half_power(N - 2 * i) * derivs[N - i]
        )
    passed = (lhs - rhs).is_zero()
    return _report("thm3", params, mode, passed,
                   None if passed else _symbolic_witness(lhs, rhs), start)


def verify_thm4(k: int, n_pow: int) -> VerificationReport:
    """C_k^(N+1) recovered from the inverse expansion: a double sum over the
    b-family, half-integer binomials and falling factorials."""
    start = time.perf_counter()
    N = n_pow
    if k < 0 or N < 1:
        raise ValueError("need k >= 0 and N >= 1")
    table = b_table_recurrence(N)
    total = Fraction(0)
    for i in range(0, N // 2 + 1):
        bi = table.entry(i, N)
        for m in range(k + 1):
            total += (
                binomial_general(Fraction(N, 2) - i, k - m)
                * falling_factorial(m + N - i, N - i)
                * (-4) ** (k - m)
                * bi
                * catalan_closed(m + N - i)
            )
    value = total / factorial(N)
    target = higher_catalan(N + 1, k)
    passed = value == target
    witness = None if passed else {"index": str(k), "lhs": str(value), "rhs": str(target)}
    return _report("thm4", {"k": k, "N": N}, "numeric", passed, witness, start)


def verify_inverse_delta(n_pow: int) -> VerificationReport:
    """The 'inverse' relation between the two families:
    sum_i a_j(N-i) b_i(N) / N! = delta_{j,N} for every j in 1..N."""
    start = time.perf_counter()
    N = n_pow
    if N < 1:
        raise ValueError("N must be >= 1")
    a_tab = a_table_recurrence(N)
    b_tab = b_table_recurrence(N)
    nfact = factorial(N)
    for j in range(1, N + 1):
        total = Fraction(0)
        for i in range(0, min(N - j, N // 2) + 1):
            total += Fraction(a_tab.entry(j, N - i) * b_tab.entry(i, N), nfact)
        expected = 1 if j == N else 0
        if total != expected:
            witness = {"index": str(j), "lhs": str(total), "rhs": str(expected)}
            return _report("eq57", {"N": N}, "numeric", False, witness, start)
    return _report("eq57", {"N": N}, "numeric", True, None, start)


def verify_sqrt_expansion(order: int) -> VerificationReport:
    """Coefficients of sqrt(1+y) against the generalized binomial
    (1/2 choose n)."""
    start = time.perf_counter()
    expansion = sqrt_one_plus_series(order)
    for n in range(order + 1):
        expected = binomial_general(Fraction(1, 2), n)
        if expansion.coeff(n) != expected:
            witness = {"index": str(n), "lhs": str(expansion.coeff(n)), "rhs": str(expected)}
            return _report("eq58", {"K": order}, "series", False, witness, start)
    return _report("eq58", {"K": order}, "series", True, None, start)


def sum_eq59(terms: int) -> tuple[Fraction, Fraction, bool]:
    """Partial sum of sum_n C_n (-1)^(n-1) / (4^n (2n-1)), whose value is
    (4 sqrt(2) - 2)/3.  Returns (partial sum, alternating-series bound from
    the first omitted term, pass flag)."""
    if terms < 2:
        raise ValueError("need at least 2 terms")

    def term(n: int) -> Fraction:
        sign = 1 if n % 2 else -1
        return Fraction(catalan_closed(n) * sign, 4**n * (2 * n - 1))

    partial = sum((term(n) for n in range(terms)), Fraction(0))
    bound = abs(term(terms))
    target = (4 * SQRT2_40 - 2) / 3
    passed = abs(partial - target) < bound + EPS_CONST
    return partial, bound, passed


def sum_eq62(terms: int) -> tuple[Fraction, Fraction, bool]:
    """Partial sum of sum_n binom(2n,n) / ((n+1)^2 4^(n+1)), whose value is
    1 - ln 2.  The tail bound uses binom(2n,n) <= 4^n, so each omitted term
    is at most 1/(4(n+1)^2) <= (1/4)(1/n - 1/(n+1)), telescoping to
    1/(4*terms)."""
    if terms < 1:
        raise ValueError("need at least 1 term")
    partial = sum(
        (Fraction(comb(2 * n, n), (n + 1) ** 2 * 4 ** (n + 1)) for n in range(terms)),
        Fraction(0),
    )
    bound = Fraction(1, 4 * terms)
    target = 1 - LN2_36
    passed = abs(partial - target) < bound + EPS_CONST
    return partial, bound, passed


def report_eq59(terms: int) -> VerificationReport:
    start = time.perf_counter()
    partial, bound, passed = sum_eq59(terms)
    witness = None if passed else {
        "index": str(terms), "lhs": str(partial), "rhs": str((4 * SQRT2_40 - 2) / 3)
    }
    return _report("eq59", {"terms": terms}, "numeric", passed, witness, start)


def report_eq62(terms: int) -> VerificationReport:
    start = time.perf_counter()
    partial, bound, passed = sum_eq62(terms)
    witness = None if passed else {
        "index": str(terms), "lhs": str(partial), "rhs": str(1 - LN2_36)
    }
    return _report("eq62", {"terms": terms}, "numeric", passed, witness, start)


def verify_convolution_recurrences(nmax: int) -> tuple[VerificationReport, VerificationReport]:
    """Two convolution recurrences for the Catalan numbers.

    First: C_n - sum_{m=0}^{n} C_m C_{n-m} (m+1)/(2m-1) equals 2 at n=0 and
    0 for n >= 1 (the m=0 factor is exactly 1/(-1), no special casing).
    Second: C_n = (2n-1)/(3(n-1)) * sum_{m=1}^{n-1} C_m C_{n-m} (m+1)/(2m-1)
    for n >= 2.
    """
    if nmax < 2:
        raise ValueError("nmax must be >= 2")
    start = time.perf_counter()
    cs = [catalan_closed(n) for n in range(nmax + 1)]

    witness_64 = None
    for n in range(nmax + 1):
        conv = sum(
            (Fraction(cs[m] * cs[n - m] * (m + 1), 2 * m - 1) for m in range(n + 1)),
            Fraction(0),
        )
        value = cs[n] - conv
        expected = 2 if n == 0 else 0
        if value != expected:
            witness_64 = {"index": str(n), "lhs": str(value), "rhs": str(expected)}
            break
    rep64 = _report("eq64", {"nmax": nmax}, "numeric", witness_64 is None, witness_64, start)

    start = time.perf_counter()
    witness_66 = None
    for n in range(2, nmax + 1):
        inner = sum(
            (Fraction(cs[m] * cs[n - m] * (m + 1), 2 * m - 1) for m in range(1, n)),
            Fraction(0),
        )
        value = Fraction(2 * n - 1, 3 * (n - 1)) * inner
        if value != cs[n]:
            witness_66 = {"index": str(n), "lhs": str(value), "rhs": str(cs[n])}
            break
    rep66 = _report("eq66", {"nmax": nmax}, "numeric", witness_66 is None, witness_66, start)
    return rep64, rep66


def verify_asymptotic(n: int = 1000, lo: float = 0.99, hi: float = 1.01) -> VerificationReport:
    """C_n n^(3/2) sqrt(pi) / 4^n must sit inside the stated band."""
    start = time.perf_counter()
    ratio = catalan_asymptotic_ratio(n)
    passed = Fraction(str(lo)) < Fraction(ratio) < Fraction(str(hi))
    witness = None if passed else {
        "index": str(n), "lhs": str(ratio), "rhs": f"({lo}, {hi})"
    }
    return _report("asymptotic", {"n": n}, "numeric", passed, witness, start)
