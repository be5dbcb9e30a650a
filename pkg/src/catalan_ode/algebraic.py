"""Exact arithmetic in the field Q(t)[s] / (s^2 = 1 - 4t).

Elements are written a(t) + b(t)*s with a, b rational functions of t and s
standing for sqrt(1-4t).  The Catalan generating function lives here as
(1 - s)/(2t), and the derivation d/dt extends to the whole field via
s' = -2s/(1-4t).  Because every value is kept in a canonical normal form
(reduced fractions, monic denominators), identity checks reduce to a
structural zero test with no truncation involved.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from math import lcm

from .series import Series, binomial_power_series, unit_inverse

# Abort runaway polynomial growth instead of grinding forever; the paper's
# expressions stay far below this for the verification envelopes used here.
DEGREE_CAP = 4096


class Polynomial:
    """Dense polynomial over Fraction, lowest degree first, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient."""
        if self.is_zero():
            raise ValueError("zero polynomial has no valuation")
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise AssertionError("unreachable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (Fraction, int)):
            return Polynomial(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.leading
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] / lead
            if c:
                quot[k] = c
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Polynomial(quot), Polynomial(rem)

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def derivative(self) -> "Polynomial":
        return Polynomial((i + 1) * c for i, c in enumerate(self.coeffs[1:]))

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self * (1 / self.leading)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"


POLY_ZERO = Polynomial()
POLY_ONE = Polynomial((1,))
POLY_T = Polynomial((0, 1))
ONE_MINUS_4T = Polynomial((1, -4))


def _to_primitive_int(p: Polynomial) -> list[int]:
    """Scale a nonzero polynomial to integer coefficients with content 1 and
    positive leading coefficient."""
    den = lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for c in ints:
        g = int_gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _int_primitive(ints: list[int]) -> list[int]:
    while ints and ints[-1] == 0:
        ints.pop()
    if not ints:
        return ints
    g = 0
    for c in ints:
        g = int_gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b over the integers (a scaled by powers of
    lc(b) along the way, so no division ever happens)."""
    rem = list(a)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        top = rem[k + len(b) - 1]
        rem = [lead * c for c in rem]
        for j, bj in enumerate(b):
            rem[k + j] -= top * bj
        del rem[k + len(b) - 1]
    return rem


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over Q via content extraction and primitive-part Euclid
    on integer polynomials (pseudo-remainders keep everything in Z)."""
    if a.is_zero():
        return b.monic() if not b.is_zero() else POLY_ZERO
    if b.is_zero():
        return a.monic()
    A = _to_primitive_int(a)
    B = _to_primitive_int(b)
    if len(A) < len(B):
        A, B = B, A
    while B:
        A, B = B, _int_primitive(_int_prem(A, B))
    return Polynomial(A).monic()


class RationalFunction:
    """Quotient of polynomials in canonical form: reduced, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial = POLY_ONE):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in rational function")
        if num.is_zero():
            self.num, self.den = POLY_ZERO, POLY_ONE
            return
        if max(num.degree, den.degree) > DEGREE_CAP:
            raise OverflowError(
                f"rational function degree exceeds cap {DEGREE_CAP} "
                f"(num {num.degree}, den {den.degree})"
            )
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        scale = 1 / den.leading
        self.num = num * scale
        self.den = den * scale

    @staticmethod
    def from_rational(c) -> "RationalFunction":
        return RationalFunction(Polynomial((c,)))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self) -> "RationalFunction":
        out = object.__new__(RationalFunction)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.num, self.den * other.den)

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero")
        return RationalFunction(self.den, self.num)

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __repr__(self):
        return f"({list(self.num.coeffs)})/({list(self.den.coeffs)})"


RF_ZERO = RationalFunction(POLY_ZERO)
RF_ONE = RationalFunction(POLY_ONE)
RF_ONE_MINUS_4T = RationalFunction(ONE_MINUS_4T)


class AlgebraicElement:
    """a(t) + b(t)*s with s^2 = 1 - 4t; the field where every identity of the
    two ODE families can be checked exactly."""

    __slots__ = ("even", "odd")

    def __init__(self, even: RationalFunction, odd: RationalFunction = RF_ZERO):
        self.even = even
        self.odd = odd

    @staticmethod
    def from_rational(c) -> "AlgebraicElement":
        return AlgebraicElement(RationalFunction.from_rational(c))

    @staticmethod
    def sqrt_one_minus_4t() -> "AlgebraicElement":
        return AlgebraicElement(RF_ZERO, RF_ONE)

    @staticmethod
    def catalan() -> "AlgebraicElement":
        """The Catalan generating function 2/(1+s), in normal form (1-s)/(2t)."""
        half_over_t = RationalFunction(POLY_ONE, Polynomial((0, 2)))
        return AlgebraicElement(half_over_t, -half_over_t)

    @staticmethod
    def half_power(e: int) -> "AlgebraicElement":
        """s^e: even e gives (1-4t)^(e/2); odd e keeps one factor of s;
        negative exponents go through the field inverse."""
        if e < 0:
            return AlgebraicElement.half_power(-e).inverse()
        q, r = divmod(e, 2)
        poly = POLY_ONE
        for _ in range(q):
            poly = poly * ONE_MINUS_4T
        rf = RationalFunction(poly)
        if r == 0:
            return AlgebraicElement(rf)
        return AlgebraicElement(RF_ZERO, rf)

    def is_zero(self) -> bool:
        return self.even.is_zero() and self.odd.is_zero()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraicElement)
            and self.even == other.even
            and self.odd == other.odd
        )

    def __hash__(self):
        return hash((self.even, self.odd))

    def __add__(self, other: "AlgebraicElement") -> "AlgebraicElement":
        return AlgebraicElement(self.even + other.even, self.odd + other.odd)

    def __neg__(self) -> "AlgebraicElement":
        return AlgebraicElement(-self.even, -self.odd)

    def __sub__(self, other: "AlgebraicElement") -> "AlgebraicElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (Fraction, int)):
            c = RationalFunction.from_rational(other)
            return AlgebraicElement(self.even * c, self.odd * c)
        a, b = self.even, self.odd
        c, d = other.even, other.odd
        return AlgebraicElement(a * c + b * d * RF_ONE_MINUS_4T, a * d + b * c)

    __rmul__ = __mul__

    def __pow__(self, r: int) -> "AlgebraicElement":
        if r < 0:
            return (self ** (-r)).inverse()
        out = AlgebraicElement.from_rational(1)
        for _ in range(r):
            out = out * self
        return out

    def inverse(self) -> "AlgebraicElement":
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero")
        a, b = self.even, self.odd
        norm = a * a - b * b * RF_ONE_MINUS_4T
        inv = norm.inverse()
        return AlgebraicElement(a * inv, -(b * inv))

    def derivative(self) -> "AlgebraicElement":
        # (b s)' = b' s + b s' with s' = -2s/(1-4t)
        a, b = self.even, self.odd
        correction = RationalFunction(Polynomial((-2,)), ONE_MINUS_4T)
        return AlgebraicElement(a.derivative(), b.derivative() + b * correction)

    def to_series(self, order: int) -> Series:
        """Taylor coefficients 0..order of a(t) + b(t)sqrt(1-4t).

        Raises if the element (as a Laurent expansion at t=0) has a pole;
        the individual parts may each have one as long as they cancel.
        """
        parts: dict[int, Fraction] = {}

        def laurent(rf: RationalFunction):
            if rf.is_zero():
                return 0, []
            vn, vd = rf.num.valuation, rf.den.valuation
            shift = vn - vd
            n_low = rf.num.coeffs[vn:]
            d_low = rf.den.coeffs[vd:]
            terms = order - shift
            if terms < 0:
                return shift, []
            inv = unit_inverse(d_low, terms)
            out = []
            for n in range(terms + 1):
                acc = Fraction(0)
                for k in range(min(n, len(n_low) - 1) + 1):
                    if n_low[k]:
                        acc += n_low[k] * inv[n - k]
                out.append(acc)
            return shift, out

        sa, ca = laurent(self.even)
        for j, c in enumerate(ca):
            if c:
                parts[sa + j] = parts.get(sa + j, Fraction(0)) + c

        sb, cb = laurent(self.odd)
        if cb:
            sqrt_cs = binomial_power_series(Fraction(1, 2), order - sb).coeffs
            for e in range(sb, order + 1):
                acc = Fraction(0)
                for j in range(e - sb + 1):
                    if cb[j]:
                        acc += cb[j] * sqrt_cs[e - sb - j]
                if acc:
                    parts[e] = parts.get(e, Fraction(0)) + acc

        for e, c in parts.items():
            if e < 0 and c:
                raise ValueError("element not regular at origin")
        return Series(parts.get(n, Fraction(0)) for n in range(order + 1))

    def __repr__(self):
        return f"AlgebraicElement(even={self.even!r}, odd={self.odd!r})"
