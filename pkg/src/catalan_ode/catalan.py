"""Catalan and higher-order Catalan numbers by independent routes."""
from __future__ import annotations

import threading
from decimal import Decimal, getcontext
from fractions import Fraction
from math import comb

# 40 significant digits; plenty for the asymptotic-ratio sanity check.
PI_40 = Decimal("3.141592653589793238462643383279502884197")


def catalan_closed(n: int) -> int:
    """C_n = binom(2n, n)/(n+1); the division is always exact."""
    if n < 0:
        raise ValueError("n must be >= 0")
    num = comb(2 * n, n)
    q, r = divmod(num, n + 1)
    assert r == 0, "Catalan divisibility violated"
    return q


def catalan_product(n: int) -> int:
    """C_n via the product of (n+k)/k for k = 2..n, kept exact-rational
    throughout and asserted integral at the end."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = Fraction(1)
    for k in range(2, n + 1):
        out *= Fraction(n + k, k)
    assert out.denominator == 1, "Catalan product formula not integral"
    return out.numerator


def catalan_recurrence(nmax: int) -> list[int]:
    """C_0..C_nmax from the self-convolution recurrence
    C_n = sum_{m<n} C_m C_{n-1-m}."""
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    cs = [1]
    for n in range(1, nmax + 1):
        cs.append(sum(cs[m] * cs[n - 1 - m] for m in range(n)))
    return cs


_power_cache: dict[int, list[int]] = {}
_power_lock = threading.Lock()


def higher_catalan(r: int, n: int) -> int:
    """C_n^(r): coefficient of t^n in the r-th power of the Catalan
    generating function, by iterated convolution with a shared memo."""
    if r < 1:
        raise ValueError("order r must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    with _power_lock:
        prefix = _power_cache.get(r)
        if prefix is None or len(prefix) <= n:
            base = catalan_recurrence(n)
            prefix = list(base)
            for _ in range(r - 1):
                prefix = [
                    sum(prefix[m] * base[k - m] for m in range(k + 1))
                    for k in range(n + 1)
                ]
            _power_cache[r] = prefix
        return prefix[n]


def catalan_asymptotic_ratio(n: int, digits: int = 40) -> Decimal:
    """C_n * n^(3/2) * sqrt(pi) / 4^n in high-precision decimal; tends to 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ctx = getcontext().copy()
    ctx.prec = max(digits, 40)
    sqrt_n = ctx.sqrt(Decimal(n))
    n_three_halves = ctx.multiply(ctx.multiply(sqrt_n, sqrt_n), sqrt_n)
    sqrt_pi = ctx.sqrt(PI_40)
    num = ctx.multiply(ctx.multiply(Decimal(catalan_closed(n)), n_three_halves), sqrt_pi)
    return ctx.divide(num, Decimal(4**n))
