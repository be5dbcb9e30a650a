from decimal import Decimal

import pytest

from catalan_ode.catalan import (
    catalan_asymptotic_ratio,
    catalan_closed,
    catalan_product,
    catalan_recurrence,
    higher_catalan,
)
from catalan_ode.series import catalan_series

FIRST_THIRTEEN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012]


def test_closed_form_values():
    assert [catalan_closed(n) for n in range(13)] == FIRST_THIRTEEN
    assert catalan_closed(5) == 42
    assert catalan_closed(12) == 208012


def test_recurrence_values():
    assert catalan_recurrence(4) == [1, 1, 2, 5, 14]


def test_recurrence_c3_by_hand():
    assert catalan_recurrence(3)[3] == 1 * 2 + 1 * 1 + 2 * 1


def test_three_routes_agree():
    seq = catalan_recurrence(200)
    gen = catalan_series(200)
    for n in range(201):
        assert seq[n] == catalan_closed(n) == gen.coeff(n)


def test_product_formula():
    for n in range(201):
        assert catalan_product(n) == catalan_closed(n)


def test_higher_order_one_is_catalan():
    for n in range(30):
        assert higher_catalan(1, n) == catalan_closed(n)


def test_higher_order_two_shifts():
    assert higher_catalan(2, 3) == 14
    for n in range(101):
        assert higher_catalan(2, n) == catalan_closed(n + 1)


def test_higher_order_three():
    assert higher_catalan(3, 2) == 9


def test_higher_order_constant_term():
    for r in range(1, 11):
        assert higher_catalan(r, 0) == 1


def test_higher_order_matches_series_powers():
    for r in range(1, 6):
        power = catalan_series(12) ** r
        for n in range(13):
            assert higher_catalan(r, n) == power.coeff(n)


def test_higher_order_rejects_bad_order():
    with pytest.raises(ValueError):
        higher_catalan(0, 3)


def test_asymptotic_ratio_at_1000():
    r = catalan_asymptotic_ratio(1000)
    assert Decimal("0.99") < r < Decimal("1.01")


def test_asymptotic_ratio_at_10():
    r = catalan_asymptotic_ratio(10)
    assert Decimal("0.8") < r < Decimal("1.0")


def test_asymptotic_ratio_monotone_toward_one():
    assert catalan_asymptotic_ratio(100) < catalan_asymptotic_ratio(1000) < 1
