from fractions import Fraction

import pytest
from hypothesis import given

from farmarb.rates import (
    DEMO_BASE, BalancedBase, RateEnsemble, code_of, codes_up_to, exponents_of,
    is_balanced, is_balanced_exp, magnitude, parse_rational, realize, to_fraction,
)
from strategies import codes, exponents


def test_demo_base_is_balanced():
    assert is_balanced(DEMO_BASE.rates)


def test_reciprocal_rates():
    r = DEMO_BASE.rates
    for x in "FARM":
        for y in "FARM":
            if x != y:
                assert r.rate(x, y) * r.rate(y, x) == 1


def test_unbalanced_base_rejected():
    with pytest.raises(ValueError):
        BalancedBase(RateEnsemble.of(2, 6, 24, 3, 12, 5), Fraction(2))


def test_alpha_must_exceed_one():
    with pytest.raises(ValueError):
        BalancedBase(DEMO_BASE.rates, Fraction(1))


def test_floats_rejected():
    with pytest.raises((TypeError, ValueError)):
        to_fraction(0.5)
    with pytest.raises(ValueError):
        parse_rational("0.5")
    assert parse_rational("3/4") == Fraction(3, 4)


@given(codes)
def test_code_round_trip(c):
    n = exponents_of(c)
    assert is_balanced_exp(n)
    assert code_of(n) == c


@given(exponents)
def test_balance_matches_rate_identities(n):
    # oracle: the three product identities checked on realized rationals
    assert is_balanced(realize(n, DEMO_BASE)) == is_balanced_exp(n)


def test_unbalanced_has_no_code():
    assert code_of((1, 0, 0, 0, 0, 0)) is None


def test_codes_up_to_counts():
    assert [len(codes_up_to(nu)) for nu in (1, 2, 3)] == [27, 125, 343]
    assert all(magnitude(c) <= 2 for c in codes_up_to(2))
