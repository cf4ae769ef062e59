import pytest
from hypothesis import given

from farmarb.arbitrage import (
    STRONG, STRONG_RULES, WEAK, WEAK_NAMES, WEAK_TO_STRONG, Chain, apply_chain,
    apply_strong, apply_weak, format_chain, parse_chain, run_chain, run_chain_rates,
    strong_to_weak, weak_to_strong,
)
from farmarb.rates import DEMO_BASE, START, is_balanced_exp, realize
from strategies import exponents, strong_chains, weak_chains


def test_table_sizes():
    assert len(WEAK_NAMES) == 24 and len(STRONG_RULES) == 12
    # every strong arbitrage is the common reset of exactly two weak ones
    targets = sorted(s for s, _ in WEAK_TO_STRONG.values())
    assert targets == sorted(list(range(1, 13)) * 2)


def test_parse_chain():
    assert parse_chain("s:7,10") == Chain(STRONG, (7, 10))
    assert parse_chain("5, 7,17").flavor == WEAK
    assert parse_chain("w:").ids == ()
    assert format_chain(parse_chain("s:1,2")) == "s:1,2"
    with pytest.raises(ValueError):
        parse_chain("s:1,x")
    with pytest.raises(ValueError):
        parse_chain("s:13")
    with pytest.raises(ValueError):
        parse_chain("w:25")


def test_known_example():
    assert run_chain(Chain(STRONG, (7, 10)), START) == (1, 0, 0, -1, -1, 0)
    assert run_chain(Chain(STRONG, (2,)), START) == (0, 0, 0, 0, 0, 0)


@given(weak_chains, exponents)
def test_weak_matches_rate_simulator(ids, n):
    # oracle: rational rates, mediated rate computed as r(x,z) r(z,y)
    chain = Chain(WEAK, ids)
    assert realize(run_chain(chain, n), DEMO_BASE) == run_chain_rates(chain, realize(n, DEMO_BASE))


@given(strong_chains, exponents)
def test_strong_matches_rate_simulator(ids, n):
    chain = Chain(STRONG, ids)
    assert realize(run_chain(chain, n), DEMO_BASE) == run_chain_rates(chain, realize(n, DEMO_BASE))


@given(exponents)
def test_strong_idempotent(n):
    for k in STRONG_RULES:
        once = apply_strong(k, n)
        assert apply_strong(k, once) == once


@given(exponents)
def test_weak_never_both_directions(n):
    # of the two weak arbitrages sharing a reset, at most one fires
    for sid in STRONG_RULES:
        pair = [w for w, (s, _) in WEAK_TO_STRONG.items() if s == sid]
        assert sum(apply_weak(w, n)[1] for w in pair) <= 1


@given(exponents)
def test_balanced_states_are_fixed(n):
    if is_balanced_exp(n):
        for w in range(1, 25):
            assert apply_weak(w, n) == (n, False)


@given(strong_chains, exponents)
def test_strong_to_weak_round_trip(ids, n):
    strong = Chain(STRONG, ids)
    weak = strong_to_weak(strong, n)
    assert run_chain(weak, n) == run_chain(strong, n)


@given(weak_chains, exponents)
def test_weak_to_strong_keeps_outcome(ids, n):
    weak = Chain(WEAK, ids)
    strong = weak_to_strong(weak, n)
    assert run_chain(strong, n) == run_chain(weak, n)
    _, trace = apply_chain(strong, n)
    assert all(s.active for s in trace)
