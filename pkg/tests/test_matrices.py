from hypothesis import given

from farmarb import reference
from farmarb.arbitrage import STRONG_RULES, apply_strong
from farmarb.linalg import identity, matmul
from farmarb.matrices import (
    build_B, build_Q, conformance_report, conjugation_direction, conjugations, decompose,
    has_block_form, n_of_v, v_of, verify_action, w_of,
)
from farmarb.rates import is_balanced_exp
from strategies import exponents


def test_matches_published_matrices():
    r = conformance_report()
    assert r["conforming"], r["mismatches"]
    for k in STRONG_RULES:
        assert build_B(k) == reference.B[k]
        assert decompose(k).G == reference.G[k]
        assert decompose(k).D == reference.D[k]


def test_q_inverse():
    q, q_inv = build_Q()
    assert matmul(q, q_inv) == identity(6)
    assert q == reference.Q and q_inv == reference.Q_INV


def test_only_one_conjugation_gives_blocks():
    assert conjugation_direction() == "Q B Q^-1"
    other = [conjugations(k)["Q^-1 B Q"] for k in STRONG_RULES]
    assert not all(has_block_form(d) for d in other)


@given(exponents)
def test_action(n):
    for k in STRONG_RULES:
        assert verify_action(k, n)


@given(exponents)
def test_split_coordinates_vanish_on_balanced(n):
    assert (w_of(n)[3:] == (0, 0, 0)) == is_balanced_exp(n)


@given(exponents)
def test_v_round_trip(n):
    assert n_of_v(v_of(n)) == tuple(n)


@given(exponents)
def test_g_block_drives_defect(n):
    # the defect coordinates evolve on their own through G
    from farmarb.linalg import vecmat
    for k in STRONG_RULES:
        assert w_of(apply_strong(k, n))[3:] == vecmat(w_of(n)[3:], decompose(k).G)


@given(exponents)
def test_batched_action_check_agrees(n):
    from farmarb.matrices import verify_action_many
    assert verify_action_many([n]) == [(k, n) for k in STRONG_RULES if not verify_action(k, n)] == []
