"""Acceptance criteria 1-13, checked at the stated tolerances.

Each test records one PASS/FAIL line (printed in the pytest terminal summary
and when this file is run directly). Criteria that the code shows to be
false are left failing; the counterexamples are in the assertion messages.
"""

import random
import sys
import time

import pytest

from farmarb import reference, search, semigroup
from farmarb.arbitrage import STRONG, STRONG_RULES, WEAK
from farmarb.linalg import identity, matmul
from farmarb.matrices import build_B, build_Q, conformance_report, decompose, has_block_form, verify_action_many
from farmarb.rates import START

RESULTS = {}


def record(n, title, ok, detail=""):
    RESULTS[n] = "%s criterion %2d: %s%s" % ("PASS" if ok else "FAIL", n, title,
                                             " (%s)" % detail if detail else "")
    print(RESULTS[n])


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


def test_01_matrix_conformance():
    with Timer() as t:
        report = conformance_report()
        q, q_inv = build_Q()
        exact = all(build_B(k) == reference.B[k] and decompose(k).G == reference.G[k] for k in STRONG_RULES)
        inverse = matmul(q, q_inv) == identity(6)
        blocks = all(has_block_form(decompose(k).D) for k in STRONG_RULES)
    ok = exact and inverse and blocks and report["conforming"] and t.elapsed < 1
    record(1, "matrix conformance", ok, "%.2fs" % t.elapsed)
    assert ok, report["mismatches"]


def test_02_action():
    rng = random.Random(2)
    states = [tuple(rng.randint(-10, 10) for _ in range(6)) for _ in range(10 ** 4)]
    with Timer() as t:
        bad = verify_action_many(states)
    ok = not bad and t.elapsed < 1
    record(2, "action v(R A_k) = v(R) B_k on 10^4 states", ok, "%.2fs" % t.elapsed)
    assert ok, bad[:5]


def test_03_key_graph():
    with Timer() as t:
        g = semigroup.build_key_graph()
        same = g.class_edges() == reference.KEY_GRAPH
        degrees = len(g.nodes) == 13 and all(g.out_degree(v) == 12 for v in g.nodes)
        octa = semigroup.check_octahedron(g)
    ok = same and degrees and octa and t.elapsed < 1
    record(3, "key graph and octahedral reduction", ok, "%.2fs" % t.elapsed)
    assert ok


def test_04_norm_certificate():
    with Timer() as t:
        cert = semigroup.norm_certificate()
        census = semigroup.hull_facets()
    ok = (cert["images_in_node_set"] and cert["bounded"]
          and (census["quadrilaterals"], census["triangles"], census["extreme_vertices"]) == (6, 8, 12)
          and t.elapsed < 1)
    record(4, "norm certificate and hull census", ok,
           "%d quads, %d triangles, %d vertices" % (census["quadrilaterals"], census["triangles"],
                                                     census["extreme_vertices"]))
    assert ok, (cert, census)


def test_05_spectrum():
    with Timer() as t:
        survey = semigroup.spectrum_survey(samples=1000, max_len=20, seed=5)
    ok = survey["verdict"] and t.elapsed < 10
    example = min(survey["counterexamples"], key=lambda pa: len(pa.chain), default=None)
    detail = "%d of 1000 chains have a root outside {0,1}" % survey["failing_chains"]
    if example is not None:
        detail += "; e.g. %s in %s: charpoly %s" % (list(example.chain), example.space, list(example.charpoly))
    record(5, "products have charpoly x^a (x-1)^b", ok, detail)
    assert ok, detail


def test_06_stabilizer_destabilizer():
    rng = random.Random(6)
    with Timer() as t:
        zero = semigroup.is_stabilizer(reference.STABILIZER)
        balanced = all(semigroup.outcome_balanced(reference.STABILIZER,
                                                  tuple(rng.randint(-10, 10) for _ in range(6)))
                       for _ in range(100))
        pa = semigroup.analyze_product(reference.DESTABILIZER, "D6", strict=False)
        drop = pa.rank_m_minus_i_sq < pa.rank_m_minus_i
        probes = [START] + [tuple(rng.randint(-10, 10) for _ in range(6)) for _ in range(1000)]
        spread = any(semigroup.iterates_distinct(reference.DESTABILIZER, n, 50) for n in probes)
    ok = zero and balanced and drop and spread and t.elapsed < 1
    detail = ("stabilizer zero=%s balanced=%s; destabilizer rank(M-I)=%d rank((M-I)^2)=%d, "
              "50 distinct iterates found=%s" % (zero, balanced, pa.rank_m_minus_i, pa.rank_m_minus_i_sq, spread))
    record(6, "stabilizer (10,3,6) and destabilizer (4,6,12)", ok, detail)
    assert ok, detail


def test_07_table2():
    printed = [1, 2, 2, 3, 3, 4, 4, 4, 4, 5, 5, 5, 5, 5, 6, 6, 7, 7, 7, 7, 7, 8, 8, 8, 8, 11, 11]
    with Timer() as t:
        cmp = search.compare_optimal_table()
    lengths = cmp["computed_lengths"] == printed and cmp["lengths_match"]
    codes = [d for d in cmp["discrepancies"] if d["kind"] == "code"]
    only_row3 = (len(cmp["discrepancies"]) == 1 and codes and codes[0]["row"] == 3
                 and codes[0]["chain"] == (3, 6) and codes[0]["replayed_code"] == (1, 0, 0))
    ok = lengths and only_row3 and t.elapsed < 5
    detail = "lengths match=%s; discrepancies at rows %s" % (lengths, [d["row"] for d in cmp["discrepancies"]])
    record(7, "optimal chain table", ok, detail)
    assert ok, cmp["discrepancies"]


def test_08_hypothesis2(reach35):
    with Timer() as t:
        results = [search.verify_hypothesis2(nu, report=reach35) for nu in (1, 2, 3)]
    ok = all(r["verdict"] for r in results) and t.elapsed < 600
    record(8, "all codes of magnitude <= nu by depth 12nu-1 (nu=1,2,3)", ok,
           "%d states at depth 35" % reach35.counts[34])
    assert ok, [r for r in results if not r["verdict"]]


def test_09_prodex():
    with Timer() as t:
        r = search.verify_prodex(10)
    ok = r["verdict"] and t.elapsed < 1
    bad = next((row for row in r["rows"] if not row["ok"]), None)
    detail = "" if bad is None else "n=%d reaches %s, expected %s, all active=%s" % (
        bad["n"], bad["state"], bad["expected"], bad["all_active"])
    record(9, "drift chain reaches code (1,-n,n)", ok, detail)
    assert ok, detail


def test_10_periodicity():
    with Timer() as t:
        r = search.verify_prop32(START)
    ok = r.found and r.period >= 1 and bool(r.activity) and t.elapsed < 10
    record(10, "32-step chain becomes periodic", ok, "T=%s, P=%s" % (r.transient, r.period))
    assert ok


def test_11_victorp():
    with Timer() as t:
        r = search.verify_victorP(20, report=search.reach(20))
    ok = r["verdict"] and t.elapsed < 60
    record(11, "no (n,0,0,0,0,0) with |n| >= 2 in S_20", ok, "%d states" % r["states"])
    assert ok, r["offending"]


def test_12_growth():
    with Timer() as t:
        g = search.growth_stats(20)
    linear = all(row["max_magnitude"] <= g.lambda_hat * row["depth"] for row in g.per_depth)
    ok = linear and 0 < g.lambda_hat < float("inf") and g.mu_hat > 0 and g.mu_bal_hat > 0 and t.elapsed < 60
    record(12, "growth bounds", ok, "lambda=%.3g mu=%.3g mu_bal=%.3g" % (g.lambda_hat, g.mu_hat, g.mu_bal_hat))
    assert ok


def test_13_weak_strong():
    with Timer() as t:
        weak = search.reach(8, WEAK).states()
        strong = search.reach(8, STRONG).states()
    ok = weak == strong and t.elapsed < 30
    record(13, "weak and strong reachable sets equal to depth 8", ok, "%d states" % len(strong))
    assert ok


if __name__ == "__main__":
    code = pytest.main([__file__, "-q", "-p", "no:cacheprovider"])
    sys.exit(code)
