"""Run every conformance check and aggregate the verdicts.

Each section reports ``pass``, ``pass-with-errata`` (mismatches that are all
registered in the errata ledger) or ``fail``. An exception inside a section
marks only that section as failed.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List

from . import reference, search, semigroup
from .arbitrage import STRONG_RULES
from .errors import FarmError
from .matrices import conformance_report, verify_action_many
from .rates import START

log = logging.getLogger(__name__)

PASS, ERRATA, FAIL = "pass", "pass-with-errata", "fail"


@dataclass
class VerifyConfig:
    nu: int = 1
    state_budget: int = search.DEFAULT_STATE_BUDGET
    pass_budget: int = search.DEFAULT_PASS_BUDGET
    seed: int = 0
    action_samples: int = 10 ** 4
    spectrum_samples: int = 1000
    spectrum_max_len: int = 20
    n_max: int = 10
    victor_depth: int = 20
    growth_depth: int = 20
    equivalence_depth: int = 8
    prop32_seed: tuple = START


@dataclass
class Section:
    name: str
    status: str
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


def _status(ok: bool, errata: bool = False) -> str:
    if not ok:
        return FAIL
    return ERRATA if errata else PASS


def _matrices(cfg):
    r = conformance_report()
    return _status(r["conforming"], bool(r["errata_applied"])), r


def _action(cfg):
    rng = random.Random(cfg.seed)
    states = [tuple(rng.randint(-10, 10) for _ in range(6)) for _ in range(cfg.action_samples)]
    bad = [{"k": k, "state": n} for k, n in verify_action_many(states)]
    return _status(not bad), {"samples": cfg.action_samples, "failures": bad[:10]}


def _key_graph(cfg):
    g = semigroup.build_key_graph()
    computed = g.class_edges()
    same = computed == reference.KEY_GRAPH
    degrees = all(g.out_degree(v) == 12 for v in g.nodes)
    octa = semigroup.check_octahedron(g)
    return _status(same and degrees and octa), {
        "matches_reference": same, "out_degree_12": degrees, "octahedron": octa,
    }


def _norm(cfg):
    r = semigroup.norm_certificate()
    ok = r["bounded"] and r["images_in_node_set"] and r["nonempty_interior"]
    return _status(ok), r


def _hull(cfg):
    r = semigroup.hull_facets()
    ok = r["quadrilaterals"] == 6 and r["triangles"] == 8 and r["extreme_vertices"] == 12
    return _status(ok), r


def _spectrum(cfg):
    r = semigroup.spectrum_survey(cfg.spectrum_samples, cfg.spectrum_max_len, cfg.seed)
    shortest = sorted(r["counterexamples"], key=lambda pa: (len(pa.chain), pa.chain))
    detail = {k: v for k, v in r.items() if k != "counterexamples"}
    detail["examples"] = [pa.to_json() for pa in shortest[:3]]
    return _status(r["verdict"]), detail


def _stabilizer(cfg):
    rng = random.Random(cfg.seed)
    stab = reference.STABILIZER
    zero = semigroup.is_stabilizer(stab)
    balanced = all(
        semigroup.outcome_balanced(stab, tuple(rng.randint(-10, 10) for _ in range(6)))
        for _ in range(100)
    )
    dest = reference.DESTABILIZER
    pa = semigroup.analyze_product(dest, "D6", strict=False)
    drop = pa.rank_m_minus_i_sq < pa.rank_m_minus_i
    probes = [START] + [tuple(rng.randint(-5, 5) for _ in range(6)) for _ in range(100)]
    witness = next((n for n in probes if semigroup.iterates_distinct(dest, n, 50)), None)
    detail = {
        "stabilizer": list(stab),
        "zero_product": zero,
        "balanced_outcomes": balanced,
        "destabilizer": list(dest),
        "destabilizer_analysis": pa.to_json(),
        "rank_drop": drop,
        "distinct_iterates_from": None if witness is None else list(witness),
    }
    return _status(zero and balanced and drop and witness is not None), detail


def _table2(cfg):
    r = search.compare_optimal_table()
    registered = all(d["erratum"] for d in r["discrepancies"])
    ok = r["lengths_match"] and registered
    detail = {k: v for k, v in r.items() if k not in ("rows", "replays")}
    return _status(ok, bool(r["discrepancies"])), detail


def _hypothesis2(cfg):
    out, ok = {}, True
    report = search.reach(12 * cfg.nu - 1, budget=cfg.state_budget)
    for nu in range(1, cfg.nu + 1):
        r = search.verify_hypothesis2(nu, cfg.state_budget, report)
        out["nu=%d" % nu] = r
        ok = ok and r["verdict"]
    return _status(ok), out


def _prodex(cfg):
    r = search.verify_prodex(cfg.n_max)
    return _status(r["verdict"]), r


def _prop32(cfg):
    r = search.verify_prop32(cfg.prop32_seed, budget=cfg.pass_budget)
    return _status(r.found), r.to_json()


def _victorp(cfg):
    r = search.verify_victorP(cfg.victor_depth, cfg.state_budget)
    return _status(r["verdict"]), r


def _growth(cfg):
    r = search.growth_stats(cfg.growth_depth, cfg.state_budget)
    ok = all(x["max_magnitude"] <= r.lambda_hat * x["depth"] for x in r.per_depth)
    ok = ok and 0 < r.lambda_hat < float("inf") and r.mu_hat > 0 and r.mu_bal_hat > 0
    return _status(ok), r.to_json()


def _equivalence(cfg):
    r = search.weak_strong_equivalence(cfg.equivalence_depth, budget=cfg.state_budget)
    return _status(r["verdict"]), r


SECTIONS: Dict[str, Callable] = {
    "matrices": _matrices,
    "action": _action,
    "key_graph": _key_graph,
    "norm_certificate": _norm,
    "hull": _hull,
    "spectrum": _spectrum,
    "stabilizer": _stabilizer,
    "table2": _table2,
    "hypothesis2": _hypothesis2,
    "prodex": _prodex,
    "prop32": _prop32,
    "victorp": _victorp,
    "growth": _growth,
    "weak_strong": _equivalence,
}


def run_section(name: str, cfg: VerifyConfig) -> Section:
    try:
        status, detail = SECTIONS[name](cfg)
    except FarmError as exc:
        status, detail = FAIL, {"error": type(exc).__name__, "message": str(exc)}
    log.info("%s: %s", name, status)
    return Section(name, status, detail)


def verify_all(cfg: VerifyConfig = None, only: List[str] = None) -> dict:
    cfg = cfg or VerifyConfig()
    sections = [run_section(name, cfg) for name in (only or SECTIONS)]
    conforming = all(s.status != FAIL for s in sections)
    return {
        "conforming": conforming,
        "verdict": "CONFORMING" if conforming else "NON-CONFORMING",
        "failed": [s.name for s in sections if s.status == FAIL],
        "sections": [s.to_json() for s in sections],
    }

