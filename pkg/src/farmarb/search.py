"""Breadth-first reachability over arbitrage chains on the exponent lattice.

``S_N`` is the set of states produced by chains of length 1..N from a start
state. Every reached state keeps one witness: the shortest chain reaching
it, ties broken by the lexicographically least id sequence. Parents are
expanded in witness order and generators in increasing id order, so the
first discovery of a state already carries its canonical witness.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from . import reference
from .arbitrage import STRONG, WEAK, Chain, apply_chain, apply_strong, apply_weak, run_chain
from .errors import BudgetExceededError
from .rates import START, ZERO, code_of, codes_up_to, is_balanced_exp, magnitude

log = logging.getLogger(__name__)

DEFAULT_STATE_BUDGET = 10 ** 7
DEFAULT_PASS_BUDGET = 10 ** 4


@dataclass
class ReachReport:
    flavor: str
    depth: int
    start: tuple
    witnesses: Dict[tuple, tuple]
    counts: List[int]  # counts[d-1] = |S_d|
    balanced_counts: List[int]  # |S^bal_d|
    max_magnitude: List[int]  # max magnitude over S_d

    def states(self, depth: Optional[int] = None) -> set:
        if depth is None:
            return set(self.witnesses)
        return {s for s, w in self.witnesses.items() if len(w) <= depth}

    def balanced(self, depth: Optional[int] = None) -> Dict[tuple, tuple]:
        return {s: w for s, w in self.witnesses.items()
                if is_balanced_exp(s) and (depth is None or len(w) <= depth)}

    def witness(self, state: Sequence[int]) -> Optional[Chain]:
        w = self.witnesses.get(tuple(state))
        return None if w is None else Chain(self.flavor, w)

    def per_depth(self) -> List[dict]:
        return [
            {"depth": d, "states": c, "balanced": b, "max_magnitude": m}
            for d, (c, b, m) in enumerate(zip(self.counts, self.balanced_counts, self.max_magnitude), start=1)
        ]

    def to_json(self, include_states: bool = False) -> dict:
        out = {
            "flavor": self.flavor,
            "depth": self.depth,
            "start": list(self.start),
            "per_depth": self.per_depth(),
        }
        if include_states:
            out["states"] = [
                {"state": list(s), "witness": list(w)}
                for s, w in sorted(self.witnesses.items(), key=lambda kv: (len(kv[1]), kv[1]))
            ]
        return out


def _step_fn(flavor):
    if flavor == STRONG:
        return apply_strong, range(1, 13)
    if flavor == WEAK:
        return (lambda i, s: apply_weak(i, s)[0]), range(1, 25)
    raise ValueError("flavor must be 'weak' or 'strong'")


def reach(depth: int, flavor: str = STRONG, start: Sequence[int] = START,
          budget: int = DEFAULT_STATE_BUDGET) -> ReachReport:
    if depth < 0:
        raise ValueError("depth must be >= 0")
    step, gens = _step_fn(flavor)
    start = tuple(start)
    witnesses: Dict[tuple, tuple] = {}
    # the start state belongs to S_N only if some nonempty chain returns to it
    frontier = [(start, ())]
    counts, bal_counts, max_mag = [], [], []
    n_bal = 0
    top = 0
    for d in range(1, depth + 1):
        nxt = []
        for state, word in frontier:
            for g in gens:
                new = step(g, state)
                if new in witnesses:
                    continue
                w = word + (g,)
                witnesses[new] = w
                nxt.append((new, w))
                if is_balanced_exp(new):
                    n_bal += 1
                top = max(top, magnitude(new))
            if len(witnesses) > budget:
                raise BudgetExceededError(
                    "state budget of %d exceeded at depth %d" % (budget, d))
        frontier = nxt
        counts.append(len(witnesses))
        bal_counts.append(n_bal)
        max_mag.append(top)
        log.debug("depth %d: %d states (%d balanced)", d, len(witnesses), n_bal)
    return ReachReport(flavor, depth, start, witnesses, counts, bal_counts, max_mag)


def balanced_codes(report: ReachReport, depth: Optional[int] = None) -> Dict[tuple, Chain]:
    return {code_of(s): Chain(report.flavor, w) for s, w in report.balanced(depth).items()}


# -- optimal chains to small codes -------------------------------------------

def optimal_table(max_code_magnitude: int = 1, report: Optional[ReachReport] = None) -> List[dict]:
    """Shortest strong chain from the start state to every code of bounded magnitude."""
    codes = codes_up_to(max_code_magnitude)
    if report is None:
        report = reach(12 * max_code_magnitude, STRONG)
    found = balanced_codes(report)
    rows = []
    for c in sorted(codes, key=lambda c: (len(found[c]) if c in found else 10 ** 9, c)):
        w = found.get(c)
        rows.append({
            "code": c,
            "length": None if w is None else len(w),
            "witness": None if w is None else w.ids,
        })
    return rows


def compare_optimal_table(rows: Optional[List[dict]] = None) -> dict:
    """Replay the published optimal chains and compare with the recomputed table."""
    rows = rows if rows is not None else optimal_table(1)
    best = {r["code"]: r["length"] for r in rows}
    printed_codes = [row[2] for row in reference.OPTIMAL_CHAINS]
    replays, discrepancies = [], []
    for number, length, code, chain in reference.OPTIMAL_CHAINS:
        state = run_chain(Chain(STRONG, chain), START)
        got = code_of(state)
        entry = {
            "row": number,
            "printed_length": length,
            "printed_code": code,
            "chain": chain,
            "replayed_state": state,
            "replayed_code": got,
            "optimal_length": best.get(got),
        }
        replays.append(entry)
        if got != code:
            erratum = "table2-row%d-code" % number
            erratum = erratum if erratum in reference.KNOWN_ERRATA else None
            discrepancies.append(dict(entry, kind="code", erratum=erratum))
        elif length != len(chain) or best.get(got) != length:
            discrepancies.append(dict(entry, kind="length", erratum=None))
    duplicated = sorted({c for c in printed_codes if printed_codes.count(c) > 1})
    missing = sorted(set(best) - set(printed_codes))
    lengths_by_code = {e["replayed_code"]: e["printed_length"] for e in replays}
    lengths_match = (
        set(lengths_by_code) == set(best)
        and all(best[c] == lengths_by_code[c] for c in best)
    )
    return {
        "rows": rows,
        "replays": replays,
        "discrepancies": discrepancies,
        "duplicated_printed_codes": duplicated,
        "codes_missing_from_print": missing,
        "lengths_match": lengths_match,
        "printed_lengths": sorted(r[1] for r in reference.OPTIMAL_CHAINS),
        "computed_lengths": sorted(r["length"] for r in rows if r["length"] is not None),
    }


# -- growth of the reachable sets --------------------------------------------

def verify_hypothesis2(nu: int, budget: int = DEFAULT_STATE_BUDGET,
                       report: Optional[ReachReport] = None) -> dict:
    """All codes of magnitude <= nu by depth 12nu-1; exactly ±(nu,nu,nu) missing at 12nu-2."""
    if nu < 1:
        raise ValueError("nu must be >= 1")
    full, short = 12 * nu - 1, 12 * nu - 2
    if report is None or report.depth < full or report.flavor != STRONG or report.start != START:
        report = reach(full, STRONG, START, budget)
    codes = codes_up_to(nu)
    at_full = {code_of(s) for s in report.balanced(full)}
    at_short = {code_of(s) for s in report.balanced(short)}
    missing_full = [c for c in codes if c not in at_full]
    missing_short = [c for c in codes if c not in at_short]
    corners = [(-nu, -nu, -nu), (nu, nu, nu)]
    verdict = not missing_full and sorted(missing_short) == corners
    return {
        "nu": nu,
        "verdict": verdict,
        "codes": len(codes),
        "depth_full": full,
        "depth_short": short,
        "missing_at_full": missing_full,
        "missing_at_short": missing_short,
        "expected_missing_at_short": corners,
        "states_at_full": report.counts[full - 1],
    }


def verify_prodex(n_max: int, block: Sequence[int] = reference.DRIFT_CHAIN,
                  closer: int = reference.DRIFT_CLOSER, flavor: str = WEAK) -> dict:
    """The drift chain repeated n times, then the closer, lands on code (1, -n, n).

    ``block``, ``closer`` and ``flavor`` default to the published construction;
    overriding them lets alternative readings be checked with the same harness.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows = []
    for n in range(1, n_max + 1):
        chain = Chain(flavor, tuple(block) * n + (closer,))
        state, trace = apply_chain(chain, START)
        expected = (1, 1 - n, 1, -n, 0, n)
        rows.append({
            "n": n,
            "state": state,
            "expected": expected,
            "code": code_of(state),
            "all_active": all(s.active for s in trace),
            "ok": state == expected and code_of(state) == (1, -n, n) and all(s.active for s in trace),
        })
    first_bad = next((r["n"] for r in rows if not r["ok"]), None)
    distinct = len({r["state"] for r in rows}) == len(rows)
    return {"verdict": first_bad is None and distinct, "first_mismatch": first_bad,
            "distinct": distinct, "block": list(block), "closer": closer, "flavor": flavor,
            "rows": rows}


@dataclass
class PeriodicityReport:
    seed: tuple
    chain: tuple
    transient: Optional[int]
    period: Optional[int]
    activity: List[List[bool]] = field(default_factory=list)  # one row per pass

    @property
    def found(self) -> bool:
        return self.period is not None

    def ids_active(self, passes) -> set:
        return {self.chain[i] for p in passes for i, a in enumerate(self.activity[p]) if a}

    def readings(self) -> dict:
        all_ids = set(range(1, 25))
        if not self.found:
            return {}
        transient = range(self.transient)
        cycle = range(self.transient, self.transient + self.period)
        return {
            "all_ids_in_chain": set(self.chain) == all_ids,
            "all_ids_fire_in_transient": self.ids_active(transient) == all_ids,
            "all_ids_fire_in_cycle": self.ids_active(cycle) == all_ids,
            "all_ids_fire_overall": self.ids_active(range(len(self.activity))) == all_ids,
            "every_step_active_in_cycle": all(all(self.activity[p]) for p in cycle),
        }

    def to_json(self) -> dict:
        return {
            "seed": list(self.seed),
            "chain": list(self.chain),
            "transient": self.transient,
            "period": self.period,
            "activity": ["".join("1" if a else "0" for a in row) for row in self.activity],
            "readings": self.readings(),
        }


def verify_prop32(seed: Sequence[int] = START, chain: Sequence[int] = reference.PERIODIC_CHAIN,
                  budget: int = DEFAULT_PASS_BUDGET) -> PeriodicityReport:
    """Iterate a weak chain pass after pass until the state after a pass repeats."""
    c = Chain(WEAK, tuple(chain))
    state = tuple(seed)
    seen = {state: 0}
    activity = []
    for p in range(1, budget + 1):
        state, trace = apply_chain(c, state)
        activity.append([s.active for s in trace])
        if state in seen:
            t = seen[state]
            return PeriodicityReport(tuple(seed), c.ids, t, p - t, activity)
        seen[state] = p
    return PeriodicityReport(tuple(seed), c.ids, None, None, activity)


def verify_victorP(depth: int, budget: int = DEFAULT_STATE_BUDGET,
                   report: Optional[ReachReport] = None) -> dict:
    """No (n,0,0,0,0,0) with |n| >= 2 among states reached within ``depth``."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if report is None or report.depth < depth or report.flavor != STRONG or report.start != START:
        report = reach(depth, STRONG, START, budget)
    states = report.states(depth)
    offending = sorted(s for s in states if s[1:] == ZERO[1:] and abs(s[0]) >= 2)
    return {
        "depth": depth,
        "verdict": not offending,
        "offending": offending,
        "start_present": START in states,
        "states": len(states),
    }


@dataclass
class GrowthReport:
    depth: int
    per_depth: List[dict]
    lambda_hat: float
    mu_hat: float
    mu_bal_hat: float

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "per_depth": self.per_depth,
            "lambda_hat": self.lambda_hat,
            "mu_hat": self.mu_hat,
            "mu_bal_hat": self.mu_bal_hat,
        }


def growth_stats(depth: int, budget: int = DEFAULT_STATE_BUDGET,
                 report: Optional[ReachReport] = None) -> GrowthReport:
    """Smallest constants with max|n| <= lam*d, |S_d| <= mu*d^6, |S^bal_d| <= mu_bal*d^3."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if report is None or report.depth < depth or report.flavor != STRONG or report.start != START:
        report = reach(depth, STRONG, START, budget)
    rows = report.per_depth()[:depth]
    lam = max(r["max_magnitude"] / r["depth"] for r in rows)
    mu = max(r["states"] / r["depth"] ** 6 for r in rows)
    mu_bal = max(r["balanced"] / r["depth"] ** 3 for r in rows)
    return GrowthReport(depth, rows, lam, mu, mu_bal)



def weak_strong_equivalence(depth: int, start: Sequence[int] = START,
                            budget: int = DEFAULT_STATE_BUDGET) -> dict:
    """Compare the weak and strong reachable sets up to ``depth``."""
    weak = reach(depth, WEAK, start, budget)
    strong = reach(depth, STRONG, start, budget)
    per_depth = []
    for d in range(1, depth + 1):
        a, b = weak.states(d), strong.states(d)
        per_depth.append({"depth": d, "weak": len(a), "strong": len(b), "equal": a == b})
    only_weak = sorted(weak.states() - strong.states())
    only_strong = sorted(strong.states() - weak.states())
    return {
        "depth": depth,
        "verdict": all(r["equal"] for r in per_depth),
        "per_depth": per_depth,
        "only_weak": only_weak[:10],
        "only_strong": only_strong[:10],
    }
