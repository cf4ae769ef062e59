"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 a checked claim failed (the
counterexample goes to stderr).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from . import matrices, reference, search, semigroup, verify
from .arbitrage import STRONG, WEAK, apply_chain, format_chain, parse_chain
from .errors import BudgetExceededError, NonConformingError
from .linalg import format_matrix
from .rates import (
    DEMO_BASE, PRINCIPAL_NAMES, START, BalancedBase, RateEnsemble, base_from_json,
    code_of, exponents_from_json, format_fraction, is_balanced_exp, parse_rational, realize,
)

OK, USAGE, NON_CONFORMING = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, "%s: error: %s\n" % (self.prog, message))


@dataclass
class RunConfig:
    state_budget: int
    pass_budget: int
    threads: int
    fmt: str
    start: tuple
    base: BalancedBase


# -- argument parsing --------------------------------------------------------

def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got %r" % text) from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive, got %d" % value)
    return value


def parse_ensemble(text: str) -> tuple:
    """Six integer exponents as ``1,0,0,0,0,0`` or JSON (list or ``{"exponents": [...]}``)."""
    text = text.strip()
    try:
        if text.startswith(("[", "{")):
            return exponents_from_json(json.loads(text))
        values = tuple(int(p) for p in text.split(","))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError("malformed ensemble %r: %s" % (text, exc)) from None
    if len(values) != 6:
        raise UsageError("an ensemble has six exponents, got %d" % len(values))
    return values


def parse_base(text: Optional[str], alpha: Optional[str]) -> BalancedBase:
    try:
        if text is None:
            rates = DEMO_BASE.rates
            a = DEMO_BASE.alpha
        else:
            text = text.strip()
            if text.startswith("{"):
                b = base_from_json(json.loads(text))
                rates, a = b.rates, b.alpha
            else:
                rates = RateEnsemble(tuple(parse_rational(p) for p in text.split(",")))
                a = DEMO_BASE.alpha
        if alpha is not None:
            a = parse_rational(alpha)
        return BalancedBase(rates, a)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError("bad base ensemble: %s" % exc) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--chain", help="chain like s:7,10 or w:5,7,17 (weak if unprefixed)")
    common.add_argument("--start", help="start exponents, comma list or JSON")
    common.add_argument("--base", help="balanced base rates (comma list of p/q, or JSON)")
    common.add_argument("--alpha", help="rational ratio alpha > 1")
    common.add_argument("--depth", type=_positive)
    common.add_argument("--nu", type=_positive)
    common.add_argument("--n-max", type=_positive, default=10)
    common.add_argument("--seed", help="seed ensemble for prop32")
    common.add_argument("--rng-seed", type=int, default=0, help="seed for random sampling")
    common.add_argument("--flavor", choices=(WEAK, STRONG), default=STRONG)
    common.add_argument("--max-len", type=_positive)
    common.add_argument("--budget-states", type=_positive, default=search.DEFAULT_STATE_BUDGET)
    common.add_argument("--budget-iters", type=_positive, default=search.DEFAULT_PASS_BUDGET)
    common.add_argument("--threads", type=_positive,
                        default=None, help="worker count (default: $FARM_THREADS or 1)")
    common.add_argument("--format", dest="fmt", choices=("json", "table", "csv", "dot"))
    common.add_argument("--out", help="write output to this file")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="farm", description="Barter-economy arbitrage toolkit.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True
    for name, help_text in COMMAND_HELP.items():
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


COMMAND_HELP = {
    "simulate": "apply a chain to an exponent ensemble",
    "search": "breadth-first reachable set",
    "table2": "shortest chains to every code of magnitude <= 1",
    "hypothesis": "every code of magnitude <= nu reached by depth 12nu-1",
    "prodex": "drift construction reaching code (1,-n,n)",
    "prop32": "periodicity of the 32-step weak chain",
    "victorp": "no (n,0,0,0,0,0) with |n| >= 2 within a depth",
    "growth": "per-depth counts and fitted growth constants",
    "matrices": "B, D, F, G matrices and conformance",
    "graph": "transition graph of the kernel directions",
    "hull": "facet census of the unit-ball polyhedron",
    "stabilizer": "stabilizer/destabilizer tests and shortest zero product",
    "verify-all": "run every check",
}


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("FARM_THREADS")
    if env is None:
        return 1
    try:
        return _positive(env)
    except argparse.ArgumentTypeError as exc:
        raise UsageError("FARM_THREADS: %s" % exc) from None


# -- output ------------------------------------------------------------------

def _jsonable(obj):
    if isinstance(obj, Fraction):
        return format_fraction(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if hasattr(obj, "to_json"):
        return obj.to_json()
    raise TypeError("not serializable: %r" % type(obj))


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, default=_jsonable, ensure_ascii=False) + "\n"


def dump_csv(rows: List[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _tuple(t) -> str:
    return "(" + ",".join(str(x) for x in t) + ")" if t is not None else "-"


# -- commands ----------------------------------------------------------------

class Result:
    def __init__(self, payload, table=None, csv_rows=None, dot=None, ok=True, evidence=None):
        self.payload = payload
        self.table = table
        self.csv_rows = csv_rows
        self.dot = dot
        self.ok = ok
        self.evidence = evidence

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return dump_json(self.payload)
        if fmt == "csv":
            if self.csv_rows is None:
                raise UsageError("csv output is not available for this command")
            return dump_csv(self.csv_rows)
        if fmt == "dot":
            if self.dot is None:
                raise UsageError("dot output is only available for the graph command")
            return self.dot
        return self.table if self.table is not None else dump_json(self.payload)


def cmd_simulate(args, cfg):
    if args.chain is None:
        raise UsageError("simulate needs --chain")
    try:
        chain = parse_chain(args.chain)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    final, trace = apply_chain(chain, cfg.start)
    rates = realize(final, cfg.base)
    payload = {
        "chain": format_chain(chain),
        "start": list(cfg.start),
        "final": list(final),
        "balanced": is_balanced_exp(final),
        "code": code_of(final),
        "steps": [{"id": s.id, "active": s.active, "state": list(s.state)} for s in trace],
        "rates": {name: format_fraction(r) for name, r in zip(PRINCIPAL_NAMES, rates.rates)},
    }
    lines = ["chain:  %s" % format_chain(chain), "start:  %s" % _tuple(cfg.start)]
    for s in trace:
        lines.append("  %2d %s %s" % (s.id, "*" if s.active else " ", _tuple(s.state)))
    lines.append("final:  %s" % _tuple(final))
    lines.append("code:   %s" % (_tuple(code_of(final)) if is_balanced_exp(final) else "unbalanced"))
    lines.append("rates:  " + " ".join("%s=%s" % kv for kv in payload["rates"].items()))
    rows = [{"step": i, "id": s.id, "active": int(s.active), **dict(zip(PRINCIPAL_NAMES, s.state))}
            for i, s in enumerate(trace, 1)]
    return Result(payload, "\n".join(lines) + "\n", rows)


def cmd_search(args, cfg):
    depth = args.depth if args.depth is not None else 8
    report = search.reach(depth, args.flavor, cfg.start, cfg.state_budget)
    payload = report.to_json(include_states=depth <= 8)
    lines = ["%-6s %10s %10s %8s" % ("depth", "states", "balanced", "max|n|")]
    for r in report.per_depth():
        lines.append("%-6d %10d %10d %8d" % (r["depth"], r["states"], r["balanced"], r["max_magnitude"]))
    return Result(payload, "\n".join(lines) + "\n", report.per_depth())


def cmd_table2(args, cfg):
    cmp = search.compare_optimal_table()
    rows = [{"code": list(r["code"]), "length": r["length"], "witness": list(r["witness"])}
            for r in cmp["rows"]]
    payload = dict(cmp, rows=rows)
    lines = ["%-12s %6s  %s" % ("code", "length", "witness")]
    for r in cmp["rows"]:
        lines.append("%-12s %6d  %s" % (_tuple(r["code"]), r["length"], ",".join(map(str, r["witness"]))))
    lines.append("")
    lines.append("lengths match printed table: %s" % cmp["lengths_match"])
    for d in cmp["discrepancies"]:
        lines.append("row %d: printed %s, chain %s replays to %s [%s]" % (
            d["row"], _tuple(d["printed_code"]), ",".join(map(str, d["chain"])),
            _tuple(d["replayed_code"]), d["erratum"] or "unregistered"))
    csv_rows = [{"code": _tuple(r["code"]), "length": r["length"],
                 "witness": " ".join(map(str, r["witness"]))} for r in cmp["rows"]]
    ok = cmp["lengths_match"] and all(d["erratum"] for d in cmp["discrepancies"])
    return Result(payload, "\n".join(lines) + "\n", csv_rows, ok=ok,
                  evidence=[d for d in cmp["discrepancies"] if not d["erratum"]] or cmp["lengths_match"])


def cmd_hypothesis(args, cfg):
    nu = args.nu or 1
    r = search.verify_hypothesis2(nu, cfg.state_budget)
    text = ("VERIFIED" if r["verdict"] else "NON-CONFORMING") + \
        " nu=%d: %d codes by depth %d, missing at depth %d: %s\n" % (
            nu, r["codes"], r["depth_full"], r["depth_short"],
            " ".join(_tuple(c) for c in r["missing_at_short"]))
    evidence = {k: r[k] for k in ("missing_at_full", "missing_at_short", "expected_missing_at_short")}
    return Result(r, text, ok=r["verdict"], evidence=evidence)


def cmd_prodex(args, cfg):
    r = search.verify_prodex(args.n_max)
    lines = ["%-4s %-22s %-22s %-12s %s" % ("n", "state", "expected", "code", "all active")]
    for row in r["rows"]:
        lines.append("%-4d %-22s %-22s %-12s %s" % (
            row["n"], _tuple(row["state"]), _tuple(row["expected"]), _tuple(row["code"]), row["all_active"]))
    lines.append("VERIFIED" if r["verdict"] else "NON-CONFORMING (first mismatch at n=%s)" % r["first_mismatch"])
    rows = [{"n": x["n"], "state": _tuple(x["state"]), "expected": _tuple(x["expected"]),
             "all_active": int(x["all_active"]), "ok": int(x["ok"])} for x in r["rows"]]
    bad = next((x for x in r["rows"] if not x["ok"]), None)
    return Result(r, "\n".join(lines) + "\n", rows, ok=r["verdict"], evidence=bad)


def cmd_prop32(args, cfg):
    seed = parse_ensemble(args.seed) if args.seed else START
    chain = reference.PERIODIC_CHAIN
    if args.chain:
        try:
            chain = parse_chain(args.chain).ids
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    r = search.verify_prop32(seed, chain, cfg.pass_budget)
    lines = ["seed: %s" % _tuple(seed), "transient: %s" % r.transient, "period: %s" % r.period]
    for p, row in enumerate(r.activity):
        lines.append("pass %3d %s" % (p + 1, "".join("1" if a else "0" for a in row)))
    for k, v in r.readings().items():
        lines.append("%s: %s" % (k, v))
    rows = [{"pass": p + 1, "activity": "".join("1" if a else "0" for a in row)}
            for p, row in enumerate(r.activity)]
    return Result(r.to_json(), "\n".join(lines) + "\n", rows, ok=r.found,
                  evidence={"seed": list(seed), "passes": len(r.activity)})


def cmd_victorp(args, cfg):
    r = search.verify_victorP(args.depth or 20, cfg.state_budget)
    text = "%s depth=%d states=%d start_present=%s\n" % (
        "VERIFIED" if r["verdict"] else "NON-CONFORMING", r["depth"], r["states"], r["start_present"])
    return Result(r, text, ok=r["verdict"], evidence=r["offending"])


def cmd_growth(args, cfg):
    g = search.growth_stats(args.depth or 20, cfg.state_budget)
    lines = ["%-6s %10s %10s %8s" % ("depth", "states", "balanced", "max|n|")]
    for r in g.per_depth:
        lines.append("%-6d %10d %10d %8d" % (r["depth"], r["states"], r["balanced"], r["max_magnitude"]))
    lines.append("lambda_hat=%.6g mu_hat=%.6g mu_bal_hat=%.6g" % (g.lambda_hat, g.mu_hat, g.mu_bal_hat))
    return Result(g.to_json(), "\n".join(lines) + "\n", g.per_depth)


def cmd_matrices(args, cfg):
    report = matrices.conformance_report()
    mats = matrices.all_matrices()
    payload = {"conformance": report, "matrices": mats}
    lines = ["conjugation: %s" % report["conjugation"], "conforming: %s" % report["conforming"], ""]
    lines += ["Q", format_matrix(mats["Q"]), "Q^-1", format_matrix(mats["Q_inv"])]
    for k in sorted(mats["B"]):
        for name in ("B", "G"):
            lines += ["%s_%d" % (name, k), format_matrix(mats[name][k])]
    return Result(payload, "\n".join(lines) + "\n", ok=report["conforming"], evidence=report["mismatches"])


def cmd_graph(args, cfg):
    g = semigroup.build_key_graph()
    payload = {
        "vectors": [list(v) for v in g.vectors],
        "class_edges": {str(a): {str(b): list(ks) for b, ks in t.items()} for a, t in g.class_edges().items()},
        "matches_reference": g.class_edges() == reference.KEY_GRAPH,
        "octahedron": semigroup.check_octahedron(g),
    }
    lines = ["s%d = %s" % (i, _tuple(v)) for i, v in enumerate(g.vectors, 1)]
    for a, t in g.class_edges().items():
        for b, ks in t.items():
            lines.append("%s -> %s : %s" % ("s%d" % a if a else "0", "s%d" % b if b else "0",
                                           ",".join(map(str, ks))))
    lines.append("octahedral reduction: %s" % payload["octahedron"])
    ok = payload["matches_reference"] and payload["octahedron"]
    return Result(payload, "\n".join(lines) + "\n", dot=semigroup.to_dot(g), ok=ok, evidence=payload)


def cmd_hull(args, cfg):
    census = semigroup.hull_facets()
    cert = semigroup.norm_certificate()
    payload = {"census": census, "certificate": cert}
    text = "facets=%d quadrilaterals=%d triangles=%d extreme_vertices=%d bounded=%s\n" % (
        census["facets"], census["quadrilaterals"], census["triangles"],
        census["extreme_vertices"], cert["bounded"])
    return Result(payload, text, ok=cert["bounded"], evidence=cert["failures"])


def _rank_drop(ids) -> bool:
    # is_destabilizer raises on products with roots outside {0, 1}; here we only report
    pa = semigroup.analyze_product(ids, "D6", strict=False)
    return pa.rank_m_minus_i_sq < pa.rank_m_minus_i


def cmd_stabilizer(args, cfg):
    if args.chain:
        try:
            ids = parse_chain(args.chain).ids
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        payload = {
            "chain": list(ids),
            "stabilizer": semigroup.is_stabilizer(ids),
            "destabilizer": _rank_drop(ids),
            "G": semigroup.analyze_product(ids, "G3", strict=False),
            "D": semigroup.analyze_product(ids, "D6", strict=False),
            "iterates_distinct_from_start": semigroup.iterates_distinct(ids, cfg.start),
        }
        ok, evidence = True, None
    else:
        payload = {
            "stabilizer": list(reference.STABILIZER),
            "stabilizer_zero_product": semigroup.is_stabilizer(reference.STABILIZER),
            "destabilizer": list(reference.DESTABILIZER),
            "destabilizer_rank_drop": _rank_drop(reference.DESTABILIZER),
            "destabilizer_analysis": semigroup.analyze_product(reference.DESTABILIZER, "D6", strict=False),
        }
        ok = payload["stabilizer_zero_product"] and payload["destabilizer_rank_drop"]
        evidence = payload["destabilizer_analysis"]
    if args.max_len:
        found = semigroup.shortest_zero_product(args.max_len)
        payload["shortest_zero_product"] = None if found is None else list(found.ids)
    lines = ["%s: %s" % (k, v.to_json() if hasattr(v, "to_json") else v) for k, v in payload.items()]
    return Result(payload, "\n".join(lines) + "\n", ok=ok, evidence=evidence)


def cmd_verify_all(args, cfg):
    vc = verify.VerifyConfig(
        nu=args.nu or 1,
        state_budget=cfg.state_budget,
        pass_budget=cfg.pass_budget,
        seed=args.rng_seed,
        n_max=args.n_max,
        prop32_seed=parse_ensemble(args.seed) if args.seed else START,
    )
    r = verify.verify_all(vc)
    lines = ["%-18s %s" % (s["name"], s["status"]) for s in r["sections"]]
    lines.append(r["verdict"])
    failed = {s["name"]: s["detail"] for s in r["sections"] if s["status"] == verify.FAIL}
    return Result(r, "\n".join(lines) + "\n", ok=r["conforming"], evidence=failed)


COMMANDS = {
    "simulate": cmd_simulate,
    "search": cmd_search,
    "table2": cmd_table2,
    "hypothesis": cmd_hypothesis,
    "prodex": cmd_prodex,
    "prop32": cmd_prop32,
    "victorp": cmd_victorp,
    "growth": cmd_growth,
    "matrices": cmd_matrices,
    "graph": cmd_graph,
    "hull": cmd_hull,
    "stabilizer": cmd_stabilizer,
    "verify-all": cmd_verify_all,
}

DEFAULT_FORMAT = {"graph": "dot"}


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help or a usage error
        return exc.code if isinstance(exc.code, int) else USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = RunConfig(
            state_budget=args.budget_states,
            pass_budget=args.budget_iters,
            threads=_threads(args),
            fmt=args.fmt or DEFAULT_FORMAT.get(args.command, "table"),
            start=parse_ensemble(args.start) if args.start else START,
            base=parse_base(args.base, args.alpha),
        )
        result = COMMANDS[args.command](args, cfg)
        text = result.render(cfg.fmt)
    except UsageError as exc:
        print("farm %s: error: %s" % (args.command, exc), file=sys.stderr)
        return USAGE
    except BudgetExceededError as exc:
        # inconclusive rather than falsified
        print("farm %s: budget exceeded: %s" % (args.command, exc), file=sys.stderr)
        return USAGE
    except NonConformingError as exc:
        print("NON-CONFORMING: %s" % exc, file=sys.stderr)
        sys.stderr.write(dump_json(exc.evidence))
        return NON_CONFORMING
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if not result.ok:
        print("NON-CONFORMING: farm %s" % args.command, file=sys.stderr)
        sys.stderr.write(dump_json(result.evidence))
        return NON_CONFORMING
    return OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
