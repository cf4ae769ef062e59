"""Check that every code of magnitude <= nu appears by depth 12nu-1, for nu = 1..N."""

import argparse
import time
from dataclasses import dataclass

from farmarb import search


@dataclass
class Config:
    max_nu: int = 3
    budget: int = search.DEFAULT_STATE_BUDGET


def main(cfg: Config) -> None:
    t0 = time.perf_counter()
    report = search.reach(12 * cfg.max_nu - 1, budget=cfg.budget)
    print("reached %d states by depth %d in %.2fs" % (report.counts[-1], report.depth, time.perf_counter() - t0))
    print("%-3s %-6s %-8s %-10s %s" % ("nu", "codes", "depth", "verdict", "missing one step earlier"))
    for nu in range(1, cfg.max_nu + 1):
        r = search.verify_hypothesis2(nu, cfg.budget, report)
        print("%-3d %-6d %-8d %-10s %s" % (nu, r["codes"], r["depth_full"], r["verdict"], r["missing_at_short"]))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-nu", type=int, default=Config.max_nu)
    p.add_argument("--budget", type=int, default=Config.budget)
    a = p.parse_args()
    main(Config(a.max_nu, a.budget))
