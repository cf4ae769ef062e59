"""Per-depth reachable-set sizes and the fitted growth constants, as CSV."""

import argparse
import csv
import sys
from dataclasses import dataclass

from farmarb import search


@dataclass
class Config:
    depth: int = 30


def main(cfg: Config) -> None:
    g = search.growth_stats(cfg.depth)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["depth", "states", "balanced", "max_magnitude", "states/d^6", "balanced/d^3"])
    for r in g.per_depth:
        d = r["depth"]
        w.writerow([d, r["states"], r["balanced"], r["max_magnitude"],
                    "%.4g" % (r["states"] / d ** 6), "%.4g" % (r["balanced"] / d ** 3)])
    print("# lambda_hat=%.4g mu_hat=%.4g mu_bal_hat=%.4g" % (g.lambda_hat, g.mu_hat, g.mu_bal_hat),
          file=sys.stderr)


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--depth", type=int, default=Config.depth)
    main(Config(p.parse_args().depth))
