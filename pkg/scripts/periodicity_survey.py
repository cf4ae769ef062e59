"""Iterate the 32-step weak chain from many random seeds.

Reports the distribution of (transient, period) and how many distinct
arbitrage ids ever fire, to see whether any seed activates all 24.
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from farmarb import search


@dataclass
class Config:
    seeds: int = 3000
    spread: int = 10
    rng_seed: int = 0


def main(cfg: Config) -> None:
    rng = random.Random(cfg.rng_seed)
    shapes, fired = Counter(), Counter()
    best = (0, None)
    for _ in range(cfg.seeds):
        seed = tuple(rng.randint(-cfg.spread, cfg.spread) for _ in range(6))
        r = search.verify_prop32(seed)
        shapes[(r.transient, r.period)] += 1
        ids = r.ids_active(range(len(r.activity)))
        fired[len(ids)] += 1
        if len(ids) > best[0]:
            best = (len(ids), seed)
    print("(transient, period) counts:", dict(sorted(shapes.items(), key=str)))
    print("distinct ids firing -> seeds:", dict(sorted(fired.items())))
    print("most ids firing: %d, from seed %s" % best)


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--seeds", type=int, default=Config.seeds)
    p.add_argument("--spread", type=int, default=Config.spread)
    p.add_argument("--rng-seed", type=int, default=Config.rng_seed)
    a = p.parse_args()
    main(Config(a.seeds, a.spread, a.rng_seed))
