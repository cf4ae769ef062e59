"""Exhaustive scan of short strong chains.

Lists products with a root outside {0, 1}, zero G-products (stabilizers)
and Jordan blocks at 1 in the 6x6 product (destabilizers).
"""

import argparse
from dataclasses import dataclass
from itertools import product

from farmarb import semigroup


@dataclass
class Config:
    length: int = 3
    show: int = 10


def main(cfg: Config) -> None:
    odd, stab, destab = [], [], []
    for ids in product(range(1, 13), repeat=cfg.length):
        g = semigroup.analyze_product(ids, "G3", strict=False)
        d = semigroup.analyze_product(ids, "D6", strict=False)
        if not (g.conforming and d.conforming):
            odd.append((ids, g.charpoly))
        if semigroup.is_stabilizer(ids):
            stab.append(ids)
        if d.rank_m_minus_i_sq < d.rank_m_minus_i:
            destab.append(ids)
    print("length %d: %d chains" % (cfg.length, 12 ** cfg.length))
    print("roots outside {0,1}: %d, e.g. %s" % (len(odd), odd[:cfg.show]))
    print("stabilizers: %d, e.g. %s" % (len(stab), stab[:cfg.show]))
    print("destabilizers: %d, e.g. %s" % (len(destab), destab[:cfg.show]))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--length", type=int, default=Config.length)
    p.add_argument("--show", type=int, default=Config.show)
    a = p.parse_args()
    main(Config(a.length, a.show))
