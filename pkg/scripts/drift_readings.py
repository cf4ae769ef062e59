"""Try several readings of the drift construction toward code (1, -n, n)."""

import argparse
from dataclasses import dataclass

from farmarb import reference, search
from farmarb.arbitrage import STRONG, WEAK


@dataclass
class Config:
    n_max: int = 10


READINGS = {
    "published weak chain, closer last": (reference.DRIFT_CHAIN, reference.DRIFT_CLOSER, WEAK),
    "published weak chain reversed": (tuple(reversed(reference.DRIFT_CHAIN)), reference.DRIFT_CLOSER, WEAK),
    "strong (4,7,12), closer 5": ((4, 7, 12), 5, STRONG),
    "strong (4,7,12), closer 6": ((4, 7, 12), 6, STRONG),
}


def main(cfg: Config) -> None:
    for name, (block, closer, flavor) in READINGS.items():
        r = search.verify_prodex(cfg.n_max, block, closer, flavor)
        states_ok = all(row["state"] == row["expected"] for row in r["rows"])
        active = all(row["all_active"] for row in r["rows"])
        print("%-36s states match: %-5s all steps active: %s" % (name, states_ok, active))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=Config.n_max)
    main(Config(p.parse_args().n_max))
