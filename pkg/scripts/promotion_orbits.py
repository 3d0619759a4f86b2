"""Orbit-size distribution of K-promotion on Inc^q(m, m)."""

import argparse
from collections import Counter
from dataclasses import dataclass

from pennant_webs.tableaux import promotion_orbits


@dataclass(frozen=True)
class OrbitConfig:
    max_q: int = 10
    max_m: int = 5


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-q", type=int, default=OrbitConfig.max_q)
    ap.add_argument("--max-m", type=int, default=OrbitConfig.max_m)
    args = ap.parse_args()
    cfg = OrbitConfig(args.max_q, args.max_m)
    for m in range(1, cfg.max_m + 1):
        for q in range(m + 1, min(2 * m, cfg.max_q) + 1):
            sizes = Counter(len(o) for o in promotion_orbits(m, q))
            total = sum(k * v for k, v in sizes.items())
            print(f"m={m} q={q:>2} |Inc|={total:>4}  orbit sizes {dict(sorted(sizes.items()))}")


if __name__ == "__main__":
    main()
