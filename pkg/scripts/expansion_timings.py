"""Time the expansion of every [sigma], sigma in Pi(n, d), over the noncrossing basis."""

import argparse
import time
from dataclasses import dataclass

from pennant_webs.jellyfish import invariant_polynomial
from pennant_webs.setpartitions import singleton_free
from pennant_webs.webbasis import build_basis, expand_in_basis


@dataclass(frozen=True)
class TimingConfig:
    max_n: int = 8


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=TimingConfig.max_n)
    cfg = TimingConfig(ap.parse_args().max_n)
    for n in range(4, cfg.max_n + 1):
        for d in range(2, n // 2 + 1):
            t0 = time.perf_counter()
            dim = len(build_basis(n, d))
            sigmas = singleton_free(n, d)
            nonzero = sum(len(expand_in_basis(invariant_polynomial(s), n, d).coeffs) for s in sigmas)
            print(f"n={n} d={d} dim={dim:>4} |Pi|={len(sigmas):>5} nonzero coeffs={nonzero:>6} "
                  f"{time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
