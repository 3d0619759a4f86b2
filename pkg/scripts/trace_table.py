"""Traces of c^k and w0 in the noncrossing basis next to rotation/reflection fixed-point counts."""

import argparse
from dataclasses import dataclass
from math import comb

from pennant_webs.setpartitions import Permutation, reflect, rotate
from pennant_webs.webbasis import build_basis, dihedral_matrix, is_signed_permutation_matrix, trace


@dataclass(frozen=True)
class TraceConfig:
    cases: tuple[tuple[int, int], ...] = ((6, 2), (6, 3), (8, 3))


def rows(cfg: TraceConfig):
    for n, d in cfg.cases:
        basis = build_basis(n, d)
        for k in range(n):
            mat = dihedral_matrix(Permutation.long_cycle(n) ** k, n, d)
            fixed = sum(rotate(e.pi, k) == e.pi for e in basis)
            yield n, d, f"c^{k}", int(trace(mat)), (-1) ** ((n - 1) * k) * fixed, is_signed_permutation_matrix(mat)
        mat = dihedral_matrix(Permutation.longest(n), n, d)
        fixed = sum(reflect(e.pi) == e.pi for e in basis)
        yield n, d, "w0", int(trace(mat)), (-1) ** comb(n, 2) * fixed, is_signed_permutation_matrix(mat)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--case", action="append", help="n,d (repeatable)")
    args = ap.parse_args()
    cfg = TraceConfig(tuple(tuple(map(int, c.split(","))) for c in args.case)) if args.case else TraceConfig()
    print(f"{'n':>3} {'d':>3} {'w':>5} {'trace':>6} {'signed fixed':>13}  signed-perm")
    for n, d, w, tr, fx, ok in rows(cfg):
        print(f"{n:>3} {d:>3} {w:>5} {tr:>6} {fx:>13}  {ok}")


if __name__ == "__main__":
    main()
