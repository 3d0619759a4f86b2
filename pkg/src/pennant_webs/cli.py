"""Command-line front end.

Every subcommand prints to stdout in ``text`` (default) or ``json`` format.
Exit status: 0 success, 1 a checked identity failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from typing import Callable

from . import exactpoly
from .errors import InvalidInputError, NotInSpanError
from .jellyfish import enumerate_jellyfish, invariant_polynomial, sign
from .setpartitions import Permutation, SetPartition, apply_perm
from .tableaux import (
    IncreasingTableau,
    inc_to_partition,
    inc_to_syt,
    k_evacuation,
    k_promotion,
    partition_to_inc,
    promotion_orbits,
    syt_to_inc,
)
from .verify import VerifyConfig, run_suite
from .webbasis import (
    StandardTableau,
    build_basis,
    enumerate_syt,
    expand_in_basis,
    hook_length_count,
    sn_act,
    verify_five_term,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


@dataclass
class Outcome:
    data: object
    text: str
    status: int = EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


# ---------------------------------------------------------------- argument parsing helpers


def _partition(text: str, n: int) -> SetPartition:
    return SetPartition.parse(text, n)


def _elements(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise InvalidInputError(f"bad element list {text!r}") from None


def parse_permutation(text: str, n: int) -> Permutation:
    """One-line notation, or one of ``c``, ``w0``, ``s<i>``, ``c^<k>``."""
    text = text.strip()
    if text == "w0":
        return Permutation.longest(n)
    if m := re.fullmatch(r"c(?:\^(-?\d+))?", text):
        return Permutation.long_cycle(n) ** int(m.group(1) or 1)
    if m := re.fullmatch(r"s(\d+)", text):
        return Permutation.simple(int(m.group(1)), n)
    w = Permutation.parse(text)
    if w.n != n:
        raise InvalidInputError(f"permutation has length {w.n}, expected {n}")
    return w


def _minor_text(rows, cols) -> str:
    return f"det[{','.join(map(str, rows))} | {','.join(map(str, cols))}]"


# ---------------------------------------------------------------- subcommands


def cmd_invariant(args) -> Outcome:
    pi = _partition(args.partition, args.n)
    order = [_elements(b) for b in args.block_order.split("|")] if args.block_order else None
    poly = invariant_polynomial(pi, order)
    if pi.has_singleton:
        return Outcome({"pi": pi.to_text(), "tableaux": [], "polynomial": []},
                       f"pi: {pi.to_text()}\nsingleton block: [pi] = 0\npolynomial: 0")
    tabs = enumerate_jellyfish(pi, order)
    terms = []
    lines = [f"pi: {pi.to_text()}", f"tableaux: {len(tabs)}"]
    for t in tabs:
        s = sign(t)
        minors = " * ".join(_minor_text(r, b) for b, r in zip(t.blocks, t.rows))
        lines.append(f"{'+' if s > 0 else '-'} {minors}")
        terms.append({"sign": s, "columns": [{"block": list(b), "rows": list(r)} for b, r in zip(t.blocks, t.rows)]})
    lines.append(f"terms: {len(poly.terms)}")
    lines.append(f"polynomial: {exactpoly.to_text(poly)}")
    data = {"pi": pi.to_text(), "tableaux": terms, "polynomial": exactpoly.to_json_obj(poly)}
    return Outcome(data, "\n".join(lines))


def _monomial_text(m) -> str:
    return "*".join(exactpoly._var_text(code, e) for code, e in exactpoly._grouped(m))


def cmd_basis(args) -> Outcome:
    basis = build_basis(args.n, args.d)
    shape = (args.d, args.d) + (1,) * (args.n - 2 * args.d)
    n_syt = len(enumerate_syt(shape))
    distinct = len({e.leading for e in basis}) == len(basis)
    ok = distinct and len(basis) == n_syt == hook_length_count(shape)
    rows = [{"pi": e.pi.to_text(), "leading": _monomial_text(e.leading), "coeff": e.leading_coeff} for e in basis]
    lines = [f"{r['coeff']:+d} {r['leading']}  [{r['pi']}]" for r in rows]
    lines += [
        f"shape: {','.join(map(str, shape))}",
        f"dimension: {len(basis)}",
        f"standard tableaux: {n_syt}",
        f"leading monomials distinct: {str(distinct).lower()}",
        f"verified: {str(ok).lower()}",
    ]
    data = {"n": args.n, "d": args.d, "shape": list(shape), "basis": rows, "dimension": len(basis),
            "syt_count": n_syt, "distinct_leading": distinct, "verified": ok}
    return Outcome(data, "\n".join(lines), EXIT_OK if ok else EXIT_FAILED)


def cmd_expand(args) -> Outcome:
    pi = _partition(args.partition, args.n)
    if pi.has_singleton:
        raise InvalidInputError("partition has a singleton block, so [pi] = 0")
    if not 2 <= pi.d <= args.n // 2:
        raise InvalidInputError(f"need 2 <= number of blocks <= n/2, got {pi.d}")
    exp = expand_in_basis(invariant_polynomial(pi), args.n, pi.d, target=pi.to_text())
    data = exp.to_json_obj()
    lines = [f"target: {pi.to_text()}"] + [f"{c['c']}  [{c['pi']}]" for c in data["coeffs"]]
    return Outcome(data, "\n".join(lines))


def cmd_act(args) -> Outcome:
    pi = _partition(args.partition, args.n)
    w = parse_permutation(args.perm, args.n)
    s, image = w.sign(), apply_perm(w, pi)
    ok = sn_act(w, invariant_polynomial(pi)) == invariant_polynomial(image).scale(s)
    data = {"w": w.to_text(), "pi": pi.to_text(), "sign": s, "result": image.to_text(), "verified": ok}
    text = f"w: {w.to_text()}\nw.[{pi.to_text()}] = {'+' if s > 0 else '-'}[{image.to_text()}]\nverified: {str(ok).lower()}"
    return Outcome(data, text, EXIT_OK if ok else EXIT_FAILED)


def cmd_five_term(args) -> Outcome:
    A, B, I, J = (_elements(x) for x in (args.A, args.B, args.I, args.J))
    fixed = [_elements(b) for b in args.fixed.split("|")] if args.fixed else []
    used = sorted(A + B + I + J + tuple(x for b in fixed for x in b))
    if used != list(range(1, args.n + 1)):
        raise InvalidInputError(f"A, B, I, J and fixed blocks must partition 1..{args.n}")
    if not A or not B or len(I) != 1 or len(J) != 1:
        raise InvalidInputError("A and B must be nonempty and I, J single elements")
    residual = verify_five_term(A, B, I, J, fixed)
    ok = residual.is_zero()
    data = {"n": args.n, "residual": exactpoly.to_json_obj(residual), "zero": ok}
    return Outcome(data, f"residual: {exactpoly.to_text(residual)}", EXIT_OK if ok else EXIT_FAILED)


def _increasing(text: str) -> IncreasingTableau:
    return IncreasingTableau.parse(text)


def cmd_promote(args) -> Outcome:
    t = _increasing(args.tableau)
    path = [t]
    for _ in range(args.steps):
        path.append(k_promotion(path[-1]))
    data = {"input": t.to_text(), "steps": args.steps, "output": path[-1].to_text(),
            "path": [x.to_text() for x in path]}
    return Outcome(data, path[-1].to_text())


def cmd_evacuate(args) -> Outcome:
    t = _increasing(args.tableau)
    out = k_evacuation(t)
    return Outcome({"input": t.to_text(), "output": out.to_text()}, out.to_text())


def cmd_orbits(args) -> Outcome:
    if not 1 <= args.m < args.q <= 2 * args.m:
        raise InvalidInputError(f"need m < q <= 2m, got m={args.m}, q={args.q}")
    orbits = promotion_orbits(args.m, args.q)
    data = [{"size": len(o), "orbit": [t.to_text() for t in o]} for o in orbits]
    lines = [f"{len(o)}: " + "  ".join(t.to_text() for t in o) for o in orbits]
    lines.append(f"orbits: {len(orbits)}, tableaux: {sum(len(o) for o in orbits)}")
    return Outcome(data, "\n".join(lines))


def cmd_bijection(args) -> Outcome:
    if args.tableau:
        t = _increasing(args.tableau)
    elif args.syt:
        t = syt_to_inc(StandardTableau.parse(args.syt))
    else:
        t = partition_to_inc(SetPartition.parse(args.partition))
    u, pi = inc_to_syt(t), inc_to_partition(t)
    data = {"increasing": t.to_text(), "standard": u.to_text(), "partition": pi.to_text()}
    text = f"increasing: {t.to_text()}\nstandard: {u.to_text()}\npartition: {pi.to_text()}"
    return Outcome(data, text)


def cmd_verify(args) -> Outcome:
    report = run_suite(VerifyConfig.bounded(args.n_max))
    data = {"n_max": args.n_max, "passed": report.passed,
            "checks": [r.to_json_obj(args.timings) for r in report.results]}
    text = report.table(args.timings) + f"\n{'all checks passed' if report.passed else 'SOME CHECKS FAILED'}"
    return Outcome(data, text, EXIT_OK if report.passed else EXIT_FAILED)


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pennant-webs", description=__doc__.splitlines()[0])
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, fn: Callable, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn)
        return p

    p = add("invariant", cmd_invariant, "signed jellyfish sum and polynomial [pi]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--partition", required=True, help='blocks separated by "|", e.g. "1,4|2,3"')
    p.add_argument("--block-order", help="column order of the blocks, same syntax as --partition")

    p = add("basis", cmd_basis, "noncrossing basis with leading monomials")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = add("expand", cmd_expand, "coefficients of [pi] over the noncrossing basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--partition", required=True)

    p = add("act", cmd_act, "apply a permutation to [pi] and check the predicted sign")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--perm", required=True, help='one-line "2,1,3,4", or c, c^k, w0, s<i>')
    p.add_argument("--partition", required=True)

    p = add("five-term", cmd_five_term, "residual of the five-term recurrence")
    p.add_argument("--n", type=int, required=True)
    for flag in ("--A", "--B", "--I", "--J"):
        p.add_argument(flag, required=True)
    p.add_argument("--fixed", default="", help='extra blocks, e.g. "7,8|9,10"')

    p = add("promote", cmd_promote, "K-promotion of an increasing tableau")
    p.add_argument("--tableau", required=True, help='rows separated by ";", e.g. "1,2;3,4"')
    p.add_argument("--steps", type=int, default=1)

    p = add("evacuate", cmd_evacuate, "K-evacuation of an increasing tableau")
    p.add_argument("--tableau", required=True)

    p = add("orbits", cmd_orbits, "K-promotion orbits on two-row increasing tableaux")
    p.add_argument("--m", type=int, required=True, help="row length")
    p.add_argument("--q", type=int, required=True, help="largest entry")

    p = add("bijection", cmd_bijection, "increasing tableau, standard tableau and partition triple")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--tableau", help="increasing tableau")
    g.add_argument("--syt", help="standard tableau of shape (d,d,1^l)")
    g.add_argument("--partition", help="noncrossing singleton-free partition")

    p = add("verify", cmd_verify, "run the property suite and print a pass/fail table")
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--timings", action="store_true", help="include wall-clock seconds per check")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except NotInSpanError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (InvalidInputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        print(json.dumps(out.data, indent=2) if args.format == "json" else out.text)
        sys.stdout.flush()
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head)
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
    return out.status


if __name__ == "__main__":
    sys.exit(main())
