"""Property checks over bounded parameter ranges.

Every check returns a :class:`CheckResult`; the CLI ``verify`` subcommand and
the acceptance tests both run these.
"""

from __future__ import annotations

import itertools
import logging
import random
import time
from dataclasses import dataclass, field
from math import comb, factorial, prod
from typing import Callable, Iterator

import numpy as np

from .exactpoly import monomial_exponents, sym_minor
from .jellyfish import (
    JellyfishTableau,
    enumerate_jellyfish,
    invariant_polynomial,
    inversion_number,
    remove_entry,
    sign,
    signed_terms,
)
from .setpartitions import (
    Permutation,
    SetPartition,
    _all_partitions,
    apply_perm,
    noncrossing_singleton_free,
    rotate,
    reflect,
    singleton_free,
)
from .tableaux import (
    IncreasingTableau,
    enumerate_increasing,
    inc_to_partition,
    inc_to_syt,
    k_evacuation,
    k_promotion,
    partition_to_inc,
    promotion_orbits,
    syt_to_inc,
    tau,
)
from .webbasis import (
    build_basis,
    dihedral_matrix,
    enumerate_syt,
    expand_in_basis,
    hook_length_count,
    identity_matrix,
    is_signed_permutation_matrix,
    matmul,
    rank,
    relabel_columns,
    syt_invariant,
    trace,
    verify_five_term,
)

log = logging.getLogger(__name__)


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int = 0
    detail: str = ""
    seconds: float = 0.0

    def line(self, timings: bool = True) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        clock = f", {self.seconds:.2f}s" if timings else ""
        return f"{status}  {self.name}: {self.cases} cases{clock}{extra}"

    def to_json_obj(self, timings: bool = True) -> dict:
        obj = {"name": self.name, "passed": self.passed, "cases": self.cases, "detail": self.detail}
        if timings:
            obj["seconds"] = round(self.seconds, 3)
        return obj


@dataclass(frozen=True)
class VerifyConfig:
    """Bounds for the property suite; defaults are the acceptance bounds."""

    five_term_exhaustive_n: int = 7
    five_term_random_ns: tuple[int, ...] = (8, 9)
    five_term_samples: int = 200
    basis_n: int = 9
    span_n: int = 7
    action_n: int = 7
    sign_n: int = 8
    tableau_q: int = 10
    tableau_m: int = 5
    trace_cases: tuple[tuple[int, int], ...] = ((6, 2), (6, 3), (8, 3))
    seed: int = 20240527

    @classmethod
    def bounded(cls, n_max: int) -> "VerifyConfig":
        """Every bound clipped to ``n_max``."""
        return cls(
            five_term_exhaustive_n=min(7, n_max),
            five_term_random_ns=tuple(n for n in (8, 9) if n <= n_max),
            basis_n=min(9, n_max),
            span_n=min(7, n_max),
            action_n=min(7, n_max),
            sign_n=min(8, n_max),
            tableau_q=min(10, n_max),
            tableau_m=min(5, n_max),
            trace_cases=tuple(c for c in ((6, 2), (6, 3), (8, 3)) if c[0] <= n_max),
        )


def _timed(name: str, fn: Callable[[], tuple[int, list[str]]]) -> CheckResult:
    t0 = time.perf_counter()
    try:
        cases, failures = fn()
    except Exception as exc:  # a crash is a failed check, not an aborted run
        log.exception("check %s raised", name)
        return CheckResult(name, False, 0, f"raised {type(exc).__name__}: {exc}", time.perf_counter() - t0)
    detail = "; ".join(failures[:3]) + (f" (+{len(failures) - 3} more)" if len(failures) > 3 else "")
    return CheckResult(name, not failures, cases, detail, time.perf_counter() - t0)


# ---------------------------------------------------------------- worked example

EXAMPLE_PARTITION = "2,3,6,10|5,7,8,9|1,4"
EXAMPLE_BLOCK_ORDER = ((2, 3, 6, 10), (5, 7, 8, 9), (1, 4))
EXAMPLE_INVERSIONS = (8, 7, 6, 8, 7, 8)
# (sign, row set per block in the order above), one entry per displayed term
EXAMPLE_TERMS = (
    (+1, ((1, 2, 3, 4), (1, 2, 5, 6), (1, 2))),
    (-1, ((1, 2, 3, 5), (1, 2, 4, 6), (1, 2))),
    (+1, ((1, 2, 3, 6), (1, 2, 4, 5), (1, 2))),
    (+1, ((1, 2, 4, 5), (1, 2, 3, 6), (1, 2))),
    (-1, ((1, 2, 4, 6), (1, 2, 3, 5), (1, 2))),
    (+1, ((1, 2, 5, 6), (1, 2, 3, 4), (1, 2))),
)


def check_worked_example() -> CheckResult:
    def run():
        fails = []
        pi = SetPartition.parse(EXAMPLE_PARTITION)
        tabs = enumerate_jellyfish(pi, EXAMPLE_BLOCK_ORDER)
        invs = tuple(inversion_number(t) for t in tabs)
        if len(tabs) != 6:
            fails.append(f"{len(tabs)} tableaux")
        if invs != EXAMPLE_INVERSIONS:
            fails.append(f"inversions {invs}")
        got_terms = tuple((s, t.rows) for s, t in signed_terms(pi, EXAMPLE_BLOCK_ORDER))
        if got_terms != EXAMPLE_TERMS:
            fails.append("signed terms differ from the displayed sum")
        expected = sum(
            (s * sym_minor(r[0], EXAMPLE_BLOCK_ORDER[0]) * sym_minor(r[1], EXAMPLE_BLOCK_ORDER[1])
             * sym_minor(r[2], EXAMPLE_BLOCK_ORDER[2]) for s, r in EXAMPLE_TERMS),
            start=sym_minor([1], [1]) * 0,
        )
        if invariant_polynomial(pi) != expected:
            fails.append("[pi] differs from the displayed sum")
        return 1, fails

    return _timed("worked example (6 jellyfish tableaux)", run)


# ---------------------------------------------------------------- five-term


def five_term_decompositions(n: int) -> Iterator[tuple[tuple, tuple, tuple, tuple, tuple]]:
    """Every (A, B, I, J, fixed blocks) with A, B nonempty and |I| = |J| = 1."""
    for i, j in itertools.permutations(range(1, n + 1), 2):
        rest = [x for x in range(1, n + 1) if x not in (i, j)]
        for labels in itertools.product(range(3), repeat=len(rest)):
            A = tuple(x for x, lab in zip(rest, labels) if lab == 0)
            B = tuple(x for x, lab in zip(rest, labels) if lab == 1)
            F = tuple(x for x, lab in zip(rest, labels) if lab == 2)
            if not A or not B:
                continue
            for fixed in _set_partitions_of(F):
                yield A, B, (i,), (j,), fixed


def _set_partitions_of(elems: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    if not elems:
        yield ()
        return
    relabel = {k + 1: e for k, e in enumerate(elems)}
    for pi in _all_partitions(len(elems)):
        yield tuple(tuple(relabel[x] for x in b) for b in pi.blocks)


def random_decomposition(n: int, rng: random.Random) -> tuple[tuple, tuple, tuple, tuple, tuple]:
    elems = list(range(1, n + 1))
    rng.shuffle(elems)
    i, j, rest = elems[0], elems[1], elems[2:]
    while True:
        labels = [rng.randrange(3) for _ in rest]
        if 0 in labels and 1 in labels:
            break
    A = tuple(sorted(x for x, lab in zip(rest, labels) if lab == 0))
    B = tuple(sorted(x for x, lab in zip(rest, labels) if lab == 1))
    F = [x for x, lab in zip(rest, labels) if lab == 2]
    fixed: list[list[int]] = []
    for x in F:
        slot = rng.randrange(len(fixed) + 1)
        if slot == len(fixed):
            fixed.append([x])
        else:
            fixed[slot].append(x)
    return A, B, (i,), (j,), tuple(tuple(sorted(b)) for b in fixed)


def check_five_term_exhaustive(n_max: int) -> CheckResult:
    def run():
        cases, fails = 0, []
        for n in range(4, n_max + 1):
            for A, B, I, J, fixed in five_term_decompositions(n):
                cases += 1
                if not verify_five_term(A, B, I, J, fixed).is_zero():
                    fails.append(f"A={A} B={B} I={I} J={J} fixed={fixed}")
        return cases, fails

    return _timed(f"five-term recurrence, all decompositions n<={n_max}", run)


def check_five_term_random(ns: tuple[int, ...], samples: int, seed: int) -> CheckResult:
    def run():
        rng = random.Random(seed)
        cases, fails = 0, []
        for n in ns:
            for _ in range(samples):
                A, B, I, J, fixed = random_decomposition(n, rng)
                cases += 1
                if not verify_five_term(A, B, I, J, fixed).is_zero():
                    fails.append(f"n={n} A={A} B={B} I={I} J={J} fixed={fixed}")
        return cases, fails

    return _timed(f"five-term recurrence, {samples} random decompositions at n in {ns}", run)


# ---------------------------------------------------------------- basis


def pennant_shape(n: int, d: int) -> tuple[int, ...]:
    return (d, d) + (1,) * (n - 2 * d)


def check_basis_theorem(n_max: int) -> CheckResult:
    def run():
        cases, fails = 0, []
        for n in range(4, n_max + 1):
            for d in range(2, n // 2 + 1):
                basis = build_basis(n, d)
                shape = pennant_shape(n, d)
                syts = enumerate_syt(shape)
                if len({e.leading for e in basis}) != len(basis):
                    fails.append(f"(n,d)=({n},{d}) repeated leading monomial")
                for e in basis:
                    exps = monomial_exponents(e.leading)
                    if any((1, min(b)) not in exps or (2, max(b)) not in exps for b in e.pi.blocks):
                        fails.append(f"leading monomial of [{e.pi.to_text()}] misses a block endpoint")
                if not len(basis) == len(syts) == hook_length_count(shape):
                    fails.append(f"(n,d)=({n},{d}) |W|={len(basis)} #SYT={len(syts)}")
                for sigma in singleton_free(n, d):
                    cases += 1
                    expand_in_basis(invariant_polynomial(sigma), n, d)
                for t in syts:
                    cases += 1
                    expand_in_basis(syt_invariant(t), n, d)
        return cases, fails

    return _timed(f"basis theorem and span of all [sigma] and SYT invariants, n<={n_max}", run)


def check_span_equality(n_max: int) -> CheckResult:
    """SYT invariants are independent and every [pi] lies in their span."""

    def run():
        cases, fails = 0, []
        for n in range(4, n_max + 1):
            for d in range(2, n // 2 + 1):
                syt_polys = [syt_invariant(t) for t in enumerate_syt(pennant_shape(n, d))]
                r = rank(syt_polys)
                if r != len(syt_polys):
                    fails.append(f"({n},{d}) SYT invariants have rank {r} < {len(syt_polys)}")
                for e in build_basis(n, d):
                    cases += 1
                    if rank(syt_polys + [e.poly]) != r:
                        fails.append(f"({n},{d}) [{e.pi.to_text()}] outside SYT span")
        return cases, fails

    return _timed(f"span equality with the standard-monomial basis, n<={n_max}", run)


# ---------------------------------------------------------------- S_n action


def check_group_action(n_max: int) -> CheckResult:
    def run():
        cases, fails = 0, []
        for n in range(4, n_max + 1):
            gens = [(f"s{i}", Permutation.simple(i, n), -1) for i in range(1, n)]
            c, w0 = Permutation.long_cycle(n), Permutation.longest(n)
            for d in range(2, n // 2 + 1):
                for pi in singleton_free(n, d):
                    p = invariant_polynomial(pi)
                    checks = [(name, w, s, apply_perm(w, pi)) for name, w, s in gens]
                    checks.append(("c", c, (-1) ** (n - 1), rotate(pi)))
                    checks.append(("w0", w0, (-1) ** comb(n, 2), reflect(pi)))
                    for name, w, s, image in checks:
                        cases += 1
                        if relabel_columns(p, w) != invariant_polynomial(image).scale(s):
                            fails.append(f"{name} on {pi.to_text()}")
        return cases, fails

    return _timed(f"S_n action on all [pi], n<={n_max}", run)


# ---------------------------------------------------------------- sign identities


def _reading_layout(t: JellyfishTableau) -> tuple[list[int], list[int]]:
    # cells in reading order as (column, position within column)
    cells = sorted((r, j, pos) for j, rows in enumerate(t.rows) for pos, r in enumerate(rows))
    return [j for _, j, _ in cells], [pos for _, _, pos in cells]


def barred_inversions(t: JellyfishTableau) -> np.ndarray:
    """Barred inversion number of every tableau obtained from ``t`` by reordering
    columns and permuting within columns, one vectorized pass per column order."""
    d = len(t.blocks)
    counts = []
    for col_perm in itertools.permutations(range(d)):
        # column col_perm[x] of t moves to position x
        rows = [t.rows[col_perm[x]] for x in range(d)]
        blocks = [t.blocks[col_perm[x]] for x in range(d)]
        cells = sorted((r, x, pos) for x in range(d) for pos, r in enumerate(rows[x]))
        cols = np.array([x for _, x, _ in cells])
        label_sets = [list(itertools.permutations(b)) for b in blocks]
        fills = np.array([sum((list(p) for p in combo), []) for combo in itertools.product(*label_sets)])
        # fills[:, offset(x) + pos] is the label at column x, position pos
        offsets = np.cumsum([0] + [len(b) for b in blocks])[:-1]
        order = np.array([offsets[x] + pos for _, x, pos in cells])
        word = fills[:, order]
        i_idx, j_idx = np.triu_indices(len(cells), k=1)
        mask = cols[i_idx] != cols[j_idx]
        counts.append((word[:, i_idx[mask]] > word[:, j_idx[mask]]).sum(axis=1))
    return np.concatenate(counts)


def barred_signs(t: JellyfishTableau) -> np.ndarray:
    return np.where(barred_inversions(t) % 2, -1, 1)


def check_row_col_swap(n_max: int) -> CheckResult:
    def run():
        cases, fails = 0, []
        for n in range(4, n_max + 1):
            for d in range(1, n // 2 + 1):
                for pi in singleton_free(n, d):
                    for t in enumerate_jellyfish(pi):
                        s = barred_signs(t)
                        cases += len(s)
                        if not np.all(s == sign(t)):
                            fails.append(f"{pi.to_text()} rows={t.rows}")
                    reversed_order = list(reversed(pi.blocks))
                    cases += 1
                    if invariant_polynomial(pi, reversed_order) != invariant_polynomial(pi):
                        fails.append(f"[{pi.to_text()}] depends on block order")
        return cases, fails

    return _timed(f"sign invariance under column and within-column permutations, n<={n_max}", run)


def check_sign_removal(n_max: int) -> CheckResult:
    def run():
        cases, fails = 0, []
        for n in range(5, n_max + 1):
            for d in range(1, n // 2 + 1):
                if 2 * d >= n:
                    continue
                for pi in singleton_free(n, d):
                    for t in enumerate_jellyfish(pi):
                        block = t.blocks[t.lowest_block()]
                        for k in block:
                            cases += 1
                            above = sum(1 for x in block if x > k)
                            if sign(t) != sign(remove_entry(t, k)) * (-1) ** (n - k - above):
                                fails.append(f"{pi.to_text()} rows={t.rows} k={k}")
        return cases, fails

    return _timed(f"sign change on removing an entry of the bottom block, n<={n_max}", run)


def check_pair_block_sign(n_max: int) -> CheckResult:
    def run():
        cases, fails = 0, []
        for n in range(4, n_max + 1):
            for pi in singleton_free(n, 2):
                for i, j in (b for b in pi.blocks if len(b) == 2):
                    ts = enumerate_jellyfish(pi)
                    cases += 1
                    if len(ts) != 1 or sign(ts[0]) != (-1) ** (i + j):
                        fails.append(pi.to_text())
        return cases, fails

    return _timed(f"two-block partitions with a pair {{i,j}} have sign (-1)^(i+j), n<={n_max}", run)


def check_jellyfish_count(n_max: int) -> CheckResult:
    def run():
        cases, fails = 0, []
        for n in range(2, n_max + 1):
            for d in range(1, n // 2 + 1):
                for pi in singleton_free(n, d):
                    cases += 1
                    expected = factorial(n - 2 * d) // prod(factorial(len(b) - 2) for b in pi.blocks)
                    if len(enumerate_jellyfish(pi)) != expected:
                        fails.append(pi.to_text())
        return cases, fails

    return _timed(f"jellyfish tableau counts, n<={n_max}", run)


# ---------------------------------------------------------------- tableau dynamics

TRIPLE_INC = "1,2,3,4,6,7,8;2,3,5,6,8,9,10"
TRIPLE_SYT = ((1, 4, 7), (2, 6, 10), (3,), (5,), (8,), (9,))
TRIPLE_PARTITION = "1,2,3,6,10|4,5|7,8,9"


def _inc_families(q_max: int, m_max: int):
    for m in range(1, m_max + 1):
        for q in range(m + 1, min(2 * m, q_max) + 1):
            yield m, q, enumerate_increasing(m, q)


def check_tableau_dynamics(q_max: int, m_max: int) -> CheckResult:
    def run():
        cases, fails = 0, []
        for m, q, tabs in _inc_families(q_max, m_max):
            images = set()
            for t in tabs:
                cases += 1
                for k in range(1, q):
                    if tau(tau(t, k), k) != t or not tau(t, k).is_valid():
                        fails.append(f"tau_{k} on {t.to_text()}")
                pi = inc_to_partition(t)
                images.add(pi)
                if partition_to_inc(pi) != t:
                    fails.append(f"partition round trip {t.to_text()}")
                if inc_to_partition(k_promotion(t)) != rotate(pi):
                    fails.append(f"promotion/rotation {t.to_text()}")
                if inc_to_partition(k_evacuation(t)) != reflect(pi):
                    fails.append(f"evacuation/reflection {t.to_text()}")
            if images != set(noncrossing_singleton_free(q, q - m)) if q - m >= 1 else False:
                fails.append(f"image of Inc^{q}({m},{m}) is not W({q},{q - m})")
            for orbit in promotion_orbits(m, q):
                if q % len(orbit):
                    fails.append(f"orbit of size {len(orbit)} in Inc^{q}({m},{m})")
        t = IncreasingTableau.parse(TRIPLE_INC)
        if inc_to_syt(t).rows != TRIPLE_SYT:
            fails.append("standard tableau of the reference triple")
        if inc_to_partition(t).to_text() != TRIPLE_PARTITION:
            fails.append("partition of the reference triple")
        return cases, fails

    return _timed(f"tau, K-promotion, K-evacuation and the partition bijection, reference triple, q<={q_max}, m<={m_max}", run)


def check_syt_bijection(q_max: int, m_max: int) -> CheckResult:
    """Round trip, evacuation-equivariance, and a promotion witness for Inc -> SYT."""

    def run():
        cases, fails = 0, []
        promotion_witness = False
        for m, q, tabs in _inc_families(q_max, m_max):
            d, ell = q - m, 2 * m - q
            syts = set()
            for t in tabs:
                cases += 1
                u = inc_to_syt(t)
                syts.add(u)
                if syt_to_inc(u) != t:
                    fails.append(f"round trip {t.to_text()}")
                if inc_to_syt(k_evacuation(t)) != k_evacuation(u):
                    fails.append(f"evacuation {t.to_text()}")
                if inc_to_syt(k_promotion(t)) != k_promotion(u):
                    promotion_witness = True
            if len(syts) != hook_length_count((d, d) + (1,) * ell):
                fails.append(f"Inc^{q}({m},{m}) does not hit every SYT")
        if not promotion_witness:
            fails.append("no promotion non-equivariance witness found")
        return cases, fails

    return _timed(f"Inc -> SYT bijection, q<={q_max}, m<={m_max}", run)


# ---------------------------------------------------------------- trace identity


def check_trace_identity(cases_nd: tuple[tuple[int, int], ...]) -> CheckResult:
    def run():
        cases, fails = 0, []
        for n, d in cases_nd:
            c = Permutation.long_cycle(n)
            basis = build_basis(n, d)
            mat = dihedral_matrix(c, n, d)
            power = identity_matrix(len(basis))
            for k in range(n + 1):
                cases += 1
                if k:
                    power = matmul(mat, power)
                direct = dihedral_matrix(c ** k, n, d)
                fixed = sum(1 for e in basis if rotate(e.pi, k) == e.pi)
                if direct != power:
                    fails.append(f"({n},{d}) c^{k} matrix is not the {k}th power")
                if not is_signed_permutation_matrix(direct):
                    fails.append(f"({n},{d}) c^{k} not a signed permutation matrix")
                if trace(direct) != (-1) ** ((n - 1) * k) * fixed:
                    fails.append(f"({n},{d}) trace(c^{k})={trace(direct)} fixed={fixed}")
            w0 = dihedral_matrix(Permutation.longest(n), n, d)
            cases += 1
            if not is_signed_permutation_matrix(w0):
                fails.append(f"({n},{d}) w0 not a signed permutation matrix")
            fixed = sum(1 for e in basis if reflect(e.pi) == e.pi)
            if trace(w0) != (-1) ** comb(n, 2) * fixed:
                fails.append(f"({n},{d}) trace(w0)")
        return cases, fails

    return _timed(f"dihedral action matrices and trace identity for {list(cases_nd)}", run)


# ---------------------------------------------------------------- suite


@dataclass
class SuiteReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def table(self, timings: bool = True) -> str:
        return "\n".join(r.line(timings) for r in self.results)


def run_suite(config: VerifyConfig = VerifyConfig()) -> SuiteReport:
    report = SuiteReport()
    steps = [
        check_worked_example,
        lambda: check_five_term_exhaustive(config.five_term_exhaustive_n),
        lambda: check_five_term_random(config.five_term_random_ns, config.five_term_samples, config.seed),
        lambda: check_basis_theorem(config.basis_n),
        lambda: check_span_equality(config.span_n),
        lambda: check_group_action(config.action_n),
        lambda: check_jellyfish_count(config.sign_n),
        lambda: check_row_col_swap(config.sign_n),
        lambda: check_sign_removal(config.sign_n),
        lambda: check_pair_block_sign(config.sign_n),
        lambda: check_tableau_dynamics(config.tableau_q, config.tableau_m),
        lambda: check_syt_bijection(config.tableau_q, config.tableau_m),
        lambda: check_trace_identity(config.trace_cases),
    ]
    for step in steps:
        result = step()
        log.info(result.line())
        report.results.append(result)
    return report
