"""Pennant Specht modules: recurrence checks, S_n action, the noncrossing basis,
basis expansion, standard-monomial invariants, and dihedral action matrices."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

import numpy as np
from scipy import sparse

from .errors import InvalidInputError, NotInSpanError
from .exactpoly import LEX, Monomial, Polynomial, relabel_columns, sym_minor
from .jellyfish import WebInvariant, invariant_polynomial
from .setpartitions import Permutation, SetPartition, apply_perm, noncrossing_singleton_free


@dataclass(frozen=True)
class PennantShape:
    """The shape (d, d, 1^ell)."""

    d: int
    ell: int

    def __post_init__(self):
        if self.d < 2 or self.ell < 0:
            raise InvalidInputError(f"pennant shape needs d >= 2 and ell >= 0, got d={self.d}, ell={self.ell}")

    @classmethod
    def from_n_d(cls, n: int, d: int) -> "PennantShape":
        return cls(d, n - 2 * d)

    @property
    def n(self) -> int:
        return 2 * self.d + self.ell

    @property
    def k(self) -> int:
        """Rows of the generic matrix."""
        return self.ell + 2

    @property
    def partition(self) -> tuple[int, ...]:
        return (self.d, self.d) + (1,) * self.ell

    @property
    def conjugate(self) -> tuple[int, ...]:
        return (self.ell + 2,) + (2,) * (self.d - 1)


# ---------------------------------------------------------------- recurrence


def _five_term_partitions(A, B, I, J, fixed) -> tuple[list[SetPartition], list[SetPartition]]:
    A, B, I, J = (tuple(sorted(x)) for x in (A, B, I, J))
    fixed = [tuple(sorted(b)) for b in fixed]
    if not A or not B or len(I) != 1 or len(J) != 1:
        raise InvalidInputError("A and B must be nonempty and I, J singletons")
    parts = [A, B, I, J, *fixed]
    if any(not p for p in parts):
        raise InvalidInputError("fixed blocks must be nonempty")
    n = sum(len(p) for p in parts)
    ground = sorted(x for p in parts for x in p)
    if ground != list(range(1, n + 1)):
        raise InvalidInputError("A, B, I, J and the fixed blocks must partition 1..n")

    def mk(*blocks):
        return SetPartition(n, tuple(blocks) + tuple(fixed))

    lhs = [mk(A + B, I + J), mk(A + I, B + J), mk(A + J, B + I)]
    rhs = [mk(A + I + J, B), mk(A, B + I + J)]
    return lhs, rhs


def verify_five_term(A: Iterable[int], B: Iterable[int], I: Iterable[int], J: Iterable[int],
                     fixed_blocks: Sequence[Iterable[int]] = ()) -> Polynomial:
    """LHS - RHS of the five-term recurrence (with any fixed extra blocks).

    The identity says this is the zero polynomial.
    """
    lhs, rhs = _five_term_partitions(A, B, I, J, fixed_blocks)
    out = Polynomial()
    for pi in lhs:
        out = out + invariant_polynomial(pi)
    for pi in rhs:
        out = out - invariant_polynomial(pi)
    return out


# ---------------------------------------------------------------- S_n action


def sn_act(w: Sequence[int], v: WebInvariant | Polynomial) -> Polynomial:
    """Left action x[r,c] -> x[r,w(c)]."""
    poly = v.poly if isinstance(v, WebInvariant) else v
    return relabel_columns(poly, w)


def predicted_action(w: Permutation, pi: SetPartition) -> tuple[int, SetPartition]:
    """(sgn(w), w.pi): the invariant w.[pi] should equal sgn(w)[w.pi]."""
    return w.sign(), apply_perm(w, pi)


# ---------------------------------------------------------------- basis


@dataclass(frozen=True)
class BasisElement:
    pi: SetPartition
    poly: Polynomial
    leading: Monomial
    leading_coeff: int


@lru_cache(maxsize=None)
def _build_basis(n: int, d: int) -> tuple[BasisElement, ...]:
    out = []
    for pi in noncrossing_singleton_free(n, d):
        p = invariant_polynomial(pi)
        lm = p.leading_monomial()
        out.append(BasisElement(pi, p, lm, p.terms[lm]))
    out.sort(key=lambda e: LEX.sort_key(e.leading))
    return tuple(out)


def build_basis(n: int, d: int) -> list[BasisElement]:
    """Noncrossing singleton-free [pi], sorted by descending leading monomial."""
    if d < 2 or 2 * d > n:
        raise InvalidInputError(f"need 2 <= d <= n/2, got n={n}, d={d}")
    return list(_build_basis(n, d))


@dataclass
class BasisExpansion:
    n: int
    d: int
    coeffs: dict[SetPartition, Fraction]
    target: str | None = None
    basis_order: list[SetPartition] = field(default_factory=list, repr=False)

    def coefficient(self, pi: SetPartition) -> Fraction:
        return self.coeffs.get(pi, Fraction(0))

    def vector(self) -> list[Fraction]:
        return [self.coefficient(pi) for pi in self.basis_order]

    def reconstruct(self) -> Polynomial:
        out = Polynomial()
        for e in _build_basis(self.n, self.d):
            c = self.coeffs.get(e.pi)
            if c:
                out = out + e.poly.scale(c)
        return out

    def to_json_obj(self) -> dict:
        coeffs = [{"pi": pi.to_text(), "c": _rational_text(self.coeffs[pi])}
                  for pi in self.basis_order if self.coeffs.get(pi)]
        return {"target": self.target, "coeffs": coeffs}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def _rational_text(c: Fraction) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def expand_in_basis(p: Polynomial, n: int, d: int, target: str | None = None) -> BasisExpansion:
    """Coefficients of ``p`` over the noncrossing basis.

    The basis leading monomials are distinct, so the coordinates of ``p`` at
    those monomials determine the coefficients through a triangular solve; the
    full residual is then checked to be exactly zero.  Raises NotInSpanError
    otherwise.
    """
    basis = build_basis(n, d)
    system = _system(n, d)
    coeffs = system.solve(p)
    if coeffs is None:
        coeffs = _eliminate(p, basis)
    order = [e.pi for e in basis]
    return BasisExpansion(n, d, {pi: coeffs[pi] for pi in order if coeffs.get(pi)}, target, order)


def expand_by_elimination(p: Polynomial, n: int, d: int) -> dict[SetPartition, Fraction]:
    """Reference path: repeatedly cancel the leading monomial of the residual."""
    return _eliminate(p, build_basis(n, d))


def _eliminate(p: Polynomial, basis: Sequence[BasisElement]) -> dict[SetPartition, Fraction]:
    by_lm = {e.leading: e for e in basis}
    residual = dict(p.terms)
    coeffs: dict[SetPartition, Fraction] = {}
    key = LEX.sort_key
    while residual:
        lm = min(residual, key=key)
        e = by_lm.get(lm)
        if e is None:
            raise NotInSpanError("leading monomial of the residual is not a basis leading monomial",
                                 residual=Polynomial(residual))
        c = Fraction(residual[lm]) / e.leading_coeff
        coeffs[e.pi] = coeffs.get(e.pi, 0) + c
        for m, v in e.poly.terms.items():
            s = residual.get(m, 0) - c * v
            if s:
                residual[m] = s
            else:
                residual.pop(m, None)
    return {pi: Fraction(c) for pi, c in coeffs.items() if c}


_INT64_SAFE = 1 << 62


class _BasisSystem:
    """Basis polynomials as a sparse integer matrix over their joint support."""

    def __init__(self, basis: Sequence[BasisElement]):
        self.basis = list(basis)
        self.index: dict[Monomial, int] = {}
        rows, cols, vals = [], [], []
        for j, e in enumerate(self.basis):
            for m, c in e.poly.terms.items():
                rows.append(self.index.setdefault(m, len(self.index)))
                cols.append(j)
                vals.append(c)
        self.integral = all(isinstance(v, int) and abs(v) < _INT64_SAFE for v in vals)
        self.max_entry = max((abs(v) for v in vals), default=0)
        if self.integral:
            self.matrix = sparse.csr_matrix(
                (np.array(vals, dtype=np.int64), (np.array(rows), np.array(cols))),
                shape=(len(self.index), len(self.basis)),
            )
        # lower triangular: basis sorted by descending leading monomial
        self.tri = []
        for a, ea in enumerate(self.basis):
            row = [(j, self.basis[j].poly.coeff(ea.leading)) for j in range(a)]
            self.tri.append(([(j, v) for j, v in row if v], ea.leading_coeff))
        self.unit_diagonal = all(abs(diag) == 1 for _, diag in self.tri)

    def solve(self, p: Polynomial) -> dict[SetPartition, Fraction] | None:
        """Exact coefficients, None when the int64 fast path does not apply.

        Raises NotInSpanError when ``p`` has support outside the basis support
        or the residual is nonzero.
        """
        values = list(p.terms.values())
        if not (self.integral and self.unit_diagonal) or any(not isinstance(v, int) for v in values):
            return None
        ints: list[int] = []
        for e, (row, diag) in zip(self.basis, self.tri):
            acc = p.coeff(e.leading) - sum(v * ints[j] for j, v in row)
            ints.append(acc * diag)
        if self.max_entry * sum(abs(x) for x in ints) + max((abs(v) for v in values), default=0) >= _INT64_SAFE:
            return None
        get = self.index.get
        positions = [get(m) for m in p.terms]
        if None in positions:
            raise NotInSpanError("polynomial has a monomial outside the span's support", residual=p)
        vec = np.zeros(len(self.index), dtype=np.int64)
        vec[np.array(positions, dtype=np.int64)] = np.array(values, dtype=np.int64)
        resid = vec - self.matrix @ np.array(ints, dtype=np.int64)
        if resid.any():
            bad = np.flatnonzero(resid)
            inv = {i: m for m, i in self.index.items()}
            raise NotInSpanError("nonzero residual after triangular solve",
                                 residual=Polynomial({inv[int(i)]: int(resid[i]) for i in bad}))
        return {e.pi: Fraction(x) for e, x in zip(self.basis, ints) if x}


@lru_cache(maxsize=None)
def _system(n: int, d: int) -> _BasisSystem:
    return _BasisSystem(_build_basis(n, d))


def echelon(polys: Sequence[Polynomial]) -> list[Polynomial]:
    """Exact row reduction on leading monomials; returns an independent spanning set."""
    pivots: dict[Monomial, Polynomial] = {}
    for p in polys:
        r = p
        while not r.is_zero():
            lm = r.leading_monomial()
            piv = pivots.get(lm)
            if piv is None:
                pivots[lm] = r
                break
            r = r - piv.scale(Fraction(r.terms[lm]) / piv.terms[lm])
    return list(pivots.values())


def rank(polys: Sequence[Polynomial]) -> int:
    return len(echelon(polys))


def in_span(p: Polynomial, polys: Sequence[Polynomial]) -> bool:
    return rank(list(polys)) == rank(list(polys) + [p])


# ---------------------------------------------------------------- standard tableaux


@dataclass(frozen=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return sum(self.shape)

    def columns(self) -> list[tuple[int, ...]]:
        width = len(self.rows[0]) if self.rows else 0
        return [tuple(r[j] for r in self.rows if len(r) > j) for j in range(width)]

    def is_standard(self) -> bool:
        shape = self.shape
        if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)) or 0 in shape:
            return False
        if sorted(x for r in self.rows for x in r) != list(range(1, self.n + 1)):
            return False
        rows_ok = all(r[j] < r[j + 1] for r in self.rows for j in range(len(r) - 1))
        cols_ok = all(c[i] < c[i + 1] for c in self.columns() for i in range(len(c) - 1))
        return rows_ok and cols_ok

    def to_text(self) -> str:
        return ";".join(",".join(map(str, r)) for r in self.rows)

    @classmethod
    def parse(cls, text: str) -> "StandardTableau":
        try:
            return cls(tuple(tuple(int(x) for x in row.split(",") if x) for row in text.replace(" ", "").split(";")))
        except ValueError as exc:
            raise InvalidInputError(f"bad tableau text {text!r}: {exc}") from None


def hook_length_count(shape: Sequence[int]) -> int:
    """Number of standard tableaux of ``shape`` by the hook length formula."""
    shape = list(shape)
    conj = [sum(1 for r in shape if r > j) for j in range(shape[0])] if shape else []
    prod = 1
    for i, row in enumerate(shape):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(sum(shape)) // prod


def enumerate_syt(shape: Sequence[int]) -> list[StandardTableau]:
    """All standard tableaux of a partition shape, placing 1, 2, ... into addable cells."""
    shape = tuple(shape)
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)) or any(p <= 0 for p in shape):
        raise InvalidInputError(f"not a partition: {shape}")
    n = sum(shape)
    rows: list[list[int]] = [[] for _ in shape]
    out: list[StandardTableau] = []

    def rec(v: int):
        if v > n:
            out.append(StandardTableau(tuple(tuple(r) for r in rows)))
            return
        for i in range(len(shape)):
            if len(rows[i]) < shape[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(v)
                rec(v + 1)
                rows[i].pop()

    rec(1)
    return out


def syt_invariant(t: StandardTableau) -> Polynomial:
    """Product over columns of the top-justified minor on that column's entries."""
    if not t.is_standard():
        raise InvalidInputError(f"not a standard tableau: {t.rows}")
    out = Polynomial.constant(1)
    for col in t.columns():
        out = out * sym_minor(range(1, len(col) + 1), col)
    return out


# ---------------------------------------------------------------- dihedral matrices


Matrix = list  # list[list[Fraction]]


def action_matrix(w: Sequence[int], n: int, d: int) -> Matrix:
    """Matrix of w on span{[pi]}: column j holds the coordinates of w.b_j."""
    basis = build_basis(n, d)
    index = {e.pi: i for i, e in enumerate(basis)}
    size = len(basis)
    mat = [[Fraction(0)] * size for _ in range(size)]
    for j, e in enumerate(basis):
        exp = expand_in_basis(relabel_columns(e.poly, w), n, d)
        for pi, c in exp.coeffs.items():
            mat[index[pi]][j] = Fraction(c)
    return mat


def dihedral_matrix(w: Sequence[int], n: int, d: int) -> Matrix:
    """Action matrix for an element of the dihedral group generated by c and w0."""
    return action_matrix(w, n, d)


def is_signed_permutation_matrix(mat: Matrix) -> bool:
    size = len(mat)
    for i in range(size):
        row = [x for x in mat[i] if x != 0]
        col = [mat[r][i] for r in range(size) if mat[r][i] != 0]
        if len(row) != 1 or len(col) != 1 or abs(row[0]) != 1:
            return False
    return True


def trace(mat: Matrix) -> Fraction:
    return sum((mat[i][i] for i in range(len(mat))), Fraction(0))


def identity_matrix(size: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    size = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(size)), Fraction(0)) for j in range(size)] for i in range(size)]
