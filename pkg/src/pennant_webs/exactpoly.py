"""Exact sparse polynomials in the entries x[r,c] of a generic matrix.

A monomial is stored as a non-decreasing tuple of integer variable codes, one
code per unit of exponent.  Codes are chosen so that ascending code order is
descending variable order::

    x[1,1] > x[1,2] > ... > x[1,n] > x[2,n] > ... > x[2,1] > x[3,1] > ... > x[k,n]

With that encoding, the lexicographic comparison of two monomials reduces to
tuple comparison once a sentinel is appended (see :meth:`MonomialOrder.sort_key`).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import EmptyInputError, InvalidInputError

_BASE = 1 << 20
_SENTINEL = 1 << 62

Monomial = tuple  # tuple[int, ...] of variable codes, sorted ascending


class Variable(NamedTuple):
    row: int
    col: int


def encode(row: int, col: int) -> int:
    if not (1 <= row and 1 <= col < _BASE - 1):
        raise InvalidInputError(f"variable index out of range: x[{row},{col}]")
    return row * _BASE + (_BASE - 1 - col if row == 2 else col)


def decode(code: int) -> Variable:
    row, low = divmod(code, _BASE)
    return Variable(row, _BASE - 1 - low if row == 2 else low)


def make_monomial(exponents: Mapping[tuple[int, int], int] | Iterable[tuple[int, int, int]]) -> Monomial:
    """Build a monomial from ``{(r, c): e}`` or from ``(r, c, e)`` triples."""
    items = exponents.items() if isinstance(exponents, Mapping) else (((r, c), e) for r, c, e in exponents)
    codes = []
    for (r, c), e in items:
        if e < 0:
            raise InvalidInputError("negative exponent")
        codes.extend([encode(r, c)] * e)
    return tuple(sorted(codes))


def monomial_exponents(m: Monomial) -> dict[Variable, int]:
    out: dict[Variable, int] = {}
    for code in m:
        v = decode(code)
        out[v] = out.get(v, 0) + 1
    return out


def monomial_columns(m: Monomial) -> list[int]:
    """Column index of every variable factor, with multiplicity."""
    return [decode(code).col for code in m]


@dataclass(frozen=True)
class MonomialOrder:
    """Pure lex order on monomials induced by the variable ranking above.

    Only one ranking is used in this package; the row-2 reversal is baked into
    the variable codes, so the order itself carries no state.
    """

    name: str = "lex-row2-reversed"

    def sort_key(self, m: Monomial) -> tuple:
        # smaller key == larger monomial
        return m + (_SENTINEL,)

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.sort_key(a) < self.sort_key(b)


LEX = MonomialOrder()


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class Polynomial:
    """Immutable sparse polynomial ``{monomial: nonzero coefficient}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[tuple(m)] = _normalize(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        # trusted constructor: terms already nonzero and normalized
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls({(): c})

    @classmethod
    def var(cls, row: int, col: int) -> "Polynomial":
        return cls._raw({(encode(row, col),): 1})

    @property
    def terms(self) -> Mapping[Monomial, object]:
        return self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, m: Monomial):
        return self._terms.get(m, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return NotImplemented

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _normalize(s)
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        if not c:
            return Polynomial._raw({})
        return Polynomial._raw({m: _normalize(v * c) for m, v in self._terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(sorted(ma + mb))
                out[m] = get(m, 0) + ca * cb
        return Polynomial._raw({m: _normalize(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise InvalidInputError("negative power")
        out = Polynomial.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def degree(self) -> int:
        if not self._terms:
            raise EmptyInputError("degree of the zero polynomial")
        return max(len(m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({len(m) for m in self._terms}) <= 1

    def monomials(self, order: MonomialOrder = LEX) -> list[Monomial]:
        """Monomials sorted descending under ``order``."""
        return sorted(self._terms, key=order.sort_key)

    def leading_monomial(self, order: MonomialOrder = LEX) -> Monomial:
        return leading_monomial(self, order)

    def leading_coefficient(self, order: MonomialOrder = LEX):
        return self._terms[leading_monomial(self, order)]

    def __repr__(self) -> str:
        return f"Polynomial({to_text(self)})"

    def __str__(self) -> str:
        return to_text(self)


def variable(row: int, col: int) -> Polynomial:
    return Polynomial.var(row, col)


def leading_monomial(p: Polynomial, order: MonomialOrder = LEX) -> Monomial:
    if p.is_zero():
        raise EmptyInputError("leading monomial of the zero polynomial")
    return min(p.terms, key=order.sort_key)


def _perm_sign(seq: Sequence[int]) -> int:
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


def _leibniz(rows: tuple[int, ...], cols: tuple[int, ...]) -> Polynomial:
    out = {}
    size = len(rows)
    for perm in itertools.permutations(range(size)):
        m = tuple(sorted(encode(rows[i], cols[perm[i]]) for i in range(size)))
        out[m] = _perm_sign(perm)
    return Polynomial._raw(out)


@lru_cache(maxsize=None)
def _sorted_minor(rows: tuple[int, ...], cols: tuple[int, ...]) -> Polynomial:
    if len(rows) <= 4:
        return _leibniz(rows, cols)
    # Laplace along the first row; sub-minors are memoized through this cache
    acc: dict = {}
    r0, rest = rows[0], rows[1:]
    for j, c in enumerate(cols):
        sub = _sorted_minor(rest, cols[:j] + cols[j + 1:])
        code = encode(r0, c)
        sign = -1 if j % 2 else 1
        for m, v in sub.terms.items():
            key = tuple(sorted(m + (code,)))
            acc[key] = acc.get(key, 0) + sign * v
    return Polynomial._raw({m: c for m, c in acc.items() if c})


def _ordered(indices, what: str) -> tuple[int, ...]:
    if isinstance(indices, (set, frozenset)):
        return tuple(sorted(indices))
    out = tuple(indices)
    if any(not isinstance(i, int) or isinstance(i, bool) for i in out):
        raise InvalidInputError(f"{what} indices must be integers")
    return out


def sym_minor(rows, cols, *, nrows: int | None = None, ncols: int | None = None) -> Polynomial:
    """Determinant of the submatrix of the generic matrix on ``rows`` x ``cols``.

    Sets are taken in increasing order; sequences are used in the order given,
    so ``sym_minor([1, 2], [4, 3]) == -sym_minor([1, 2], [3, 4])``.  Repeated
    indices give the zero polynomial.
    """
    r = _ordered(rows, "row")
    c = _ordered(cols, "column")
    if len(r) != len(c) or not r:
        raise InvalidInputError(f"minor needs equal nonempty index lists, got {len(r)}x{len(c)}")
    for idx, bound, what in ((r, nrows, "row"), (c, ncols, "column")):
        for i in idx:
            if i < 1 or (bound is not None and i > bound):
                raise InvalidInputError(f"{what} index {i} out of range")
    if len(set(r)) < len(r) or len(set(c)) < len(c):
        return Polynomial()
    sign = _perm_sign(r) * _perm_sign(c)
    p = _sorted_minor(tuple(sorted(r)), tuple(sorted(c)))
    return p if sign == 1 else -p


def cofactor_determinant(rows: Sequence[int], cols: Sequence[int]) -> Polynomial:
    """Unmemoized first-row Laplace expansion, kept as an independent check."""
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) == 1:
        return variable(rows[0], cols[0])
    out = Polynomial()
    for j, c in enumerate(cols):
        term = variable(rows[0], c) * cofactor_determinant(rows[1:], cols[:j] + cols[j + 1:])
        out = out - term if j % 2 else out + term
    return out


def relabel_columns(p: Polynomial, w: Sequence[int]) -> Polynomial:
    """Apply the substitution x[r,c] -> x[r, w(c)] (one-line notation, 1-based)."""
    n = len(w)
    if sorted(w) != list(range(1, n + 1)):
        raise InvalidInputError(f"not a permutation: {tuple(w)}")
    table: dict[int, int] = {}
    out = {}
    for m, coef in p.terms.items():
        new = []
        for code in m:
            img = table.get(code)
            if img is None:
                r, c = decode(code)
                if c > n:
                    raise InvalidInputError(f"column {c} outside permutation domain 1..{n}")
                img = table[code] = encode(r, w[c - 1])
            new.append(img)
        out[tuple(sorted(new))] = coef
    return Polynomial._raw(out)


def _var_text(code: int, e: int) -> str:
    r, c = decode(code)
    return f"x[{r},{c}]" + (f"^{e}" if e > 1 else "")


def _grouped(m: Monomial) -> list[tuple[int, int]]:
    return [(code, len(list(g))) for code, g in itertools.groupby(m)]


def to_text(p: Polynomial, order: MonomialOrder = LEX) -> str:
    """Canonical text form, terms descending, e.g. ``+1*x[1,1]*x[2,2] -1*x[1,2]*x[2,1]``."""
    if p.is_zero():
        return "0"
    parts = []
    for m in p.monomials(order):
        c = p.terms[m]
        sign = "-" if c < 0 else "+"
        factors = [str(abs(c))] + [_var_text(code, e) for code, e in _grouped(m)]
        parts.append(sign + "*".join(factors))
    return " ".join(parts)


def to_json_obj(p: Polynomial, order: MonomialOrder = LEX) -> list[dict]:
    out = []
    for m in p.monomials(order):
        vars_ = [[*decode(code), e] for code, e in _grouped(m)]
        out.append({"coeff": str(p.terms[m]), "vars": vars_})
    return out


def to_json(p: Polynomial) -> str:
    return json.dumps(to_json_obj(p))


def from_json_obj(data: list[dict]) -> Polynomial:
    terms: dict = {}
    for item in data:
        m = make_monomial([tuple(v) for v in item["vars"]])
        c = Fraction(item["coeff"])
        terms[m] = terms.get(m, 0) + c
    return Polynomial(terms)


def from_json(text: str) -> Polynomial:
    return from_json_obj(json.loads(text))
