"""Jellyfish tableaux, their signs, and the web invariant [pi].

A jellyfish tableau for a partition with ``d`` blocks of ``{1..n}`` has ``d``
columns and ``n - 2d + 2`` rows.  Rows 1 and 2 are full; every lower row holds
exactly one entry.  Column ``j`` lists block ``j`` top to bottom in increasing
order, so a tableau is pinned down by which column owns each lower row.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import InvalidInputError, SingletonBlockError
from .exactpoly import Polynomial, sym_minor
from .setpartitions import SetPartition

Grid = list  # list of rows; each row a list of entries or None, one slot per column


@dataclass(frozen=True)
class JellyfishTableau:
    """Columns are ``blocks`` (in column order); ``rows[j]`` are the rows block j occupies."""

    blocks: tuple[tuple[int, ...], ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def height(self) -> int:
        return max(max(r) for r in self.rows)

    @property
    def pi(self) -> SetPartition:
        return SetPartition(self.n, self.blocks)

    def grid(self) -> Grid:
        g = [[None] * len(self.blocks) for _ in range(self.height)]
        for j, (block, rows) in enumerate(zip(self.blocks, self.rows)):
            for r, x in zip(rows, block):
                g[r - 1][j] = x
        return g

    def reading_word(self) -> list[int]:
        return [x for row in self.grid() for x in row if x is not None]

    def lowest_block(self) -> int:
        """Column index owning the bottom row."""
        h = self.height
        return next(j for j, r in enumerate(self.rows) if r[-1] == h)

    def to_json_obj(self) -> dict:
        return {"pi": self.pi.to_text(), "rows": self.grid()}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def check_jellyfish(t: JellyfishTableau) -> None:
    """Raise unless ``t`` satisfies the four defining conditions."""
    d = len(t.blocks)
    h = t.n - 2 * d + 2
    seen_lower: set[int] = set()
    for block, rows in zip(t.blocks, t.rows):
        if len(block) != len(rows) or list(block) != sorted(block):
            raise InvalidInputError("column entries must be the block in increasing order")
        if list(rows[:2]) != [1, 2] or list(rows) != sorted(set(rows)):
            raise InvalidInputError("every column must fill rows 1 and 2 and then go strictly down")
        for r in rows[2:]:
            if r in seen_lower or not 3 <= r <= h:
                raise InvalidInputError(f"lower row {r} used twice or out of range")
            seen_lower.add(r)
    if len(seen_lower) != h - 2:
        raise InvalidInputError("some lower row is empty")


def _multiset_perms(counts: list[int]) -> Iterator[list[int]]:
    # distinct arrangements of labels 0..len(counts)-1, lexicographic
    total = sum(counts)
    word: list[int] = []

    def rec():
        if len(word) == total:
            yield list(word)
            return
        for label, c in enumerate(counts):
            if c:
                counts[label] -= 1
                word.append(label)
                yield from rec()
                word.pop()
                counts[label] += 1

    yield from rec()


def _column_order(pi: SetPartition, block_order: Sequence[Sequence[int]] | None) -> tuple[tuple[int, ...], ...]:
    if block_order is None:
        return pi.blocks
    order = tuple(tuple(sorted(b)) for b in block_order)
    if sorted(order) != sorted(pi.blocks):
        raise InvalidInputError("block_order must list exactly the blocks of pi")
    return order


def enumerate_jellyfish(pi: SetPartition, block_order: Sequence[Sequence[int]] | None = None) -> list[JellyfishTableau]:
    """All jellyfish tableaux of ``pi``, columns in ``block_order`` (canonical by default).

    Ordered lexicographically by the sequence of column labels read down the
    lower rows.
    """
    if pi.has_singleton:
        raise SingletonBlockError(f"{pi} has a singleton block")
    blocks = _column_order(pi, block_order)
    out = []
    for word in _multiset_perms([len(b) - 2 for b in blocks]):
        rows = [[1, 2] for _ in blocks]
        for offset, label in enumerate(word):
            rows[label].append(3 + offset)
        out.append(JellyfishTableau(blocks, tuple(tuple(r) for r in rows)))
    return out


def _inversions(word: Sequence[int], cols: Sequence[int] | None = None) -> int:
    count = 0
    for i in range(len(word)):
        for j in range(i + 1, len(word)):
            if word[i] > word[j] and (cols is None or cols[i] != cols[j]):
                count += 1
    return count


def inversion_number(t: JellyfishTableau) -> int:
    return _inversions(t.reading_word())


def sign(t: JellyfishTableau) -> int:
    return -1 if inversion_number(t) % 2 else 1


def inversion_number_barred(grid: Grid) -> int:
    """Reading-word inversions of a generalized tableau, skipping pairs that share a column."""
    word, cols = [], []
    for row in grid:
        for j, x in enumerate(row):
            if x is not None:
                word.append(x)
                cols.append(j)
    return _inversions(word, cols)


def sign_barred(grid: Grid) -> int:
    return -1 if inversion_number_barred(grid) % 2 else 1


def remove_entry(t: JellyfishTableau, k: int) -> JellyfishTableau:
    """Delete ``k`` from the lowest block's column and slide the rest of that column up.

    The bottom row disappears; every other column is untouched.
    """
    m = t.lowest_block()
    block, rows = t.blocks[m], t.rows[m]
    if k not in block:
        raise InvalidInputError(f"{k} is not in the column owning the bottom row")
    new_block = tuple(x for x in block if x != k)
    new_rows = rows[:-1]
    blocks = t.blocks[:m] + (new_block,) + t.blocks[m + 1:]
    all_rows = t.rows[:m] + (new_rows,) + t.rows[m + 1:]
    return JellyfishTableau(blocks, all_rows)


def jelly_product(t: JellyfishTableau) -> Polynomial:
    """Product over columns of the minor on (rows of that column) x (that block)."""
    out = Polynomial.constant(1)
    for block, rows in zip(t.blocks, t.rows):
        out = out * sym_minor(rows, block)
    return out


@dataclass(frozen=True)
class WebInvariant:
    pi: SetPartition
    poly: Polynomial


def signed_terms(pi: SetPartition, block_order: Sequence[Sequence[int]] | None = None) -> list[tuple[int, JellyfishTableau]]:
    """``(sign, tableau)`` pairs whose signed minor products sum to [pi]."""
    return [(sign(t), t) for t in enumerate_jellyfish(pi, block_order)]


def invariant_polynomial(pi: SetPartition, block_order: Sequence[Sequence[int]] | None = None) -> Polynomial:
    if pi.has_singleton:
        return Polynomial()
    if block_order is None:
        return _canonical_invariant(pi)
    return _sum_terms(signed_terms(pi, block_order))


def _sum_terms(terms) -> Polynomial:
    acc: dict = {}
    for s, t in terms:
        for m, c in jelly_product(t).terms.items():
            acc[m] = acc.get(m, 0) + s * c
    return Polynomial({m: c for m, c in acc.items() if c})


@lru_cache(maxsize=None)
def _canonical_invariant(pi: SetPartition) -> Polynomial:
    return _sum_terms(signed_terms(pi))


def web_invariant(pi: SetPartition, block_order: Sequence[Sequence[int]] | None = None) -> WebInvariant:
    """[pi]: zero if pi has a singleton, else the signed sum of jellyfish minor products."""
    return WebInvariant(pi, invariant_polynomial(pi, block_order))
