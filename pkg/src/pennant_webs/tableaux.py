"""K-promotion and K-evacuation of increasing tableaux, and the bijections
Inc^{2d+l}(d+l, d+l) <-> SYT(d, d, 1^l) and Inc^q(m, m) <-> W(q, q-m)."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator, TypeVar

from .errors import InvalidInputError
from .setpartitions import SetPartition, noncrossing_completion, roles
from .webbasis import StandardTableau


@dataclass(frozen=True)
class IncreasingTableau:
    """Rows strictly increase, columns strictly increase, entries are exactly 1..q."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))

    @property
    def q(self) -> int:
        return max(x for r in self.rows for x in r)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def is_valid(self) -> bool:
        rows = self.rows
        if any(len(rows[i]) < len(rows[i + 1]) for i in range(len(rows) - 1)):
            return False
        if any(r[j] >= r[j + 1] for r in rows for j in range(len(r) - 1)):
            return False
        if any(rows[i][j] >= rows[i + 1][j] for i in range(len(rows) - 1) for j in range(len(rows[i + 1]))):
            return False
        return {x for r in rows for x in r} == set(range(1, self.q + 1))

    def to_text(self) -> str:
        return ";".join(",".join(map(str, r)) for r in self.rows)

    @classmethod
    def parse(cls, text: str) -> "IncreasingTableau":
        try:
            t = cls(tuple(tuple(int(x) for x in row.split(",") if x) for row in text.replace(" ", "").split(";")))
        except ValueError as exc:
            raise InvalidInputError(f"bad tableau text {text!r}: {exc}") from None
        if not t.is_valid():
            raise InvalidInputError(f"not a packed increasing tableau: {text!r}")
        return t

    def __str__(self) -> str:
        return self.to_text()


T = TypeVar("T", IncreasingTableau, StandardTableau)


def _max_entry(t) -> int:
    return max(x for r in t.rows for x in r)


def tau(t: T, k: int) -> T:
    """Swap k and k+1 in every box where the swap keeps the tableau increasing.

    All boxes are decided from the tableau before any swap.
    """
    rows = t.rows

    def at(i, j):
        if 0 <= i < len(rows) and 0 <= j < len(rows[i]):
            return rows[i][j]
        return None

    new = []
    for i, r in enumerate(rows):
        out = []
        for j, v in enumerate(r):
            nbrs = (at(i - 1, j), at(i + 1, j), at(i, j - 1), at(i, j + 1))
            if v == k and k + 1 not in nbrs:
                v = k + 1
            elif v == k + 1 and k not in nbrs:
                v = k
            out.append(v)
        new.append(tuple(out))
    return type(t)(tuple(new))


def promotion_step(t: T, q: int) -> T:
    """psi^q = tau_{q-1} o ... o tau_1 (tau_1 applied first)."""
    for k in range(1, q):
        t = tau(t, k)
    return t


def k_promotion(t: T) -> T:
    return promotion_step(t, _max_entry(t))


def k_evacuation(t: T) -> T:
    """epsilon^q = psi^1 o ... o psi^{q-1} o psi^q."""
    for j in range(_max_entry(t), 0, -1):
        t = promotion_step(t, j)
    return t


def enumerate_increasing(m: int, q: int) -> list[IncreasingTableau]:
    """All of Inc^q(m, m), by brute force over pairs of increasing rows."""
    out = []
    for top in itertools.combinations(range(1, q + 1), m):
        for bot in itertools.combinations(range(1, q + 1), m):
            if all(a < b for a, b in zip(top, bot)) and set(top) | set(bot) == set(range(1, q + 1)):
                out.append(IncreasingTableau((top, bot)))
    return out


def _check_two_row(t: IncreasingTableau) -> None:
    if len(t.rows) != 2 or len(t.rows[0]) != len(t.rows[1]) or not t.is_valid():
        raise InvalidInputError(f"expected a packed increasing 2-row rectangle, got {t.rows}")


def inc_to_syt(t: IncreasingTableau) -> StandardTableau:
    """Drop doubled entries from the top row, drop their bottom-row right neighbours
    from the bottom row, and hang those neighbours below the first column."""
    _check_two_row(t)
    top, bot = t.rows
    doubled = set(top) & set(bot)
    moved = {bot[j + 1] for j in range(len(bot) - 1) if bot[j] in doubled}
    if len(moved) != len(doubled):
        raise InvalidInputError(f"{t.to_text()} does not have the expected doubled/moved structure")
    r1 = tuple(x for x in top if x not in doubled)
    r2 = tuple(x for x in bot if x not in moved)
    u = StandardTableau((r1, r2) + tuple((b,) for b in sorted(moved)))
    if not u.is_standard():
        raise InvalidInputError(f"image of {t.to_text()} is not standard")
    return u


def syt_to_inc(u: StandardTableau) -> IncreasingTableau:
    """Inverse of :func:`inc_to_syt` on tableaux of shape (d, d, 1^l)."""
    rows = u.rows
    if len(rows) < 2 or len(rows[0]) != len(rows[1]) or any(len(r) != 1 for r in rows[2:]) or not u.is_standard():
        raise InvalidInputError(f"expected a standard tableau of shape (d,d,1^l), got {rows}")
    tail = [r[0] for r in rows[2:]]
    bot = sorted(rows[1] + tuple(tail))
    doubled = []
    for b in tail:
        pos = bot.index(b)
        if pos == 0:
            raise InvalidInputError(f"{b} has no left neighbour in the bottom row")
        doubled.append(bot[pos - 1])
    top = sorted(rows[0] + tuple(doubled))
    t = IncreasingTableau((tuple(top), tuple(bot)))
    if not t.is_valid() or len(top) != len(bot) or inc_to_syt(t) != u:
        raise InvalidInputError(f"{u.to_text()} has no preimage")
    return t


def inc_to_partition(t: IncreasingTableau) -> SetPartition:
    """Top-only entries are block minima, bottom-only are maxima, doubled ones are middles."""
    _check_two_row(t)
    top, bot = set(t.rows[0]), set(t.rows[1])
    return noncrossing_completion(top - bot, bot - top, top & bot)


def partition_to_inc(pi: SetPartition) -> IncreasingTableau:
    mins, maxs, mids = roles(pi)
    if pi.has_singleton:
        raise InvalidInputError("partition has a singleton block")
    t = IncreasingTableau((tuple(sorted(mins | mids)), tuple(sorted(maxs | mids))))
    _check_two_row(t)
    return t


def promotion_orbits(m: int, q: int) -> list[list[IncreasingTableau]]:
    """Orbits of K-promotion on Inc^q(m, m), each starting at its least tableau."""
    seen: set[IncreasingTableau] = set()
    orbits = []
    for t in sorted(enumerate_increasing(m, q), key=lambda x: x.rows):
        if t in seen:
            continue
        orbit = [t]
        seen.add(t)
        nxt = k_promotion(t)
        while nxt != t:
            if nxt in seen:
                raise RuntimeError("K-promotion is not a bijection here")
            orbit.append(nxt)
            seen.add(nxt)
            nxt = k_promotion(nxt)
        orbits.append(orbit)
    return orbits


def orbits_to_json(orbits: list[list[IncreasingTableau]]) -> str:
    return json.dumps([{"size": len(o), "orbit": [t.to_text() for t in o]} for o in orbits])


def iter_all_increasing(max_q: int, max_m: int) -> Iterator[tuple[int, int, IncreasingTableau]]:
    for m in range(1, max_m + 1):
        for q in range(m + 1, min(2 * m, max_q) + 1):
            for t in enumerate_increasing(m, q):
                yield m, q, t
