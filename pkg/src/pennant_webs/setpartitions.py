"""Set partitions of {1..n}, permutations, and the dihedral relabelings."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import InconsistentRolesError, InvalidInputError


class Permutation(tuple):
    """A permutation of {1..n} in one-line notation: ``w[i-1] == w(i)``."""

    def __new__(cls, images: Iterable[int]):
        t = tuple(int(x) for x in images)
        if sorted(t) != list(range(1, len(t) + 1)):
            raise InvalidInputError(f"not a permutation of 1..{len(t)}: {t}")
        return super().__new__(cls, t)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def inversions(self) -> int:
        return sum(1 for i in range(len(self)) for j in range(i + 1, len(self)) if self[i] > self[j])

    def sign(self) -> int:
        return -1 if self.inversions() % 2 else 1

    def compose(self, other: "Permutation") -> "Permutation":
        """``(self o other)(i) = self(other(i))``."""
        return Permutation(self[other[i] - 1] for i in range(len(other)))

    def __mul__(self, other):
        if isinstance(other, Permutation):
            return self.compose(other)
        return NotImplemented

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        out = Permutation.identity(len(self))
        for _ in range(abs(k)):
            out = base.compose(out)
        return out

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, v in enumerate(self, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        """The adjacent transposition s_i swapping i and i+1."""
        if not 1 <= i < n:
            raise InvalidInputError(f"s_{i} undefined for n={n}")
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(w)

    @classmethod
    def long_cycle(cls, n: int) -> "Permutation":
        """c = n 1 2 ... (n-1), i.e. i -> i-1 and 1 -> n."""
        return cls([n] + list(range(1, n)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        """w0 = n (n-1) ... 1."""
        return cls(range(n, 0, -1))

    def to_text(self) -> str:
        return ",".join(map(str, self))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        try:
            return cls(int(x) for x in text.replace(" ", "").split(",") if x)
        except ValueError as exc:
            raise InvalidInputError(f"bad permutation text {text!r}: {exc}") from None


@dataclass(frozen=True)
class SetPartition:
    """A set partition of {1..n}; blocks are sorted tuples ordered by minimum."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else 0))
        seen = [x for b in blocks for x in b]
        if any(not b for b in blocks):
            raise InvalidInputError("empty block")
        if sorted(seen) != list(range(1, self.n + 1)):
            raise InvalidInputError(f"blocks {blocks} do not partition 1..{self.n}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]], n: int | None = None) -> "SetPartition":
        bl = [tuple(b) for b in blocks]
        if n is None:
            n = sum(len(b) for b in bl)
        return cls(n, tuple(bl))

    @property
    def d(self) -> int:
        return len(self.blocks)

    @property
    def has_singleton(self) -> bool:
        return any(len(b) == 1 for b in self.blocks)

    def block_of(self, x: int) -> tuple[int, ...]:
        for b in self.blocks:
            if x in b:
                return b
        raise InvalidInputError(f"{x} not in 1..{self.n}")

    def to_text(self) -> str:
        return "|".join(",".join(map(str, b)) for b in self.blocks)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "SetPartition":
        try:
            blocks = [tuple(int(x) for x in part.split(",") if x.strip()) for part in text.replace(" ", "").split("|")]
        except ValueError as exc:
            raise InvalidInputError(f"bad partition text {text!r}: {exc}") from None
        return cls.of(blocks, n)

    def __str__(self) -> str:
        return "{" + ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"

    def sort_key(self) -> tuple:
        return self.blocks


def crosses(b1: Sequence[int], b2: Sequence[int]) -> bool:
    """True if some a < b < c < d has a, c in one block and b, d in the other."""
    for x, y in ((b1, b2), (b2, b1)):
        for a in x:
            for c in x:
                if c <= a:
                    continue
                inside = [b for b in y if a < b < c]
                outside = [b for b in y if b > c]
                if inside and outside:
                    return True
    return False


def is_noncrossing(pi: SetPartition) -> bool:
    bl = pi.blocks
    return not any(crosses(bl[i], bl[j]) for i in range(len(bl)) for j in range(i + 1, len(bl)))


def _restricted_growth(n: int) -> Iterator[list[int]]:
    # restricted growth strings enumerate set partitions without repetition
    def rec(prefix: list[int], mx: int):
        if len(prefix) == n:
            yield prefix
            return
        for v in range(mx + 2):
            prefix.append(v)
            yield from rec(prefix, max(mx, v))
            prefix.pop()

    if n == 0:
        yield []
        return
    yield from rec([0], 0)


@lru_cache(maxsize=None)
def _all_partitions(n: int) -> tuple[SetPartition, ...]:
    out = []
    for rg in _restricted_growth(n):
        blocks: dict[int, list[int]] = {}
        for i, label in enumerate(rg, start=1):
            blocks.setdefault(label, []).append(i)
        out.append(SetPartition(n, tuple(tuple(b) for b in blocks.values())))
    out.sort(key=SetPartition.sort_key)
    return tuple(out)


def _noncrossing_blocks(elems: tuple[int, ...]) -> Iterator[list[tuple[int, ...]]]:
    # the block holding elems[0] splits the rest into independent gaps
    if not elems:
        yield []
        return
    first, rest = elems[0], elems[1:]
    for mask in range(1 << len(rest)):
        chosen = [rest[i] for i in range(len(rest)) if mask >> i & 1]
        block = (first, *chosen)
        gaps, cur = [], []
        for i, x in enumerate(rest):
            if mask >> i & 1:
                gaps.append(tuple(cur))
                cur = []
            else:
                cur.append(x)
        gaps.append(tuple(cur))

        def fill(i: int):
            if i == len(gaps):
                yield []
                return
            for head in _noncrossing_blocks(gaps[i]):
                for tail in fill(i + 1):
                    yield head + tail

        for others in fill(0):
            yield [block] + others


@lru_cache(maxsize=None)
def _noncrossing_partitions(n: int) -> tuple[SetPartition, ...]:
    out = [SetPartition(n, tuple(bl)) for bl in _noncrossing_blocks(tuple(range(1, n + 1)))]
    out.sort(key=SetPartition.sort_key)
    return tuple(out)


def enumerate_partitions(
    n: int,
    d: int | None = None,
    no_singletons: bool = False,
    noncrossing_only: bool = False,
) -> list[SetPartition]:
    """All set partitions of {1..n} with ``d`` blocks (any count if None), lex on block lists."""
    if n < 1:
        raise InvalidInputError("n must be positive")
    source = _noncrossing_partitions(n) if noncrossing_only else _all_partitions(n)
    out = []
    for pi in source:
        if d is not None and pi.d != d:
            continue
        if no_singletons and pi.has_singleton:
            continue
        out.append(pi)
    return out


def singleton_free(n: int, d: int) -> list[SetPartition]:
    """The set usually written Pi(n, d)."""
    return enumerate_partitions(n, d, no_singletons=True)


def noncrossing_singleton_free(n: int, d: int) -> list[SetPartition]:
    """The set usually written W(n, d)."""
    return enumerate_partitions(n, d, no_singletons=True, noncrossing_only=True)


def apply_perm(w: Sequence[int], pi: SetPartition) -> SetPartition:
    if len(w) != pi.n:
        raise InvalidInputError(f"permutation size {len(w)} != partition size {pi.n}")
    return SetPartition(pi.n, tuple(tuple(w[x - 1] for x in b) for b in pi.blocks))


def rotate(pi: SetPartition, k: int = 1) -> SetPartition:
    """Relabel by the long cycle c (i -> i-1, 1 -> n), ``k`` times."""
    n = pi.n
    return SetPartition(n, tuple(tuple((x - 1 - k) % n + 1 for x in b) for b in pi.blocks))


def reflect(pi: SetPartition) -> SetPartition:
    """Relabel by w0 (i -> n+1-i)."""
    n = pi.n
    return SetPartition(n, tuple(tuple(n + 1 - x for x in b) for b in pi.blocks))


def roles(pi: SetPartition) -> tuple[frozenset, frozenset, frozenset]:
    """(minima, maxima, middles) of the blocks."""
    mins = frozenset(b[0] for b in pi.blocks)
    maxs = frozenset(b[-1] for b in pi.blocks if len(b) > 1)
    mids = frozenset(x for b in pi.blocks for x in b[1:-1])
    return mins, maxs, mids


def noncrossing_completion(minima: Iterable[int], maxima: Iterable[int], middles: Iterable[int]) -> SetPartition:
    """The unique noncrossing partition with the given block minima, maxima and middles.

    Left-to-right stack scan: a minimum opens a block, a middle joins the
    innermost open block, a maximum closes it.
    """
    mins, maxs, mids = set(minima), set(maxima), set(middles)
    if mins & maxs or mins & mids or maxs & mids:
        raise InconsistentRolesError("role sets overlap")
    ground = mins | maxs | mids
    n = len(ground)
    if ground != set(range(1, n + 1)):
        raise InconsistentRolesError(f"roles do not cover 1..{n}")
    stack: list[list[int]] = []
    closed: list[tuple[int, ...]] = []
    for i in range(1, n + 1):
        if i in mins:
            stack.append([i])
        elif not stack:
            raise InconsistentRolesError(f"{i} has no open block")
        elif i in mids:
            stack[-1].append(i)
        else:
            block = stack.pop()
            block.append(i)
            closed.append(tuple(block))
    if stack:
        raise InconsistentRolesError(f"{len(stack)} block(s) never closed")
    return SetPartition(n, tuple(closed))
