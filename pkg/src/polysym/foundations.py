"""Partitions, blocks, and splitting types.

Everything in this package is exact: coefficients are `fractions.Fraction`
(arbitrary precision, always in lowest terms, positive denominator), and all
combinatorial data lives in immutable tuples, so values are hashable and
safely shareable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterable, Iterator, Mapping, NamedTuple

Rational = Fraction

#: A partition is a weakly decreasing tuple of positive integers.
Partition = tuple[int, ...]

EMPTY_PARTITION: Partition = ()


def check_partition(parts: Iterable[int]) -> Partition:
    """Validate and freeze a weakly decreasing sequence of positive parts."""
    p = tuple(int(x) for x in parts)
    for x in p:
        if x < 1:
            raise ValueError(f"partition parts must be positive, got {p}")
    for a, b in zip(p, p[1:]):
        if a < b:
            raise ValueError(f"partition parts must be weakly decreasing, got {p}")
    return p


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    cols = [0] * p[0]
    for part in p:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def multiplicity(p: Partition, i: int) -> int:
    """Number of parts of `p` equal to `i`."""
    return sum(1 for x in p if x == i)


def partition_union(a: Partition, b: Partition) -> Partition:
    """Merge the parts of two partitions into one weakly decreasing list."""
    return tuple(sorted(a + b, reverse=True))


def partition_scale(p: Partition, r: int) -> Partition:
    """Multiply every part by r."""
    return tuple(x * r for x in p)


def contains_partition(outer: Partition, inner: Partition) -> bool:
    """Diagram containment: inner[i] <= outer[i] for all rows of inner."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def z_value(p: Partition) -> int:
    """z_lambda = prod_i i^{m_i} m_i!, the centralizer-order statistic."""
    z = 1
    i = None
    run = 0
    for x in sorted(p):
        if x == i:
            run += 1
        else:
            i, run = x, 1
        z *= x * run
    return z


@cache
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, each once, in descending lexicographic order.

    enumerate_partitions(4) = ((4,), (3,1), (2,2), (2,1,1), (1,1,1,1)).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(remaining: int, largest: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


class Block(NamedTuple):
    """A block d^m: degree d, multiplicity m, weight d*m.

    Blocks compare by (degree, multiplicity), which is exactly the order
    a^b >= d^e iff a > d, or a = d and b >= e.
    """

    degree: int
    multiplicity: int

    @property
    def weight(self) -> int:
        return self.degree * self.multiplicity

    def __str__(self) -> str:
        return f"{self.degree}^{self.multiplicity}"


@dataclass(frozen=True)
class SplitType:
    """A splitting type: a weakly decreasing sequence of blocks.

    Stored canonically as the descending block sequence; the per-degree
    restriction partitions (the multiplicities of the degree-d blocks)
    are derived on demand.  Use `from_blocks` / `from_restrictions`;
    direct construction assumes `blocks` is already canonical.
    """

    blocks: tuple[Block, ...]

    @staticmethod
    def from_blocks(blocks: Iterable[tuple[int, int]]) -> "SplitType":
        bs = []
        for d, m in blocks:
            if d < 1 or m < 1:
                raise ValueError(f"block degree and multiplicity must be positive, got {d}^{m}")
            bs.append(Block(int(d), int(m)))
        return SplitType(tuple(sorted(bs, reverse=True)))

    @staticmethod
    def from_restrictions(by_degree: Mapping[int, Iterable[int]]) -> "SplitType":
        blocks = []
        for d, parts in by_degree.items():
            p = check_partition(parts)
            blocks.extend((d, m) for m in p)
        return SplitType.from_blocks(blocks)

    def restriction(self, d: int) -> Partition:
        """The partition of multiplicities of the degree-d blocks."""
        return tuple(b.multiplicity for b in self.blocks if b.degree == d)

    def restrictions(self) -> dict[int, Partition]:
        out: dict[int, list[int]] = {}
        for b in self.blocks:
            out.setdefault(b.degree, []).append(b.multiplicity)
        return {d: tuple(ms) for d, ms in out.items()}

    def degrees(self) -> tuple[int, ...]:
        """Degrees with a nonempty restriction, descending."""
        seen = dict.fromkeys(b.degree for b in self.blocks)
        return tuple(seen)

    def with_restriction(self, d: int, parts: Partition) -> "SplitType":
        """A copy of this type with the degree-d restriction replaced."""
        kept = [b for b in self.blocks if b.degree != d]
        kept.extend(Block(d, m) for m in parts)
        return SplitType(tuple(sorted(kept, reverse=True)))

    @property
    def weight(self) -> int:
        return sum(b.weight for b in self.blocks)

    @property
    def length(self) -> int:
        return len(self.blocks)

    @property
    def sign(self) -> int:
        return -1 if sum(b.multiplicity for b in self.blocks) % 2 else 1

    def z_tensor(self) -> int:
        """z-tensor statistic: the product of z over all restrictions."""
        z = 1
        for parts in self.restrictions().values():
            z *= z_value(parts)
        return z

    def union(self, other: "SplitType") -> "SplitType":
        return SplitType(tuple(sorted(self.blocks + other.blocks, reverse=True)))

    def scaled(self, r: int) -> "SplitType":
        if r < 1:
            raise ValueError("scale factor must be positive")
        return SplitType(tuple(Block(b.degree, b.multiplicity * r) for b in self.blocks))

    def __str__(self) -> str:
        if not self.blocks:
            return "-"
        pieces = []
        for d, parts in self.restrictions().items():
            if len(parts) == 1:
                pieces.append(f"{d}^{parts[0]}")
            else:
                pieces.append(f"{d}^{{{','.join(str(m) for m in parts)}}}")
        return " ".join(pieces)


EMPTY_TYPE = SplitType(())

#: An ordered block sequence (repetitions allowed, order significant).
BlockSequence = tuple[Block, ...]


def block_sequence(blocks: Iterable[tuple[int, int]]) -> BlockSequence:
    """Freeze an ordered sequence of blocks, validating each one."""
    out = []
    for d, m in blocks:
        if d < 1 or m < 1:
            raise ValueError(f"block degree and multiplicity must be positive, got {d}^{m}")
        out.append(Block(int(d), int(m)))
    return tuple(out)


def type_union(a: SplitType, b: SplitType) -> SplitType:
    return a.union(b)


def type_scale(t: SplitType, r: int) -> SplitType:
    return t.scaled(r)


class TypeStats(NamedTuple):
    weight: int
    length: int
    sign: int
    z_tensor: int


def type_stats(t: SplitType) -> TypeStats:
    return TypeStats(t.weight, t.length, t.sign, t.z_tensor())


@cache
def enumerate_types(n: int) -> tuple[SplitType, ...]:
    """All types of weight n, in descending lexicographic block-sequence order.

    This is the canonical ordering used for matrix rows and columns
    throughout the package; matrices are also addressable by type, so
    nothing downstream depends on positions.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    blocks_desc = sorted(
        (Block(d, m) for d in range(1, n + 1) for m in range(1, n // d + 1)),
        reverse=True,
    )

    def gen(remaining: int, start: int) -> Iterator[tuple[Block, ...]]:
        if remaining == 0:
            yield ()
            return
        for idx in range(start, len(blocks_desc)):
            b = blocks_desc[idx]
            if b.weight <= remaining:
                for rest in gen(remaining - b.weight, idx):
                    yield (b,) + rest

    return tuple(SplitType(bs) for bs in gen(n, 0))


def divisors(n: int) -> tuple[int, ...]:
    return tuple(k for k in range(1, n + 1) if n % k == 0)
