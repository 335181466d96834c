"""Skew-shape combinatorics: ribbons, polyribbons, and their dual variants.

A k-ribbon is a connected border strip of k boxes containing no 2x2 square;
its sign is (-1)^(rows spanned - 1).  Ribbon additions and removals are done
on beta-sets (first-column hook lengths), where adding a k-ribbon is moving
one beta number up by k into a free slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Iterator

from .foundations import Partition, check_partition, conjugate, contains_partition


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        check_partition(self.outer)
        check_partition(self.inner)
        if not contains_partition(self.outer, self.inner):
            raise ValueError(f"inner shape {self.inner} not contained in outer {self.outer}")

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def cells(self) -> list[tuple[int, int]]:
        """Skew cells as 1-indexed (row, column) pairs."""
        out = []
        for i, row_len in enumerate(self.outer, start=1):
            lo = self.inner[i - 1] if i <= len(self.inner) else 0
            out.extend((i, j) for j in range(lo + 1, row_len + 1))
        return out


@dataclass(frozen=True)
class RibbonStep:
    result: Partition
    sign: int


def _beta(p: Partition, slots: int) -> list[int]:
    # beta_i = p_i + (slots - i), 1-indexed; strictly decreasing down to 0.
    padded = list(p) + [0] * (slots - len(p))
    return [padded[i] + (slots - 1 - i) for i in range(slots)]


def _from_beta(beta: list[int]) -> Partition:
    slots = len(beta)
    desc = sorted(beta, reverse=True)
    return tuple(x for x in (desc[i] - (slots - 1 - i) for i in range(slots)) if x > 0)


@cache
def add_ribbons(mu: Partition, k: int) -> tuple[RibbonStep, ...]:
    """All ways to add a k-ribbon to mu, with signs.

    Results are sorted by the new partition in descending lexicographic
    order and contain no duplicates.
    """
    if k < 1:
        raise ValueError("ribbon size must be positive")
    slots = len(mu) + k
    beta = _beta(mu, slots)
    present = set(beta)
    steps = []
    for b in beta:
        if b + k in present:
            continue
        crossed = sum(1 for c in beta if b < c < b + k)
        new = [c for c in beta if c != b] + [b + k]
        steps.append(RibbonStep(_from_beta(new), -1 if crossed % 2 else 1))
    steps.sort(key=lambda s: s.result, reverse=True)
    return tuple(steps)


def _remove_ribbon_at_row(p: Partition, row: int, k: int) -> tuple[Partition, int] | None:
    """Remove the k-ribbon whose northeast head is the last cell of `row`.

    Returns (new partition, rows spanned) or None when no such ribbon exists.
    `row` is 1-indexed.
    """
    slots = len(p)
    beta = _beta(p, slots)
    b = beta[row - 1]
    if b - k < 0 or (b - k) in beta:
        return None
    crossed = sum(1 for c in beta if b - k < c < b)
    new = [c for c in beta if c != b] + [b - k]
    return _from_beta(new), crossed + 1


def _top_row(outer: Partition, inner: Partition) -> int:
    # Least 1-indexed row where outer exceeds inner.
    for i, row_len in enumerate(outer, start=1):
        if row_len > (inner[i - 1] if i <= len(inner) else 0):
            return i
    raise ValueError("empty skew shape has no top row")


def _rows_spanned(outer: Partition, inner: Partition) -> int:
    inner_padded = list(inner) + [0] * (len(outer) - len(inner))
    return sum(1 for a, b in zip(outer, inner_padded) if a > b)


@dataclass(frozen=True)
class PolyribbonDecomposition:
    """The unique ribbon chain of a polyribbon: count, sign, and the chain."""

    n: int
    sign: int
    chain: tuple[Partition, ...]  # chain[0] = inner, chain[-1] = outer


def polyribbon_decompose(shape: SkewShape, r: int) -> PolyribbonDecomposition | None:
    """Decompose `shape` as a chain of n r-ribbons with weakly rising tops.

    The chain gamma_0 = inner <= ... <= gamma_n = outer must have every
    gamma_i / gamma_(i-1) an r-ribbon and top(step i) >= top(step i+1),
    i.e. each ribbon starts weakly north of the previous one.  Such a
    chain is unique when it exists; returns None when the shape does not
    decompose.  Peeling runs in reverse: the last ribbon's head is always
    the northeasternmost cell of the remaining skew region, so we remove
    the ribbon ending there and fail if that is ever impossible.
    """
    if r < 1:
        raise ValueError("ribbon size must be positive")
    total = shape.size
    if total % r:
        return None
    n = total // r
    cur = shape.outer
    rev_chain = [cur]
    for _ in range(n):
        cells = SkewShape(cur, shape.inner).cells()
        j = max(c for _, c in cells)
        i = min(row for row, c in cells if c == j)
        removed = _remove_ribbon_at_row(cur, i, r)
        if removed is None:
            return None
        new, _rows = removed
        if not contains_partition(new, shape.inner):
            return None
        rev_chain.append(new)
        cur = new
    chain = tuple(reversed(rev_chain))
    # Verify the defining top condition on the reconstructed chain.
    tops = [_top_row(chain[i], chain[i - 1]) for i in range(1, n + 1)]
    if any(tops[i] < tops[i + 1] for i in range(n - 1)):
        return None
    sign = 1
    for i in range(1, n + 1):
        sign *= -1 if (_rows_spanned(chain[i], chain[i - 1]) - 1) % 2 else 1
    return PolyribbonDecomposition(n, sign, chain)


def dual_polyribbon_decompose(shape: SkewShape, r: int) -> PolyribbonDecomposition | None:
    """Decompose `shape` as a dual polyribbon (bottom columns weakly moving west).

    A shape is a dual r^n-polyribbon exactly when its conjugate is an
    r^n-polyribbon, so we decompose the conjugate and conjugate the chain
    back; the sign is the product of the ribbon signs of the dual chain.
    """
    base = polyribbon_decompose(SkewShape(conjugate(shape.outer), conjugate(shape.inner)), r)
    if base is None:
        return None
    chain = tuple(conjugate(g) for g in base.chain)
    sign = 1
    for i in range(1, base.n + 1):
        sign *= -1 if (_rows_spanned(chain[i], chain[i - 1]) - 1) % 2 else 1
    return PolyribbonDecomposition(base.n, sign, chain)


def _polyribbon_additions(
    mu: Partition, r: int, n: int, within: Partition | None
) -> Iterator[tuple[Partition, int]]:
    # DFS over chains; each new ribbon's top must be weakly above the last.
    def walk(cur: Partition, left: int, last_top: int, sign: int) -> Iterator[tuple[Partition, int]]:
        if left == 0:
            yield cur, sign
            return
        for step in add_ribbons(cur, r):
            if within is not None and not contains_partition(within, step.result):
                continue
            top = _top_row(step.result, cur)
            if top > last_top:
                continue
            yield from walk(step.result, left - 1, top, sign * step.sign)

    yield from walk(mu, n, len(mu) + r * n + 1, 1)


def add_polyribbons(
    mu: Partition,
    r: int,
    n: int,
    dual: bool = False,
    within: Partition | None = None,
) -> tuple[tuple[Partition, int], ...]:
    """All shapes reachable from mu by adding an r^n-(dual-)polyribbon, with signs.

    n = 0 yields just (mu, +1).  `within` restricts results (and all
    intermediate shapes) to subdiagrams of the given partition, which the
    tableau enumerators use for pruning.  Results are sorted descending;
    each shape appears at most once because the ribbon chain is unique.
    """
    if n < 0:
        raise ValueError("polyribbon count must be nonnegative")
    if n == 0:
        if within is not None and not contains_partition(within, mu):
            return ()
        return ((mu, 1),)
    if not dual:
        found: dict[Partition, int] = {}
        for shape, sign in _polyribbon_additions(mu, r, n, within):
            if shape in found:
                raise RuntimeError(f"duplicate polyribbon chain for {shape}/{mu}; engine bug")
            found[shape] = sign
        return tuple(sorted(found.items(), reverse=True))

    within_conj = conjugate(within) if within is not None else None
    found = {}
    for shape_conj, _ in _polyribbon_additions(conjugate(mu), r, n, within_conj):
        shape = conjugate(shape_conj)
        dec = dual_polyribbon_decompose(SkewShape(shape, mu), r)
        if dec is None:
            raise RuntimeError(f"conjugate chain for {shape}/{mu} failed to decompose; engine bug")
        if shape in found:
            raise RuntimeError(f"duplicate dual polyribbon chain for {shape}/{mu}; engine bug")
        found[shape] = dec.sign
    return tuple(sorted(found.items(), reverse=True))
