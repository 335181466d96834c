"""Expansions in the m* basis via tensor brick tabloids.

A product m*_sigma * (family blocks) expands monomially by covering each
component diagram with horizontal bricks: zero bricks carry the parts of
sigma (at most one per row), and each generator block contributes bricks
whose length and placement encode the monomial chosen from that factor:

* a P block d^e places one brick of length d*e/k in a component k dividing
  d, weighted k;
* an H block d^r picks a partition lam of d and places m_k(lam) bricks of
  length r in component k, labels weakly increasing along rows;
* E+ and E do the same with strictly increasing labels (square-free
  choices); E carries the sign (-1)^(number of positive bricks).

Per component this is exactly the classical brick-tabloid count, so the
product engine reuses the classical filling enumerator degree by degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import product

from .classical import Row, component_fillings, expand_by_bricks
from .core import PolyExpr, PolyMatrix, matrix_from_columns
from .foundations import (
    BlockSequence,
    Partition,
    SplitType,
    divisors,
    enumerate_partitions,
    enumerate_types,
    multiplicity,
)

_STRICT = {"P": True, "H": False, "E+": True, "E": True}


def _groups_for_choice(family: str, content: BlockSequence, choice) -> dict[int, list[tuple[int, int, int]]]:
    """Per-degree brick groups (label, length, count) for one divisor/partition choice."""
    groups: dict[int, list[tuple[int, int, int]]] = {}
    if family == "P":
        for i, ((d, e), k) in enumerate(zip(content, choice), start=1):
            groups.setdefault(k, []).append((i, d * e // k, 1))
    else:
        for i, ((_, r), lam) in enumerate(zip(content, choice), start=1):
            for k in sorted(set(lam)):
                groups.setdefault(k, []).append((i, r, multiplicity(lam, k)))
    return groups


def _choices(family: str, content: BlockSequence):
    if family == "P":
        return product(*(divisors(d) for d, _ in content))
    return product(*(enumerate_partitions(d) for d, _ in content))


def _choice_weight_sign(family: str, choice) -> tuple[int, int]:
    if family == "P":
        w = 1
        for k in choice:
            w *= k
        return w, 1
    if family == "E":
        total = sum(len(lam) for lam in choice)
        return 1, -1 if total % 2 else 1
    return 1, 1


def m_times_blocks(expr: PolyExpr, content: BlockSequence, family: str) -> PolyExpr:
    """m*-expansion of expr * (product of family blocks)."""
    if expr.basis != "m*":
        raise ValueError("m_times_blocks needs an m*-basis expression")
    if family not in _STRICT:
        raise ValueError(f"unknown family {family!r}")
    strict = _STRICT[family]
    out = PolyExpr.zero("m*")
    for sigma, coeff in expr.terms.items():
        for choice in _choices(family, content):
            groups = _groups_for_choice(family, content, choice)
            w, sign = _choice_weight_sign(family, choice)
            degs = sorted(set(sigma.degrees()) | set(groups))
            partial: list[tuple[dict[int, Partition], int]] = [({}, 1)]
            for d in degs:
                expanded = expand_by_bricks(sigma.restriction(d), tuple(groups.get(d, ())), strict)
                partial = [
                    ({**shapes, d: shape}, cnt * c)
                    for shapes, cnt in partial
                    for shape, c in expanded.items()
                    if shape
                ]
                if not partial:
                    break
            for shapes, cnt in partial:
                out.add_term(SplitType.from_restrictions(shapes), coeff * sign * w * cnt)
    return out


def m_times_P(expr: PolyExpr, content: BlockSequence) -> PolyExpr:
    """m*-expansion of expr * P_content, the weighted brick-tabloid rule."""
    return m_times_blocks(expr, content, "P")


@cache
def transition_to_m(family: str, n: int) -> PolyMatrix:
    """M(family, m*) at weight n."""
    columns = {}
    for sigma in enumerate_types(n):
        expansion = m_times_blocks(PolyExpr.one("m*"), sigma.blocks, family)
        columns[sigma] = expansion.terms
    return matrix_from_columns(n, columns)


@dataclass(frozen=True)
class TensorBrickTabloid:
    """An explicit brick covering of a tensor diagram.

    `components` lists (degree, rows) for every degree of the shape; each
    row is the bricks covering it as (label, length) pairs in label order.
    P tabloids carry the divisor tuple and weight; H and E tabloids carry
    the chosen partitions, and E tabloids a sign.
    """

    family: str  # "P", "H", or "E"
    shape: SplitType
    inner: SplitType
    content: BlockSequence
    components: tuple[tuple[int, tuple[Row, ...]], ...]
    weight: int = 1
    sign: int = 1
    step_divisors: tuple[int, ...] | None = None
    step_partitions: tuple[Partition, ...] | None = None


def tensor_brick_tabloids(shape: SplitType, inner: SplitType, content: BlockSequence,
                          family: str) -> list[TensorBrickTabloid]:
    """All brick tabloids of the given shape, extended content, and family.

    Family "E" enumerates the strict fillings shared by E+ and E; summing
    1 gives the E+ coefficient and summing the signs the E coefficient.
    """
    if family not in ("P", "H", "E"):
        raise ValueError(f"family must be P, H, or E; got {family!r}")
    total = inner.weight + sum(b.weight for b in content)
    if shape.weight != total:
        raise ValueError(f"weight mismatch: |shape|={shape.weight}, |inner|+|content|={total}")
    strict = _STRICT[family]
    out = []
    for choice in _choices(family, content):
        groups = _groups_for_choice(family, content, choice)
        degs = sorted(set(shape.degrees()) | set(inner.degrees()) | set(groups))
        per_degree = []
        for d in degs:
            fills = component_fillings(
                shape.restriction(d), inner.restriction(d), groups.get(d, ()), strict)
            if not fills:
                per_degree = None
                break
            per_degree.append((d, fills))
        if per_degree is None:
            continue
        w, sign = _choice_weight_sign(family, choice)
        for combo in product(*(fills for _, fills in per_degree)):
            components = tuple(
                (d, rows) for (d, _), rows in zip(per_degree, combo) if rows)
            out.append(TensorBrickTabloid(
                family=family, shape=shape, inner=inner, content=content,
                components=components, weight=w, sign=sign,
                step_divisors=choice if family == "P" else None,
                step_partitions=choice if family != "P" else None))
    return out
