"""Expansions in the p* basis and constant-row tableau enumeration.

Single blocks expand directly:

    P_(d^r)  = sum over divisors k of d of  k * p*_(k^(rd/k))
    H_(d^r)  = sum over types t of weight d of  p*_(t^r) / z*_t
    E+_(d^r) = same sum with sign (-1)^len(t) * sgn(t)
    E_(d^r)  = same sum with sign (-1)^len(t)

Products then follow from bilinearity and the type-union product of the
p* basis.  The tableau view fills a tensor diagram with constant rows:
each step of a P product inserts one new part (a divisor choice), each
step of an H/E product inserts the scaled restrictions of a chosen type.
Within equal-length rows of one component, labels weakly increase
downward, which pins the filling, so tableaux are in bijection with the
divisor or type choices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import product

from .core import PolyExpr, PolyMatrix, matrix_from_columns, multiply_p_tensor
from .foundations import (
    BlockSequence,
    SplitType,
    divisors,
    enumerate_types,
    partition_union,
)

_FAMILIES = ("P", "H", "E+", "E")


def _family_sign(family: str, t: SplitType) -> int:
    if family == "H":
        return 1
    if family == "E+":
        return t.sign * (-1 if t.length % 2 else 1)
    if family == "E":
        return -1 if t.length % 2 else 1
    raise ValueError(f"unknown family {family!r}")


def block_in_p(family: str, d: int, r: int) -> PolyExpr:
    """p*-expansion of one generator block."""
    if d < 1 or r < 1:
        raise ValueError("block degree and multiplicity must be positive")
    out = PolyExpr.zero("p*")
    if family == "P":
        for k in divisors(d):
            out.add_term(SplitType.from_blocks([(k, r * d // k)]), Fraction(k))
        return out
    if family not in _FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    for t in enumerate_types(d):
        out.add_term(t.scaled(r), Fraction(_family_sign(family, t), t.z_tensor()))
    return out


def p_times_block(expr: PolyExpr, family: str, d: int, m: int) -> PolyExpr:
    """p*-expansion of expr * family_(d^m)."""
    if expr.basis != "p*":
        raise ValueError("p_times_block needs a p*-basis expression")
    return multiply_p_tensor([expr, block_in_p(family, d, m)])


def multiply_blocks(expr: PolyExpr, family: str, blocks: BlockSequence) -> PolyExpr:
    out = expr
    for b in blocks:
        out = p_times_block(out, family, b.degree, b.multiplicity)
    return out


@cache
def transition_to_p(family: str, n: int) -> PolyMatrix:
    """M(family, p*) at weight n."""
    columns = {}
    for sigma in enumerate_types(n):
        expansion = multiply_blocks(PolyExpr.one("p*"), family, sigma.blocks)
        columns[sigma] = expansion.terms
    return matrix_from_columns(n, columns)


@dataclass(frozen=True)
class ConstantRowTableau:
    """A constant-row filling of a tensor diagram recording a p* product.

    Rows of `shape` carry labels 0..s; the 0 rows form `inner`, the rows
    labeled i were inserted by block i of `content`, and labels weakly
    increase down equal-length rows of each component.  For the P family,
    `step_divisors` holds the divisor k_i chosen at each step and the
    weight is their product; for the H family, `step_types` holds the type
    chosen at each step, the weight is the product of 1/z* over those
    types, and the two signs are the products of (-1)^len * sgn and of
    (-1)^len over the step types.
    """

    family: str  # "P" or "H"
    shape: SplitType
    inner: SplitType
    content: BlockSequence
    weight: Fraction
    step_divisors: tuple[int, ...] | None = None
    step_types: tuple[SplitType, ...] | None = None
    sign_plus: int = 1
    sign_minus: int = 1

    def row_labels(self) -> dict[int, tuple[int, ...]]:
        """Per-degree label sequences, top row to bottom row.

        Within each component, rows of equal length receive the labels of
        the parts that produced them in weakly increasing order.
        """
        inserted: dict[int, list[tuple[int, int]]] = {}

        def insert(k: int, size: int, label: int):
            inserted.setdefault(k, []).append((size, label))

        for k, parts in self.inner.restrictions().items():
            for p in parts:
                insert(k, p, 0)
        if self.family == "P":
            assert self.step_divisors is not None
            for i, ((d, m), k) in enumerate(zip(self.content, self.step_divisors), start=1):
                insert(k, d * m // k, i)
        else:
            assert self.step_types is not None
            for i, ((_, m), t) in enumerate(zip(self.content, self.step_types), start=1):
                for k, parts in t.restrictions().items():
                    for p in parts:
                        insert(k, p * m, i)
        out = {}
        for k, rows in inserted.items():
            rows.sort(key=lambda sl: (-sl[0], sl[1]))
            out[k] = tuple(label for _, label in rows)
        return out


def constant_row_p_tableaux(shape: SplitType, inner: SplitType,
                            content: BlockSequence) -> list[ConstantRowTableau]:
    """All constant-row tableaux for a P product, one per matching divisor tuple."""
    total = inner.weight + sum(b.weight for b in content)
    if shape.weight != total:
        raise ValueError(f"weight mismatch: |shape|={shape.weight}, |inner|+|content|={total}")
    out = []
    for ks in product(*(divisors(d) for d, _ in content)):
        gained: dict[int, list[int]] = {}
        for (d, m), k in zip(content, ks):
            gained.setdefault(k, []).append(d * m // k)
        result = inner
        for k, parts in gained.items():
            result = result.with_restriction(
                k, partition_union(result.restriction(k), tuple(sorted(parts, reverse=True))))
        if result == shape:
            w = 1
            for k in ks:
                w *= k
            out.append(ConstantRowTableau(
                family="P", shape=shape, inner=inner, content=content,
                weight=Fraction(w), step_divisors=ks))
    return out


def constant_row_h_tableaux(shape: SplitType, inner: SplitType,
                            content: BlockSequence) -> list[ConstantRowTableau]:
    """All constant-row tableaux for an H/E product, one per matching type tuple."""
    total = inner.weight + sum(b.weight for b in content)
    if shape.weight != total:
        raise ValueError(f"weight mismatch: |shape|={shape.weight}, |inner|+|content|={total}")
    out = []
    for ts in product(*(enumerate_types(d) for d, _ in content)):
        result = inner
        for (_, m), t in zip(content, ts):
            result = result.union(t.scaled(m))
        if result == shape:
            w = Fraction(1)
            sp = sm = 1
            for t in ts:
                w /= t.z_tensor()
                sp *= _family_sign("E+", t)
                sm *= _family_sign("E", t)
            out.append(ConstantRowTableau(
                family="H", shape=shape, inner=inner, content=content,
                weight=w, step_types=ts, sign_plus=sp, sign_minus=sm))
    return out
