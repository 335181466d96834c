"""Pieri-type rules in the s* basis and the tableau families behind them.

Multiplying s*_sigma by a generator block touches one or more tensor
positions:

* a P block d^m adds one (dm/k)-ribbon in some position k dividing d,
  weighted k and signed by the ribbon;
* an H block d^r picks a partition lam of d and adds an r^(m_k(lam))-
  polyribbon in every position k, with the product of polyribbon signs;
* E+ and E blocks do the same with dual polyribbons; E additionally
  carries (-1)^(number of ribbons inserted).

Iterating over a block sequence yields tableau objects: a chain of types
recording each step.  Enumerators stream chains depth first, stepping
through divisors in increasing order, associated partitions in canonical
order, and ribbon placements in descending shape order, so output order
is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import product

from .core import PolyExpr, PolyMatrix, matrix_from_columns
from .foundations import (
    BlockSequence,
    Partition,
    SplitType,
    contains_partition,
    divisors,
    enumerate_partitions,
    enumerate_types,
    multiplicity,
)
from .shapes import add_polyribbons, add_ribbons


def s_times_P_block(expr: PolyExpr, d: int, m: int) -> PolyExpr:
    """s*-expansion of expr * P_(d^m)."""
    if expr.basis != "s*":
        raise ValueError("s_times_P_block needs an s*-basis expression")
    out = PolyExpr.zero("s*")
    for typ, coeff in expr.terms.items():
        for k in divisors(d):
            size = d * m // k
            for step in add_ribbons(typ.restriction(k), size):
                out.add_term(typ.with_restriction(k, step.result), coeff * k * step.sign)
    return out


def _polyribbon_insertions(typ: SplitType, d: int, r: int, dual: bool,
                           within: SplitType | None = None):
    """Yield (new type, sign product, associated partition) for one H/E block."""
    for lam in enumerate_partitions(d):
        positions = [(k, multiplicity(lam, k)) for k in sorted(set(lam))]
        options = []
        for k, n_k in positions:
            bound = within.restriction(k) if within is not None else None
            opts = add_polyribbons(typ.restriction(k), r, n_k, dual=dual, within=bound)
            if not opts:
                break
            options.append((k, opts))
        else:
            for combo in product(*(opts for _, opts in options)):
                new = typ
                sign = 1
                for (k, _), (shape, s) in zip(options, combo):
                    new = new.with_restriction(k, shape)
                    sign *= s
                yield new, sign, lam


def s_times_H_block(expr: PolyExpr, d: int, r: int) -> PolyExpr:
    """s*-expansion of expr * H_(d^r) via polyribbon insertion."""
    if expr.basis != "s*":
        raise ValueError("s_times_H_block needs an s*-basis expression")
    out = PolyExpr.zero("s*")
    for typ, coeff in expr.terms.items():
        for new, sign, _lam in _polyribbon_insertions(typ, d, r, dual=False):
            out.add_term(new, coeff * sign)
    return out


def s_times_E_block(expr: PolyExpr, d: int, r: int, variant: str = "plus") -> PolyExpr:
    """s*-expansion of expr * E+_(d^r) (variant 'plus') or expr * E_(d^r) ('signed')."""
    if expr.basis != "s*":
        raise ValueError("s_times_E_block needs an s*-basis expression")
    if variant not in ("plus", "signed"):
        raise ValueError("variant must be 'plus' or 'signed'")
    out = PolyExpr.zero("s*")
    for typ, coeff in expr.terms.items():
        for new, sign, lam in _polyribbon_insertions(typ, d, r, dual=True):
            if variant == "signed" and len(lam) % 2:
                sign = -sign
            out.add_term(new, coeff * sign)
    return out


def multiply_blocks(expr: PolyExpr, family: str, blocks: BlockSequence) -> PolyExpr:
    """Left-to-right product of expr with family blocks, in the s* basis."""
    out = expr
    for b in blocks:
        if family == "P":
            out = s_times_P_block(out, b.degree, b.multiplicity)
        elif family == "H":
            out = s_times_H_block(out, b.degree, b.multiplicity)
        elif family == "E+":
            out = s_times_E_block(out, b.degree, b.multiplicity, "plus")
        elif family == "E":
            out = s_times_E_block(out, b.degree, b.multiplicity, "signed")
        else:
            raise ValueError(f"unknown family {family!r}")
    return out


@cache
def transition_to_s(family: str, n: int) -> PolyMatrix:
    """M(family, s*) at weight n: column sigma is the s*-expansion of family_sigma."""
    columns = {}
    for sigma in enumerate_types(n):
        expansion = multiply_blocks(PolyExpr.one("s*"), family, sigma.blocks)
        columns[sigma] = expansion.terms
    return matrix_from_columns(n, columns)


@dataclass(frozen=True)
class TensorTableau:
    """A chain of types recording iterated block insertions in the s* basis.

    `chain` runs from the inner type to the full shape, one entry per block
    of `content`.  For the ribbon family, `positions` holds the tensor
    position of each inserted ribbon and `weight` the product of positions;
    for polyribbon families, `step_partitions` holds the associated
    partition of each step.  `sign` is the full product of ribbon signs
    (the plus-variant sign for dual tableaux); dual tableaux also carry
    `sign_minus`, which differs from `sign` by (-1) per inserted ribbon.
    """

    family: str  # "P", "H", or "E"
    shape: SplitType
    inner: SplitType
    content: BlockSequence
    chain: tuple[SplitType, ...]
    sign: int
    weight: int = 1
    positions: tuple[int, ...] | None = None
    step_partitions: tuple[Partition, ...] | None = None
    sign_minus: int | None = None


def _fits(current: SplitType, target: SplitType) -> bool:
    return all(
        contains_partition(target.restriction(d), current.restriction(d))
        for d in current.degrees()
    )


def ribbon_tableaux(shape: SplitType, inner: SplitType,
                    content: BlockSequence) -> list[TensorTableau]:
    """All chains realizing shape/inner by P-block ribbon insertions.

    Step i adds a (d_i m_i / k_i)-ribbon in some position k_i dividing d_i;
    the tableau weight is the product of the k_i and the sign the product
    of ribbon signs.
    """
    total = inner.weight + sum(b.weight for b in content)
    if shape.weight != total:
        raise ValueError(f"weight mismatch: |shape|={shape.weight}, |inner|+|content|={total}")
    out: list[TensorTableau] = []

    def walk(i: int, cur: SplitType, chain: list[SplitType],
             positions: list[int], sign: int, weight: int):
        if i == len(content):
            if cur == shape:
                out.append(TensorTableau(
                    family="P", shape=shape, inner=inner, content=content,
                    chain=tuple(chain), sign=sign, weight=weight,
                    positions=tuple(positions)))
            return
        d, m = content[i]
        for k in divisors(d):
            size = d * m // k
            for step in add_ribbons(cur.restriction(k), size):
                if not contains_partition(shape.restriction(k), step.result):
                    continue
                nxt = cur.with_restriction(k, step.result)
                chain.append(nxt)
                positions.append(k)
                walk(i + 1, nxt, chain, positions, sign * step.sign, weight * k)
                chain.pop()
                positions.pop()

    if _fits(inner, shape):
        walk(0, inner, [inner], [], 1, 1)
    return out


def polyribbon_tableaux(shape: SplitType, inner: SplitType, content: BlockSequence,
                        dual: bool = False) -> list[TensorTableau]:
    """All chains realizing shape/inner by H-block (or, dual, E-block) insertions.

    Step i picks a partition of d_i and inserts the matching (dual)
    polyribbons in every tensor position.  Dual tableaux report both the
    plain product of ribbon signs (`sign`) and the variant with an extra
    (-1) per inserted ribbon (`sign_minus`).
    """
    total = inner.weight + sum(b.weight for b in content)
    if shape.weight != total:
        raise ValueError(f"weight mismatch: |shape|={shape.weight}, |inner|+|content|={total}")
    out: list[TensorTableau] = []

    def walk(i: int, cur: SplitType, chain: list[SplitType],
             lams: list[Partition], sign: int, ribbons: int):
        if i == len(content):
            if cur == shape:
                out.append(TensorTableau(
                    family="E" if dual else "H", shape=shape, inner=inner,
                    content=content, chain=tuple(chain),
                    sign=sign, step_partitions=tuple(lams),
                    sign_minus=(sign if ribbons % 2 == 0 else -sign) if dual else None))
            return
        d, r = content[i]
        for new, s, lam in _polyribbon_insertions(cur, d, r, dual=dual, within=shape):
            chain.append(new)
            lams.append(lam)
            walk(i + 1, new, chain, lams, sign * s, ribbons + len(lam))
            chain.pop()
            lams.pop()

    if _fits(inner, shape):
        walk(0, inner, [inner], [], 1, 0)
    return out


def tableau_contribution(t: TensorTableau) -> Fraction:
    """Signed weight this tableau adds to its transition coefficient."""
    return Fraction(t.sign * t.weight)
