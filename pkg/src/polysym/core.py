"""Polysymmetric expressions and transition matrices between pure tensor bases.

A polysymmetric expression is a sparse linear combination of one basis,
indexed by splitting types.  The five pure tensor bases m*/h*/e*/p*/s* come
from the classical bases degree by degree; P, H, E+, E are the non-pure
generating families, kept representational here and expanded by the rule
modules.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from typing import Sequence

from . import linalg
from .classical import classical_transition
from .foundations import EMPTY_TYPE, SplitType, enumerate_types

PURE_BASES = ("m*", "h*", "e*", "p*", "s*")
FAMILY_BASES = ("P", "H", "E+", "E")
POLY_BASES = PURE_BASES + FAMILY_BASES


@dataclass
class PolyExpr:
    """A sparse linear combination of one polysymmetric basis."""

    basis: str
    terms: dict[SplitType, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in POLY_BASES:
            raise ValueError(f"unknown polysymmetric basis {self.basis!r}")
        self.terms = {t: Fraction(c) for t, c in self.terms.items() if c}

    @staticmethod
    def term(basis: str, t: SplitType, coeff=1) -> "PolyExpr":
        return PolyExpr(basis, {t: Fraction(coeff)})

    @staticmethod
    def one(basis: str) -> "PolyExpr":
        return PolyExpr.term(basis, EMPTY_TYPE)

    @staticmethod
    def zero(basis: str) -> "PolyExpr":
        return PolyExpr(basis, {})

    def add_term(self, t: SplitType, coeff: Fraction) -> None:
        c = self.terms.get(t, Fraction(0)) + coeff
        if c:
            self.terms[t] = c
        else:
            self.terms.pop(t, None)

    def __add__(self, other: "PolyExpr") -> "PolyExpr":
        if self.basis != other.basis:
            raise ValueError("cannot add expressions in different bases")
        out = PolyExpr(self.basis, dict(self.terms))
        for t, c in other.terms.items():
            out.add_term(t, c)
        return out

    def scale(self, c) -> "PolyExpr":
        c = Fraction(c)
        return PolyExpr(self.basis, {t: x * c for t, x in self.terms.items()})

    def weight(self) -> int:
        """Common weight of all terms; raises on inhomogeneous input."""
        weights = {t.weight for t in self.terms}
        if len(weights) > 1:
            raise ValueError(f"expression is not homogeneous: weights {sorted(weights)}")
        return weights.pop() if weights else 0

    def coefficient(self, t: SplitType) -> Fraction:
        return self.terms.get(t, Fraction(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyExpr) and self.basis == other.basis and self.terms == other.terms


def multiply_p_tensor(exprs: Sequence[PolyExpr]) -> PolyExpr:
    """Product of p*-basis expressions: p*_sigma p*_rho = p*_(sigma union rho)."""
    for e in exprs:
        if e.basis != "p*":
            raise ValueError("multiply_p_tensor needs p*-basis expressions")
    out = PolyExpr.one("p*")
    for e in exprs:
        nxt = PolyExpr.zero("p*")
        for t1, c1 in out.terms.items():
            for t2, c2 in e.terms.items():
                nxt.add_term(t1.union(t2), c1 * c2)
        out = nxt
    return out


@dataclass(frozen=True)
class PolyMatrix:
    """Transition matrix between polysymmetric bases at one weight.

    entries[tau][sigma] is the coefficient of (target basis)_tau in the
    expansion of (source basis)_sigma; rows and columns are both labelled
    by all types of `weight` in canonical order and addressable by type.
    """

    weight: int
    labels: tuple[SplitType, ...]
    entries: tuple[tuple[Fraction, ...], ...]

    def index(self, t: SplitType) -> int:
        return self.labels.index(t)

    def get(self, row: SplitType, col: SplitType) -> Fraction:
        return self.entries[self.index(row)][self.index(col)]

    def grid(self) -> linalg.Matrix:
        return [list(r) for r in self.entries]

    def inverse(self) -> "PolyMatrix":
        return PolyMatrix(self.weight, self.labels,
                          _freeze(linalg.mat_inverse(self.grid())))

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.weight != other.weight:
            raise ValueError("weight mismatch")
        return PolyMatrix(self.weight, self.labels,
                          _freeze(linalg.mat_mul(self.grid(), other.grid())))

    def apply(self, coeffs: dict[SplitType, Fraction]) -> dict[SplitType, Fraction]:
        vec = [coeffs.get(t, Fraction(0)) for t in self.labels]
        out = linalg.mat_vec(self.grid(), vec)
        return {t: c for t, c in zip(self.labels, out) if c}


def _freeze(grid: linalg.Matrix) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(row) for row in grid)


def matrix_from_columns(weight: int, columns: dict[SplitType, dict[SplitType, Fraction]]) -> PolyMatrix:
    labels = enumerate_types(weight)
    grid = [[columns[sigma].get(tau, Fraction(0)) for sigma in labels] for tau in labels]
    return PolyMatrix(weight, labels, _freeze(grid))


def identity_matrix(n: int) -> PolyMatrix:
    labels = enumerate_types(n)
    return PolyMatrix(n, labels, _freeze(linalg.identity(len(labels))))


@cache
def tensor_transition(f: str, g: str, n: int) -> PolyMatrix:
    """M(f*, g*) at weight n: the product over degrees of classical entries.

    The (tau, sigma) entry is prod_d M(f, g)_{tau|_d, sigma|_d}, which is
    zero whenever some degree carries different areas in tau and sigma.
    """
    labels = enumerate_types(n)
    grid = []
    for tau in labels:
        row = []
        for sigma in labels:
            entry = Fraction(1)
            for d in sorted(set(tau.degrees()) | set(sigma.degrees())):
                a, b = tau.restriction(d), sigma.restriction(d)
                if sum(a) != sum(b):
                    entry = Fraction(0)
                    break
                entry *= classical_transition(f, g, sum(a)).get(a, b)
                if not entry:
                    break
            row.append(entry)
        grid.append(row)
    return PolyMatrix(n, labels, _freeze(grid))


def pure_letter(basis: str) -> str:
    """The classical letter behind a pure tensor basis tag, e.g. 'p*' -> 'p'."""
    if basis not in PURE_BASES:
        raise ValueError(f"{basis!r} is not a pure tensor basis")
    return basis[0]
