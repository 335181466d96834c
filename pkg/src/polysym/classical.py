"""The classical symmetric-function engine over one variable alphabet.

Supports the five standard bases m/h/e/p/s as sparse expansions indexed by
partitions, monomial expansions through brick-tabloid enumeration and
semistandard tableau counting, the Murnaghan-Nakayama product, power-sum
plethysm, the omega involution, and exact transition matrices.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from typing import Iterable, Iterator, Sequence

from . import linalg
from .foundations import (
    Partition,
    check_partition,
    conjugate,
    enumerate_partitions,
    partition_scale,
    z_value,
)
from .shapes import add_ribbons

CLASSICAL_BASES = ("m", "h", "e", "p", "s")


@dataclass
class SymExpr:
    """A sparse linear combination of one classical basis, exact coefficients."""

    basis: str
    terms: dict[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in CLASSICAL_BASES:
            raise ValueError(f"unknown classical basis {self.basis!r}")
        self.terms = {p: Fraction(c) for p, c in self.terms.items() if c}

    @staticmethod
    def term(basis: str, parts: Iterable[int], coeff=1) -> "SymExpr":
        return SymExpr(basis, {check_partition(parts): Fraction(coeff)})

    @staticmethod
    def zero(basis: str) -> "SymExpr":
        return SymExpr(basis, {})

    def add_term(self, parts: Partition, coeff: Fraction) -> None:
        c = self.terms.get(parts, Fraction(0)) + coeff
        if c:
            self.terms[parts] = c
        else:
            self.terms.pop(parts, None)

    def __add__(self, other: "SymExpr") -> "SymExpr":
        if self.basis != other.basis:
            raise ValueError("cannot add expressions in different bases")
        out = SymExpr(self.basis, dict(self.terms))
        for p, c in other.terms.items():
            out.add_term(p, c)
        return out

    def scale(self, c) -> "SymExpr":
        c = Fraction(c)
        return SymExpr(self.basis, {p: x * c for p, x in self.terms.items()})

    def degree(self) -> int:
        """The common degree of all terms; raises on mixed-degree input."""
        degs = {sum(p) for p in self.terms}
        if len(degs) > 1:
            raise ValueError(f"expression is not homogeneous: degrees {sorted(degs)}")
        return degs.pop() if degs else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, SymExpr) and self.basis == other.basis and self.terms == other.terms


# ---------------------------------------------------------------------------
# Brick fillings: the shared engine behind all tabloid-style monomial rules.
# A brick group is (label, length, count); label 0 bricks come from the inner
# partition and there is at most one of them per row.  In strict mode every
# label occurs at most once per row; in weak mode positive labels may repeat.
# ---------------------------------------------------------------------------

Row = tuple[tuple[int, int], ...]  # ((label, length), ...) sorted by label


def _row_fills(
    row_len: int,
    zeros: tuple[int, ...],
    bricks: tuple[tuple[int, int], ...],
    counts: tuple[int, ...],
    strict: bool,
) -> Iterator[tuple[Row, tuple[int, ...], tuple[int, ...]]]:
    """Yield (row, remaining zeros, remaining brick counts) for one row."""

    def place(gi: int, left: int, picked: list[tuple[int, int]], live: list[int]):
        if left == 0:
            yield tuple(picked), tuple(live)
            return
        if gi == len(bricks):
            return
        label, length = bricks[gi]
        max_here = 1 if strict else live[gi]
        top = min(max_here, live[gi], left // length)
        for take in range(top, -1, -1):
            if take:
                live[gi] -= take
                picked.extend([(label, length)] * take)
            yield from place(gi + 1, left - take * length, picked, live)
            if take:
                live[gi] += take
                del picked[-take:]

    # Either no zero brick in this row, or exactly one of some available length.
    for zl in [None] + sorted(set(zeros), reverse=True):
        if zl is None:
            head: list[tuple[int, int]] = []
            rest_zeros = zeros
            budget = row_len
        else:
            if zl > row_len:
                continue
            head = [(0, zl)]
            removed = list(zeros)
            removed.remove(zl)
            rest_zeros = tuple(removed)
            budget = row_len - zl
        for row, live in place(0, budget, list(head), list(counts)):
            yield row, rest_zeros, live


def component_fillings(
    shape: Partition,
    zero_parts: Partition,
    groups: Sequence[tuple[int, int, int]],
    strict: bool,
) -> list[tuple[Row, ...]]:
    """All brick fillings of one partition diagram.

    Every cell is covered exactly once; zero bricks have the lengths of
    `zero_parts`, each used exactly once and at most one per row; bricks
    labeled i > 0 come from `groups` entries (label, length, count) and the
    per-row label constraint is strict or weak increase.  Rows are returned
    top to bottom with bricks listed in label order.
    """
    groups = tuple(sorted(groups))
    bricks = tuple((label, length) for label, length, _ in groups)
    out: list[tuple[Row, ...]] = []

    def walk(row_idx: int, zeros: tuple[int, ...], counts: tuple[int, ...], acc: list[Row]):
        if row_idx == len(shape):
            if not zeros and not any(counts):
                out.append(tuple(acc))
            return
        for row, rest_zeros, rest_counts in _row_fills(shape[row_idx], zeros, bricks, counts, strict):
            acc.append(row)
            walk(row_idx + 1, rest_zeros, rest_counts, acc)
            acc.pop()

    walk(0, tuple(sorted(zero_parts, reverse=True)), tuple(g[2] for g in groups), [])
    return out


def count_fillings(
    shape: Partition,
    zero_parts: Partition,
    groups: Sequence[tuple[int, int, int]],
    strict: bool,
) -> int:
    """Number of brick fillings of `shape`, without materialising them.

    Rows are processed top to bottom; states that share the same remaining
    inventory are memoised, so shapes with many equal rows stay cheap.
    """
    groups = tuple(sorted(groups))
    bricks = tuple((label, length) for label, length, _ in groups)
    memo: dict = {}

    def walk(idx: int, zeros: tuple[int, ...], counts: tuple[int, ...]) -> int:
        if idx == len(shape):
            return 1 if (not zeros and not any(counts)) else 0
        key = (idx, zeros, counts)
        cached = memo.get(key)
        if cached is not None:
            return cached
        branches = Counter()
        for _row, rz, rc in _row_fills(shape[idx], zeros, bricks, counts, strict):
            branches[(rz, rc)] += 1
        total = sum(mult * walk(idx + 1, rz, rc) for (rz, rc), mult in branches.items())
        memo[key] = total
        return total

    return walk(0, tuple(sorted(zero_parts, reverse=True)), tuple(g[2] for g in groups))


@cache
def expand_by_bricks(
    zero_parts: Partition,
    groups: tuple[tuple[int, int, int], ...],
    strict: bool,
) -> dict[Partition, int]:
    """Shape -> number of brick fillings, over all shapes of the right size."""
    total = sum(zero_parts) + sum(length * count for _, length, count in groups)
    out = {}
    for shape in enumerate_partitions(total):
        n = count_fillings(shape, zero_parts, groups, strict)
        if n:
            out[shape] = n
    return out


_FAMILY_MODE = {"p": True, "h": False, "e": True}


def _family_groups(alpha: Sequence[int], family: str) -> list[tuple[int, int, int]]:
    if family == "p":
        return [(i, a, 1) for i, a in enumerate(alpha, start=1)]
    return [(i, 1, a) for i, a in enumerate(alpha, start=1)]


def multiply_m_by(mu: Iterable[int], alpha: Sequence[int], family: str) -> SymExpr:
    """Monomial expansion of m_mu * f_alpha for f in {p, h, e}.

    Coefficients are counts of brick tabloids: one brick of length alpha_i
    per factor for p; alpha_i unit bricks per factor for h and e; labels
    strictly increase along rows for p and e, weakly for h, with at most
    one zero brick (a part of mu) per row.
    """
    if family not in _FAMILY_MODE:
        raise ValueError(f"family must be one of p, h, e; got {family!r}")
    mu = check_partition(mu)
    counts = expand_by_bricks(mu, tuple(_family_groups(alpha, family)), _FAMILY_MODE[family])
    return SymExpr("m", {shape: Fraction(n) for shape, n in counts.items()})


# ---------------------------------------------------------------------------
# Semistandard tableaux and the Schur basis.
# ---------------------------------------------------------------------------


def ssyt_count(shape: Partition, content: Sequence[int]) -> int:
    """Number of semistandard tableaux of the given shape and content."""
    shape = check_partition(shape)
    if sum(shape) != sum(content):
        return 0
    remaining = list(content)
    cols = conjugate(shape)
    rows_of: list[list[int]] = [[0] * r for r in shape]

    def fill(pos: int) -> int:
        if pos == sum(shape):
            return 1
        # row-major traversal
        i = 0
        p = pos
        while p >= shape[i]:
            p -= shape[i]
            i += 1
        j = p
        lo = rows_of[i][j - 1] if j else 1
        hi = len(remaining)
        total = 0
        for v in range(max(lo, 1), hi + 1):
            if remaining[v - 1] == 0:
                continue
            if i and rows_of[i - 1][j] >= v:
                continue
            remaining[v - 1] -= 1
            rows_of[i][j] = v
            total += fill(pos + 1)
            remaining[v - 1] += 1
        rows_of[i][j] = 0
        return total

    del cols
    return fill(0)


def kostka(lam: Partition, mu: Partition) -> int:
    return ssyt_count(lam, mu)


def to_monomial(expr: SymExpr) -> SymExpr:
    """Exact monomial expansion of a homogeneous expression in any basis."""
    n = expr.degree()
    out = SymExpr.zero("m")
    if expr.basis == "m":
        return SymExpr("m", dict(expr.terms))
    for lam, c in expr.terms.items():
        if expr.basis == "s":
            for mu in enumerate_partitions(n):
                k = kostka(lam, mu)
                if k:
                    out.add_term(mu, c * k)
        else:
            for mu, cnt in expand_by_bricks((), tuple(_family_groups(lam, expr.basis)),
                                            _FAMILY_MODE[expr.basis]).items():
                out.add_term(mu, c * cnt)
    return out


def mn_multiply(expr: SymExpr, k: int) -> SymExpr:
    """Schur expansion of expr * p_k by adding signed k-ribbons."""
    if expr.basis != "s":
        raise ValueError("mn_multiply needs a Schur-basis expression")
    out = SymExpr.zero("s")
    for mu, c in expr.terms.items():
        for step in add_ribbons(mu, k):
            out.add_term(step.result, c * step.sign)
    return out


def omega(expr: SymExpr) -> SymExpr:
    """The involution omega: h <-> e, s conjugates, p picks up a sign."""
    if expr.basis == "h":
        return SymExpr("e", dict(expr.terms))
    if expr.basis == "e":
        return SymExpr("h", dict(expr.terms))
    if expr.basis == "s":
        out = SymExpr.zero("s")
        for lam, c in expr.terms.items():
            out.add_term(conjugate(lam), c)
        return out
    if expr.basis == "p":
        out = SymExpr.zero("p")
        for lam, c in expr.terms.items():
            sign = -1 if (sum(lam) - len(lam)) % 2 else 1
            out.add_term(lam, c * sign)
        return out
    # No direct image on the monomial basis; go through power sums.
    return convert_classical(omega(convert_classical(expr, "p")), "m")


def pleth_pr(expr: SymExpr, r: int) -> SymExpr:
    """Plethysm with the power sum p_r: scale every power-sum index by r."""
    if r < 1:
        raise ValueError("plethysm index must be positive")
    p_expr = convert_classical(expr, "p")
    out = SymExpr.zero("p")
    for lam, c in p_expr.terms.items():
        out.add_term(partition_scale(lam, r), c)
    return out


def p_expand(n: int, family: str) -> SymExpr:
    """Power-sum expansion of h_n or e_n: sum over lambda of ±p_lambda/z_lambda."""
    out = SymExpr.zero("p")
    for lam in enumerate_partitions(n):
        c = Fraction(1, z_value(lam))
        if family == "e" and (n - len(lam)) % 2:
            c = -c
        out.add_term(lam, c)
    return out


# ---------------------------------------------------------------------------
# Transition matrices.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassicalMatrix:
    """Transition matrix between classical bases at one degree.

    Columns hold the expansion of the source basis in the target basis:
    f_mu = sum_lam entries[lam][mu] * g_lam, with rows and columns both
    labelled by `labels` (all partitions of `weight`, canonical order).
    """

    weight: int
    labels: tuple[Partition, ...]
    entries: tuple[tuple[Fraction, ...], ...]

    def index(self, p: Partition) -> int:
        return self.labels.index(p)

    def get(self, row: Partition, col: Partition) -> Fraction:
        return self.entries[self.index(row)][self.index(col)]

    def grid(self) -> linalg.Matrix:
        return [list(r) for r in self.entries]


@cache
def _monomial_matrix(basis: str, n: int) -> tuple[tuple[Fraction, ...], ...]:
    labels = enumerate_partitions(n)
    cols = []
    for lam in labels:
        expr = to_monomial(SymExpr.term(basis, lam))
        cols.append([expr.terms.get(mu, Fraction(0)) for mu in labels])
    return tuple(tuple(cols[j][i] for j in range(len(labels))) for i in range(len(labels)))


@cache
def classical_transition(f: str, g: str, n: int) -> ClassicalMatrix:
    """The matrix M(f, g) with f_mu = sum_lam M[lam, mu] g_lam at degree n."""
    for b in (f, g):
        if b not in CLASSICAL_BASES:
            raise ValueError(f"unknown classical basis {b!r}")
    labels = enumerate_partitions(n)
    a = [list(r) for r in _monomial_matrix(f, n)]
    if g == "m":
        grid = a
    else:
        b = [list(r) for r in _monomial_matrix(g, n)]
        grid = linalg.mat_mul(linalg.mat_inverse(b), a)
    return ClassicalMatrix(n, labels, tuple(tuple(r) for r in grid))


def convert_classical(expr: SymExpr, target: str) -> SymExpr:
    """Exact change of basis, handling mixed degrees term by term."""
    if target not in CLASSICAL_BASES:
        raise ValueError(f"unknown classical basis {target!r}")
    if expr.basis == target:
        return SymExpr(target, dict(expr.terms))
    by_degree: dict[int, SymExpr] = {}
    for lam, c in expr.terms.items():
        by_degree.setdefault(sum(lam), SymExpr.zero(expr.basis)).add_term(lam, c)
    out = SymExpr.zero(target)
    for n, part in by_degree.items():
        labels = enumerate_partitions(n)
        mat = classical_transition(expr.basis, target, n)
        vec = [part.terms.get(lam, Fraction(0)) for lam in labels]
        for lam, c in zip(labels, linalg.mat_vec(mat.grid(), vec)):
            if c:
                out.add_term(lam, c)
    return out
