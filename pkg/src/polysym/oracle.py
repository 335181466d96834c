"""Brute-force ground truth: truncated monomial expansion in x_{d,i}.

Every basis element and generator block is expanded literally from its
defining formula into a sparse polynomial in the graded variables x_{d,i}
(degree of x_{d,i} is d), truncated to total degree <= n with N variables
per degree.  m*-coefficients are read off leading monomials, and any
transition matrix follows from an exact linear solve.  Nothing here shares
code with the combinatorial rule modules, so agreement between the two is
meaningful evidence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from itertools import combinations, combinations_with_replacement
from typing import Iterator, Sequence

from . import linalg
from .core import FAMILY_BASES, PURE_BASES, PolyExpr, PolyMatrix, pure_letter
from .foundations import Partition, SplitType, enumerate_types

#: Monomial key: ((degree, index), exponent) pairs, sorted, exponents > 0.
Monomial = tuple[tuple[tuple[int, int], int], ...]


def monomial_degree(mono: Monomial) -> int:
    return sum(d * e for (d, _), e in mono)


def _merge(a: Monomial, b: Monomial) -> Monomial:
    out = dict(a)
    for var, e in b:
        out[var] = out.get(var, 0) + e
    return tuple(sorted(out.items()))


@dataclass
class TruncatedPoly:
    """Sparse polynomial in x_{d,i}, truncated to total degree <= cap.

    Coefficients are exact rationals; plain ints are kept as ints so the
    common all-integer case stays fast.
    """

    cap: int
    width: int
    terms: dict[Monomial, Fraction] = field(default_factory=dict)

    def add_term(self, mono: Monomial, coeff) -> None:
        if monomial_degree(mono) > self.cap:
            return
        c = self.terms.get(mono, 0) + coeff
        if c:
            self.terms[mono] = c
        else:
            self.terms.pop(mono, None)

    def __add__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        out = TruncatedPoly(min(self.cap, other.cap), max(self.width, other.width),
                            dict(self.terms))
        for m, c in other.terms.items():
            out.add_term(m, c)
        return out

    def __mul__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        cap = min(self.cap, other.cap)
        left = [(m, monomial_degree(m), c) for m, c in self.terms.items()]
        right = [(m, monomial_degree(m), c) for m, c in other.terms.items()]
        acc: dict[Monomial, Fraction] = {}
        for m1, d1, c1 in left:
            budget = cap - d1
            for m2, d2, c2 in right:
                if d2 <= budget:
                    key = _merge(m1, m2)
                    acc[key] = acc.get(key, 0) + c1 * c2
        return TruncatedPoly(cap, max(self.width, other.width),
                             {m: c for m, c in acc.items() if c})

    def scale(self, c) -> "TruncatedPoly":
        c = Fraction(c)
        return TruncatedPoly(self.cap, self.width,
                             {m: x * c for m, x in self.terms.items()} if c else {})

    def substitute_power(self, m: int, cap: int | None = None) -> "TruncatedPoly":
        """Replace every variable x by x^m (exponents scale by m)."""
        out = TruncatedPoly(self.cap if cap is None else cap, self.width)
        for mono, c in self.terms.items():
            scaled = tuple((var, e * m) for var, e in mono)
            out.add_term(scaled, c)
        return out

    @staticmethod
    def one(cap: int, width: int) -> "TruncatedPoly":
        return TruncatedPoly(cap, width, {(): Fraction(1)})

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedPoly) and self.terms == other.terms


def _check_width(n: int, width: int) -> None:
    if width < n:
        raise ValueError(f"width {width} too small for degree {n}; need at least n variables per degree")


def _distinct_exponent_vectors(parts: Partition, width: int) -> Iterator[tuple[int, ...]]:
    """All distinct ways to spread the parts over `width` slots (monomials of m_parts)."""
    padded = sorted(parts, reverse=True)

    def place(remaining: list[int], slots: int) -> Iterator[tuple[int, ...]]:
        if not remaining:
            yield (0,) * slots
            return
        if slots == 0:
            return
        seen = set()
        for idx, val in enumerate(remaining):
            if val in seen:
                continue
            seen.add(val)
            rest = remaining[:idx] + remaining[idx + 1:]
            for tail in place(rest, slots - 1):
                yield (val,) + tail
        yield from ((0,) + tail for tail in place(remaining, slots - 1))

    if len(padded) > width:
        return
    yield from place(padded, width)


def _vector_mono(d: int, exps: Sequence[int]) -> Monomial:
    return tuple(((d, i + 1), e) for i, e in enumerate(exps) if e)


@cache
def _classical_poly(letter: str, parts: Partition, d: int, n: int, width: int) -> TruncatedPoly:
    """f_parts(x_{d,1..width}) for a classical basis letter, truncated at n."""
    out = TruncatedPoly(n, width)
    if letter == "m":
        for exps in _distinct_exponent_vectors(parts, width):
            out.add_term(_vector_mono(d, exps), 1)
        return out
    if letter == "p":
        prod = TruncatedPoly.one(n, width)
        for c in parts:
            single = TruncatedPoly(n, width)
            for i in range(1, width + 1):
                single.add_term((((d, i), c),), 1)
            prod = prod * single
        return prod
    if letter in ("h", "e"):
        prod = TruncatedPoly.one(n, width)
        picker = combinations if letter == "e" else combinations_with_replacement
        for c in parts:
            single = TruncatedPoly(n, width)
            for combo in picker(range(1, width + 1), c):
                exps = [0] * width
                for i in combo:
                    exps[i - 1] += 1
                single.add_term(_vector_mono(d, exps), 1)
            prod = prod * single
        return prod
    if letter == "s":
        # Sum of x^content over semistandard tableaux with entries <= width.
        shape = parts
        rows: list[list[int]] = [[0] * r for r in shape]
        total = sum(shape)

        def fill(pos: int) -> Iterator[tuple[int, ...]]:
            if pos == total:
                content = [0] * width
                for row in rows:
                    for v in row:
                        content[v - 1] += 1
                yield tuple(content)
                return
            i, p = 0, pos
            while p >= shape[i]:
                p -= shape[i]
                i += 1
            j = p
            lo = rows[i][j - 1] if j else 1
            for v in range(max(lo, 1), width + 1):
                if i and rows[i - 1][j] >= v:
                    continue
                rows[i][j] = v
                yield from fill(pos + 1)
            rows[i][j] = 0

        for content in fill(0):
            out.add_term(_vector_mono(d, content), 1)
        return out
    raise ValueError(f"unknown classical basis letter {letter!r}")


def _graded_variables(max_degree: int, width: int) -> list[tuple[int, int]]:
    return [(d, i) for d in range(1, max_degree + 1) for i in range(1, width + 1)]


@cache
def _all_monomials_poly(d: int, width: int, square_free: bool, signed: bool) -> TruncatedPoly:
    """H_d (all monomials of degree d), E+_d (square-free), or E_d (signed)."""
    out = TruncatedPoly(d, width)
    variables = _graded_variables(d, width)

    def walk(idx: int, remaining: int, mono: list[tuple[tuple[int, int], int]]):
        if remaining == 0:
            sign = -1 if signed and sum(e for _, e in mono) % 2 else 1
            out.add_term(tuple(mono), sign)
            return
        if idx == len(variables):
            return
        var = variables[idx]
        max_e = 1 if square_free else remaining // var[0]
        for e in range(max_e, -1, -1):
            if e * var[0] <= remaining:
                if e:
                    mono.append((var, e))
                walk(idx + 1, remaining - e * var[0], mono)
                if e:
                    mono.pop()

    walk(0, d, [])
    return out


@cache
def generate_block(family: str, d: int, m: int, n: int, width: int) -> TruncatedPoly:
    """One generator block, from its defining formula, then x -> x^m."""
    _check_width(n, width)
    if family == "P":
        base = TruncatedPoly(d, width)
        for k in range(1, d + 1):
            if d % k == 0:
                for i in range(1, width + 1):
                    base.add_term((((k, i), d // k),), k)
    elif family == "H":
        base = _all_monomials_poly(d, width, square_free=False, signed=False)
    elif family == "E+":
        base = _all_monomials_poly(d, width, square_free=True, signed=False)
    elif family == "E":
        base = _all_monomials_poly(d, width, square_free=True, signed=True)
    else:
        raise ValueError(f"unknown family {family!r}")
    return base.substitute_power(m, cap=n)


def generate_pure(basis: str, t: SplitType, n: int, width: int) -> TruncatedPoly:
    """A pure tensor basis element: the product of classical pieces per degree."""
    _check_width(n, width)
    letter = pure_letter(basis)
    out = TruncatedPoly.one(n, width)
    for d, parts in t.restrictions().items():
        out = out * _classical_poly(letter, parts, d, n, width)
    return out


def generate_family(family: str, t: SplitType, n: int, width: int) -> TruncatedPoly:
    """A non-pure basis element: the product of its blocks."""
    _check_width(n, width)
    out = TruncatedPoly.one(n, width)
    for b in t.blocks:
        out = out * generate_block(family, b.degree, b.multiplicity, n, width)
    return out


def generate(basis: str, t: SplitType, n: int, width: int | None = None) -> TruncatedPoly:
    width = n if width is None else width
    if basis in PURE_BASES:
        return generate_pure(basis, t, n, width)
    if basis in FAMILY_BASES:
        return generate_family(basis, t, n, width)
    raise ValueError(f"unknown basis {basis!r}")


def _leading_monomial(t: SplitType) -> Monomial:
    pieces = []
    for d, parts in t.restrictions().items():
        pieces.extend(((d, i + 1), p) for i, p in enumerate(parts))
    return tuple(sorted(pieces))


def _spot_check_symmetry(poly: TruncatedPoly) -> None:
    # Swapping variable indexes 1 and 2 within each degree must fix the poly.
    if poly.width < 2:
        return
    swap = {1: 2, 2: 1}
    for mono, coeff in list(poly.terms.items())[:8]:
        permuted = tuple(sorted(((d, swap.get(i, i)), e) for (d, i), e in mono))
        if poly.terms.get(permuted, 0) != coeff:
            raise ValueError("polynomial is not symmetric per degree; cannot extract m* coefficients")


def extract_m_tensor(poly: TruncatedPoly, n: int) -> PolyExpr:
    """Read the m*-expansion of a degree-n poly off its leading monomials."""
    _check_width(n, poly.width)
    _spot_check_symmetry(poly)
    out = PolyExpr.zero("m*")
    for t in enumerate_types(n):
        c = poly.terms.get(_leading_monomial(t), 0)
        if c:
            out.add_term(t, Fraction(c))
    return out


@cache
def _monomial_matrix(basis: str, n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Columns: m*-expansions of all basis elements of weight n."""
    labels = enumerate_types(n)
    cols = []
    for t in labels:
        expr = extract_m_tensor(generate(basis, t, n), n)
        cols.append([expr.coefficient(tau) for tau in labels])
    return tuple(tuple(cols[j][i] for j in range(len(labels))) for i in range(len(labels)))


@cache
def oracle_transition(source: str, target: str, n: int) -> PolyMatrix:
    """M(source, target) at weight n, by expansion and exact linear solve."""
    labels = enumerate_types(n)
    a = [list(r) for r in _monomial_matrix(source, n)]
    if target == "m*":
        grid = a
    else:
        b = [list(r) for r in _monomial_matrix(target, n)]
        grid = linalg.mat_mul(linalg.mat_inverse(b), a)
    return PolyMatrix(n, labels, tuple(tuple(r) for r in grid))


def oracle_expand(expr: PolyExpr, target: str, n: int | None = None) -> PolyExpr:
    """Change of basis computed entirely inside the oracle."""
    n = expr.weight() if n is None else n
    matrix = oracle_transition(expr.basis, target, n)
    return PolyExpr(target, matrix.apply(expr.terms))


@dataclass(frozen=True)
class Mismatch:
    family: str
    target: str
    row: SplitType
    col: SplitType
    rules_value: Fraction
    oracle_value: Fraction


@dataclass(frozen=True)
class CrossCheckReport:
    weight: int
    families_checked: tuple[tuple[str, str], ...]
    mismatches: tuple[Mismatch, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        total = len(self.families_checked)
        good = total - len({(m.family, m.target) for m in self.mismatches})
        lines = [f"weight {self.weight}: {good}/{total} matrix families match"]
        for m in self.mismatches:
            lines.append(
                f"  mismatch {m.family}->{m.target} at row {m.row} col {m.col}: "
                f"rules {m.rules_value} vs oracle {m.oracle_value}")
        return "\n".join(lines)


def cross_check(n: int) -> CrossCheckReport:
    """Compare every combinatorial transition matrix against the oracle."""
    from . import monomial_rules, power_rules, schur_rules

    rule_engines = {"s*": schur_rules.transition_to_s,
                    "p*": power_rules.transition_to_p,
                    "m*": monomial_rules.transition_to_m}
    labels = enumerate_types(n)
    pairs = []
    mismatches = []
    for family in FAMILY_BASES:
        for target, engine in rule_engines.items():
            pairs.append((family, target))
            rules = engine(family, n)
            oracle = oracle_transition(family, target, n)
            for tau in labels:
                for sigma in labels:
                    rv, ov = rules.get(tau, sigma), oracle.get(tau, sigma)
                    if rv != ov:
                        mismatches.append(Mismatch(family, target, tau, sigma, rv, ov))
    return CrossCheckReport(n, tuple(pairs), tuple(mismatches))
