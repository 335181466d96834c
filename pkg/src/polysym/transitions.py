"""Transition matrices between any two polysymmetric bases, and conversion.

Direct matrices exist between every pair of pure tensor bases (products of
classical entries) and from each generating family into s*, p*, and m*
(the combinatorial rules).  Everything else is reached by composing along
a shortest path in that graph, inverting edges as needed.
"""

from __future__ import annotations

from collections import deque
from functools import cache

from .core import (
    FAMILY_BASES,
    POLY_BASES,
    PURE_BASES,
    PolyExpr,
    PolyMatrix,
    identity_matrix,
    pure_letter,
    tensor_transition,
)
from .monomial_rules import transition_to_m
from .power_rules import transition_to_p
from .schur_rules import transition_to_s

_RULE_TARGETS = {"s*": transition_to_s, "p*": transition_to_p, "m*": transition_to_m}


def _direct(source: str, target: str, n: int) -> PolyMatrix | None:
    if source in PURE_BASES and target in PURE_BASES:
        return tensor_transition(pure_letter(source), pure_letter(target), n)
    if source in FAMILY_BASES and target in _RULE_TARGETS:
        return _RULE_TARGETS[target](source, n)
    return None


def _path(source: str, target: str) -> list[str]:
    seen = {source: [source]}
    queue = deque([source])
    while queue:
        cur = queue.popleft()
        if cur == target:
            return seen[cur]
        for nxt in _edges_from(cur):
            if nxt not in seen:
                seen[nxt] = seen[cur] + [nxt]
                queue.append(nxt)
    raise ValueError(f"no conversion path from {source!r} to {target!r}")


def _edges_from(basis: str) -> list[str]:
    out = []
    for other in POLY_BASES:
        if other == basis:
            continue
        # An edge exists when a direct matrix is available either way.
        if (basis in PURE_BASES and other in PURE_BASES) or \
           (basis in FAMILY_BASES and other in _RULE_TARGETS) or \
           (other in FAMILY_BASES and basis in _RULE_TARGETS):
            out.append(other)
    return out


@cache
def transition_matrix(source: str, target: str, n: int) -> PolyMatrix:
    """M(source, target) at weight n for any two of the nine bases."""
    for b in (source, target):
        if b not in POLY_BASES:
            raise ValueError(f"unknown polysymmetric basis {b!r}")
    if source == target:
        return identity_matrix(n)
    direct = _direct(source, target, n)
    if direct is not None:
        return direct
    path = _path(source, target)
    out = identity_matrix(n)
    for a, b in zip(path, path[1:]):
        step = _direct(a, b, n)
        if step is None:
            step = _direct(b, a, n).inverse()
        out = step @ out
    return out


def convert(expr: PolyExpr, target: str, n: int | None = None) -> PolyExpr:
    """Exact change of basis for a homogeneous expression."""
    n = expr.weight() if n is None else n
    if expr.basis == target:
        return PolyExpr(target, dict(expr.terms))
    matrix = transition_matrix(expr.basis, target, n)
    return PolyExpr(target, matrix.apply(expr.terms))
