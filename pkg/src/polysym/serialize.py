"""Parsing and rendering: type literals, expressions, matrices, tableaux.

Type literals follow the grammar

    type       := blockgroup+
    blockgroup := INT '^' '{' INT (',' INT)* '}'  |  INT '^' INT

so "1^{3,1}2^{2}" and "3^{2,1} 2^{2,2,1} 1^4" both parse; "-" is the empty
type.  Rationals render as "a/b" in text and CSV, as "\\frac{a}{b}" in
LaTeX, and as num/den integer pairs in JSON.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from .classical import SymExpr
from .core import PolyExpr, PolyMatrix
from .foundations import (
    BlockSequence,
    Partition,
    SplitType,
    block_sequence,
    check_partition,
)

_GROUP = re.compile(r"\s*(\d+)\^(?:\{([\d\s,]+)\}|(\d+))")


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "-", "()"):
        return ()
    text = text.strip("()[]")
    parts = [int(x) for x in re.split(r"[,\s]+", text.strip()) if x]
    return check_partition(sorted(parts, reverse=True))


def render_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p) if p else "-"


def _parse_groups(text: str) -> list[tuple[int, list[int]]]:
    groups = []
    pos = 0
    stripped = text.strip()
    if stripped in ("", "-"):
        return []
    while pos < len(stripped):
        m = _GROUP.match(stripped, pos)
        if m is None:
            raise ValueError(f"cannot parse type literal at ...{stripped[pos:]!r}")
        degree = int(m.group(1))
        if m.group(2) is not None:
            mults = [int(x) for x in re.split(r"[,\s]+", m.group(2).strip()) if x]
        else:
            mults = [int(m.group(3))]
        groups.append((degree, mults))
        pos = m.end()
    if stripped[pos:].strip():
        raise ValueError(f"trailing junk in type literal: {stripped[pos:]!r}")
    return groups


def parse_type(text: str) -> SplitType:
    """Parse a type literal into its canonical splitting type."""
    blocks = []
    for degree, mults in _parse_groups(text):
        blocks.extend((degree, m) for m in mults)
    return SplitType.from_blocks(blocks)


def parse_block_sequence(text: str) -> BlockSequence:
    """Parse an ordered block sequence; groups expand in written order."""
    blocks = []
    for degree, mults in _parse_groups(text):
        blocks.extend((degree, m) for m in mults)
    return block_sequence(blocks)


def render_type(t: SplitType) -> str:
    return str(t)


def render_blocks(blocks: BlockSequence) -> str:
    return " ".join(str(b) for b in blocks) if blocks else "-"


# ---------------------------------------------------------------------------
# Rationals and expressions.
# ---------------------------------------------------------------------------


def render_fraction(c: Fraction, latex: bool = False) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    if latex:
        sign = "-" if c < 0 else ""
        return f"{sign}\\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"
    return f"{c.numerator}/{c.denominator}"


_BASIS_SYMBOL = {"m*": "m", "h*": "h", "e*": "e", "p*": "p", "s*": "s",
                 "P": "P", "H": "H", "E+": "E+", "E": "E"}


def render_poly_expr(expr: PolyExpr) -> str:
    """Human-readable expansion, terms in ascending type order."""
    if not expr.terms:
        return "0"
    symbol = _BASIS_SYMBOL[expr.basis]
    pieces = []
    for t in sorted(expr.terms, key=lambda t: t.blocks):
        c = expr.terms[t]
        mag = abs(c)
        coeff = "" if mag == 1 else render_fraction(mag) + " "
        body = f"{coeff}{symbol}[{t}]"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


# ---------------------------------------------------------------------------
# JSON forms.
# ---------------------------------------------------------------------------


def type_to_json(t: SplitType) -> list[list[int]]:
    return [[b.degree, b.multiplicity] for b in t.blocks]


def type_from_json(data: Iterable[Sequence[int]]) -> SplitType:
    return SplitType.from_blocks((d, m) for d, m in data)


def sym_expr_to_json(expr: SymExpr) -> dict:
    return {
        "basis": expr.basis,
        "terms": [
            {"partition": list(p), "num": c.numerator, "den": c.denominator}
            for p, c in sorted(expr.terms.items(), reverse=True)
        ],
    }


def sym_expr_from_json(data: dict) -> SymExpr:
    terms = {}
    for term in data["terms"]:
        terms[check_partition(term["partition"])] = Fraction(term["num"], term["den"])
    return SymExpr(data["basis"], terms)


def poly_expr_to_json(expr: PolyExpr) -> dict:
    return {
        "basis": expr.basis,
        "terms": [
            {"type": type_to_json(t), "num": c.numerator, "den": c.denominator}
            for t, c in sorted(expr.terms.items(), key=lambda tc: tc[0].blocks, reverse=True)
        ],
    }


def poly_expr_from_json(data: dict) -> PolyExpr:
    terms = {}
    for term in data["terms"]:
        terms[type_from_json(term["type"])] = Fraction(term["num"], term["den"])
    return PolyExpr(data["basis"], terms)


def matrix_to_json(matrix: PolyMatrix, order: Sequence[SplitType] | None = None) -> dict:
    order = list(matrix.labels) if order is None else list(order)
    entries = []
    for row in order:
        for col in order:
            c = matrix.get(row, col)
            entries.append([c.numerator, c.denominator])
    return {
        "weight": matrix.weight,
        "order": [type_to_json(t) for t in order],
        "entries": entries,
    }


def matrix_to_csv(matrix: PolyMatrix, order: Sequence[SplitType] | None = None) -> str:
    order = list(matrix.labels) if order is None else list(order)
    lines = ["," + ",".join(str(t) for t in order)]
    for row in order:
        cells = [render_fraction(matrix.get(row, col)) for col in order]
        lines.append(str(row) + "," + ",".join(cells))
    return "\n".join(lines) + "\n"


def matrix_to_text(matrix: PolyMatrix, order: Sequence[SplitType] | None = None) -> str:
    order = list(matrix.labels) if order is None else list(order)
    header = [""] + [str(t) for t in order]
    rows = [header]
    for row in order:
        rows.append([str(row)] + [render_fraction(matrix.get(row, col)) for col in order])
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    out = []
    for r in rows:
        out.append("  ".join(cell.rjust(w) for cell, w in zip(r, widths)))
    return "\n".join(out) + "\n"


def _latex_label(t: SplitType) -> str:
    if not t.blocks:
        return "\\varnothing"
    pieces = []
    for d, parts in t.restrictions().items():
        body = ",".join(str(m) for m in parts)
        pieces.append(f"{d}^{{{body}}}")
    return "".join(pieces)


def matrix_to_latex(matrix: PolyMatrix, order: Sequence[SplitType] | None = None) -> str:
    """Bordered array in the style of a labelled transition matrix."""
    order = list(matrix.labels) if order is None else list(order)
    cols = "c|" + "c" * len(order)
    lines = [f"\\begin{{array}}{{{cols}}}", " & " + " & ".join(_latex_label(t) for t in order) + " \\\\ \\hline"]
    for row in order:
        cells = [render_fraction(matrix.get(row, col), latex=True) for col in order]
        lines.append(_latex_label(row) + " & " + " & ".join(cells) + " \\\\")
    lines.append("\\end{array}")
    return "\n".join(lines) + "\n"


def read_order_file(path: str, weight: int) -> list[SplitType]:
    from .foundations import enumerate_types

    with open(path, "r", encoding="utf-8") as fh:
        order = [parse_type(line) for line in fh if line.strip()]
    expected = set(enumerate_types(weight))
    if set(order) != expected or len(order) != len(expected):
        raise ValueError(f"order file must list every type of weight {weight} exactly once")
    return order


# ---------------------------------------------------------------------------
# Tableau and tabloid serialization.
# ---------------------------------------------------------------------------


def tensor_tableau_to_json(t) -> dict:
    out = {
        "family": t.family,
        "shape": type_to_json(t.shape),
        "inner": type_to_json(t.inner),
        "content": [[b.degree, b.multiplicity] for b in t.content],
        "chain": [type_to_json(s) for s in t.chain],
        "sign": t.sign,
        "weight": t.weight,
    }
    if t.positions is not None:
        out["positions"] = list(t.positions)
    if t.step_partitions is not None:
        out["step_partitions"] = [list(p) for p in t.step_partitions]
    if t.sign_minus is not None:
        out["sign_minus"] = t.sign_minus
    return out


def constant_row_tableau_to_json(t) -> dict:
    out = {
        "family": t.family,
        "shape": type_to_json(t.shape),
        "inner": type_to_json(t.inner),
        "content": [[b.degree, b.multiplicity] for b in t.content],
        "weight": [t.weight.numerator, t.weight.denominator],
        "row_labels": {str(k): list(v) for k, v in sorted(t.row_labels().items())},
    }
    if t.step_divisors is not None:
        out["divisors"] = list(t.step_divisors)
    if t.step_types is not None:
        out["step_types"] = [type_to_json(s) for s in t.step_types]
        out["sign_plus"] = t.sign_plus
        out["sign_minus"] = t.sign_minus
    return out


def brick_tabloid_to_json(t) -> dict:
    return {
        "family": t.family,
        "shape": type_to_json(t.shape),
        "inner": type_to_json(t.inner),
        "content": [[b.degree, b.multiplicity] for b in t.content],
        "components": [
            {"degree": d, "rows": [[[label, length] for label, length in row] for row in rows]}
            for d, rows in t.components
        ],
        "weight": t.weight,
        "sign": t.sign,
    }


def tableau_cells(t) -> dict[int, list[list[int]]]:
    """Cell labels of a chain tableau: label i fills the cells step i added."""
    labels: dict[int, list[list[int]]] = {}
    for d, parts in t.shape.restrictions().items():
        labels[d] = [[0] * p for p in parts]
    for step, (before, after) in enumerate(zip(t.chain, t.chain[1:]), start=1):
        for d in after.degrees():
            prev = before.restriction(d)
            cur = after.restriction(d)
            for i, row_len in enumerate(cur):
                lo = prev[i] if i < len(prev) else 0
                for j in range(lo, row_len):
                    labels[d][i][j] = step
    return labels


def ascii_tensor_diagram(t) -> str:
    """One-line-per-row ASCII drawing of a chain tableau, components joined by (x)."""
    cells = tableau_cells(t)
    blocks = []
    for d in sorted(cells):
        rows = cells[d]
        grid = [f"deg {d}:"]
        grid.extend(" ".join("." if v == 0 else str(v) for v in row) for row in rows)
        blocks.append("\n".join(grid))
    return "\n(x)\n".join(blocks)
