"""Command-line interface.

Verbs:

    expand     expand an expression in a target basis
    multiply   multiply expressions and expand the product
    matrix     emit a transition matrix (classical or polysymmetric)
    enumerate  stream combinatorial objects (partitions, types, ribbons,
               polyribbons, tableaux, tabloids)
    check      cross-check the rule engines against the brute-force oracle

Exit codes: 0 success, 1 mathematical/domain error, 2 usage error,
3 engine mismatch during verification.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import monomial_rules, oracle, power_rules, schur_rules, serialize, transitions
from .classical import CLASSICAL_BASES, ClassicalMatrix, classical_transition
from .core import FAMILY_BASES, PolyExpr, PolyMatrix, multiply_p_tensor
from .foundations import EMPTY_TYPE, SplitType, enumerate_partitions, enumerate_types
from .shapes import add_polyribbons, add_ribbons

_BASIS_ALIASES = {
    "m-tensor": "m*", "h-tensor": "h*", "e-tensor": "e*", "p-tensor": "p*",
    "s-tensor": "s*", "m*": "m*", "h*": "h*", "e*": "e*", "p*": "p*", "s*": "s*",
    "P": "P", "H": "H", "E+": "E+", "Eplus": "E+", "E-plus": "E+", "E": "E",
    "m": "m", "h": "h", "e": "e", "p": "p", "s": "s",
}


def _parse_basis(name: str) -> str:
    if name not in _BASIS_ALIASES:
        raise ValueError(f"unknown basis {name!r}; choose from {sorted(set(_BASIS_ALIASES))}")
    return _BASIS_ALIASES[name]


_FACTOR = re.compile(r"\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(m\*|h\*|e\*|p\*|s\*|E\+|[mhepsPHE])\[([^\]]*)\]")


def parse_factors(text: str) -> tuple[Fraction, list[tuple[str, tuple]]]:
    """Parse a product like "2 H[3^2 3^2] P[2^1]" into (coefficient, factors).

    Each factor is (basis tag, block sequence); pure tensor factors use the
    canonicalized type, family factors keep the written block order.
    """
    coeff = Fraction(1)
    factors = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _FACTOR.match(text, pos)
        if m is None:
            raise ValueError(f"cannot parse expression at ...{text[pos:]!r}")
        if m.group(1):
            coeff *= Fraction(m.group(1))
        tag = m.group(2)
        basis = {"m": "m*", "h": "h*", "e": "e*", "p": "p*", "s": "s*"}.get(tag, tag)
        blocks = serialize.parse_block_sequence(m.group(3))
        factors.append((basis, blocks))
        pos = m.end()
    if not factors:
        raise ValueError(f"no basis factors found in {text!r}")
    return coeff, factors


def _factor_to_p(basis: str, blocks) -> PolyExpr:
    if basis in FAMILY_BASES:
        return power_rules.multiply_blocks(PolyExpr.one("p*"), basis, blocks)
    t = SplitType.from_blocks(blocks)
    return transitions.convert(PolyExpr.term(basis, t), "p*")


def _expand_product(text_parts: list[str], target: str, engine: str) -> tuple[PolyExpr, PolyExpr | None]:
    """Expand a product in the target basis; returns (rules result, oracle result)."""
    coeff = Fraction(1)
    factors = []
    for text in text_parts:
        c, fs = parse_factors(text)
        coeff *= c
        factors.extend(fs)
    rules_result = oracle_result = None
    if engine in ("rules", "both"):
        prod = multiply_p_tensor([_factor_to_p(b, blocks) for b, blocks in factors])
        rules_result = transitions.convert(prod, target).scale(coeff)
    if engine in ("oracle", "both"):
        n = sum(b.weight for _, blocks in factors for b in blocks)
        poly = oracle.TruncatedPoly.one(n, n)
        for basis, blocks in factors:
            if basis in FAMILY_BASES:
                for blk in blocks:
                    poly = poly * oracle.generate_block(basis, blk.degree, blk.multiplicity, n, n)
            else:
                poly = poly * oracle.generate_pure(basis, SplitType.from_blocks(blocks), n, n)
        m_expr = oracle.extract_m_tensor(poly, n)
        if target == "m*":
            oracle_result = m_expr.scale(coeff)
        else:
            oracle_result = oracle.oracle_expand(m_expr, target, n).scale(coeff)
    return rules_result, oracle_result


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_expand(args) -> int:
    target = _parse_basis(args.basis)
    if target in CLASSICAL_BASES:
        raise ValueError("expand targets a polysymmetric basis; classical bases appear via matrix")
    rules_result, oracle_result = _expand_product([args.expression], target, args.engine)
    if args.engine == "both" and rules_result != oracle_result:
        sys.stderr.write("engine mismatch:\n  rules:  %s\n  oracle: %s\n" % (
            serialize.render_poly_expr(rules_result), serialize.render_poly_expr(oracle_result)))
        return 3
    result = rules_result if rules_result is not None else oracle_result
    if args.format == "json":
        _emit(json.dumps(serialize.poly_expr_to_json(result), indent=2) + "\n", args.out)
    else:
        _emit(serialize.render_poly_expr(result) + "\n", args.out)
    return 0


def _cmd_multiply(args) -> int:
    target = _parse_basis(args.basis)
    if target in CLASSICAL_BASES:
        raise ValueError("multiply targets a polysymmetric basis")
    rules_result, oracle_result = _expand_product(args.expressions, target, args.engine)
    if args.engine == "both" and rules_result != oracle_result:
        sys.stderr.write("engine mismatch between rules and oracle\n")
        return 3
    result = rules_result if rules_result is not None else oracle_result
    if args.format == "json":
        _emit(json.dumps(serialize.poly_expr_to_json(result), indent=2) + "\n", args.out)
    else:
        _emit(serialize.render_poly_expr(result) + "\n", args.out)
    return 0


def _classical_matrix_to_poly_format(mat: ClassicalMatrix, fmt: str) -> str:
    labels = [",".join(str(x) for x in p) if p else "-" for p in mat.labels]
    if fmt == "json":
        return json.dumps({
            "weight": mat.weight,
            "order": [list(p) for p in mat.labels],
            "entries": [[c.numerator, c.denominator] for row in mat.entries for c in row],
        }, indent=2) + "\n"
    if fmt == "csv":
        lines = ["," + ",".join(f'"{x}"' for x in labels)]
        for lab, row in zip(labels, mat.entries):
            lines.append(f'"{lab}",' + ",".join(serialize.render_fraction(c) for c in row))
        return "\n".join(lines) + "\n"
    if fmt == "latex":
        cols = "c|" + "c" * len(labels)
        lines = [f"\\begin{{array}}{{{cols}}}",
                 " & " + " & ".join(f"({x})" for x in labels) + " \\\\ \\hline"]
        for lab, row in zip(labels, mat.entries):
            lines.append(f"({lab}) & " + " & ".join(
                serialize.render_fraction(c, latex=True) for c in row) + " \\\\")
        lines.append("\\end{array}")
        return "\n".join(lines) + "\n"
    header = [""] + labels
    rows = [header] + [[lab] + [serialize.render_fraction(c) for c in row]
                       for lab, row in zip(labels, mat.entries)]
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in rows) + "\n"


def _poly_matrix_text(matrix: PolyMatrix, fmt: str, order) -> str:
    if fmt == "json":
        return json.dumps(serialize.matrix_to_json(matrix, order), indent=2) + "\n"
    if fmt == "csv":
        return serialize.matrix_to_csv(matrix, order)
    if fmt == "latex":
        return serialize.matrix_to_latex(matrix, order)
    return serialize.matrix_to_text(matrix, order)


def _cmd_matrix(args) -> int:
    src = _parse_basis(args.source)
    dst = _parse_basis(args.target)
    n = args.weight
    if n < 0:
        raise ValueError("weight must be nonnegative")
    classical = src in CLASSICAL_BASES and dst in CLASSICAL_BASES
    if (src in CLASSICAL_BASES) != (dst in CLASSICAL_BASES):
        raise ValueError("cannot mix classical and polysymmetric bases in one matrix")
    if classical:
        mat = classical_transition(src, dst, n)
        _emit(_classical_matrix_to_poly_format(mat, args.format), args.out)
        return 0
    matrices: dict[str, PolyMatrix] = {}
    if args.engine in ("rules", "both"):
        matrices["rules"] = transitions.transition_matrix(src, dst, n)
    if args.engine in ("oracle", "both"):
        matrices["oracle"] = oracle.oracle_transition(src, dst, n)
    if args.engine == "both" and matrices["rules"].entries != matrices["oracle"].entries:
        sys.stderr.write(f"engine mismatch for M({src},{dst}) at weight {n}\n")
        return 3
    matrix = matrices.get("rules", matrices.get("oracle"))
    order = serialize.read_order_file(args.order_file, n) if args.order_file else None
    _emit(_poly_matrix_text(matrix, args.format, order), args.out)
    return 0


def _emit_objects(objects, to_json, to_text, args) -> int:
    if args.format == "json":
        text = "".join(json.dumps(to_json(o)) + "\n" for o in objects)
    else:
        text = "".join(to_text(o) for o in objects)
    _emit(text, args.out)
    return 0


def _cmd_enumerate(args) -> int:
    fam = args.family
    fmt_json = args.format == "json"
    if fam in ("partitions", "types"):
        if args.weight is None:
            raise ValueError(f"--weight is required for {fam}")
        if fam == "partitions":
            items = enumerate_partitions(args.weight)
            text = "".join((json.dumps(list(p)) if fmt_json else serialize.render_partition(p)) + "\n"
                           for p in items)
        else:
            items = enumerate_types(args.weight)
            text = "".join((json.dumps(serialize.type_to_json(t)) if fmt_json else str(t)) + "\n"
                           for t in items)
        _emit(text, args.out)
        return 0

    if fam == "ribbons":
        mu = serialize.parse_partition(args.partition or "-")
        if args.size is None:
            raise ValueError("--size is required for ribbons")
        steps = add_ribbons(mu, args.size)
        text = "".join(
            (json.dumps({"result": list(s.result), "sign": s.sign}) if fmt_json
             else f"{serialize.render_partition(s.result)}  sign {s.sign:+d}") + "\n"
            for s in steps)
        _emit(text, args.out)
        return 0

    if fam in ("polyribbons", "dual-polyribbons"):
        mu = serialize.parse_partition(args.partition or "-")
        if args.ribbon is None or args.count is None:
            raise ValueError("--ribbon and --count are required for polyribbons")
        results = add_polyribbons(mu, args.ribbon, args.count, dual=fam.startswith("dual"))
        text = "".join(
            (json.dumps({"result": list(shape), "sign": sign}) if fmt_json
             else f"{serialize.render_partition(shape)}  sign {sign:+d}") + "\n"
            for shape, sign in results)
        _emit(text, args.out)
        return 0

    shape = serialize.parse_type(args.shape) if args.shape else EMPTY_TYPE
    inner = serialize.parse_type(args.inner) if args.inner else EMPTY_TYPE
    content = serialize.parse_block_sequence(args.content) if args.content else ()
    if fam == "ribbon-tableaux":
        objs = schur_rules.ribbon_tableaux(shape, inner, content)
        return _emit_objects(objs, serialize.tensor_tableau_to_json,
                             lambda t: serialize.ascii_tensor_diagram(t) +
                             f"\nsign {t.sign:+d}  weight {t.weight}\n\n", args)
    if fam in ("polyribbon-tableaux", "dual-polyribbon-tableaux"):
        objs = schur_rules.polyribbon_tableaux(shape, inner, content, dual=fam.startswith("dual"))
        return _emit_objects(objs, serialize.tensor_tableau_to_json,
                             lambda t: serialize.ascii_tensor_diagram(t) +
                             f"\nsign {t.sign:+d}\n\n", args)
    if fam in ("constant-row-p", "constant-row-h"):
        enum = (power_rules.constant_row_p_tableaux if fam.endswith("p")
                else power_rules.constant_row_h_tableaux)
        objs = enum(shape, inner, content)
        return _emit_objects(objs, serialize.constant_row_tableau_to_json,
                             lambda t: json.dumps(serialize.constant_row_tableau_to_json(t)) + "\n",
                             args)
    if fam in ("bricks-p", "bricks-h", "bricks-e"):
        objs = monomial_rules.tensor_brick_tabloids(shape, inner, content, fam[-1].upper())
        return _emit_objects(objs, serialize.brick_tabloid_to_json,
                             lambda t: json.dumps(serialize.brick_tabloid_to_json(t)) + "\n", args)
    raise ValueError(f"unknown enumeration family {fam!r}")


def _cmd_check(args) -> int:
    worst = 0
    for n in range(args.weight + 1) if args.up_to else [args.weight]:
        report = oracle.cross_check(n)
        sys.stdout.write(report.summary() + "\n")
        if not report.ok:
            worst = 3
    return worst


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polysym",
        description="Exact computations in the ring of polysymmetric functions.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json", "csv", "latex"), default="text")
        p.add_argument("--engine", choices=("rules", "oracle", "both"), default="rules")
        p.add_argument("--out", metavar="PATH", default=None)

    p = sub.add_parser("expand", help="expand an expression in a target basis")
    p.add_argument("expression", help='e.g. "P[2^3]" or "H[3^2 3^2]"')
    p.add_argument("--basis", required=True, help="target basis, e.g. p-tensor")
    common(p)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("multiply", help="multiply expressions and expand the product")
    p.add_argument("expressions", nargs="+")
    p.add_argument("--basis", required=True)
    common(p)
    p.set_defaults(func=_cmd_multiply)

    p = sub.add_parser("matrix", help="emit a transition matrix")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--order-file", dest="order_file", default=None,
                   help="file with one type label per line fixing row/column order")
    common(p)
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("enumerate", help="stream combinatorial objects")
    p.add_argument("--family", required=True, choices=(
        "partitions", "types", "ribbons", "polyribbons", "dual-polyribbons",
        "ribbon-tableaux", "polyribbon-tableaux", "dual-polyribbon-tableaux",
        "constant-row-p", "constant-row-h", "bricks-p", "bricks-h", "bricks-e"))
    p.add_argument("--weight", type=int, default=None)
    p.add_argument("--partition", default=None)
    p.add_argument("--size", type=int, default=None, help="ribbon size k")
    p.add_argument("--ribbon", type=int, default=None, help="ribbon size r of a polyribbon")
    p.add_argument("--count", type=int, default=None, help="ribbon count n of a polyribbon")
    p.add_argument("--shape", default=None)
    p.add_argument("--inner", default=None)
    p.add_argument("--content", default=None, help='ordered blocks, e.g. "4^2 3^2 6^1"')
    common(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("check", help="cross-check rule engines against the oracle")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--up-to", action="store_true", help="check every weight from 0 up")
    p.set_defaults(func=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
