import json
from fractions import Fraction

import pytest

from polysym.core import PolyExpr
from polysym.foundations import EMPTY_TYPE, enumerate_types
from polysym.power_rules import block_in_p, constant_row_h_tableaux
from polysym.schur_rules import polyribbon_tableaux, ribbon_tableaux
from polysym.monomial_rules import tensor_brick_tabloids
from polysym.serialize import (
    ascii_tensor_diagram,
    brick_tabloid_to_json,
    constant_row_tableau_to_json,
    matrix_to_csv,
    matrix_to_json,
    matrix_to_latex,
    matrix_to_text,
    parse_block_sequence,
    parse_partition,
    parse_type,
    poly_expr_from_json,
    poly_expr_to_json,
    render_fraction,
    render_poly_expr,
    tableau_cells,
    tensor_tableau_to_json,
)
from polysym.transitions import transition_matrix


class TestTypeLiterals:
    def test_braced_groups(self):
        t = parse_type("1^{3,1}2^{2}")
        assert t.restriction(1) == (3, 1)
        assert t.restriction(2) == (2,)

    def test_worked_literal(self):
        t = parse_type("3^{2,1}2^{2,2,1}1^{4}")
        assert t.restriction(3) == (2, 1)
        assert t.restriction(2) == (2, 2, 1)
        assert t.restriction(1) == (4,)

    def test_zero_multiplicity_rejected(self):
        with pytest.raises(ValueError):
            parse_type("1^0")

    def test_garbage_rejected(self):
        with pytest.raises(ValueError):
            parse_type("2^11^2")
        with pytest.raises(ValueError):
            parse_type("cat")

    def test_round_trip_small_weights(self):
        for n in range(6):
            for t in enumerate_types(n):
                assert parse_type(str(t)) == t

    def test_empty(self):
        assert parse_type("-") == EMPTY_TYPE
        assert str(EMPTY_TYPE) == "-"

    def test_block_sequence_preserves_order(self):
        seq = parse_block_sequence("2^2 4^1 2^2")
        assert [(b.degree, b.multiplicity) for b in seq] == [(2, 2), (4, 1), (2, 2)]

    def test_partition_literals(self):
        assert parse_partition("3,2") == (3, 2)
        assert parse_partition("2 3 1") == (3, 2, 1)
        assert parse_partition("-") == ()


class TestRendering:
    def test_fraction_forms(self):
        assert render_fraction(Fraction(3)) == "3"
        assert render_fraction(Fraction(1, 2)) == "1/2"
        assert render_fraction(Fraction(-1, 24), latex=True) == "-\\frac{1}{24}"

    def test_expr_rendering(self):
        assert render_poly_expr(block_in_p("P", 2, 3)) == "p[1^6] + 2 p[2^3]"
        assert render_poly_expr(PolyExpr.zero("s*")) == "0"

    def test_expr_with_fractions_and_signs(self):
        s = render_poly_expr(block_in_p("E", 2, 3))
        assert s == "1/2 p[1^{3,3}] - 1/2 p[1^6] - p[2^3]"


class TestMatrixEmitters:
    def test_json_shape(self):
        mat = transition_matrix("P", "p*", 2)
        data = matrix_to_json(mat)
        assert data["weight"] == 2
        assert len(data["order"]) == 3
        assert len(data["entries"]) == 9
        assert all(isinstance(e, list) and len(e) == 2 for e in data["entries"])

    def test_csv_and_text_contain_labels(self):
        mat = transition_matrix("H", "p*", 2)
        csv = matrix_to_csv(mat)
        txt = matrix_to_text(mat)
        for label in ("2^1", "1^2", "1^{1,1}"):
            assert label in csv and label in txt
        assert "1/2" in csv

    def test_latex_layout(self):
        mat = transition_matrix("H", "p*", 2)
        tex = matrix_to_latex(mat)
        assert tex.startswith("\\begin{array}")
        assert "\\frac{1}{2}" in tex
        assert "\\hline" in tex

    def test_custom_order(self):
        mat = transition_matrix("P", "p*", 2)
        order = list(reversed(mat.labels))
        data = matrix_to_json(mat, order)
        first = data["order"][0]
        assert first == [[1, 1], [1, 1]]


class TestExprJson:
    def test_round_trip(self):
        x = block_in_p("H", 3, 2)
        data = json.loads(json.dumps(poly_expr_to_json(x)))
        assert poly_expr_from_json(data) == x

    def test_classical_round_trip(self):
        from polysym.classical import SymExpr
        from polysym.serialize import sym_expr_from_json, sym_expr_to_json

        x = SymExpr("s", {(3, 1): Fraction(2), (2, 2): Fraction(-1, 3)})
        data = json.loads(json.dumps(sym_expr_to_json(x)))
        assert sym_expr_from_json(data) == x
        assert data["terms"][0]["partition"] == [3, 1]


class TestTableauSerialization:
    def test_ribbon_tableau_json_and_cells(self):
        tau = parse_type("1^{2,2}")
        tabs = ribbon_tableaux(tau, EMPTY_TYPE, parse_block_sequence("2^1 1^2"))
        assert tabs
        data = tensor_tableau_to_json(tabs[0])
        assert data["family"] == "P" and len(data["chain"]) == 3
        cells = tableau_cells(tabs[0])
        assert sorted(cells) == [1]
        assert [len(r) for r in cells[1]] == [2, 2]
        art = ascii_tensor_diagram(tabs[0])
        assert "deg 1:" in art

    def test_polyribbon_tableau_json(self):
        tau = parse_type("2^2 1^{5,3}")
        tabs = polyribbon_tableaux(tau, EMPTY_TYPE, parse_block_sequence("3^2 3^2"))
        data = tensor_tableau_to_json(tabs[0])
        assert data["sign"] == -1
        assert len(data["step_partitions"]) == 2

    def test_constant_row_json(self):
        tau = parse_type("3^{2,1} 2^{2,2,1} 1^4")
        sigma = parse_type("9^1 6^1 4^1 2^2")
        tabs = constant_row_h_tableaux(tau, EMPTY_TYPE, sigma.blocks)
        data = constant_row_tableau_to_json(tabs[0])
        assert data["weight"] == [1, 16]
        assert "step_types" in data and "sign_plus" in data

    def test_brick_tabloid_json(self):
        tau = parse_type("2^{2,2}")
        tabs = tensor_brick_tabloids(tau, EMPTY_TYPE, parse_block_sequence("2^2 2^2"), "P")
        data = brick_tabloid_to_json(tabs[0])
        assert data["weight"] == 4
        assert data["components"][0]["degree"] == 2
