from fractions import Fraction

import pytest

from polysym import linalg
from polysym.core import (
    PolyExpr,
    identity_matrix,
    multiply_p_tensor,
    tensor_transition,
)
from polysym.foundations import EMPTY_TYPE, enumerate_types
from polysym.oracle import generate, oracle_transition
from polysym.power_rules import block_in_p
from polysym.serialize import parse_type, poly_expr_from_json, poly_expr_to_json
from polysym.transitions import convert, transition_matrix


class TestMultiplyPTensor:
    def test_identity_element(self):
        t = parse_type("2^{3,1} 1^2")
        got = multiply_p_tensor([PolyExpr.one("p*"), PolyExpr.term("p*", t)])
        assert got == PolyExpr.term("p*", t)

    def test_union(self):
        a = PolyExpr.term("p*", parse_type("1^2 2^1"))
        b = PolyExpr.term("p*", parse_type("1^1"))
        assert multiply_p_tensor([a, b]) == PolyExpr.term("p*", parse_type("1^{2,1} 2^1"))

    def test_commutative_associative_weight_additive(self):
        a = block_in_p("H", 2, 1)
        b = block_in_p("P", 3, 1)
        c = block_in_p("E", 1, 2)
        ab = multiply_p_tensor([a, b])
        assert ab == multiply_p_tensor([b, a])
        assert multiply_p_tensor([ab, c]) == multiply_p_tensor([a, multiply_p_tensor([b, c])])
        assert multiply_p_tensor([a, b, c]).weight() == 7

    def test_block_product_against_oracle_polynomials(self):
        # P_{2^3} * P_{3^2} expanded two ways: rules in p*, oracle literally.
        n, width = 12, 12
        rules = multiply_p_tensor([block_in_p("P", 2, 3), block_in_p("P", 3, 2)])
        lhs = generate("P", parse_type("2^3"), n, width) * generate("P", parse_type("3^2"), n, width)
        rhs_terms = {}
        for t, c in rules.terms.items():
            for mono, x in generate("p*", t, n, width).terms.items():
                v = rhs_terms.get(mono, 0) + c * x
                if v:
                    rhs_terms[mono] = v
                else:
                    rhs_terms.pop(mono, None)
        assert {m: Fraction(c) for m, c in lhs.terms.items()} == \
               {m: Fraction(c) for m, c in rhs_terms.items()}

    def test_rejects_other_bases(self):
        with pytest.raises(ValueError):
            multiply_p_tensor([PolyExpr.one("s*")])


class TestTensorTransition:
    def test_identity(self):
        for f in "mheps":
            mat = tensor_transition(f, f, 4)
            assert mat.grid() == linalg.identity(len(mat.labels))

    def test_factors_over_degrees(self):
        from polysym.classical import classical_transition

        mat = tensor_transition("p", "m", 2)
        tau, sigma = parse_type("1^{1,1}"), parse_type("1^2")
        assert mat.get(tau, sigma) == classical_transition("p", "m", 2).get((1, 1), (2,))
        mixed = parse_type("2^1")
        assert mat.get(mixed, sigma) == 0

    def test_h_tensor_matches_oracle(self):
        got = tensor_transition("h", "m", 4)
        expected = oracle_transition("h*", "m*", 4)
        assert got.entries == expected.entries

    def test_inverse_pairs(self):
        for n in range(0, 6):
            size = len(enumerate_types(n))
            for f, g in (("p", "m"), ("s", "m"), ("h", "e"), ("s", "p"), ("e", "m")):
                prod = linalg.mat_mul(tensor_transition(f, g, n).grid(),
                                      tensor_transition(g, f, n).grid())
                assert prod == linalg.identity(size)


class TestConvert:
    def test_round_trip_all_bases(self):
        x = PolyExpr("p*", {
            parse_type("1^{2,1,1}"): Fraction(2),
            parse_type("2^2"): Fraction(-1, 3),
            parse_type("1^2 2^1"): Fraction(5),
        })
        for target in ("m*", "s*", "h*", "e*", "P", "H", "E+", "E"):
            there = convert(x, target)
            assert convert(there, "p*") == x

    def test_composition_rule(self):
        n = 4
        for f in ("P", "H", "s*"):
            for g in ("p*", "m*"):
                for k in ("s*", "m*"):
                    lhs = transition_matrix(f, k, n)
                    rhs = transition_matrix(g, k, n) @ transition_matrix(f, g, n)
                    assert lhs.entries == rhs.entries

    def test_identity_weight_zero(self):
        mat = transition_matrix("H", "s*", 0)
        assert mat.labels == (EMPTY_TYPE,)
        assert mat.entries == ((Fraction(1),),)

    def test_unknown_basis(self):
        with pytest.raises(ValueError):
            transition_matrix("q*", "m*", 2)

    def test_inhomogeneous_rejected(self):
        x = PolyExpr("p*", {parse_type("1^1"): Fraction(1), parse_type("1^2"): Fraction(1)})
        with pytest.raises(ValueError):
            convert(x, "m*")


class TestConvertAgainstGoldenColumns:
    def test_P_column_in_s_tensor(self):
        got = convert(PolyExpr.term("P", parse_type("1^{2,2}")), "s*")
        assert got == PolyExpr("s*", {
            parse_type("1^4"): Fraction(1),
            parse_type("1^{3,1}"): Fraction(-1),
            parse_type("1^{2,2}"): Fraction(2),
            parse_type("1^{2,1,1}"): Fraction(-1),
            parse_type("1^{1,1,1,1}"): Fraction(1),
        })

    def test_H_columns_in_p_tensor(self):
        from golden_data import GOLDEN_LABELS, GOLDEN_MATRICES

        labels = [parse_type(t) for t in GOLDEN_LABELS]
        rows = GOLDEN_MATRICES[("H", "p*")]
        for j, sigma in enumerate(labels):
            got = convert(PolyExpr.term("H", sigma), "p*")
            expected = {labels[i]: Fraction(rows[i][j]) for i in range(len(labels))
                        if Fraction(rows[i][j])}
            assert got.terms == expected, sigma


class TestMatrixLabels:
    def test_identity_matrix_addressable(self):
        mat = identity_matrix(4)
        for a in mat.labels:
            for b in mat.labels:
                assert mat.get(a, b) == (1 if a == b else 0)


class TestJson:
    def test_round_trip(self):
        x = PolyExpr("H", {parse_type("2^1 1^2"): Fraction(3, 2), parse_type("4^1"): Fraction(-1)})
        assert poly_expr_from_json(poly_expr_to_json(x)) == x
