import random
from fractions import Fraction

import pytest

from polysym.classical import multiply_m_by
from polysym.core import PolyExpr
from polysym.foundations import EMPTY_TYPE, SplitType, enumerate_types
from polysym.monomial_rules import (
    m_times_P,
    m_times_blocks,
    tensor_brick_tabloids,
    transition_to_m,
)
from polysym.oracle import extract_m_tensor, generate
from polysym.serialize import parse_block_sequence, parse_type


def mexpr(pairs):
    return PolyExpr("m*", {parse_type(k): Fraction(v) for k, v in pairs.items()})


class TestPowerBricks:
    def test_single_box(self):
        got = m_times_P(PolyExpr.one("m*"), parse_block_sequence("1^1"))
        assert got == mexpr({"1^1": 1})

    def test_worked_expansion(self):
        got = m_times_P(PolyExpr.one("m*"), parse_block_sequence("2^2 2^2"))
        assert got == mexpr({
            "1^{4,4}": 2, "1^8": 1, "2^2 1^4": 4, "2^{2,2}": 8, "2^4": 4})

    def test_tabloids_carry_divisor_weights(self):
        tau = parse_type("2^{2,2}")
        tabs = tensor_brick_tabloids(tau, EMPTY_TYPE, parse_block_sequence("2^2 2^2"), "P")
        assert sorted(t.weight for t in tabs) == [4, 4]
        assert all(t.step_divisors == (2, 2) for t in tabs)

    def test_empty_content(self):
        t = parse_type("3^1 1^2")
        tabs = tensor_brick_tabloids(t, t, (), "P")
        assert len(tabs) == 1 and tabs[0].weight == 1
        other = parse_type("3^1 1^{1,1}")
        assert tensor_brick_tabloids(other, t, (), "P") == []

    def test_matches_oracle_at_random_extended_content(self):
        rng = random.Random(3)
        for _ in range(12):
            n_inner = rng.randint(0, 2)
            sigma = rng.choice(enumerate_types(n_inner))
            blocks = []
            budget = 5 - n_inner
            while budget > 0 and len(blocks) < 2:
                d = rng.randint(1, budget)
                m = rng.randint(1, budget // d)
                blocks.append((d, m))
                budget -= d * m
            delta = parse_block_sequence(" ".join(f"{d}^{m}" for d, m in blocks)) if blocks else ()
            n = sigma.weight + sum(d * m for d, m in blocks)
            rules = m_times_P(PolyExpr.term("m*", sigma), delta)
            poly = generate("m*", sigma, n)
            for d, m in blocks:
                from polysym.oracle import generate_block
                poly = poly * generate_block("P", d, m, n, n)
            assert rules == extract_m_tensor(poly, n), (sigma, delta)


class TestCompleteBricks:
    def test_count_24(self):
        tau = parse_type("3^{2,2} 2^4 1^{3,3,1}")
        sigma = parse_type("2^2 1^{2,1}")
        delta = parse_block_sequence("8^1 3^2 3^2")
        tabs = tensor_brick_tabloids(tau, sigma, delta, "H")
        assert len(tabs) == 24
        got = m_times_blocks(PolyExpr.term("m*", sigma), delta, "H")
        assert got.coefficient(tau) == 24

    def test_single_unit_block(self):
        tabs = tensor_brick_tabloids(parse_type("1^1"), EMPTY_TYPE, parse_block_sequence("1^1"), "H")
        assert len(tabs) == 1

    def test_first_row_of_H_matrix_all_ones(self):
        # every H_sigma contains the monomial x_{1,1}^n exactly once
        for n in range(1, 6):
            mat = transition_to_m("H", n)
            row = SplitType.from_blocks([(1, n)])
            for sigma in enumerate_types(n):
                assert mat.get(row, sigma) == 1


class TestElementaryBricks:
    def test_worked_coefficients(self):
        tau = parse_type("2^{2,1,1} 1^{5,2,1}")
        sigma = parse_type("1^{2,1}")
        delta = parse_block_sequence("5^1 3^2 2^1")
        tabs = tensor_brick_tabloids(tau, sigma, delta, "E")
        assert len(tabs) == 7
        assert all(t.sign == -1 for t in tabs)
        plus = m_times_blocks(PolyExpr.term("m*", sigma), delta, "E+")
        signed = m_times_blocks(PolyExpr.term("m*", sigma), delta, "E")
        assert plus.coefficient(tau) == 7
        assert signed.coefficient(tau) == -7

    def test_empty_content(self):
        t = parse_type("2^1")
        tabs = tensor_brick_tabloids(t, t, (), "E")
        assert len(tabs) == 1 and tabs[0].sign == 1

    def test_sign_counts_positive_bricks(self):
        tau = parse_type("1^{1,1,1}")
        tabs = tensor_brick_tabloids(tau, EMPTY_TYPE, parse_block_sequence("3^1"), "E")
        for t in tabs:
            bricks = sum(1 for _, rows in t.components for row in rows
                         for label, _ in row if label > 0)
            assert t.sign == (-1 if bricks % 2 else 1)


class TestMatrixConsistency:
    def test_tabloid_sums_equal_matrix_entries(self):
        for n in range(0, 5):
            mats = {f: transition_to_m(f, n) for f in ("P", "H", "E+", "E")}
            for sigma in enumerate_types(n):
                for tau in enumerate_types(n):
                    p_tabs = tensor_brick_tabloids(tau, EMPTY_TYPE, sigma.blocks, "P")
                    assert sum(t.weight for t in p_tabs) == mats["P"].get(tau, sigma)
                    h_tabs = tensor_brick_tabloids(tau, EMPTY_TYPE, sigma.blocks, "H")
                    assert len(h_tabs) == mats["H"].get(tau, sigma)
                    e_tabs = tensor_brick_tabloids(tau, EMPTY_TYPE, sigma.blocks, "E")
                    assert len(e_tabs) == mats["E+"].get(tau, sigma)
                    assert sum(t.sign for t in e_tabs) == mats["E"].get(tau, sigma)

    def test_E_bound_by_E_plus(self):
        for n in range(0, 5):
            plus = transition_to_m("E+", n)
            signed = transition_to_m("E", n)
            for sigma in enumerate_types(n):
                for tau in enumerate_types(n):
                    assert abs(signed.get(tau, sigma)) <= plus.get(tau, sigma)

    def test_order_invariance(self):
        rng = random.Random(11)
        sigma = parse_type("1^1")
        base = list(parse_block_sequence("2^1 1^2 1^1"))
        for family in ("P", "H", "E+", "E"):
            ref = m_times_blocks(PolyExpr.term("m*", sigma), tuple(base), family)
            for _ in range(5):
                shuffled = base[:]
                rng.shuffle(shuffled)
                assert m_times_blocks(PolyExpr.term("m*", sigma), tuple(shuffled), family) == ref


class TestClassicalRestriction:
    def test_degree_one_blocks_give_power_sum_bricks(self):
        # Blocks of degree 1 all act as classical power sums on component 1,
        # so every family reduces to p-brick tabloids (E with a sign per block).
        mu = (2, 1)
        alpha = (2, 1, 2)
        sigma = SplitType.from_restrictions({1: mu})
        delta = tuple(parse_block_sequence(" ".join(f"1^{a}" for a in alpha)))
        classic = multiply_m_by(mu, alpha, "p")
        for family in ("P", "H", "E+", "E"):
            got = m_times_blocks(PolyExpr.term("m*", sigma), delta, family)
            projected = {t.restriction(1): c for t, c in got.terms.items()}
            sign = -1 if len(alpha) % 2 else 1  # E gives (-1) per block 1^a
            expected = {k: (c * sign if family == "E" else c) for k, c in classic.terms.items()}
            assert projected == expected, family

    def test_multiplicity_one_blocks_restrict_to_h_and_e_bricks(self):
        # Coefficients at pure degree-1 rows of H/E columns with blocks d^1
        # are the classical h- and e-brick tabloid counts of content (d_i).
        mu = (2, 1)
        alpha = (2, 1, 2)
        sigma = SplitType.from_restrictions({1: mu})
        delta = tuple(parse_block_sequence(" ".join(f"{a}^1" for a in alpha)))
        for family, classical_family in (("H", "h"), ("E+", "e")):
            got = m_times_blocks(PolyExpr.term("m*", sigma), delta, family)
            classic = multiply_m_by(mu, alpha, classical_family)
            projected = {t.restriction(1): c for t, c in got.terms.items()
                         if set(t.degrees()) <= {1}}
            assert projected == classic.terms, family

    def test_weight_mismatch_rejected(self):
        with pytest.raises(ValueError):
            tensor_brick_tabloids(parse_type("1^2"), EMPTY_TYPE, parse_block_sequence("3^1"), "H")
