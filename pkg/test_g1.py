"""
test_g1.py - Baby Verma modules, G1T decomposition, Q^1 by reciprocity, Q# and the socle bound
"""

from itertools import product

import pytest

from characters import FormalCharacter
from errors import DecompositionError, DomainError, ScanRegionError
from g1 import (
    baby_verma_char, check_socle_bound, decompose_g1t, g1t_simple_char, hypothesis_flags, p_sharp_char, q1_hat_char,
    q1_hat_terms, q_sharp_char, q_sharp_top_weight, reciprocity_mass, set_scan_cap, verma_multiplicity,
)
from lcf import ch_irreducible
from modchar import ch_nabla_red
from rootdata import build_root_system, parse_cartan_type


def rs_of(name):
    return build_root_system(parse_cartan_type(name))


class TestBabyVerma:

    def test_a1(self, a1):
        assert baby_verma_char(a1, (0,), 3).as_dict == {(0,): 1, (-2,): 1, (-4,): 1}

    @pytest.mark.parametrize('name,p,mass', [('A1', 5, 5), ('A2', 5, 125), ('B2', 5, 625)])
    def test_mass(self, name, p, mass):
        rs = rs_of(name)
        c = baby_verma_char(rs, tuple([1] * rs.rank), p)
        assert c.dimension == mass
        assert c.mult(tuple([1] * rs.rank)) == 1

    def test_negative_weights_allowed(self, a1):
        assert baby_verma_char(a1, (-2,), 3).support == [(-6,), (-4,), (-2,)]


class TestDecomposeG1T:

    def test_labels(self, a1):
        assert decompose_g1t(baby_verma_char(a1, (0,), 3), 3) == [((0,), 1), ((-2,), 1)]
        assert decompose_g1t(baby_verma_char(a1, (2,), 3), 3) == [((2,), 1)]

    def test_simple(self, a2):
        c = ch_irreducible(a2, (1, 3), 5)
        assert decompose_g1t(c, 5) == [((1, 3), 1)]

    def test_round_trip(self, a2):
        for mu in [(0, 0), (2, 1), (4, 4), (3, 0)]:
            c = baby_verma_char(a2, mu, 5)
            pieces = decompose_g1t(c, 5)
            total = FormalCharacter.zero(a2)
            for sigma, m in pieces:
                total = total + g1t_simple_char(a2, sigma, 5).scaled(m)
            assert total == c

    def test_negative(self, a1):
        with pytest.raises(DecompositionError):
            decompose_g1t(FormalCharacter.monomial(a1, (0,), -1), 3)
        assert decompose_g1t(FormalCharacter.monomial(a1, (0,), -1), 3, genuine=False) == [((0,), -1)]

    def test_translation(self, a1):
        assert verma_multiplicity(a1, (4,), (0,), 3) == 1
        assert verma_multiplicity(a1, (3,), (1,), 3) == 1
        assert verma_multiplicity(a1, (2,), (0,), 3) == 0


class TestQ1Hat:

    @pytest.mark.parametrize('lam0,terms,mass', [
        ((0,), [((4,), 1), ((0,), 1)], 6),
        ((1,), [((3,), 1), ((1,), 1)], 6),
        ((2,), [((2,), 1)], 3),
    ])
    def test_a1_p3(self, a1, lam0, terms, mass):
        assert q1_hat_terms(a1, lam0, 3) == terms
        assert q1_hat_char(a1, lam0, 3).dimension == mass

    def test_steinberg(self, a1):
        assert q1_hat_char(a1, (2,), 3) == baby_verma_char(a1, (2,), 3)

    def test_a2_top_weight(self, a2):
        p = 5
        for lam0 in product(range(p), repeat=2):
            c = q1_hat_char(a2, lam0, p)
            top = q_sharp_top_weight(a2, lam0, p)
            assert c.mult(top) == 1
            terms = dict(q1_hat_terms(a2, lam0, p))
            assert terms[lam0] == 1
            assert all(m > 0 for m in terms.values())

    def test_not_restricted(self, a1):
        with pytest.raises(DomainError):
            q1_hat_char(a1, (3,), 3)

    def test_scan_cap(self, a1):
        set_scan_cap(1)
        with pytest.raises(ScanRegionError) as info:
            q1_hat_char(a1, (3,), 7)
        assert info.value.exit_code == 2


class TestReciprocity:

    @pytest.mark.parametrize('name,p,expected', [('A1', 3, 27), ('A1', 5, 125), ('A2', 5, 5 ** 8)])
    def test_mass(self, name, p, expected):
        total, target = reciprocity_mass(rs_of(name), p)
        assert target == expected
        assert total == expected


class TestHypothesisFlags:

    @pytest.mark.parametrize('name,p,holds', [('A1', 3, True), ('A2', 5, True), ('B2', 5, False), ('G2', 7, False)])
    def test_flag(self, name, p, holds):
        flags = hypothesis_flags(rs_of(name), p)
        assert flags['p_ge_2h_minus_2'] is holds
        assert bool(flags['notes']) is not holds

    def test_note_names_the_bound(self, a2):
        assert hypothesis_flags(a2, 3)['notes'] == [
            "p < 2h-2 = 4: the G-structure on Q^1 / Q# is not guaranteed"
        ]


class TestQSharp:

    def test_restricted_is_q1_hat(self, a2):
        assert q_sharp_char(a2, (1, 2), 5) == q1_hat_char(a2, (1, 2), 5)

    def test_a1(self, a1):
        assert q_sharp_char(a1, (5,), 3).dimension == 6
        assert q_sharp_top_weight(a1, (5,), 3) == (5,)
        assert q_sharp_char(a1, (5,), 3).mult((5,)) == 1

    def test_multiplicative(self, a2):
        assert q_sharp_char(a2, (6, 2), 5).dimension == q1_hat_char(a2, (1, 2), 5).dimension * 3

    def test_p_sharp(self, a2):
        assert p_sharp_char(a2, (6, 2), 5) == q_sharp_char(a2, (6, 2), 5)


class TestSocleBound:

    @pytest.mark.parametrize('name,p', [('A1', 3), ('A1', 5), ('A2', 5)])
    def test_restricted(self, name, p):
        rs = rs_of(name)
        for mu in product(range(p), repeat=rs.rank):
            assert check_socle_bound(rs, mu, p)

    def test_non_restricted(self, a2):
        for mu in [(5, 0), (6, 2), (3, 7)]:
            assert check_socle_bound(a2, mu, 5)

    def test_steinberg_equality(self, a1):
        assert ch_nabla_red(a1, (2,), 3) == q_sharp_char(a1, (2,), 3)

    def test_truncated_upper_bound_fails(self, a1):
        full = q_sharp_char(a1, (1,), 3)
        truncated = FormalCharacter.from_mapping(a1, {w: m for w, m in full.terms if w != (-1,)})
        assert check_socle_bound(a1, (1,), 3)
        assert not check_socle_bound(a1, (1,), 3, q_sharp=truncated)
