"""
test_characters.py - Formal characters, Freudenthal, Weyl dimension, greedy decomposition
"""

import random

import pytest

from characters import (
    FormalCharacter, character_leq, dominant_weights_below, dual_character, expand_chi,
    frobenius_twist, greedy_decompose, maximal_weights, recombine, tensor, weyl_character,
    weyl_dimension,
)
from errors import DecompositionError, DomainError, RootSystemMismatchError
from rootdata import build_root_system, parse_cartan_type, star


def rs_of(name):
    return build_root_system(parse_cartan_type(name))


def weights_in_box(rs, bound):
    """Dominant lam with <lam + rho, alpha0^v> <= bound."""
    found = []

    def walk(prefix):
        if len(prefix) == rs.rank:
            if rs.pairing_with_highest_short(tuple(c + 1 for c in prefix)) <= bound:
                found.append(tuple(prefix))
            return
        for c in range(bound):
            candidate = prefix + [c]
            padded = tuple(candidate + [0] * (rs.rank - len(candidate)))
            if rs.pairing_with_highest_short(tuple(x + 1 for x in padded)) > bound:
                break
            walk(candidate)

    walk([])
    return found


class TestFormalCharacter:

    def test_zero_entries_dropped(self, a1):
        c = FormalCharacter.from_mapping(a1, {(1,): 2, (0,): 0})
        assert c.terms == (((1,), 2),)
        assert c.mult((0,)) == 0

    def test_arithmetic(self, a1):
        x = FormalCharacter.from_mapping(a1, {(1,): 1, (-1,): 1})
        y = FormalCharacter.monomial(a1, (1,))
        assert (x - y).terms == (((-1,), 1),)
        assert (x + x) == x.scaled(2)
        assert (x - x).is_zero()
        assert x.shifted((2,)).support == [(1,), (3,)]

    def test_text_form(self, a2):
        c = weyl_character(a2, (1, 0))
        assert FormalCharacter.from_text(a2, c.to_text()) == c
        assert c.to_dict()['dimension'] == 3

    def test_mismatched_types(self, a1, a2):
        with pytest.raises(RootSystemMismatchError):
            weyl_character(a1, (1,)) + weyl_character(a2, (1, 0))

    def test_nonnegative(self, a1):
        assert weyl_character(a1, (3,)).is_nonnegative()
        assert not FormalCharacter.monomial(a1, (0,), -1).is_nonnegative()


class TestWeylCharacter:

    def test_a1(self, a1):
        assert weyl_character(a1, (1,)).as_dict == {(1,): 1, (-1,): 1}
        assert weyl_character(a1, (4,)).support == [(-4,), (-2,), (0,), (2,), (4,)]

    def test_a2_adjoint(self, a2):
        c = weyl_character(a2, (1, 1))
        assert c.dimension == 8
        assert c.mult((0, 0)) == 2

    def test_g2_small(self, g2):
        assert weyl_character(g2, (1, 0)).mult((0, 0)) == 1
        assert weyl_character(g2, (0, 1)).mult((0, 0)) == 2

    def test_not_dominant(self, a1):
        with pytest.raises(DomainError):
            weyl_character(a1, (-1,))

    @pytest.mark.parametrize('name,bound', [('A1', 30), ('A2', 12), ('B2', 12), ('G2', 14)])
    def test_mass_is_weyl_dimension(self, name, bound):
        rs = rs_of(name)
        for lam in weights_in_box(rs, bound):
            assert weyl_character(rs, lam).dimension == weyl_dimension(rs, lam)

    @pytest.mark.parametrize('name', ['A2', 'B2', 'G2', 'A3'])
    def test_w_invariant(self, name):
        rs = rs_of(name)
        for lam in weights_in_box(rs, 8):
            c = weyl_character(rs, lam)
            for w, m in c.terms:
                for i in range(rs.rank):
                    assert c.mult(rs.simple_reflection(i, w)) == m

    def test_highest_weight_once(self, b2):
        for lam in weights_in_box(b2, 10):
            assert weyl_character(b2, lam).mult(lam) == 1

    def test_dual(self, a2):
        assert dual_character(weyl_character(a2, (2, 1))) == weyl_character(a2, star(a2, (2, 1)))


class TestWeylDimension:

    @pytest.mark.parametrize('name', ['A1', 'A3', 'B3', 'C3', 'D4', 'G2', 'F4', 'E6'])
    def test_trivial(self, name):
        rs = rs_of(name)
        assert weyl_dimension(rs, tuple([0] * rs.rank)) == 1

    def test_known_values(self, a1, a2, b2, g2):
        assert weyl_dimension(a1, (7,)) == 8
        assert weyl_dimension(a2, (1, 1)) == 8
        assert weyl_dimension(b2, (1, 0)) == 5
        assert weyl_dimension(b2, (0, 1)) == 4
        assert weyl_dimension(g2, (1, 0)) == 7
        assert weyl_dimension(g2, (0, 1)) == 14
        assert weyl_dimension(rs_of('E6'), (1, 0, 0, 0, 0, 0)) == 27

    def test_steinberg(self, a2):
        # (p-1)rho has dimension p^N
        assert weyl_dimension(a2, (4, 4)) == 5 ** 3


class TestDominantWeights:

    def test_a1(self, a1):
        assert dominant_weights_below(a1, (4,)) == ((4,), (2,), (0,))

    def test_a2(self, a2):
        assert set(dominant_weights_below(a2, (1, 1))) == {(1, 1), (0, 0)}
        assert set(dominant_weights_below(a2, (3, 0))) == {(3, 0), (1, 1), (0, 0)}


class TestRingOperations:

    def test_clebsch_gordan(self, a1):
        product = tensor(weyl_character(a1, (1,)), weyl_character(a1, (1,)))
        assert product == weyl_character(a1, (2,)) + weyl_character(a1, (0,))

    def test_unit_and_zero(self, a2):
        c = weyl_character(a2, (1, 0))
        assert tensor(c, FormalCharacter.monomial(a2, (0, 0))) == c
        assert tensor(c, FormalCharacter.zero(a2)).is_zero()

    def test_commutative_associative(self, a2):
        rng = random.Random(3)
        for _ in range(20):
            x, y, z = (weyl_character(a2, (rng.randint(0, 2), rng.randint(0, 2))) for _ in range(3))
            assert tensor(x, y) == tensor(y, x)
            assert tensor(tensor(x, y), z) == tensor(x, tensor(y, z))

    def test_frobenius_twist(self, a1):
        c = weyl_character(a1, (1,))
        assert frobenius_twist(c, 3).as_dict == {(3,): 1, (-3,): 1}
        assert frobenius_twist(frobenius_twist(c, 3), 5) == frobenius_twist(c, 15)
        with pytest.raises(DomainError):
            frobenius_twist(c, 1)

    def test_character_leq(self, a1):
        small = weyl_character(a1, (0,))
        big = weyl_character(a1, (2,))
        assert character_leq(small, big)
        assert not character_leq(big, small)

    def test_expand_chi(self, a1):
        c = expand_chi(a1, [((4,), 1), ((0,), -1)])
        assert c.as_dict == {(4,): 1, (2,): 1, (-2,): 1, (-4,): 1}


class TestGreedyDecompose:

    def test_zero(self, a2):
        assert greedy_decompose(FormalCharacter.zero(a2), lambda mu: weyl_character(a2, mu)) == []

    def test_single(self, a2):
        c = weyl_character(a2, (2, 1))
        assert greedy_decompose(c, lambda mu: weyl_character(a2, mu)) == [((2, 1), 1)]

    @pytest.mark.parametrize('name', ['A2', 'B2'])
    def test_recovers_random_combinations(self, name):
        rs = rs_of(name)
        rng = random.Random(2024)
        basis = lambda mu: weyl_character(rs, mu)  # noqa: E731
        for _ in range(250):
            combination = {}
            for _ in range(rng.randint(1, 4)):
                mu = tuple(rng.randint(0, 3) for _ in range(rs.rank))
                combination[mu] = combination.get(mu, 0) + rng.randint(-3, 3)
            combination = {mu: c for mu, c in combination.items() if c}
            c = expand_chi(rs, combination.items())
            pieces = greedy_decompose(c, basis)
            assert dict(pieces) == combination
            assert recombine(rs, pieces, basis) == c

    def test_tie_break_does_not_matter(self, a2):
        basis = lambda mu: weyl_character(a2, mu)  # noqa: E731
        c = tensor(weyl_character(a2, (2, 0)), weyl_character(a2, (1, 1)))
        default = greedy_decompose(c, basis)
        reverse = greedy_decompose(c, basis, tie_break=lambda w: tuple(-x for x in w))
        assert sorted(default) == sorted(reverse)
        assert sum(m * weyl_dimension(a2, mu) for mu, m in default) == 6 * 8

    def test_not_w_invariant(self, a1):
        with pytest.raises(DecompositionError) as info:
            greedy_decompose(FormalCharacter.monomial(a1, (1,)), lambda mu: weyl_character(a1, mu))
        assert info.value.exit_code == 3
        assert info.value.residual == {(-1,): -1}

    def test_maximal_weights(self, a2):
        assert set(maximal_weights(a2, [(1, 1), (0, 0), (3, 0)])) == {(3, 0)}
        assert set(maximal_weights(a2, [(1, 0), (0, 1)])) == {(1, 0), (0, 1)}
