"""
test_rootdata.py - Root systems, weight arithmetic, dominance and star
"""

import random

import pytest

from errors import CartanTypeError, DomainError
from rootdata import (
    CartanType, build_root_system, check_prime, divmod_weight, dominance_leq, identity_matrix,
    mat_mul, pair, parse_cartan_type, star,
)


def rs_of(name):
    return build_root_system(parse_cartan_type(name))


def random_weight(rng, rank, low=-6, high=6):
    return tuple(rng.randint(low, high) for _ in range(rank))


class TestCartanType:

    @pytest.mark.parametrize('name', ['A1', 'A5', 'B2', 'C2', 'C3', 'D4', 'E6', 'E8', 'F4', 'G2', 'g2', 'b3'])
    def test_valid(self, name):
        t = parse_cartan_type(name)
        assert str(t) == name.upper()

    @pytest.mark.parametrize('family,rank', [('A', 0), ('B', 1), ('C', 1), ('D', 3), ('E', 5),
                                             ('E', 9), ('F', 3), ('G', 3), ('H', 3)])
    def test_invalid_pair(self, family, rank):
        with pytest.raises(CartanTypeError) as info:
            CartanType(family, rank)
        assert info.value.family == family
        assert info.value.rank == rank
        assert info.value.exit_code == 1

    @pytest.mark.parametrize('text', ['', 'A', '2A', 'Ax'])
    def test_unparseable(self, text):
        with pytest.raises(CartanTypeError):
            parse_cartan_type(text)

    def test_affine_name(self):
        assert CartanType('A', 1).affine_name == 'A1~'


class TestBuildRootSystem:

    @pytest.mark.parametrize('name,count', [('A1', 1), ('A2', 3), ('A3', 6), ('B2', 4), ('C2', 4),
                                            ('B3', 9), ('C3', 9), ('D4', 12), ('G2', 6), ('F4', 24),
                                            ('E6', 36)])
    def test_positive_root_count(self, name, count):
        assert rs_of(name).num_positive_roots == count

    @pytest.mark.parametrize('name,h', [('A1', 2), ('A2', 3), ('A3', 4), ('B2', 4), ('B3', 6),
                                        ('C3', 6), ('D4', 6), ('G2', 6), ('F4', 12), ('E6', 12)])
    def test_coxeter_number(self, name, h):
        rs = rs_of(name)
        assert rs.coxeter_number == h
        assert rs.coxeter_number == rs.pairing_with_highest_short(rs.rho) + 1

    @pytest.mark.parametrize('name,order', [('A1', 2), ('A2', 6), ('B2', 8), ('C2', 8), ('G2', 12), ('A3', 24)])
    def test_weyl_group_order(self, name, order):
        assert rs_of(name).weyl_group_order() == order

    def test_simple_roots_come_first(self):
        rs = rs_of('B3')
        assert rs.positive_roots[:3] == ((1, 0, 0), (0, 1, 0), (0, 0, 1))

    def test_cartan_matrices(self):
        assert rs_of('A2').cartan_matrix == ((2, -1), (-1, 2))
        assert rs_of('B2').cartan_matrix == ((2, -2), (-1, 2))
        assert rs_of('G2').cartan_matrix == ((2, -1), (-3, 2))

    def test_g2_roots(self, g2):
        assert set(g2.positive_roots) == {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}
        assert g2.highest_short_root == (2, 1)
        assert g2.coroot_pairing[g2.highest_short_index] == (2, 3)

    def test_b2_c2_isomorphic(self):
        b2, c2 = rs_of('B2'), rs_of('C2')
        assert b2.num_positive_roots == c2.num_positive_roots
        assert b2.coxeter_number == c2.coxeter_number
        assert b2.weyl_group_order() == c2.weyl_group_order()

    @pytest.mark.parametrize('name', ['A1', 'A2', 'A3', 'B2', 'B3', 'C3', 'D4', 'G2', 'F4'])
    def test_w0_is_involution(self, name):
        rs = rs_of(name)
        assert mat_mul(rs.w0_matrix, rs.w0_matrix) == identity_matrix(rs.rank)

    @pytest.mark.parametrize('name', ['A1', 'A2', 'A3', 'B2', 'B3', 'C3', 'D4', 'G2', 'F4'])
    def test_sum_of_positive_roots_is_two_rho(self, name):
        rs = rs_of(name)
        total = tuple(sum(root[i] for root in rs.positive_roots) for i in range(rs.rank))
        assert rs.root_coordinates(tuple(2 * c for c in rs.rho)) == total

    @pytest.mark.parametrize('name', ['A3', 'B3', 'C3', 'D4', 'G2', 'F4'])
    def test_rho_pairing_is_coroot_height(self, name):
        rs = rs_of(name)
        for index, coroot in enumerate(rs.coroot_pairing):
            assert rs.pairing(rs.rho, index) == sum(coroot)

    def test_built_once_per_type(self):
        assert build_root_system(CartanType('A', 2)) is build_root_system(CartanType('A', 2))

    def test_wrong_argument(self):
        with pytest.raises(CartanTypeError):
            build_root_system('A2')


class TestPair:

    def test_zero_weight(self, a1):
        assert pair(a1, (0,), 0) == 0

    def test_rho_against_highest_root(self, a2):
        assert pair(a2, a2.rho, a2.highest_short_index) == 2

    def test_simple_root_reads_coordinate(self, a1):
        assert pair(a1, (4,), 0) == 4

    def test_index_out_of_range(self, a2):
        with pytest.raises(DomainError):
            pair(a2, (0, 0), 3)

    def test_wrong_length(self, a2):
        with pytest.raises(DomainError):
            pair(a2, (1,), 0)


class TestDominance:

    def test_examples(self, a1):
        assert dominance_leq(a1, (3,), (3,))
        assert dominance_leq(a1, (0,), (2,))
        assert not dominance_leq(a1, (0,), (1,))
        assert not dominance_leq(a1, (2,), (0,))

    @pytest.mark.parametrize('name', ['A2', 'B2', 'G2'])
    def test_partial_order(self, name):
        rs = rs_of(name)
        rng = random.Random(7)
        for _ in range(300):
            lam, mu, nu = (random_weight(rng, rs.rank, -3, 3) for _ in range(3))
            assert dominance_leq(rs, lam, lam)
            if dominance_leq(rs, lam, mu) and dominance_leq(rs, mu, lam):
                assert lam == mu
            if dominance_leq(rs, lam, mu) and dominance_leq(rs, mu, nu):
                assert dominance_leq(rs, lam, nu)

    def test_root_lattice(self, a1):
        assert a1.weight_to_root((2,)) == (1,)
        with pytest.raises(DomainError):
            a1.weight_to_root((1,))


class TestStar:

    def test_a1_identity(self, a1):
        assert star(a1, (5,)) == (5,)

    def test_a2_swaps(self, a2):
        assert star(a2, (1, 0)) == (0, 1)

    def test_b2_identity(self, b2):
        assert star(b2, (2, 3)) == (2, 3)

    @pytest.mark.parametrize('name', ['A1', 'A2', 'A3', 'B2', 'G2', 'D4'])
    def test_involution(self, name):
        rs = rs_of(name)
        rng = random.Random(11)
        for _ in range(1000):
            lam = random_weight(rng, rs.rank)
            assert star(rs, star(rs, lam)) == lam

    def test_a3_reverses(self):
        rs = rs_of('A3')
        assert star(rs, (1, 2, 3)) == (3, 2, 1)


class TestHelpers:

    @pytest.mark.parametrize('p', [2, 3, 5, 7, 11])
    def test_prime(self, p):
        assert check_prime(p) == p

    @pytest.mark.parametrize('p', [0, 1, 4, 9, -3, True])
    def test_not_prime(self, p):
        with pytest.raises(DomainError):
            check_prime(p)

    def test_divmod_weight(self):
        assert divmod_weight((7, 2), 3) == ((1, 2), (2, 0))
        assert divmod_weight((-2,), 3) == ((1,), (-1,))

    def test_dominant_conjugate_and_orbit(self, a2):
        assert a2.dominant_conjugate((-1, 0)) == (0, 1)
        assert len(a2.weyl_orbit((1, 1))) == 6
        assert len(a2.weyl_orbit((1, 0))) == 3
