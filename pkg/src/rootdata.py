"""
rootdata.py - Root systems of simple types and weight-lattice arithmetic

HOW IT WORKS:
=============
1. A Cartan type (family letter + rank) picks a Dynkin diagram
2. The diagram gives a symmetrized form (alpha_i, alpha_j) on simple roots
3. From it we get the Cartan matrix, all positive roots (root strings),
   coroots, rho, the highest short root, w0 and the Coxeter number

CONVENTIONS:
============
- Weights live in the fundamental-weight basis: coords[i] = <lambda, alpha_i^v>
- Roots live in the simple-root basis (integer vectors)
- cartan_matrix[i][j] = <alpha_i, alpha_j^v>, so row i is alpha_i in weight coords
- Everything is exact: ints and Fractions, never floats
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Dict, List, Tuple

import sympy

from errors import CartanTypeError, DomainError

Weight = Tuple[int, ...]
Matrix = Tuple[Tuple[int, ...], ...]


# =============================================================================
# CONFIGURATION
# =============================================================================

# Smallest rank allowed per family (B2 and C2 are both accepted)
MIN_RANK = {'A': 1, 'B': 2, 'C': 2, 'D': 4}
FIXED_RANKS = {'E': (6, 7, 8), 'F': (4,), 'G': (2,)}


# =============================================================================
# CARTAN TYPE
# =============================================================================

@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        family = self.family
        rank = self.rank
        if not isinstance(family, str) or not isinstance(rank, int) or isinstance(rank, bool):
            raise CartanTypeError(family, rank)
        if family in MIN_RANK:
            if rank < MIN_RANK[family]:
                raise CartanTypeError(family, rank)
        elif family in FIXED_RANKS:
            if rank not in FIXED_RANKS[family]:
                raise CartanTypeError(family, rank)
        else:
            raise CartanTypeError(family, rank)

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def affine_name(self) -> str:
        """Name of the affine Coxeter type, e.g. 'A1~'."""
        return f"{self.family}{self.rank}~"


def parse_cartan_type(text: str) -> CartanType:
    """Parse 'A2', 'g2', 'B2' ... into a CartanType."""
    text = (text or '').strip()
    if len(text) < 2 or not text[1:].isdigit():
        raise CartanTypeError(text[:1].upper(), text[1:])
    return CartanType(text[0].upper(), int(text[1:]))


# =============================================================================
# DYNKIN DATA
# =============================================================================

def _diagram(t: CartanType) -> Tuple[List[int], List[Tuple[int, int]]]:
    """Squared root lengths (short = 2) and edges of the Dynkin diagram (Bourbaki numbering)."""
    n = t.rank
    chain = [(i, i + 1) for i in range(n - 1)]
    if t.family == 'A':
        return [2] * n, chain
    if t.family == 'B':
        return [4] * (n - 1) + [2], chain
    if t.family == 'C':
        return [2] * (n - 1) + [4], chain
    if t.family == 'D':
        return [2] * n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if t.family == 'E':
        edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
        return [2] * n, edges
    if t.family == 'F':
        return [4, 4, 2, 2], chain
    # G2: alpha_1 short, alpha_2 long
    return [2, 6], chain


def _symmetrized_form(t: CartanType) -> List[List[int]]:
    lengths, edges = _diagram(t)
    n = t.rank
    form = [[0] * n for _ in range(n)]
    for i in range(n):
        form[i][i] = lengths[i]
    for i, j in edges:
        form[i][j] = form[j][i] = -max(lengths[i], lengths[j]) // 2
    return form


# =============================================================================
# SMALL EXACT LINEAR ALGEBRA
# =============================================================================

def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    m = len(b[0])
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(m))
        for i in range(n)
    )


def mat_vec(a: Matrix, v: Weight) -> Weight:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in a)


def add(u: Weight, v: Weight) -> Weight:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Weight, v: Weight) -> Weight:
    return tuple(a - b for a, b in zip(u, v))


def scale(k: int, v: Weight) -> Weight:
    return tuple(k * a for a in v)


# =============================================================================
# ROOT SYSTEM
# =============================================================================

@dataclass(frozen=True, eq=False)
class RootSystem:
    """
    Root datum of a simple, simply connected group of the given type.

    Immutable once built; build_root_system() hands out one shared
    instance per Cartan type.
    """
    cartan_type: CartanType
    cartan_matrix: Matrix
    positive_roots: Tuple[Weight, ...]          # simple-root basis
    coroot_pairing: Tuple[Weight, ...]          # alpha^v in the simple-coroot basis
    rho: Weight
    highest_short_root: Weight
    highest_short_index: int
    w0_matrix: Matrix
    coxeter_number: int
    symmetrized_form: Matrix
    cartan_inverse: Tuple[Tuple[Fraction, ...], ...]
    form_matrix: Matrix                         # (omega_i, omega_j), scaled to integers
    positive_roots_weight: Tuple[Weight, ...]   # positive roots in weight coords

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    @property
    def simple_roots_weight(self) -> Tuple[Weight, ...]:
        return self.cartan_matrix

    def pairing(self, weight: Weight, index: int) -> int:
        """<weight, alpha^v> for the positive root with the given index."""
        coroot = self.coroot_pairing[index]
        return sum(c * x for c, x in zip(coroot, weight))

    def pairing_with_highest_short(self, weight: Weight) -> int:
        return self.pairing(weight, self.highest_short_index)

    def root_to_weight(self, root: Weight) -> Weight:
        n = self.rank
        return tuple(sum(root[i] * self.cartan_matrix[i][k] for i in range(n)) for k in range(n))

    def root_coordinates(self, weight: Weight) -> Tuple[Fraction, ...]:
        n = self.rank
        return tuple(
            sum((weight[j] * self.cartan_inverse[j][k] for j in range(n)), Fraction(0))
            for k in range(n)
        )

    def weight_to_root(self, weight: Weight) -> Weight:
        """Root-lattice element given in weight coords, back in root coords."""
        coords = self.root_coordinates(weight)
        if any(c.denominator != 1 for c in coords):
            raise DomainError(f"{weight} is not in the root lattice", weight=weight)
        return tuple(int(c) for c in coords)

    def height(self, weight: Weight) -> Fraction:
        return sum(self.root_coordinates(weight), Fraction(0))

    def inner_product(self, u: Weight, v: Weight) -> int:
        """W-invariant form on weights, scaled by a fixed positive integer."""
        n = self.rank
        return sum(u[i] * self.form_matrix[i][j] * v[j] for i in range(n) for j in range(n))

    def simple_reflection(self, i: int, weight: Weight) -> Weight:
        """Linear action of s_i on a weight."""
        c = weight[i]
        if c == 0:
            return weight
        return tuple(x - c * a for x, a in zip(weight, self.cartan_matrix[i]))

    def reflection_matrix(self, i: int) -> Matrix:
        n = self.rank
        return tuple(
            tuple((1 if k == j else 0) - (self.cartan_matrix[i][k] if j == i else 0) for j in range(n))
            for k in range(n)
        )

    def root_reflection_matrix(self, index: int) -> Matrix:
        """Matrix of s_beta on weight coords for the positive root with this index."""
        n = self.rank
        beta = self.positive_roots_weight[index]
        coroot = self.coroot_pairing[index]
        return tuple(
            tuple((1 if k == j else 0) - beta[k] * coroot[j] for j in range(n))
            for k in range(n)
        )

    def dominant_conjugate(self, weight: Weight) -> Weight:
        while True:
            for i, c in enumerate(weight):
                if c < 0:
                    weight = self.simple_reflection(i, weight)
                    break
            else:
                return weight

    def weyl_orbit(self, weight: Weight) -> List[Weight]:
        seen = {weight}
        frontier = [weight]
        while frontier:
            new = []
            for mu in frontier:
                for i in range(self.rank):
                    nu = self.simple_reflection(i, mu)
                    if nu not in seen:
                        seen.add(nu)
                        new.append(nu)
            frontier = new
        return sorted(seen)

    def weyl_group_order(self) -> int:
        # rho is regular, so its orbit is a regular W-orbit
        return len(self.weyl_orbit(self.rho))


# =============================================================================
# CONSTRUCTION
# =============================================================================

def _positive_roots(cartan: Matrix, n: int) -> List[Weight]:
    """Close the simple roots under root strings, height by height."""
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = list(simple)
    known = set(roots)
    position = 0
    while position < len(roots):
        beta = roots[position]
        position += 1
        for i in range(n):
            if beta == simple[i]:
                continue
            # r = length of the string going down from beta
            r = 0
            lower = beta
            while True:
                lower = tuple(x - (1 if j == i else 0) for j, x in enumerate(lower))
                if lower in known:
                    r += 1
                else:
                    break
            bracket = sum(beta[j] * cartan[j][i] for j in range(n))
            q = r - bracket
            if q > 0:
                gamma = tuple(x + (1 if j == i else 0) for j, x in enumerate(beta))
                if gamma not in known:
                    known.add(gamma)
                    roots.append(gamma)
    # simple roots first, in order
    return sorted(roots, key=lambda b: (sum(b), tuple(-x for x in b)))


def _longest_element(rs_cartan: Matrix, n: int) -> Matrix:
    """w0 by descent from -rho into the dominant chamber."""
    weight = tuple([-1] * n)
    matrix = identity_matrix(n)
    while True:
        for i, c in enumerate(weight):
            if c < 0:
                refl = tuple(
                    tuple((1 if k == j else 0) - (rs_cartan[i][k] if j == i else 0) for j in range(n))
                    for k in range(n)
                )
                weight = mat_vec(refl, weight)
                matrix = mat_mul(refl, matrix)
                break
        else:
            return matrix


@lru_cache(maxsize=None)
def build_root_system(t: CartanType) -> RootSystem:
    """Build (once per type) the full root datum."""
    if not isinstance(t, CartanType):
        raise CartanTypeError(str(t), None)
    n = t.rank
    form = _symmetrized_form(t)
    cartan = tuple(tuple(2 * form[i][j] // form[j][j] for j in range(n)) for i in range(n))

    inverse = sympy.Matrix(cartan).inv()
    cartan_inverse = tuple(
        tuple(Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(n))
        for i in range(n)
    )

    positive = _positive_roots(cartan, n)

    coroots = []
    for beta in positive:
        norm = sum(beta[i] * form[i][j] * beta[j] for i in range(n) for j in range(n))
        coroot = []
        for j in range(n):
            value = Fraction(beta[j] * form[j][j], norm)
            assert value.denominator == 1, (t, beta)
            coroot.append(int(value))
        coroots.append(tuple(coroot))

    norms = [sum(b[i] * form[i][j] * b[j] for i in range(n) for j in range(n)) for b in positive]
    shortest = min(norms)
    highest_short_index = max(
        (k for k in range(len(positive)) if norms[k] == shortest),
        key=lambda k: (sum(positive[k]), positive[k]),
    )

    # (omega_i, omega_j) = Cinv[i][j] * (alpha_j, alpha_j) / 2
    gram = [[cartan_inverse[i][j] * Fraction(form[j][j], 2) for j in range(n)] for i in range(n)]
    denominator = 1
    for row in gram:
        for entry in row:
            denominator = lcm(denominator, entry.denominator)
    form_matrix = tuple(tuple(int(entry * denominator) for entry in row) for row in gram)

    rho = tuple([1] * n)
    coxeter = sum(coroots[highest_short_index]) + 1

    positive_weight = tuple(
        tuple(sum(b[i] * cartan[i][k] for i in range(n)) for k in range(n)) for b in positive
    )

    return RootSystem(
        cartan_type=t,
        cartan_matrix=cartan,
        positive_roots=tuple(positive),
        coroot_pairing=tuple(coroots),
        rho=rho,
        highest_short_root=positive[highest_short_index],
        highest_short_index=highest_short_index,
        w0_matrix=_longest_element(cartan, n),
        coxeter_number=coxeter,
        symmetrized_form=tuple(tuple(r) for r in form),
        cartan_inverse=cartan_inverse,
        form_matrix=form_matrix,
        positive_roots_weight=positive_weight,
    )


# =============================================================================
# WEIGHT OPERATIONS
# =============================================================================

def check_weight(rs: RootSystem, weight: Weight) -> Weight:
    weight = tuple(int(c) for c in weight)
    if len(weight) != rs.rank:
        raise DomainError(
            f"Weight {weight} has {len(weight)} coordinates, type {rs.cartan_type} needs {rs.rank}",
            weight=weight,
        )
    return weight


def is_dominant(weight: Weight) -> bool:
    return all(c >= 0 for c in weight)


def require_dominant(rs: RootSystem, weight: Weight) -> Weight:
    weight = check_weight(rs, weight)
    if not is_dominant(weight):
        raise DomainError(f"Weight {weight} is not dominant", weight=weight)
    return weight


def pair(rs: RootSystem, weight: Weight, index: int) -> int:
    """<weight, alpha^v> for positive root number `index`."""
    if not 0 <= index < rs.num_positive_roots:
        raise DomainError(
            f"Positive root index {index} out of range 0..{rs.num_positive_roots - 1}", index=index
        )
    return rs.pairing(check_weight(rs, weight), index)


def dominance_leq(rs: RootSystem, lam: Weight, mu: Weight) -> bool:
    """lam <= mu iff mu - lam is a non-negative integer sum of simple roots."""
    coords = rs.root_coordinates(sub(mu, lam))
    return all(c.denominator == 1 and c >= 0 for c in coords)


def star(rs: RootSystem, weight: Weight) -> Weight:
    """lambda* = -w0(lambda)."""
    return tuple(-c for c in mat_vec(rs.w0_matrix, weight))


def weight_text(weight: Weight) -> str:
    return ','.join(str(c) for c in weight)


def root_system_facts(rs: RootSystem) -> Dict:
    """Summary used by the `roots` command."""
    return {
        'cartan_type': str(rs.cartan_type),
        'rank': rs.rank,
        'cartan_matrix': [list(r) for r in rs.cartan_matrix],
        'positive_roots': [list(r) for r in rs.positive_roots],
        'num_positive_roots': rs.num_positive_roots,
        'coroots': [list(c) for c in rs.coroot_pairing],
        'rho': list(rs.rho),
        'highest_short_root': list(rs.highest_short_root),
        'coxeter_number': rs.coxeter_number,
        'w0_matrix': [list(r) for r in rs.w0_matrix],
    }


def check_prime(p: int) -> int:
    if isinstance(p, bool) or not isinstance(p, int) or not sympy.isprime(p):
        raise DomainError(f"p must be a prime, got {p!r}", p=p)
    return p


def divmod_weight(weight: Weight, p: int) -> Tuple[Weight, Weight]:
    """Coordinate-wise (weight mod p, weight div p)."""
    return tuple(c % p for c in weight), tuple(c // p for c in weight)
