"""
characters.py - The formal character ring

A character is a finite map weight -> integer multiplicity. Characters of
real modules have non-negative entries and are W-invariant; virtual ones
(differences, alternating sums) may have negative entries.

WHAT'S HERE:
============
- FormalCharacter: immutable sparse character with canonical term order
- weyl_character(): ch Delta(lambda) by Freudenthal's recursion
- weyl_dimension(): Weyl's dimension formula, exact
- tensor(), frobenius_twist(): ring operations
- greedy_decompose(): peel off top terms against a unitriangular basis
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Tuple

from errors import DecompositionError, DomainError, RootSystemMismatchError
from rootdata import (
    CartanType, RootSystem, Weight, add, dominance_leq, is_dominant, require_dominant, scale, sub,
)


# =============================================================================
# FORMAL CHARACTER
# =============================================================================

@dataclass(frozen=True)
class FormalCharacter:
    """
    Sparse character: sorted (weight, multiplicity) pairs, no zero entries.

    Equality is structural (same type, same terms), so two characters
    computed along different routes compare equal iff they agree exactly.
    """
    cartan_type: CartanType
    terms: Tuple[Tuple[Weight, int], ...]
    root_system: RootSystem = field(compare=False, repr=False)

    @classmethod
    def from_mapping(cls, rs: RootSystem, mapping: Mapping[Weight, int]) -> 'FormalCharacter':
        terms = tuple(sorted((tuple(w), int(m)) for w, m in mapping.items() if m != 0))
        return cls(rs.cartan_type, terms, rs)

    @classmethod
    def zero(cls, rs: RootSystem) -> 'FormalCharacter':
        return cls(rs.cartan_type, (), rs)

    @classmethod
    def monomial(cls, rs: RootSystem, weight: Weight, multiplicity: int = 1) -> 'FormalCharacter':
        return cls.from_mapping(rs, {tuple(weight): multiplicity})

    @cached_property
    def as_dict(self) -> Dict[Weight, int]:
        return dict(self.terms)

    def mult(self, weight: Weight) -> int:
        return self.as_dict.get(tuple(weight), 0)

    @property
    def support(self) -> List[Weight]:
        return [w for w, _ in self.terms]

    @property
    def dimension(self) -> int:
        """Total mass: the sum of all multiplicities."""
        return sum(m for _, m in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_nonnegative(self) -> bool:
        return all(m > 0 for _, m in self.terms)

    def _check_same(self, other: 'FormalCharacter') -> None:
        if self.cartan_type != other.cartan_type:
            raise RootSystemMismatchError(
                f"Cannot combine characters of types {self.cartan_type} and {other.cartan_type}"
            )

    def __add__(self, other: 'FormalCharacter') -> 'FormalCharacter':
        self._check_same(other)
        total = dict(self.as_dict)
        for w, m in other.terms:
            total[w] = total.get(w, 0) + m
        return FormalCharacter.from_mapping(self.root_system, total)

    def __neg__(self) -> 'FormalCharacter':
        return self.scaled(-1)

    def __sub__(self, other: 'FormalCharacter') -> 'FormalCharacter':
        return self + (-other)

    def scaled(self, k: int) -> 'FormalCharacter':
        return FormalCharacter.from_mapping(self.root_system, {w: k * m for w, m in self.terms})

    def shifted(self, weight: Weight) -> 'FormalCharacter':
        """Multiply by e(weight)."""
        return FormalCharacter.from_mapping(self.root_system, {add(w, weight): m for w, m in self.terms})

    def to_text(self) -> List[str]:
        """Stable text form: sorted 'c1,c2:m' entries."""
        return [f"{','.join(str(c) for c in w)}:{m}" for w, m in self.terms]

    @classmethod
    def from_text(cls, rs: RootSystem, entries: Iterable[str]) -> 'FormalCharacter':
        mapping: Dict[Weight, int] = {}
        for entry in entries:
            coords, _, mult = entry.rpartition(':')
            weight = tuple(int(c) for c in coords.split(','))
            mapping[weight] = mapping.get(weight, 0) + int(mult)
        return cls.from_mapping(rs, mapping)

    def to_dict(self) -> Dict:
        return {'dimension': self.dimension, 'terms': self.to_text()}


# =============================================================================
# DOMINANT WEIGHTS AND FREUDENTHAL
# =============================================================================

@lru_cache(maxsize=None)
def dominant_weights_below(rs: RootSystem, lam: Weight) -> Tuple[Weight, ...]:
    """All dominant mu <= lam, shallowest first (depth = height of lam - mu)."""
    lam = require_dominant(rs, lam)
    seen = {lam}
    frontier = [lam]
    while frontier:
        new = []
        for mu in frontier:
            for alpha in rs.positive_roots_weight:
                nu = sub(mu, alpha)
                if is_dominant(nu) and nu not in seen:
                    seen.add(nu)
                    new.append(nu)
        frontier = new
    return tuple(sorted(seen, key=lambda mu: (rs.height(sub(lam, mu)), tuple(-c for c in mu))))


@lru_cache(maxsize=None)
def _dominant_multiplicities(rs: RootSystem, lam: Weight) -> Tuple[Tuple[Weight, int], ...]:
    dominant = dominant_weights_below(rs, lam)
    lam_rho = add(lam, rs.rho)
    top_norm = rs.inner_product(lam_rho, lam_rho)
    mult: Dict[Weight, int] = {lam: 1}
    for mu in dominant[1:]:
        total = 0
        for alpha in rs.positive_roots_weight:
            k = 1
            while True:
                nu = add(mu, scale(k, alpha))
                m = mult.get(rs.dominant_conjugate(nu), 0)
                if m == 0:
                    break
                total += m * rs.inner_product(nu, alpha)
                k += 1
        mu_rho = add(mu, rs.rho)
        denominator = top_norm - rs.inner_product(mu_rho, mu_rho)
        value = Fraction(2 * total, denominator)
        assert value.denominator == 1 and value > 0, (lam, mu, value)
        mult[mu] = int(value)
    return tuple(mult.items())


@lru_cache(maxsize=None)
def weyl_character(rs: RootSystem, lam: Weight) -> FormalCharacter:
    """ch Delta(lam) via Freudenthal on dominant weights, spread over W-orbits."""
    lam = require_dominant(rs, lam)
    mapping: Dict[Weight, int] = {}
    for mu, m in _dominant_multiplicities(rs, lam):
        for nu in rs.weyl_orbit(mu):
            mapping[nu] = m
    return FormalCharacter.from_mapping(rs, mapping)


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    lam = require_dominant(rs, lam)
    lam_rho = add(lam, rs.rho)
    value = Fraction(1)
    for index in range(rs.num_positive_roots):
        value *= Fraction(rs.pairing(lam_rho, index), rs.pairing(rs.rho, index))
    assert value.denominator == 1
    return int(value)


def expand_chi(rs: RootSystem, combination: Iterable[Tuple[Weight, int]]) -> FormalCharacter:
    """Sum of c * chi(mu) over (mu, c) pairs."""
    total: Dict[Weight, int] = {}
    for mu, c in combination:
        for w, m in weyl_character(rs, mu).terms:
            total[w] = total.get(w, 0) + c * m
    return FormalCharacter.from_mapping(rs, total)


# =============================================================================
# RING OPERATIONS
# =============================================================================

def tensor(c1: FormalCharacter, c2: FormalCharacter) -> FormalCharacter:
    c1._check_same(c2)
    total: Dict[Weight, int] = {}
    for w1, m1 in c1.terms:
        for w2, m2 in c2.terms:
            w = add(w1, w2)
            total[w] = total.get(w, 0) + m1 * m2
    return FormalCharacter.from_mapping(c1.root_system, total)


def frobenius_twist(c: FormalCharacter, p: int) -> FormalCharacter:
    if p < 2:
        raise DomainError(f"Frobenius twist needs p >= 2, got {p}", p=p)
    return FormalCharacter.from_mapping(c.root_system, {scale(p, w): m for w, m in c.terms})


def dual_character(c: FormalCharacter) -> FormalCharacter:
    """ch V* from ch V."""
    return FormalCharacter.from_mapping(c.root_system, {scale(-1, w): m for w, m in c.terms})


def character_leq(c1: FormalCharacter, c2: FormalCharacter) -> bool:
    """Coefficient-wise c1 <= c2."""
    c1._check_same(c2)
    weights = set(c1.as_dict) | set(c2.as_dict)
    return all(c1.mult(w) <= c2.mult(w) for w in weights)


# =============================================================================
# GREEDY DECOMPOSITION
# =============================================================================

def maximal_weights(rs: RootSystem, weights: Iterable[Weight]) -> List[Weight]:
    """Elements not strictly below another element in dominance order."""
    weights = list(weights)
    return [
        w for w in weights
        if not any(v != w and dominance_leq(rs, w, v) for v in weights)
    ]


def greedy_decompose(
    c: FormalCharacter,
    basis: Callable[[Weight], FormalCharacter],
    tie_break: Optional[Callable[[Weight], object]] = None,
) -> List[Tuple[Weight, int]]:
    """
    Write c as sum m_nu * basis(nu).

    Each round takes a maximal dominant weight of the residual and subtracts
    the matching multiple of its basis character. basis(nu) must be
    e(nu) + strictly lower terms.

    By default the pick is the dominant weight of greatest height, ties
    broken lexicographically; height grows strictly along the dominance
    order, so that weight is maximal. With `tie_break` the maximal weights
    are computed explicitly and the largest under the key is taken.
    """
    rs = c.root_system
    residual = dict(c.as_dict)
    result: List[Tuple[Weight, int]] = []
    while residual:
        candidates = [w for w in residual if is_dominant(w)]
        if not candidates:
            raise DecompositionError(
                "Residual has no dominant weight (input not W-invariant or basis incomplete)",
                residual,
            )
        if tie_break is None:
            top = max(candidates, key=lambda w: (rs.height(w), w))
        else:
            top = max(maximal_weights(rs, candidates), key=tie_break)
        m = residual[top]
        piece = basis(top)
        if piece.mult(top) != 1:
            raise DecompositionError(f"Basis character at {top} is not unitriangular", residual)
        for w, k in piece.terms:
            value = residual.get(w, 0) - m * k
            if value:
                residual[w] = value
            else:
                residual.pop(w, None)
        result.append((top, m))
    return result


def recombine(rs: RootSystem, pieces: Iterable[Tuple[Weight, int]],
              basis: Callable[[Weight], FormalCharacter]) -> FormalCharacter:
    """Inverse of greedy_decompose."""
    total = FormalCharacter.zero(rs)
    for mu, m in pieces:
        total = total + basis(mu).scaled(m)
    return total
