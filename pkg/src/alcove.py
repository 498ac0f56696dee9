"""
alcove.py - The affine p-Weyl group W_p, its dot action and alcove geometry

HOW IT WORKS:
=============
An element x = (w, gamma) acts on weights by the dot action

    x . lambda = w(lambda + rho) + p*gamma - rho

with w a finite Weyl group element (a matrix on weight coords) and gamma a
root-lattice vector (root coords). The base alcove is

    C- = { v : -p < <v + rho, alpha^v> < 0  for all alpha > 0 }

and its walls generate W_p as a Coxeter group:

    wall 0 .. rank-1 : <v + rho, alpha_i^v> = 0     (finite walls)
    wall rank        : <v + rho, alpha_0^v> = -p    (affine wall)

Lengths, descents, Bruhat order and reduced words never depend on p: the
group and its generators are the same for every p, only the dot action
scales. That is why most functions here take p only for the call shape.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

from errors import DomainError, IntervalCapError
from rootdata import (
    CartanType, Matrix, RootSystem, Weight, add, build_root_system, identity_matrix, is_dominant,
    mat_mul, mat_vec, require_dominant, scale, sub,
)


# =============================================================================
# CONFIGURATION
# =============================================================================

DEFAULT_INTERVAL_CAP = 20_000

_settings = {'interval_cap': DEFAULT_INTERVAL_CAP}


def set_interval_cap(cap: int) -> None:
    if cap < 1:
        raise DomainError(f"Interval cap must be positive, got {cap}", cap=cap)
    _settings['interval_cap'] = int(cap)


def get_interval_cap() -> int:
    return _settings['interval_cap']


# =============================================================================
# ELEMENTS
# =============================================================================

@dataclass(frozen=True)
class AffineElement:
    cartan_type: CartanType
    w: Matrix        # finite part, acting on weight coords
    gamma: Weight    # translation, root coords

    @property
    def root_system(self) -> RootSystem:
        return build_root_system(self.cartan_type)

    def __mul__(self, other: 'AffineElement') -> 'AffineElement':
        return multiply(self, other)


@dataclass(frozen=True)
class AlcoveCoords:
    """k[index] for every positive root: k*p < <v+rho, alpha^v> < (k+1)*p inside the alcove."""
    k: Tuple[int, ...]

    @property
    def distance(self) -> int:
        """Hyperplanes separating this alcove from C-."""
        return sum(abs(k + 1) for k in self.k)


def identity(t: CartanType) -> AffineElement:
    rs = build_root_system(t)
    return AffineElement(t, identity_matrix(rs.rank), tuple([0] * rs.rank))


@lru_cache(maxsize=None)
def generators(t: CartanType) -> Tuple[AffineElement, ...]:
    """Wall reflections of C-, in wall order (finite walls, then the affine wall)."""
    rs = build_root_system(t)
    zero = tuple([0] * rs.rank)
    gens = [AffineElement(t, rs.reflection_matrix(i), zero) for i in range(rs.rank)]
    affine = AffineElement(
        t,
        rs.root_reflection_matrix(rs.highest_short_index),
        tuple(-c for c in rs.highest_short_root),
    )
    gens.append(affine)
    return tuple(gens)


def _act_on_root(rs: RootSystem, w: Matrix, gamma: Weight) -> Weight:
    return rs.weight_to_root(mat_vec(w, rs.root_to_weight(gamma)))


def multiply(x: AffineElement, y: AffineElement) -> AffineElement:
    """(t_a w)(t_b v) = t_{a + w b} (w v)."""
    rs = x.root_system
    return AffineElement(
        x.cartan_type,
        mat_mul(x.w, y.w),
        add(x.gamma, _act_on_root(rs, x.w, y.gamma)),
    )


def dot_action(x: AffineElement, weight: Weight, p: int) -> Weight:
    rs = x.root_system
    shifted = mat_vec(x.w, add(weight, rs.rho))
    return sub(add(shifted, scale(p, rs.root_to_weight(x.gamma))), rs.rho)


# =============================================================================
# LENGTH AND DESCENTS
# =============================================================================

@lru_cache(maxsize=None)
def alcove_of(x: AffineElement) -> AlcoveCoords:
    """Alcove coordinates of x.C- (the same for every p)."""
    rs = x.root_system
    h = rs.coxeter_number
    # x applied to the interior point -rho/h of C- (p scaled out), times h
    point = add(mat_vec(x.w, scale(-1, rs.rho)), scale(h, rs.root_to_weight(x.gamma)))
    return AlcoveCoords(tuple(rs.pairing(point, i) // h for i in range(rs.num_positive_roots)))


def length(x: AffineElement, p: Optional[int] = None) -> int:
    """Number of hyperplanes separating x.C- from C-."""
    return alcove_of(x).distance


def is_left_descent(s: int, x: AffineElement) -> bool:
    rs = x.root_system
    k = alcove_of(x).k
    if s < rs.rank:
        return k[s] >= 0
    return k[rs.highest_short_index] <= -2


def left_descents(x: AffineElement) -> List[int]:
    return [s for s in range(x.root_system.rank + 1) if is_left_descent(s, x)]


def left_multiply(s: int, x: AffineElement) -> AffineElement:
    return multiply(generators(x.cartan_type)[s], x)


def right_multiply(x: AffineElement, s: int) -> AffineElement:
    return multiply(x, generators(x.cartan_type)[s])


@lru_cache(maxsize=None)
def reduced_word(x: AffineElement) -> Tuple[int, ...]:
    """Lexicographically smallest reduced word (wall indices)."""
    word = []
    while True:
        descents = left_descents(x)
        if not descents:
            return tuple(word)
        s = descents[0]
        word.append(s)
        x = left_multiply(s, x)


def from_word(t: CartanType, word) -> AffineElement:
    gens = generators(t)
    x = identity(t)
    for s in word:
        if not 0 <= int(s) < len(gens):
            raise DomainError(f"Wall index {s} out of range 0..{len(gens) - 1}", wall=s)
        x = multiply(x, gens[int(s)])
    return x


def inverse(x: AffineElement) -> AffineElement:
    return from_word(x.cartan_type, reversed(reduced_word(x)))


def elements_up_to_length(t: CartanType, n: int) -> List[AffineElement]:
    """All elements of length <= n, sorted by (length, reduced word)."""
    gens = generators(t)
    seen = {identity(t)}
    frontier = list(seen)
    for _ in range(n):
        new = []
        for x in frontier:
            for g in gens:
                y = multiply(x, g)
                if y not in seen and length(y) <= n:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return sorted(seen, key=lambda z: (length(z), reduced_word(z)))


# =============================================================================
# BRUHAT ORDER
# =============================================================================

@lru_cache(maxsize=None)
def _bruhat(y: AffineElement, x: AffineElement) -> bool:
    if y == x:
        return True
    ly = length(y)
    if ly >= length(x):
        return False
    if ly == 0:
        return True
    s = left_descents(x)[0]
    sx = left_multiply(s, x)
    sy = left_multiply(s, y)
    if length(sy) < ly:
        return _bruhat(sy, sx)
    return _bruhat(y, sx)


def bruhat_leq(y: AffineElement, x: AffineElement, p: Optional[int] = None) -> bool:
    return _bruhat(y, x)


@lru_cache(maxsize=4096)
def _interval(x: AffineElement, cap: int) -> Tuple[AffineElement, ...]:
    word = reduced_word(x)
    gens = generators(x.cartan_type)
    current = {identity(x.cartan_type)}
    # products of subwords of a reduced word are exactly [e, x]
    for s in word:
        current |= {multiply(z, gens[s]) for z in current}
        if len(current) > cap:
            raise IntervalCapError(cap, word)
    return tuple(sorted(current, key=lambda z: (length(z), reduced_word(z))))


def lower_interval(x: AffineElement, p: Optional[int] = None,
                   cap: Optional[int] = None) -> Tuple[AffineElement, ...]:
    """The Bruhat interval [e, x], sorted by (length, reduced word)."""
    return _interval(x, cap if cap is not None else get_interval_cap())


# =============================================================================
# WEIGHT PREDICATES
# =============================================================================

def is_regular(rs: RootSystem, weight: Weight, p: int) -> bool:
    shifted = add(weight, rs.rho)
    return all(rs.pairing(shifted, i) % p != 0 for i in range(rs.num_positive_roots))


def is_restricted(rs: RootSystem, weight: Weight, p: int) -> bool:
    return all(0 <= c < p for c in weight)


def in_jantzen_region(rs: RootSystem, weight: Weight, p: int) -> bool:
    h = rs.coxeter_number
    return is_dominant(weight) and rs.pairing_with_highest_short(add(weight, rs.rho)) <= p * (p - h + 2)


def alcove_coordinates(rs: RootSystem, weight: Weight, p: int) -> AlcoveCoords:
    """Alcove of a p-regular weight."""
    if not is_regular(rs, weight, p):
        raise DomainError(f"Weight {weight} is not {p}-regular; it lies on a wall", weight=weight, p=p)
    shifted = add(weight, rs.rho)
    return AlcoveCoords(tuple(rs.pairing(shifted, i) // p for i in range(rs.num_positive_roots)))


def stabilizer_walls(rs: RootSystem, antidominant: Weight, p: int) -> List[int]:
    """Walls of C- through a weight of its closure."""
    shifted = add(antidominant, rs.rho)
    walls = [i for i in range(rs.rank) if rs.pairing(shifted, i) == 0]
    if rs.pairing_with_highest_short(shifted) == -p:
        walls.append(rs.rank)
    return walls


# =============================================================================
# LOCATE
# =============================================================================

def _fold(rs: RootSystem, weight: Weight, p: int) -> Tuple[Tuple[int, ...], Weight]:
    """Reflect lambda+rho through walls of C- until it lands in the closure of C-."""
    n = rs.rank
    alpha0 = rs.root_to_weight(rs.highest_short_root)
    u = add(weight, rs.rho)
    word = []
    while True:
        for i in range(n):
            if rs.pairing(u, i) > 0:
                u = rs.simple_reflection(i, u)
                word.append(i)
                break
        else:
            level = rs.pairing_with_highest_short(u)
            if level < -p:
                u = sub(u, scale(level + p, alpha0))
                word.append(n)
                continue
            return tuple(word), sub(u, rs.rho)


@lru_cache(maxsize=None)
def _locate(rs: RootSystem, weight: Weight, p: int) -> Tuple[AffineElement, Weight]:
    word, antidominant = _fold(rs, weight, p)
    return from_word(rs.cartan_type, word), antidominant


def locate(rs: RootSystem, weight: Weight, p: int) -> Tuple[AffineElement, Weight]:
    """
    (x, lambda-) with lambda = x . lambda-, lambda- in the closure of C-,
    x of minimal length.

    Only walls that strictly separate the point from C- are crossed, so
    every crossing removes one separating hyperplane and the word is
    reduced. For singular weights that gives the minimal coset
    representative.
    """
    weight = require_dominant(rs, weight)
    return _locate(rs, weight, p)


def linked(rs: RootSystem, lam: Weight, mu: Weight, p: int) -> bool:
    """Same W_p dot-orbit."""
    return _fold(rs, tuple(lam), p)[1] == _fold(rs, tuple(mu), p)[1]
