"""
g1.py - G1T characters: baby Verma modules, Q^1(lam0) by Brauer reciprocity, Q#

HOW IT WORKS:
=============
1. ch Z^1(mu) = e(mu) * prod over alpha > 0 of (1 + e(-alpha) + ... + e(-(p-1)alpha))
2. G1T simples are L^1(s) = L(s0) (x) e(p*s1) for s = s0 + p*s1, s0 restricted,
   so any G1T character splits greedily in that basis (top term s)
3. Brauer reciprocity: ch Q^1(lam0) = sum over mu of [Z^1(mu) : L^1(lam0)] ch Z^1(mu)
   The mu that can contribute lie in the box lam0 + [0, (p-1)*2rho] (root coords)
4. Q#(lam) = Q^1(lam0) (x) nabla(lam1)^[1]
"""

from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Tuple

from characters import FormalCharacter, character_leq, frobenius_twist, tensor, weyl_character
from errors import ConsistencyError, DecompositionError, DomainError, ScanRegionError
from lcf import ch_irreducible, require_lcf_prime
from modchar import ch_nabla_p, ch_nabla_red
from rootdata import (
    RootSystem, Weight, add, check_weight, divmod_weight, mat_vec, require_dominant, scale, sub,
)


# =============================================================================
# CONFIGURATION
# =============================================================================

DEFAULT_SCAN_CAP = 200_000

_settings = {'scan_cap': DEFAULT_SCAN_CAP}


def set_scan_cap(cap: int) -> None:
    if cap < 1:
        raise DomainError(f"Scan cap must be positive, got {cap}", cap=cap)
    _settings['scan_cap'] = int(cap)


def get_scan_cap() -> int:
    return _settings['scan_cap']


# =============================================================================
# BABY VERMA MODULES
# =============================================================================

@lru_cache(maxsize=None)
def _box_character(rs: RootSystem, p: int) -> FormalCharacter:
    result = FormalCharacter.monomial(rs, tuple([0] * rs.rank))
    for alpha in rs.positive_roots_weight:
        factor = FormalCharacter.from_mapping(rs, {scale(-k, alpha): 1 for k in range(p)})
        result = tensor(result, factor)
    return result


def baby_verma_char(rs: RootSystem, mu: Weight, p: int) -> FormalCharacter:
    mu = check_weight(rs, mu)
    if p < 2:
        raise DomainError(f"p must be at least 2, got {p}", p=p)
    return _box_character(rs, p).shifted(mu)


def g1t_simple_char(rs: RootSystem, sigma: Weight, p: int) -> FormalCharacter:
    """ch L^1(sigma) = ch L(sigma0) e(p*sigma1)."""
    sigma0, sigma1 = divmod_weight(tuple(sigma), p)
    return ch_irreducible(rs, sigma0, p).shifted(scale(p, sigma1))


def decompose_g1t(c: FormalCharacter, p: int, genuine: bool = True) -> List[Tuple[Weight, int]]:
    """
    [c : L^1(sigma)] for every sigma, highest first.

    Each round the residual's weight of greatest height (then lexicographically
    largest) is a maximal weight; its L^1 character is subtracted.
    With `genuine` a negative coefficient raises.
    """
    rs = c.root_system
    require_lcf_prime(rs, p)
    residual = dict(c.as_dict)
    result: List[Tuple[Weight, int]] = []
    while residual:
        top = max(residual, key=lambda w: (rs.height(w), w))
        m = residual[top]
        if genuine and m < 0:
            raise DecompositionError(f"Negative G1T multiplicity {m} at {top}", residual)
        for w, k in g1t_simple_char(rs, top, p).terms:
            value = residual.get(w, 0) - m * k
            if value:
                residual[w] = value
            else:
                residual.pop(w, None)
        result.append((top, m))
    return result


@lru_cache(maxsize=None)
def _restricted_verma_labels(rs: RootSystem, r: Weight, p: int) -> Dict[Weight, int]:
    return dict(decompose_g1t(baby_verma_char(rs, r, p), p))


def verma_multiplicity(rs: RootSystem, mu: Weight, sigma: Weight, p: int) -> int:
    """[Z^1(mu) : L^1(sigma)], reduced to a restricted mu by a p-translation."""
    r, shift = divmod_weight(tuple(mu), p)
    return _restricted_verma_labels(rs, r, p).get(sub(tuple(sigma), scale(p, shift)), 0)


# =============================================================================
# Q^1 AND Q#
# =============================================================================

def _expected_top(rs: RootSystem, lam0: Weight, p: int) -> Weight:
    """2(p-1)rho + w0 lam0."""
    return add(scale(2 * (p - 1), rs.rho), mat_vec(rs.w0_matrix, lam0))


def _scan_box(rs: RootSystem, p: int) -> List[range]:
    two_rho = rs.root_coordinates(scale(2, rs.rho))
    return [range(0, (p - 1) * int(c) + 1) for c in two_rho]


@lru_cache(maxsize=None)
def _q1_hat_terms(rs: RootSystem, lam0: Weight, p: int) -> Tuple[Tuple[Weight, int], ...]:
    box = _scan_box(rs, p)
    size = 1
    for r in box:
        size *= len(r)
    if size > get_scan_cap():
        raise ScanRegionError(
            f"Reciprocity scan for Q^1{lam0} needs {size} weights, over the scan cap of {get_scan_cap()}",
            size=size, cap=get_scan_cap(),
        )
    terms = []
    for steps in product(*box):
        mu = add(lam0, rs.root_to_weight(steps))
        m = verma_multiplicity(rs, mu, lam0, p)
        if m:
            terms.append((mu, m))
    terms.sort(key=lambda t: (-rs.height(t[0]), tuple(-c for c in t[0])))
    return tuple(terms)


def q1_hat_terms(rs: RootSystem, lam0: Weight, p: int) -> List[Tuple[Weight, int]]:
    """(mu, [Z^1(mu) : L^1(lam0)]) for every contributing mu, highest first."""
    lam0 = require_dominant(rs, lam0)
    if any(c >= p for c in lam0):
        raise DomainError(f"Weight {lam0} is not {p}-restricted", weight=lam0, p=p)
    require_lcf_prime(rs, p)
    return list(_q1_hat_terms(rs, lam0, p))


@lru_cache(maxsize=None)
def _q1_hat(rs: RootSystem, lam0: Weight, p: int) -> FormalCharacter:
    total: Dict[Weight, int] = {}
    for mu, m in _q1_hat_terms(rs, lam0, p):
        for w, k in baby_verma_char(rs, mu, p).terms:
            total[w] = total.get(w, 0) + m * k
    result = FormalCharacter.from_mapping(rs, total)

    expected = _expected_top(rs, lam0, p)
    top_height = rs.height(expected)
    above = [w for w in result.support if rs.height(w) >= top_height and w != expected]
    if result.mult(expected) != 1 or above:
        raise ConsistencyError(
            f"ch Q^1{lam0} does not have the single top weight {expected}",
            weight=lam0, expected=expected, found=above,
        )
    return result


def q1_hat_char(rs: RootSystem, lam0: Weight, p: int) -> FormalCharacter:
    q1_hat_terms(rs, lam0, p)
    return _q1_hat(rs, tuple(lam0), p)


def q_sharp_top_weight(rs: RootSystem, lam: Weight, p: int) -> Weight:
    """2(p-1)rho + w0 lam0 + p lam1."""
    lam = require_dominant(rs, lam)
    lam0, lam1 = divmod_weight(lam, p)
    return add(_expected_top(rs, lam0, p), scale(p, lam1))


def q_sharp_char(rs: RootSystem, lam: Weight, p: int) -> FormalCharacter:
    lam = require_dominant(rs, lam)
    lam0, lam1 = divmod_weight(lam, p)
    result = q1_hat_char(rs, lam0, p)
    if any(lam1):
        result = tensor(result, frobenius_twist(weyl_character(rs, lam1), p))
    return result


def p_sharp_char(rs: RootSystem, lam: Weight, p: int) -> FormalCharacter:
    """Same character as Q#: ch Delta(lam1) = ch nabla(lam1)."""
    return q_sharp_char(rs, lam, p)


def check_socle_bound(rs: RootSystem, mu: Weight, p: int,
                      q_sharp: Optional[FormalCharacter] = None) -> bool:
    """ch nabla_p(mu) <= ch nabla_red(mu) <= ch Q#(mu), coefficient-wise."""
    mu = require_dominant(rs, mu)
    nabla_p = ch_nabla_p(rs, mu, p)
    nabla_red = ch_nabla_red(rs, mu, p)
    upper = q_sharp if q_sharp is not None else q_sharp_char(rs, mu, p)
    return character_leq(nabla_p, nabla_red) and character_leq(nabla_red, upper)


def hypothesis_flags(rs: RootSystem, p: int) -> Dict:
    """p >= 2h-2 bookkeeping carried by every G1T result."""
    bound = 2 * rs.coxeter_number - 2
    notes = []
    if p < bound:
        notes.append(f"p < 2h-2 = {bound}: the G-structure on Q^1 / Q# is not guaranteed")
    return {'p_ge_2h_minus_2': p >= bound, 'notes': notes}


def reciprocity_mass(rs: RootSystem, p: int) -> Tuple[int, int]:
    """(sum over restricted lam0 of dim L(lam0) * mass Q^1(lam0), p^dim g)."""
    require_lcf_prime(rs, p)
    total = 0
    for lam0 in product(range(p), repeat=rs.rank):
        total += ch_irreducible(rs, lam0, p).dimension * q1_hat_char(rs, lam0, p).dimension
    dim_g = 2 * rs.num_positive_roots + rs.rank
    return total, p ** dim_g
