"""
lcf.py - Lusztig character formula and LCF-assumed irreducible characters

For dominant lambda with (x, lambda-) = locate(lambda):

    chi_KL(lambda) = sum over y <= x with y.lambda- dominant of
                     (-1)^(l(x)-l(y)) P_{y,x}(1) chi(y.lambda-)

Terms are collected per weight. For singular lambda- every weight stands
for one stabilizer coset, labelled by its minimal representative.

ch L(lambda) is then *defined* (LCF-assumed mode) as chi_KL(lambda0)
tensored with the Frobenius twist of ch L(lambda1), lambda = lambda0 + p*lambda1.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from alcove import dot_action, is_regular, length, locate, lower_interval, stabilizer_walls
from characters import (
    FormalCharacter, dominant_weights_below, expand_chi, frobenius_twist, greedy_decompose, tensor,
    weyl_character,
)
from errors import DomainError, NegativeMultiplicityError
from klpoly import evaluate_at_one, kl_polynomial
from rootdata import RootSystem, Weight, check_prime, divmod_weight, is_dominant, require_dominant

LCF_MODE = 'LCF-assumed'
LCF_READING_NOTE = "LCF sum taken over y <= x with y.lambda- dominant"


# =============================================================================
# CHI COMBINATIONS
# =============================================================================

@dataclass(frozen=True)
class ChiCombination:
    """sum c_i * chi(mu_i); weights dominant and distinct, highest first."""
    terms: Tuple[Tuple[Weight, int], ...]
    singular: bool = False

    def expand(self, rs: RootSystem) -> FormalCharacter:
        return expand_chi(rs, self.terms)

    def coefficient(self, weight: Weight) -> int:
        return dict(self.terms).get(tuple(weight), 0)

    def to_json(self) -> List[Dict]:
        return [{'weight': list(w), 'coeff': c} for w, c in self.terms]


def require_lcf_prime(rs: RootSystem, p: int) -> int:
    check_prime(p)
    if p < rs.coxeter_number:
        raise DomainError(
            f"p = {p} is below the Coxeter number h = {rs.coxeter_number} of {rs.cartan_type}; "
            f"there are no p-regular weights",
            p=p, h=rs.coxeter_number,
        )
    return p


# =============================================================================
# LUSZTIG CHARACTER FORMULA
# =============================================================================

def chi_kl(rs: RootSystem, lam: Weight, p: int) -> ChiCombination:
    lam = require_dominant(rs, lam)
    require_lcf_prime(rs, p)
    return _chi_kl(rs, lam, p)


@lru_cache(maxsize=None)
def _chi_kl(rs: RootSystem, lam: Weight, p: int) -> ChiCombination:
    x, antidominant = locate(rs, lam, p)
    lx = length(x)
    totals: Dict[Weight, int] = {}
    for y in lower_interval(x):
        mu = dot_action(y, antidominant, p)
        if not is_dominant(mu):
            continue
        sign = -1 if (lx - length(y)) % 2 else 1
        totals[mu] = totals.get(mu, 0) + sign * evaluate_at_one(kl_polynomial(y, x))
    terms = sorted(
        ((mu, c) for mu, c in totals.items() if c),
        key=lambda t: (-rs.height(t[0]), tuple(-c for c in t[0])),
    )
    return ChiCombination(tuple(terms), singular=bool(stabilizer_walls(rs, antidominant, p)))


# =============================================================================
# IRREDUCIBLE CHARACTERS (LCF-assumed)
# =============================================================================

def ch_irreducible(rs: RootSystem, lam: Weight, p: int) -> FormalCharacter:
    lam = require_dominant(rs, lam)
    require_lcf_prime(rs, p)
    return _ch_irreducible(rs, lam, p)


@lru_cache(maxsize=None)
def _ch_irreducible(rs: RootSystem, lam: Weight, p: int) -> FormalCharacter:
    lam0, lam1 = divmod_weight(lam, p)
    result = _chi_kl(rs, lam0, p).expand(rs)
    if any(lam1):
        result = tensor(result, frobenius_twist(_ch_irreducible(rs, lam1, p), p))
    for weight, m in result.terms:
        if m < 0:
            raise NegativeMultiplicityError(lam, weight, m)
    return result


def lcf_weights(rs: RootSystem, lam: Weight, p: int) -> List[Weight]:
    """Restricted weights whose chi_KL enters ch L(lam): its base-p digits."""
    digits = []
    current = tuple(lam)
    while True:
        lam0, current = divmod_weight(current, p)
        if lam0 not in digits:
            digits.append(lam0)
        if not any(current):
            return digits


def decomposition_numbers(rs: RootSystem, lam: Weight, p: int) -> List[Tuple[Weight, int]]:
    """[Delta(lam) : L(mu)] by peeling LCF-assumed irreducibles off ch Delta(lam)."""
    lam = require_dominant(rs, lam)
    require_lcf_prime(rs, p)
    return greedy_decompose(weyl_character(rs, lam), lambda mu: _ch_irreducible(rs, mu, p))


def lcf_hypothesis_poset(rs: RootSystem, lam: Weight, p: int) -> List[Weight]:
    """Regular dominant weights strictly below lam."""
    lam = require_dominant(rs, lam)
    return [mu for mu in dominant_weights_below(rs, lam)[1:] if is_regular(rs, mu, p)]
