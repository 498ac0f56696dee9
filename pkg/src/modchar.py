"""
modchar.py - Characters of Delta^p, nabla_p, Delta^red and nabla_red

    Delta^p(lam)   = L(lam0) (x) Delta(lam1)^[1]
    Delta^red(lam) = Delta^red(lam0) (x) Delta(lam1)^[1],  ch Delta^red(lam0) = chi_KL(lam0)

In LCF-assumed mode both come out equal; they are built along different
routes and the equality is checked every time Delta^red is requested.
"""

from functools import lru_cache
from typing import Tuple

from characters import FormalCharacter, frobenius_twist, tensor, weyl_character
from errors import ConsistencyError
from lcf import ch_irreducible, chi_kl, require_lcf_prime
from rootdata import RootSystem, Weight, divmod_weight, require_dominant


def steinberg_decompose(rs: RootSystem, lam: Weight, p: int) -> Tuple[Weight, Weight]:
    """lam = lam0 + p*lam1 with lam0 restricted."""
    lam = require_dominant(rs, lam)
    return divmod_weight(lam, p)


def _twisted_weyl(rs: RootSystem, lam1: Weight, p: int) -> FormalCharacter:
    return frobenius_twist(weyl_character(rs, lam1), p)


def ch_delta_p(rs: RootSystem, lam: Weight, p: int) -> FormalCharacter:
    lam0, lam1 = steinberg_decompose(rs, lam, p)
    require_lcf_prime(rs, p)
    return _delta_p(rs, lam0, lam1, p)


@lru_cache(maxsize=None)
def _delta_p(rs: RootSystem, lam0: Weight, lam1: Weight, p: int) -> FormalCharacter:
    return tensor(ch_irreducible(rs, lam0, p), _twisted_weyl(rs, lam1, p))


def ch_nabla_p(rs: RootSystem, lam: Weight, p: int) -> FormalCharacter:
    """Same character as Delta^p: ch nabla(lam1) = ch Delta(lam1)."""
    return ch_delta_p(rs, lam, p)


def ch_delta_red(rs: RootSystem, lam: Weight, p: int) -> FormalCharacter:
    lam0, lam1 = steinberg_decompose(rs, lam, p)
    require_lcf_prime(rs, p)
    return _delta_red(rs, lam0, lam1, p)


@lru_cache(maxsize=None)
def _delta_red(rs: RootSystem, lam0: Weight, lam1: Weight, p: int) -> FormalCharacter:
    result = tensor(chi_kl(rs, lam0, p).expand(rs), _twisted_weyl(rs, lam1, p))
    other = _delta_p(rs, lam0, lam1, p)
    if result != other:
        lam = tuple(a + p * b for a, b in zip(lam0, lam1))
        raise ConsistencyError(
            f"ch Delta^red{lam} differs from ch Delta^p{lam} in {other.cartan_type}, p = {p}",
            weight=lam, p=p,
        )
    return result


def ch_nabla_red(rs: RootSystem, lam: Weight, p: int) -> FormalCharacter:
    return ch_delta_red(rs, lam, p)
