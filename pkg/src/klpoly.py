"""
klpoly.py - Kazhdan-Lusztig polynomials of the affine Weyl group

HOW IT WORKS:
=============
For y <= x pick a left descent s of x (sx < x), put v = sx and c = 1 if
sy < y else 0. Then

    P_{y,x} = q^(1-c) P_{sy,v} + q^c P_{y,v}
              - sum over y <= z < v with sz < z of mu(z,v) q^((l(x)-l(z))/2) P_{y,z}

where mu(z,v) is the coefficient of q^((l(v)-l(z)-1)/2) in P_{z,v}.

The group (and so every P) is the same for every p, so there is one
KLTable per Cartan type, keyed by lexicographically smallest reduced words.
"""

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

from alcove import (
    AffineElement, bruhat_leq, from_word, left_descents, left_multiply, length, lower_interval,
    reduced_word,
)
from errors import DomainError
from rootdata import CartanType

Word = Tuple[int, ...]


# =============================================================================
# POLYNOMIALS
# =============================================================================

@dataclass(frozen=True)
class KLPolynomial:
    """Integer polynomial in q; coefficients[i] is the coefficient of q^i, no trailing zeros."""
    coefficients: Tuple[int, ...] = ()

    @classmethod
    def of(cls, coefficients: Iterable[int]) -> 'KLPolynomial':
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def coefficient(self, i: int) -> int:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def shifted(self, k: int) -> 'KLPolynomial':
        """Multiply by q^k."""
        if self.is_zero():
            return self
        return KLPolynomial((0,) * k + self.coefficients)

    def __add__(self, other: 'KLPolynomial') -> 'KLPolynomial':
        n = max(len(self.coefficients), len(other.coefficients))
        return KLPolynomial.of(self.coefficient(i) + other.coefficient(i) for i in range(n))

    def __sub__(self, other: 'KLPolynomial') -> 'KLPolynomial':
        return self + other.scaled(-1)

    def __mul__(self, other: 'KLPolynomial') -> 'KLPolynomial':
        if self.is_zero() or other.is_zero():
            return ZERO
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return KLPolynomial.of(out)

    def scaled(self, k: int) -> 'KLPolynomial':
        return KLPolynomial.of(k * c for c in self.coefficients)

    def __str__(self) -> str:
        if self.is_zero():
            return '0'
        parts = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                head = '' if c == 1 else ('-' if c == -1 else f"{c}*")
                parts.append(f"{head}q" + (f"^{i}" if i > 1 else ''))
        return ' + '.join(parts).replace('+ -', '- ')


ZERO = KLPolynomial(())
ONE = KLPolynomial((1,))


def evaluate_at_one(poly: KLPolynomial) -> int:
    return sum(poly.coefficients)


# =============================================================================
# MEMO TABLE
# =============================================================================

class KLTable:
    """
    Shared compute-once memo of P_{y,x} for one affine type.

    Only pairs with y < x are stored. Concurrent fills of the same key may
    both compute; the first stored value wins and both are equal.
    """

    def __init__(self, cartan_type: CartanType):
        self.cartan_type = cartan_type
        self._entries: Dict[Tuple[Word, Word], Tuple[int, ...]] = {}
        self._mu_lists: Dict[Word, List[Tuple[AffineElement, int]]] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._entries)

    @property
    def coxeter_type(self) -> str:
        return self.cartan_type.affine_name

    def entries(self) -> List[Tuple[Word, Word, Tuple[int, ...]]]:
        """Sorted (y word, x word, coefficients) triples."""
        with self._lock:
            items = list(self._entries.items())
        return sorted((y, x, coeffs) for (y, x), coeffs in items)

    def load_entries(self, entries: Iterable[Tuple[Word, Word, Tuple[int, ...]]]) -> int:
        """Merge pre-validated entries; returns how many were new."""
        added = 0
        with self._lock:
            for y, x, coeffs in entries:
                key = (tuple(y), tuple(x))
                if key not in self._entries:
                    self._entries[key] = tuple(coeffs)
                    added += 1
        return added

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()
            self._mu_lists.clear()

    def polynomial(self, y: AffineElement, x: AffineElement,
                   descent: Optional[int] = None) -> KLPolynomial:
        """
        P_{y,x}. With `descent` the top step uses that left descent of x and
        bypasses the memo for (y, x), so two descents can be compared.
        """
        if descent is not None and descent not in left_descents(x):
            raise DomainError(f"Wall {descent} is not a left descent of {list(reduced_word(x))}", wall=descent)
        if y == x:
            return ONE
        if not bruhat_leq(y, x):
            return ZERO
        if descent is not None:
            return self._recurse(y, x, descent)
        key = (reduced_word(y), reduced_word(x))
        cached = self._entries.get(key)
        if cached is not None:
            return KLPolynomial(cached)
        value = self._recurse(y, x, left_descents(x)[0])
        with self._lock:
            self._entries.setdefault(key, value.coefficients)
        return value

    def mu(self, z: AffineElement, v: AffineElement) -> int:
        gap = length(v) - length(z)
        if gap <= 0 or gap % 2 == 0:
            return 0
        return self.polynomial(z, v).coefficient((gap - 1) // 2)

    def _recurse(self, y: AffineElement, x: AffineElement, s: int) -> KLPolynomial:
        v = left_multiply(s, x)
        sy = left_multiply(s, y)
        c = 1 if length(sy) < length(y) else 0
        result = self.polynomial(sy, v).shifted(1 - c) + self.polynomial(y, v).shifted(c)
        lx = length(x)
        for z, mu in self._mu_list(v):
            if length(left_multiply(s, z)) > length(z):
                continue
            if not bruhat_leq(y, z):
                continue
            result = result - self.polynomial(y, z).shifted((lx - length(z)) // 2).scaled(mu)
        return result

    def _mu_list(self, v: AffineElement) -> List[Tuple[AffineElement, int]]:
        """(z, mu(z,v)) for z < v with mu non-zero."""
        key = reduced_word(v)
        cached = self._mu_lists.get(key)
        if cached is not None:
            return cached
        out = []
        lv = length(v)
        for z in lower_interval(v):
            if (lv - length(z)) % 2 == 1:
                m = self.mu(z, v)
                if m:
                    out.append((z, m))
        self._mu_lists[key] = out
        return out


_tables: Dict[CartanType, KLTable] = {}
_tables_lock = threading.Lock()


def get_table(cartan_type: CartanType) -> KLTable:
    with _tables_lock:
        table = _tables.get(cartan_type)
        if table is None:
            table = _tables[cartan_type] = KLTable(cartan_type)
        return table


# =============================================================================
# PUBLIC OPERATIONS
# =============================================================================

def kl_polynomial(y: AffineElement, x: AffineElement, p: Optional[int] = None,
                  descent: Optional[int] = None) -> KLPolynomial:
    return get_table(x.cartan_type).polynomial(y, x, descent=descent)


def mu_coefficient(y: AffineElement, x: AffineElement, p: Optional[int] = None) -> int:
    return get_table(x.cartan_type).mu(y, x)


@lru_cache(maxsize=None)
def r_polynomial(y: AffineElement, x: AffineElement) -> KLPolynomial:
    """
    R_{y,x}: for a left descent s of x,
    R_{y,x} = R_{sy,sx} if sy < y, else (q-1) R_{y,sx} + q R_{sy,sx}.
    """
    if y == x:
        return ONE
    if not bruhat_leq(y, x):
        return ZERO
    s = left_descents(x)[0]
    sx = left_multiply(s, x)
    sy = left_multiply(s, y)
    if length(sy) < length(y):
        return r_polynomial(sy, sx)
    return KLPolynomial((-1, 1)) * r_polynomial(y, sx) + r_polynomial(sy, sx).shifted(1)


def kl_from_words(cartan_type: CartanType, y_word: Iterable[int], x_word: Iterable[int]) -> KLPolynomial:
    """P_{y,x} with y and x given as wall-index words."""
    return kl_polynomial(from_word(cartan_type, y_word), from_word(cartan_type, x_word))
