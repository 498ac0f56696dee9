"""
run_acceptance.py - Full-range acceptance checks for the filtration engine

Runs every check over its full range (the unit tests use smaller ones)
and prints a pass/fail line with the time taken. Exit status 0 iff all pass.
"""

import sys
import os
import time
from itertools import product

sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from alcove import elements_up_to_length, left_descents, length, lower_interval
from characters import weyl_character, weyl_dimension
from g1 import check_socle_bound, reciprocity_mass
from klpoly import ONE, kl_polynomial
from lcf import ch_irreducible, decomposition_numbers
from pfilt import batch_verify, decompose_weyl, verify_dimension_identity, weights_up_to
from rootdata import CartanType, build_root_system, parse_cartan_type


def rs_of(name):
    return build_root_system(parse_cartan_type(name))


# =============================================================================
# CHECKS
# =============================================================================

def sl2_sections(lam, p):
    """Closed form for SL2: greedy subtraction on explicit weight strings."""
    def string(n):
        return {n - 2 * k: 1 for k in range(n + 1)}

    def delta_red(mu):
        out = {}
        for a in string(mu % p):
            for b in string(mu // p):
                out[a + p * b] = out.get(a + p * b, 0) + 1
        return out

    residual = string(lam)
    sections = []
    while residual:
        top = max(residual)
        m = residual[top]
        for w, k in delta_red(top).items():
            value = residual.get(w, 0) - m * k
            if value:
                residual[w] = value
            else:
                residual.pop(w, None)
        sections.append(((top,), m))
    return sections


def check_sl2_oracle():
    rs = rs_of('A1')
    for p in (3, 5):
        for lam in range(31):
            report = decompose_weyl(rs, (lam,), p)
            if list(report.sections) != sl2_sections(lam, p) or not verify_dimension_identity(report):
                return False, f"A1 p={p} lambda={lam}"
    return True, "A1, p in {3, 5}, lambda <= 30"


def check_a2_nonnegative():
    rs = rs_of('A2')
    summary = batch_verify(rs, 5, 20)
    counts = summary.counts()
    ok = (counts['failures'] == 0
          and counts['nonnegative'] == counts['reports']
          and counts['residual_zero'] == counts['reports']
          and counts['dimension_identity'] == counts['reports'])
    return ok, f"{counts['reports']} weights, {counts['nonnegative']} nonnegative"


def check_kl():
    a1 = CartanType('A', 1)
    elements = elements_up_to_length(a1, 12)
    for x in elements:
        for y in lower_interval(x):
            if kl_polynomial(y, x) != ONE:
                return False, "affine A1"
    a2 = CartanType('A', 2)
    pairs = 0
    for x in elements_up_to_length(a2, 8):
        descents = left_descents(x)
        for y in lower_interval(x):
            poly = kl_polynomial(y, x)
            pairs += 1
            if poly.coefficient(0) != 1:
                return False, "constant term"
            if y != x and 2 * poly.degree > length(x) - length(y) - 1:
                return False, "degree bound"
            if len({kl_polynomial(y, x, descent=s) for s in descents}) != 1:
                return False, "descent choice"
    return True, f"{pairs} pairs in affine A2"


def check_characters():
    count = 0
    for name in ('A1', 'A2', 'B2', 'G2'):
        rs = rs_of(name)
        for lam in weights_up_to(rs, 30):
            c = weyl_character(rs, lam)
            if c.dimension != weyl_dimension(rs, lam):
                return False, f"{name} {lam} mass"
            for w, m in c.terms:
                if any(c.mult(rs.simple_reflection(i, w)) != m for i in range(rs.rank)):
                    return False, f"{name} {lam} not W-invariant"
            count += 1
    return True, f"{count} characters"


def check_reciprocity():
    for name, p in (('A1', 3), ('A1', 5), ('A2', 5)):
        total, expected = reciprocity_mass(rs_of(name), p)
        if total != expected:
            return False, f"{name} p={p}: {total} != {expected}"
    return True, "27, 125, 5^8"


def check_socle():
    for name, p in (('A1', 3), ('A1', 5), ('A2', 5)):
        rs = rs_of(name)
        for mu in product(range(p), repeat=rs.rank):
            if not check_socle_bound(rs, mu, p):
                return False, f"{name} p={p} mu={mu}"
    return True, "all restricted weights"


def check_decomposition_numbers():
    rs = rs_of('A2')
    for lam in weights_up_to(rs, 20):
        numbers = decomposition_numbers(rs, lam, 5)
        total = sum(m * ch_irreducible(rs, mu, 5).dimension for mu, m in numbers)
        if total != weyl_dimension(rs, lam):
            return False, f"lambda={lam}"
    return True, "A2, p = 5, bound 20"


CHECKS = [
    ("SL2 closed-form oracle", check_sl2_oracle),
    ("A2 p=5 non-negativity", check_a2_nonnegative),
    ("KL sanity", check_kl),
    ("Character engine", check_characters),
    ("Reciprocity mass", check_reciprocity),
    ("Socle bound", check_socle),
    ("Decomposition numbers", check_decomposition_numbers),
]


def main():
    """Run all acceptance checks."""

    print("=" * 80)
    print("🧪 WEYL FILTRATION ENGINE - Acceptance checks")
    print("=" * 80)

    failed = 0
    for i, (title, check) in enumerate(CHECKS, 1):
        print(f"\n{'─' * 40}")
        print(f"📐 Check {i}/{len(CHECKS)}: {title}")
        print(f"{'─' * 40}")
        start = time.time()
        ok, detail = check()
        elapsed = time.time() - start
        mark = '✅' if ok else '❌'
        print(f"   {mark} {detail} ({elapsed:.1f}s)")
        if not ok:
            failed += 1

    print("\n" + "=" * 80)
    if failed:
        print(f"❌ {failed} of {len(CHECKS)} checks failed")
    else:
        print("✅ All checks passed!")
    print("=" * 80)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
