"""
pfilt.py - Decompose ch Delta(lambda) into Delta^red characters and check the result

WHAT A REPORT SAYS:
===================
- sections            [(mu, m_mu)] with ch Delta(lam) = sum m_mu ch Delta^red(mu)
- nonnegative         every m_mu >= 0 (what a Delta^red-filtration needs)
- residual_zero       re-expanding the sections gives ch Delta(lam) back exactly
- dimension_identity  dim Delta(lam) = sum m_mu dim Delta^red(mu)
- regular, in_jantzen_region, p_ge_2h_minus_2: hypothesis bookkeeping, kept
  apart from the non-negativity verdict
- lcf_weights_used / singular_lcf_weights: restricted weights whose chi_KL
  was assumed to be an irreducible character
- lcf_hypothesis_weights (per-weight mode only): the regular dominant weights
  below lambda on which the LCF is needed for this one lambda
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from itertools import product
from typing import Callable, Dict, List, Optional, Tuple

import pandas as pd

from alcove import in_jantzen_region, is_regular, linked
from characters import greedy_decompose, recombine, weyl_character, weyl_dimension
from console import print_step, status
from errors import DomainError, EngineError
from lcf import LCF_MODE, LCF_READING_NOTE, lcf_hypothesis_poset, require_lcf_prime
from modchar import ch_delta_red, steinberg_decompose
from rootdata import CartanType, RootSystem, Weight, build_root_system, require_dominant, weight_text

SCHEMA_VERSION = 1
BASIS_LABELS = ('Delta^red', 'Delta^p')

RELABEL_NOTE = "Delta^p labels: equal to Delta^red only because the LCF is assumed"
PER_WEIGHT_NOTE = "per-weight mode: the LCF is needed only on lcf_hypothesis_weights"


# =============================================================================
# REPORT
# =============================================================================

@dataclass(frozen=True)
class FiltrationReport:
    lam: Weight
    p: int
    cartan_type: CartanType
    sections: Tuple[Tuple[Weight, int], ...]
    nonnegative: bool
    residual_zero: bool
    dimension_identity: bool
    regular: bool
    in_jantzen_region: bool
    p_ge_2h_minus_2: bool
    lcf_weights_used: Tuple[Weight, ...]
    singular_lcf_weights: Tuple[Weight, ...]
    linked: bool = True
    basis: str = 'Delta^red'
    mode: str = LCF_MODE
    notes: Tuple[str, ...] = ()
    lcf_hypothesis_weights: Optional[Tuple[Weight, ...]] = None
    schema_version: int = SCHEMA_VERSION

    @property
    def root_system(self) -> RootSystem:
        return build_root_system(self.cartan_type)

    def multiplicity(self, mu: Weight) -> int:
        return dict(self.sections).get(tuple(mu), 0)

    def to_dict(self) -> Dict:
        return {
            'schema_version': self.schema_version,
            'cartan_type': str(self.cartan_type),
            'lambda': list(self.lam),
            'p': self.p,
            'basis': self.basis,
            'mode': self.mode,
            'sections': [{'weight': list(mu), 'multiplicity': m} for mu, m in self.sections],
            'nonnegative': self.nonnegative,
            'residual_zero': self.residual_zero,
            'dimension_identity': self.dimension_identity,
            'regular': self.regular,
            'in_jantzen_region': self.in_jantzen_region,
            'p_ge_2h_minus_2': self.p_ge_2h_minus_2,
            'linked': self.linked,
            'lcf_weights_used': [list(w) for w in self.lcf_weights_used],
            'singular_lcf_weights': [list(w) for w in self.singular_lcf_weights],
            'lcf_hypothesis_weights': (None if self.lcf_hypothesis_weights is None
                                       else [list(w) for w in self.lcf_hypothesis_weights]),
            'notes': list(self.notes),
        }


def decompose_weyl(rs: RootSystem, lam: Weight, p: int,
                   tie_break: Optional[Callable[[Weight], object]] = None,
                   per_weight: bool = False) -> FiltrationReport:
    lam = require_dominant(rs, lam)
    require_lcf_prime(rs, p)
    h = rs.coxeter_number

    def basis(mu):
        return ch_delta_red(rs, mu, p)

    character = weyl_character(rs, lam)
    sections = tuple(greedy_decompose(character, basis, tie_break=tie_break))
    residual_zero = recombine(rs, sections, basis) == character

    used = sorted({steinberg_decompose(rs, mu, p)[0] for mu, _ in sections})
    singular = [mu0 for mu0 in used if not is_regular(rs, mu0, p)]

    notes = [LCF_READING_NOTE]
    if singular:
        notes.append("singular restricted weights: chi_KL terms aggregated per stabilizer coset")
    if p < 2 * h - 2:
        notes.append(f"p < 2h-2 = {2 * h - 2}: the filtration theorem does not apply")
    hypothesis = None
    if per_weight:
        hypothesis = tuple(lcf_hypothesis_poset(rs, lam, p))
        notes.append(PER_WEIGHT_NOTE)

    report = FiltrationReport(
        lam=lam,
        p=p,
        cartan_type=rs.cartan_type,
        sections=sections,
        nonnegative=all(m >= 0 for _, m in sections),
        residual_zero=residual_zero,
        dimension_identity=False,
        regular=is_regular(rs, lam, p),
        in_jantzen_region=in_jantzen_region(rs, lam, p),
        p_ge_2h_minus_2=p >= 2 * h - 2,
        lcf_weights_used=tuple(used),
        singular_lcf_weights=tuple(singular),
        linked=all(linked(rs, lam, mu, p) for mu, _ in sections),
        notes=tuple(notes),
        lcf_hypothesis_weights=hypothesis,
    )
    return replace(report, dimension_identity=verify_dimension_identity(report))


def verify_dimension_identity(report: FiltrationReport) -> bool:
    """dim Delta(lam) against sum m_mu * (mass of ch Delta^red(mu)), exactly."""
    rs = report.root_system
    expected = weyl_dimension(rs, report.lam)
    total = sum(m * ch_delta_red(rs, mu, report.p).dimension for mu, m in report.sections)
    return expected == total


def relabel(report: FiltrationReport, label: str) -> FiltrationReport:
    if label not in BASIS_LABELS:
        raise DomainError(f"Unknown basis label {label!r}; use one of {', '.join(BASIS_LABELS)}", label=label)
    if label == report.basis:
        return report
    notes = tuple(n for n in report.notes if n != RELABEL_NOTE)
    if label == 'Delta^p':
        notes = notes + (RELABEL_NOTE,)
    return replace(report, basis=label, notes=notes)


def report_to_frame(report: FiltrationReport) -> pd.DataFrame:
    """One row per section; per-weight reports get an lcf_hypothesis_weights column."""
    rs = report.root_system
    rows = [
        {
            'cartan_type': str(report.cartan_type),
            'p': report.p,
            'lambda': weight_text(report.lam),
            'basis': report.basis,
            'mu': weight_text(mu),
            'multiplicity': m,
            'dim_section': ch_delta_red(rs, mu, report.p).dimension,
        }
        for mu, m in report.sections
    ]
    columns = ['cartan_type', 'p', 'lambda', 'basis', 'mu', 'multiplicity', 'dim_section']
    frame = pd.DataFrame(rows, columns=columns)
    if report.lcf_hypothesis_weights is not None:
        frame['lcf_hypothesis_weights'] = ';'.join(weight_text(w) for w in report.lcf_hypothesis_weights)
    return frame


# =============================================================================
# BATCH
# =============================================================================

@dataclass
class BatchSummary:
    cartan_type: CartanType
    p: int
    bound: int
    reports: List[FiltrationReport] = field(default_factory=list)
    failures: List[Dict] = field(default_factory=list)

    def _count(self, flag: str) -> int:
        return sum(1 for r in self.reports if getattr(r, flag))

    def counts(self) -> Dict[str, int]:
        return {
            'total': len(self.reports) + len(self.failures),
            'reports': len(self.reports),
            'failures': len(self.failures),
            'nonnegative': self._count('nonnegative'),
            'residual_zero': self._count('residual_zero'),
            'dimension_identity': self._count('dimension_identity'),
            'linked': self._count('linked'),
            'regular': self._count('regular'),
            'in_jantzen_region': self._count('in_jantzen_region'),
            'singular_lcf': sum(1 for r in self.reports if r.singular_lcf_weights),
        }

    @property
    def all_nonnegative(self) -> bool:
        return not self.failures and all(r.nonnegative for r in self.reports)

    def to_dict(self, include_reports: bool = False) -> Dict:
        data = {
            'schema_version': SCHEMA_VERSION,
            'cartan_type': str(self.cartan_type),
            'p': self.p,
            'bound': self.bound,
            'counts': self.counts(),
            'negative': [list(r.lam) for r in self.reports if not r.nonnegative],
            'failures': self.failures,
        }
        if include_reports:
            data['reports'] = [r.to_dict() for r in self.reports]
        return data


def weights_up_to(rs: RootSystem, bound: int) -> List[Weight]:
    """Dominant lam with <lam+rho, alpha0^v> <= bound, by that pairing then lexicographically."""
    coroot = rs.coroot_pairing[rs.highest_short_index]
    ranges = [range(0, max(0, (bound - sum(coroot)) // c) + 1) for c in coroot]
    found = []
    for lam in product(*ranges):
        level = rs.pairing_with_highest_short(tuple(c + 1 for c in lam))
        if level <= bound:
            found.append((level, lam))
    return [lam for _, lam in sorted(found)]


def batch_verify(rs: RootSystem, p: int, bound: int, workers: int = 1,
                 tie_break: Optional[Callable[[Weight], object]] = None) -> BatchSummary:
    """decompose_weyl over every weight in range; per-weight errors are recorded, not raised."""
    require_lcf_prime(rs, p)
    weights = weights_up_to(rs, bound)
    summary = BatchSummary(rs.cartan_type, p, bound)
    print_step(1, f"Decomposing {len(weights)} Weyl characters ({rs.cartan_type}, p = {p}, bound = {bound})")

    def one(lam):
        try:
            return decompose_weyl(rs, lam, p, tie_break=tie_break)
        except EngineError as e:
            return e

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            outcomes = list(executor.map(one, weights))
    else:
        outcomes = [one(lam) for lam in weights]

    for lam, outcome in zip(weights, outcomes):
        if isinstance(outcome, EngineError):
            failure = outcome.to_dict()
            failure['lambda'] = list(lam)
            summary.failures.append(failure)
            status(f"  ❌ {weight_text(lam)}: {outcome.message}")
        else:
            summary.reports.append(outcome)
            mark = '✅' if outcome.nonnegative else '⚠️ '
            status(f"  {mark} {weight_text(lam)}: {len(outcome.sections)} sections")
    return summary


def summary_to_frame(summary: BatchSummary) -> pd.DataFrame:
    """One row per weight."""
    rows = []
    for r in summary.reports:
        rows.append({
            'cartan_type': str(r.cartan_type),
            'p': r.p,
            'lambda': weight_text(r.lam),
            'sections': len(r.sections),
            'nonnegative': r.nonnegative,
            'residual_zero': r.residual_zero,
            'dimension_identity': r.dimension_identity,
            'regular': r.regular,
            'in_jantzen_region': r.in_jantzen_region,
            'linked': r.linked,
            'singular_lcf': bool(r.singular_lcf_weights),
            'error': '',
        })
    for failure in summary.failures:
        rows.append({
            'cartan_type': str(summary.cartan_type),
            'p': summary.p,
            'lambda': weight_text(failure['lambda']),
            'error': failure['error'],
        })
    columns = ['cartan_type', 'p', 'lambda', 'sections', 'nonnegative', 'residual_zero',
               'dimension_identity', 'regular', 'in_jantzen_region', 'linked', 'singular_lcf', 'error']
    return pd.DataFrame(rows, columns=columns)
