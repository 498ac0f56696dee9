"""
test_pfilt.py - p-filtration reports, the SL2 closed form and batch runs
"""

from dataclasses import replace

import pytest

from alcove import set_interval_cap
from errors import DomainError
from lcf import LCF_READING_NOTE, lcf_hypothesis_poset
from pfilt import (
    PER_WEIGHT_NOTE, RELABEL_NOTE, BatchSummary, batch_verify, decompose_weyl, relabel,
    report_to_frame, summary_to_frame, verify_dimension_identity, weights_up_to,
)
from rootdata import build_root_system, parse_cartan_type


def rs_of(name):
    return build_root_system(parse_cartan_type(name))


# =============================================================================
# SL2 CLOSED FORM
# =============================================================================

def sl2_string(n):
    return {n - 2 * k: 1 for k in range(n + 1)}


def sl2_delta_red(mu, p):
    """L(mu0) (x) Delta(mu1)^[1]; L(mu0) = Delta(mu0) for restricted mu0 in rank one."""
    out = {}
    for a in sl2_string(mu % p):
        for b in sl2_string(mu // p):
            out[a + p * b] = out.get(a + p * b, 0) + 1
    return out


def sl2_sections(lam, p):
    residual = sl2_string(lam)
    sections = []
    while residual:
        top = max(residual)
        m = residual[top]
        for w, k in sl2_delta_red(top, p).items():
            value = residual.get(w, 0) - m * k
            if value:
                residual[w] = value
            else:
                residual.pop(w, None)
        sections.append(((top,), m))
    return sections


class TestDecomposeWeyl:

    @pytest.mark.parametrize('lam,sections', [
        ((1,), (((1,), 1),)),
        ((3,), (((3,), 1), ((1,), 1))),
        ((4,), (((4,), 1), ((0,), 1))),
    ])
    def test_a1_p3(self, a1, lam, sections):
        report = decompose_weyl(a1, lam, 3)
        assert report.sections == sections
        assert report.nonnegative
        assert report.residual_zero
        assert report.dimension_identity
        assert report.linked

    @pytest.mark.parametrize('p', [3, 5])
    def test_sl2_closed_form(self, a1, p):
        for lam in range(31):
            report = decompose_weyl(a1, (lam,), p)
            assert list(report.sections) == sl2_sections(lam, p)
            assert report.nonnegative

    def test_flags(self, a1, a2):
        report = decompose_weyl(a1, (4,), 3)
        assert report.regular
        assert report.in_jantzen_region
        assert report.p_ge_2h_minus_2
        assert report.lcf_weights_used == ((0,), (1,))
        assert report.singular_lcf_weights == ()
        assert report.mode == 'LCF-assumed'
        assert LCF_READING_NOTE in report.notes

        small = decompose_weyl(a2, (2, 2), 3)
        assert not small.p_ge_2h_minus_2
        assert any('2h-2' in note for note in small.notes)

    def test_singular_weights_noted(self, a1):
        report = decompose_weyl(a1, (5,), 3)
        assert (2,) in report.singular_lcf_weights
        assert not report.regular
        assert any('aggregated per stabilizer coset' in note for note in report.notes)

    def test_tie_break_does_not_matter(self, a2):
        reverse = lambda w: tuple(-c for c in w)  # noqa: E731
        for lam in [(3, 2), (6, 1), (4, 7), (9, 3)]:
            default = decompose_weyl(a2, lam, 5)
            other = decompose_weyl(a2, lam, 5, tie_break=reverse)
            assert sorted(default.sections) == sorted(other.sections)

    def test_rejects_bad_input(self, a1, a2):
        with pytest.raises(DomainError):
            decompose_weyl(a1, (-1,), 3)
        with pytest.raises(DomainError):
            decompose_weyl(a2, (1, 1), 2)
        with pytest.raises(DomainError):
            decompose_weyl(a1, (1,), 4)

    def test_multiplicity(self, a1):
        report = decompose_weyl(a1, (4,), 3)
        assert report.multiplicity((0,)) == 1
        assert report.multiplicity((2,)) == 0


class TestReportHelpers:

    def test_dimension_identity_catches_changes(self, a1):
        report = decompose_weyl(a1, (4,), 3)
        assert verify_dimension_identity(report)
        broken = replace(report, sections=(((4,), 1), ((0,), 2)))
        assert not verify_dimension_identity(broken)

    def test_relabel(self, a1):
        report = decompose_weyl(a1, (4,), 3)
        relabelled = relabel(report, 'Delta^p')
        assert relabelled.basis == 'Delta^p'
        assert RELABEL_NOTE in relabelled.notes
        assert relabelled.sections == report.sections
        back = relabel(relabelled, 'Delta^red')
        assert RELABEL_NOTE not in back.notes
        with pytest.raises(DomainError):
            relabel(report, 'nabla')

    def test_to_dict(self, a1):
        data = decompose_weyl(a1, (4,), 3).to_dict()
        assert data['lambda'] == [4]
        assert data['sections'] == [{'weight': [4], 'multiplicity': 1}, {'weight': [0], 'multiplicity': 1}]
        assert data['cartan_type'] == 'A1'
        assert data['schema_version'] == 1

    def test_frame(self, a1):
        frame = report_to_frame(decompose_weyl(a1, (4,), 3))
        assert list(frame['mu']) == ['4', '0']
        assert list(frame['dim_section']) == [4, 1]


class TestPerWeight:

    def test_off_by_default(self, a1):
        report = decompose_weyl(a1, (4,), 3)
        assert report.lcf_hypothesis_weights is None
        assert report.to_dict()['lcf_hypothesis_weights'] is None
        assert PER_WEIGHT_NOTE not in report.notes
        assert 'lcf_hypothesis_weights' not in report_to_frame(report).columns

    def test_a1(self, a1):
        report = decompose_weyl(a1, (4,), 3, per_weight=True)
        assert report.lcf_hypothesis_weights == ((0,),)
        assert PER_WEIGHT_NOTE in report.notes
        assert report.to_dict()['lcf_hypothesis_weights'] == [[0]]
        assert list(report_to_frame(report)['lcf_hypothesis_weights']) == ['0', '0']

    def test_a2_matches_poset(self, a2):
        report = decompose_weyl(a2, (6, 3), 5, per_weight=True)
        assert list(report.lcf_hypothesis_weights) == lcf_hypothesis_poset(a2, (6, 3), 5)
        assert report.lcf_hypothesis_weights
        assert report.sections == decompose_weyl(a2, (6, 3), 5).sections


class TestBatch:

    def test_weights_up_to(self, a1, a2):
        assert weights_up_to(a1, 0) == []
        assert weights_up_to(a1, 3) == [(0,), (1,), (2,)]
        assert weights_up_to(a2, 4) == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]

    def test_a1(self, a1):
        summary = batch_verify(a1, 3, 30)
        assert summary.counts()['reports'] == 30
        assert summary.all_nonnegative
        assert summary.counts()['dimension_identity'] == 30

    def test_empty_range(self, a1):
        summary = batch_verify(a1, 3, 0)
        assert summary.reports == []
        assert summary.all_nonnegative

    def test_a2_p5(self, a2):
        summary = batch_verify(a2, 5, 20)
        counts = summary.counts()
        assert counts['failures'] == 0
        assert counts['nonnegative'] == counts['reports']
        assert counts['residual_zero'] == counts['reports']
        assert counts['dimension_identity'] == counts['reports']
        assert counts['reports'] == len(weights_up_to(a2, 20))
        assert summary.all_nonnegative

    def test_workers_agree(self, a2):
        one = batch_verify(a2, 5, 12)
        two = batch_verify(a2, 5, 12, workers=2)
        assert [r.sections for r in one.reports] == [r.sections for r in two.reports]

    def test_failures_are_recorded(self):
        rs = rs_of('B3')
        set_interval_cap(1)
        summary = batch_verify(rs, 7, 5)
        assert summary.reports == []
        assert len(summary.failures) == 1
        assert summary.failures[0]['error'] == 'IntervalCapError'
        assert summary.failures[0]['lambda'] == [0, 0, 0]
        assert not summary.all_nonnegative

    def test_summary_output(self, a1):
        summary = batch_verify(a1, 3, 6)
        assert isinstance(summary, BatchSummary)
        data = summary.to_dict()
        assert data['counts']['total'] == 6
        assert data['negative'] == []
        assert 'reports' not in data
        assert len(summary.to_dict(include_reports=True)['reports']) == 6
        frame = summary_to_frame(summary)
        assert len(frame) == 6
        assert set(frame['nonnegative']) == {True}
