# tests/test_bounds_posteriori.py
import numpy as np
import pytest
from numpy.testing import assert_allclose

from bounds_2026 import (
    BoundGrade,
    BoundId,
    RitzPair,
    eval_davis_kahan,
    eval_quadratic_aposteriori,
    eval_sun91,
    eval_weyl_matching,
    spectral_gap,
)
from harness_2026.figure1 import fit_loglog_slope
from harness_2026.generators import gen_hermitian, gen_invariant_subspace, gen_subspace, trial_rng
from numeric_core_2026 import Subspace
from numeric_core_2026.errors import GapConditionError, NotInvariantError
from tests.conftest import SQRT_HALF, unit


@pytest.fixture
def gapped():
    """diag(1,2,10), invariant X = span(e1), Y = span((e1+e2)/sqrt 2); Ritz value 1.5, gap 0.5."""
    return np.diag([1.0, 2.0, 10.0]), unit(3, 0), unit(3, 0, 1)


class TestSun:
    def test_hand_example_tight(self, rq_example):
        report = eval_sun91(*rq_example)
        assert_allclose(report.lhs, [0.5])
        assert_allclose(report.rhs, [0.5])
        assert report.holds

    def test_comparison_context(self, rq_example):
        context = eval_sun91(*rq_example).context
        assert context['tan_theta_max'] == pytest.approx(1.0)
        assert context['cor_tan_dominated']
        assert context['max_norm_lhs'] == pytest.approx(0.5 * SQRT_HALF)
        assert context['max_norm_holds']

    def test_requires_invariant_x(self, diag123):
        with pytest.raises(NotInvariantError):
            eval_sun91(diag123, unit(3, 0, 1), unit(3, 0))

    def test_random_invariant_pairs(self):
        for trial in range(20):
            rng = trial_rng(11, trial)
            a = gen_hermitian(rng, 7, 'complex')
            x = gen_invariant_subspace(rng, a, 3)
            y = gen_subspace(rng, 7, 3, 'complex')
            report = eval_sun91(a, x, y)
            assert report.holds
            assert report.context['cor_tan_dominated']
            assert report.context['max_norm_holds']


class TestWeylMatching:
    def test_two_by_two(self):
        report = eval_weyl_matching(np.diag([1.0, 2.0]), unit(2, 0, 1))
        assert_allclose(report.rhs, [1.0])
        assert_allclose(report.lhs, [0.5])
        assert report.context['middle_exists']
        assert report.context['search'] == 'exhaustive'
        assert report.context['subsets_checked'] == 2
        assert report.holds

    def test_exact_eigenvector_matches_its_eigenvalue(self, diag123):
        report = eval_weyl_matching(diag123, unit(3, 0))
        # spectrum is indexed in decreasing order, so eigenvalue 1 sits at index 2
        assert report.context['indices'] == [2]
        assert_allclose(report.lhs, [0.0], atol=1e-15)

    def test_greedy_above_cap_does_not_gate(self):
        report = eval_weyl_matching(np.diag([1.0, 2.0]), unit(2, 0, 1), cap=1)
        assert report.context['search'] == 'greedy'
        assert report.heuristic
        assert not report.is_gating

    def test_random_exhaustive(self):
        for trial in range(10):
            rng = trial_rng(12, trial)
            a = gen_hermitian(rng, 6, 'real')
            y = gen_subspace(rng, 6, 2, 'real')
            report = eval_weyl_matching(a, y)
            assert report.holds
            assert len(report.context['indices']) == 2


class TestSpectralGap:
    def test_sin_gap(self, gapped):
        gap = spectral_gap(RitzPair.build(*gapped), 'sin')
        assert gap['delta'] == pytest.approx(0.5)
        assert gap['condition'] == 'sin'

    def test_tan_gap(self, gapped):
        gap = spectral_gap(RitzPair.build(*gapped), 'tan')
        assert gap['delta'] == pytest.approx(0.5)
        assert gap['condition'].startswith('tan')

    def test_gap_not_met(self, diag123):
        pair = RitzPair.build(diag123, unit(3, 0), unit(3, 0, 1, 2))
        with pytest.raises(GapConditionError) as sin_info:
            spectral_gap(pair, 'sin')
        assert sin_info.value.condition == 'sin'
        with pytest.raises(GapConditionError):
            spectral_gap(pair, 'tan')


class TestDavisKahan:
    def test_sin(self, gapped):
        report = eval_davis_kahan(*gapped, variant='sin')
        assert_allclose(report.lhs, [SQRT_HALF])
        assert_allclose(report.rhs, [1.0])
        assert report.holds

    def test_tan_tight(self, gapped):
        report = eval_davis_kahan(*gapped, variant='tan')
        assert_allclose(report.lhs, [1.0])
        assert_allclose(report.rhs, [1.0])
        assert report.holds

    def test_projected_is_experimental(self, gapped):
        report = eval_davis_kahan(*gapped, variant='tan', projected=True)
        assert report.bound_id is BoundId.DAVIS_KAHAN_TAN_PROJECTED
        assert report.grade is BoundGrade.EXPERIMENTAL
        assert not report.is_gating

    def test_delta_override_never_gates(self, gapped):
        report = eval_davis_kahan(*gapped, variant='sin', delta=0.25)
        assert report.delta_override
        assert report.context['condition'] == 'override'
        assert_allclose(report.rhs, [2.0])
        assert not report.is_gating

    def test_bad_arguments(self, gapped):
        with pytest.raises(ValueError, match="positive"):
            eval_davis_kahan(*gapped, delta=0.0)
        with pytest.raises(ValueError, match="only for the tan"):
            eval_davis_kahan(*gapped, variant='sin', projected=True)
        with pytest.raises(ValueError, match="Unknown variant"):
            eval_davis_kahan(*gapped, variant='cot')


class TestQuadratic:
    def test_sin_middle_rhs(self, gapped):
        report = eval_quadratic_aposteriori(*gapped, variant='sin')
        assert_allclose(report.lhs, [0.5])
        assert_allclose(report.rhs, [SQRT_HALF])
        assert_allclose(report.context['loose_rhs'], [SQRT_HALF])
        assert report.holds

    def test_tan_is_exact(self, gapped):
        report = eval_quadratic_aposteriori(*gapped, variant='tan')
        assert_allclose(report.lhs, [0.25])
        assert_allclose(report.rhs, [0.25])
        assert report.holds
        assert report.context['loose_holds']

    def test_shrinking_residual_gives_second_order_rhs(self):
        a = np.diag([1.0, 2.0, 10.0])
        x = unit(3, 0)
        steps = np.geomspace(1e-5, 1e-2, 10)
        sin_rows, loose_rows, tan_rows, lhs_rows = [], [], [], []
        for eps in steps:
            y = Subspace(np.array([[1.0], [eps], [eps]]) / np.sqrt(1.0 + 2.0 * eps ** 2))
            sin_report = eval_quadratic_aposteriori(a, x, y, variant='sin')
            tan_report = eval_quadratic_aposteriori(a, x, y, variant='tan')
            assert sin_report.holds and tan_report.holds
            sin_rows.append((eps, sin_report.rhs[0]))
            loose_rows.append((eps, sin_report.context['loose_rhs'][0]))
            tan_rows.append((eps, np.sqrt(tan_report.rhs[0])))
            lhs_rows.append((eps, sin_report.lhs[0]))
        window = (1e-5, 1e-2)
        assert fit_loglog_slope(sin_rows, window) == pytest.approx(2.0, abs=0.2)
        assert fit_loglog_slope(loose_rows, window) == pytest.approx(2.0, abs=0.2)
        assert fit_loglog_slope(tan_rows, window) == pytest.approx(2.0, abs=0.2)
        assert fit_loglog_slope(lhs_rows, window) == pytest.approx(2.0, abs=0.2)
