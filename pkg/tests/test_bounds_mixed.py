# tests/test_bounds_mixed.py
import json

import numpy as np
import pytest
from numpy.testing import assert_allclose

from bounds_2026 import (
    BoundGrade,
    BoundId,
    RitzPair,
    eval_apriori,
    eval_conjecture,
    eval_cor_tangent,
    eval_lemma_relation,
    eval_thm_mixed,
    evaluate_all,
    lhs_ritz_change,
    reports_to_json,
)
from bounds_2026.evaluate import TRIPLE_BOUNDS
from harness_2026.generators import gen_hermitian, gen_invariant_subspace, gen_subspace, gen_unitary, trial_rng
from numeric_core_2026 import Subspace
from numeric_core_2026.errors import DimensionMismatchError, NotAcuteError, NotInvariantError
from tests.conftest import columns, unit


class TestLhs:
    def test_two_dimensional_example(self, diag123):
        lhs = lhs_ritz_change(diag123, columns(3, 0, 1), columns(3, 1, 2))
        assert_allclose(lhs, [1.0, 1.0])

    def test_single_vector_example(self):
        lhs = lhs_ritz_change(np.diag([1.0, 2.0]), unit(2, 0), unit(2, 0, 1))
        assert_allclose(lhs, [0.5])

    def test_unequal_dimensions_rejected(self, diag123):
        with pytest.raises(DimensionMismatchError):
            RitzPair.build(diag123, columns(3, 0), columns(3, 1, 2))


class TestConjecture:
    def test_hand_example_is_tight(self, rq_example):
        report = eval_conjecture(*rq_example, variant='cos')
        assert report.bound_id is BoundId.CONJECTURE_COS
        assert report.grade is BoundGrade.CONJECTURAL
        assert_allclose(report.lhs, [0.5])
        assert_allclose(report.rhs, [0.5])
        assert report.holds

    def test_identical_subspaces_give_zero(self, rng):
        a = gen_hermitian(rng, 5, 'real')
        x = gen_subspace(rng, 5, 2, 'real')
        for variant in ('cos', 'tan'):
            report = eval_conjecture(a, x, x, variant=variant)
            assert_allclose(report.lhs, 0.0, atol=1e-12)
            assert_allclose(report.rhs, 0.0, atol=1e-12)
            assert report.holds

    def test_orthogonal_lines_not_acute(self, diag123):
        with pytest.raises(NotAcuteError):
            eval_conjecture(diag123, unit(3, 0), unit(3, 1))

    def test_unknown_variant(self, rq_example):
        with pytest.raises(ValueError, match="Unknown variant"):
            eval_conjecture(*rq_example, variant='sec')


class TestThmMixed:
    def test_cos_variant_tight(self, rq_example):
        report = eval_thm_mixed(*rq_example, variant='cos')
        assert_allclose(report.rhs, [0.5])
        assert report.holds

    def test_squared_variant(self, rq_example):
        report = eval_thm_mixed(*rq_example, variant='squared')
        assert_allclose(report.lhs, [0.25])
        assert_allclose(report.rhs, [0.25])
        assert report.holds

    def test_scaled_variant_records_c(self, rq_example):
        report = eval_thm_mixed(*rq_example, variant='scaled')
        # one angle, so cos(theta_min) / cos(theta_max) is 1
        assert report.context['c'] == pytest.approx(1.0)
        assert_allclose(report.rhs, [0.5])

    def test_shared_pair_gives_same_report(self, rq_example):
        pair = RitzPair.build(*rq_example)
        direct = eval_thm_mixed(*rq_example)
        reused = eval_thm_mixed(None, None, None, pair=pair)
        assert_allclose(direct.rhs, reused.rhs)


class TestCorTangent:
    def test_cosmax_tight(self, rq_example):
        report = eval_cor_tangent(*rq_example, variant='cosmax')
        assert report.bound_id is BoundId.COR_TAN_COSMAX
        assert_allclose(report.rhs, [0.5])
        assert report.holds

    def test_squared(self, rq_example):
        report = eval_cor_tangent(*rq_example, variant='squared')
        assert_allclose(report.rhs, [0.25])


class TestApriori:
    def test_invariant_variant_tight(self):
        a = np.diag([1.0, 2.0])
        report = eval_apriori(a, unit(2, 0), unit(2, 0, 1), invariant_x=True)
        assert report.bound_id is BoundId.APRIORI_SIN_SQUARED
        assert report.context['lambda_max'] == pytest.approx(2.0)
        assert report.context['lambda_min'] == pytest.approx(1.0)
        assert_allclose(report.rhs, [0.5])
        assert report.holds

    def test_general_variant(self):
        report = eval_apriori(np.diag([1.0, 2.0]), unit(2, 0), unit(2, 0, 1))
        assert_allclose(report.rhs, [np.sqrt(0.5)])
        assert report.holds

    def test_invariant_flag_checked(self):
        with pytest.raises(NotInvariantError):
            eval_apriori(np.diag([1.0, 2.0]), unit(2, 0, 1), unit(2, 0), invariant_x=True)


class TestLemmaRelation:
    def test_invariant_x_side_is_zero(self, rq_example):
        report = eval_lemma_relation(*rq_example, side='x')
        assert_allclose(report.lhs, [0.0], atol=1e-15)
        assert report.holds

    def test_y_side_tight(self, rq_example):
        report = eval_lemma_relation(*rq_example, side='y')
        assert_allclose(report.lhs, [np.sqrt(0.125)])
        assert_allclose(report.rhs, [np.sqrt(0.125)])
        assert report.holds

    def test_bad_side(self, rq_example):
        with pytest.raises(ValueError, match="side"):
            eval_lemma_relation(*rq_example, side='z')


class TestEvaluateAll:
    def test_non_invariant_x_skips_invariant_bounds(self, rng):
        a = gen_hermitian(rng, 6, 'real')
        x = gen_subspace(rng, 6, 2, 'real')
        y = gen_subspace(rng, 6, 2, 'real')
        ids = {r.bound_id for r in evaluate_all(a, x, y)}
        assert BoundId.SUN91 not in ids
        assert BoundId.DAVIS_KAHAN_SIN not in ids
        assert BoundId.THM_MIXED_COS in ids

    def test_bounds_outside_triple_rejected(self, rq_example):
        with pytest.raises(ValueError, match="not evaluated"):
            evaluate_all(*rq_example, bounds=[BoundId.BLOCK_DISCARD])

    def test_json_is_strict(self, rq_example):
        payload = json.loads(reports_to_json(evaluate_all(*rq_example)))
        assert {entry['bound_id'] for entry in payload} >= {'conjecture_cos', 'sun91'}
        first = payload[0]
        assert set(first) >= {'bound_id', 'grade', 'n', 'p', 'lhs', 'rhs', 'margins', 'holds', 'tol'}

    @pytest.mark.parametrize('kind', ['real', 'complex'])
    @pytest.mark.parametrize('invariant', [False, True])
    def test_proven_bounds_hold_on_random_triples(self, kind, invariant):
        for trial in range(15):
            rng = trial_rng(7, trial, int(invariant))
            a = gen_hermitian(rng, 6, kind)
            y = gen_subspace(rng, 6, 2, kind)
            x = gen_invariant_subspace(rng, a, 2) if invariant else gen_subspace(rng, 6, 2, kind)
            reports = evaluate_all(a, x, y, bounds=TRIPLE_BOUNDS)
            assert reports
            assert not [r.bound_id.value for r in reports if r.is_violation]


def random_triple(seed, trial, kind, n=6, p=2):
    rng = trial_rng(seed, trial)
    return gen_hermitian(rng, n, kind), gen_subspace(rng, n, p, kind), gen_subspace(rng, n, p, kind), rng


MIXED_EVALUATORS = [
    (eval_conjecture, 'cos'),
    (eval_conjecture, 'tan'),
    (eval_thm_mixed, 'cos'),
    (eval_thm_mixed, 'squared'),
    (eval_thm_mixed, 'scaled'),
    (eval_cor_tangent, 'cosmax'),
]


class TestInvariances:
    @pytest.mark.parametrize('kind', ['real', 'complex'])
    @pytest.mark.parametrize('evaluator, variant', MIXED_EVALUATORS)
    def test_shift_leaves_both_sides_unchanged(self, kind, evaluator, variant):
        for trial in range(8):
            a, x, y, rng = random_triple(11, trial, kind)
            sigma = float(rng.uniform(-5.0, 5.0))
            base = evaluator(a, x, y, variant)
            shifted = evaluator(a + sigma * np.eye(a.shape[0]), x, y, variant)
            assert_allclose(shifted.lhs, base.lhs, atol=1e-9)
            assert_allclose(shifted.rhs, base.rhs, atol=1e-9)

    @pytest.mark.parametrize('kind', ['real', 'complex'])
    @pytest.mark.parametrize('evaluator, variant', MIXED_EVALUATORS)
    def test_unitary_change_of_basis_leaves_both_sides_unchanged(self, kind, evaluator, variant):
        for trial in range(8):
            a, x, y, rng = random_triple(12, trial, kind)
            q = gen_unitary(rng, a.shape[0], kind)
            rotated_a = q @ a @ q.conj().T
            rotated_a = (rotated_a + rotated_a.conj().T) / 2
            base = evaluator(a, x, y, variant)
            rotated = evaluator(rotated_a, Subspace(q @ x.basis), Subspace(q @ y.basis), variant)
            assert_allclose(rotated.lhs, base.lhs, atol=1e-9)
            assert_allclose(rotated.rhs, base.rhs, atol=1e-9)

    @pytest.mark.parametrize('kind', ['real', 'complex'])
    def test_conjecture_rhs_below_theorem_rhs(self, kind):
        for trial in range(20):
            a, x, y, _ = random_triple(13, trial, kind, n=7, p=3)
            pair = RitzPair.build(a, x, y)
            conjecture = eval_conjecture(a, x, y, 'cos', pair=pair)
            theorem = eval_thm_mixed(a, x, y, 'cos', pair=pair)
            assert np.all(conjecture.rhs <= theorem.rhs + 1e-12)
            # conjecture verdict implies the theorem verdict
            if conjecture.holds:
                assert theorem.holds

    @pytest.mark.parametrize('kind', ['real', 'complex'])
    def test_squared_top_entry_is_square_of_cos_top_entry(self, kind):
        for trial in range(20):
            a, x, y, _ = random_triple(14, trial, kind, n=7, p=3)
            pair = RitzPair.build(a, x, y)
            cos = eval_thm_mixed(a, x, y, 'cos', pair=pair)
            squared = eval_thm_mixed(a, x, y, 'squared', pair=pair)
            assert squared.rhs[0] == pytest.approx(cos.rhs[0] ** 2, rel=1e-12)
            assert squared.lhs[0] == pytest.approx(cos.lhs[0] ** 2, rel=1e-12)

    @pytest.mark.parametrize('kind', ['real', 'complex'])
    def test_single_vector_variants_coincide(self, kind):
        for trial in range(20):
            a, x, y, _ = random_triple(15, trial, kind, n=5, p=1)
            pair = RitzPair.build(a, x, y)
            cos = eval_thm_mixed(a, x, y, 'cos', pair=pair)
            squared = eval_thm_mixed(a, x, y, 'squared', pair=pair)
            scaled = eval_thm_mixed(a, x, y, 'scaled', pair=pair)
            conjecture = eval_conjecture(a, x, y, 'cos', pair=pair)
            assert scaled.context['c'] == pytest.approx(1.0, abs=1e-15)
            assert_allclose(scaled.rhs, cos.rhs, rtol=1e-12)
            assert_allclose(squared.rhs, cos.rhs ** 2, rtol=1e-12)
            assert_allclose(conjecture.rhs, cos.rhs, rtol=1e-12)
            assert cos.holds and squared.holds and scaled.holds
