# tests/test_appendix.py
import numpy as np
import pytest

from harness_2026 import appendix as appendix_module
from harness_2026.appendix import MAX_CONDITION, AppendixSuite2026, Check
from harness_2026.experiment import ExperimentConfig
from harness_2026.generators import trial_rng

PROPERTIES = [
    'fan', 'product', 'weyl', 'condition_number', 'normal_product', 'power_half', 'power_two',
    'sqrt_lemma', 'real_part_theorem', 'real_part_lemma', 'pd_commutator', 'two_sided_commutator',
    'commutator_prefix_form', 'commutator_lemma', 'invertible_commutator_1',
    'invertible_commutator_2', 'invertible_commutator_3', 'projector_lemma', 'dilation_identities',
]


@pytest.fixture
def suite():
    return AppendixSuite2026(ExperimentConfig(trials=12, seed=7, n_min=2, n_max=6))


def test_property_table(suite):
    table = suite.run()
    assert list(table['property']) == PROPERTIES
    assert list(table.columns) == ['property', 'trials', 'failures', 'worst_margin']
    assert (table['trials'] == 12).all()
    failed = table.loc[table['failures'] > 0, 'property'].tolist()
    assert failed == []


def test_prefix_form_trials_are_capped():
    suite = AppendixSuite2026(ExperimentConfig(trials=500))
    trials = {name: count for name, _, count in suite.properties}
    assert trials['commutator_prefix_form'] == 100
    assert trials['fan'] == 500


@pytest.mark.parametrize('name', ['fan', 'weyl', 'sqrt_lemma', 'projector_lemma', 'dilation_identities'])
def test_single_property_complex(suite, name):
    check = {n: fn for n, fn, _ in suite.properties}[name]
    results = check(trial_rng(99, 0), 5, 'complex')
    assert results
    assert all(c.passed for c in results)


def test_check_verdict():
    assert Check(-1e-13, 1e-12).passed
    assert not Check(-1e-6, 1e-12).passed
    assert AppendixSuite2026._close(np.array([1 + 1j]), np.array([1 - 1j])).margin == pytest.approx(-2.0)


@pytest.mark.parametrize('name', ['condition_number', 'real_part_theorem', 'invertible_commutator_1',
                                  'invertible_commutator_2', 'invertible_commutator_3'])
def test_invertible_factors_are_well_conditioned(suite, monkeypatch, name):
    requested = []
    original = appendix_module.gen_invertible

    def recording(rng, n, kind='real', max_condition=1e4):
        requested.append(max_condition)
        return original(rng, n, kind, max_condition)

    monkeypatch.setattr(appendix_module, 'gen_invertible', recording)
    check = {n: fn for n, fn, _ in suite.properties}[name]
    check(trial_rng(3, 0), 4, 'real')
    assert requested
    assert all(bound <= MAX_CONDITION for bound in requested)
