# tests/conftest.py
import numpy as np
import pytest

from numeric_core_2026.subspace import Subspace
from numeric_core_2026.tolerance import TolerancePolicy
from harness_2026.generators import trial_rng

SQRT_HALF = np.sqrt(0.5)


def unit(n, *indices, weights=None):
    """Normalized combination of coordinate vectors as a one-column Subspace."""
    v = np.zeros(n)
    weights = weights or [1.0] * len(indices)
    for i, w in zip(indices, weights):
        v[i] = w
    return Subspace(v / np.linalg.norm(v))


def columns(n, *indices):
    return Subspace(np.eye(n)[:, list(indices)])


@pytest.fixture
def rng():
    return trial_rng(20260616, 0)


@pytest.fixture
def policy():
    return TolerancePolicy()


@pytest.fixture
def diag123():
    return np.diag([1.0, 2.0, 3.0])


@pytest.fixture
def rq_example(diag123):
    """diag(1,2,3) with the invariant X = span(e1) and Y = span((e1+e2)/sqrt 2)."""
    return diag123, unit(3, 0), unit(3, 0, 1)


CONFIG_KEYS = ['ATOL', 'RTOL', 'HERMITIAN_TOL_FACTOR', 'RANK_TOL_FACTOR', 'EXHAUSTIVE_SEARCH_CAP',
               'COUNTEREXAMPLE_DIR', 'FUZZ_TRIALS', 'FUZZ_SEED', 'N_MIN', 'N_MAX', 'P_RULE',
               'WORKERS', 'LOG_LEVEL', 'LOG_FILE']


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for key in CONFIG_KEYS:
        # setenv first so teardown also removes whatever load_dotenv wrote
        monkeypatch.setenv(key, '')
        monkeypatch.delenv(key)
