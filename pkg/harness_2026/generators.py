# harness_2026/generators.py
"""Seeded random problem generators.

Every trial draws from its own PCG64 stream keyed by (seed, trial_id, ...), so the
problems do not depend on execution order or on the number of workers.
"""
import logging

import numpy as np
import scipy.linalg

from numeric_core_2026.linalg import condition_number, eigh, orthonormalize
from numeric_core_2026.subspace import Subspace

logger = logging.getLogger(__name__)

MAX_REDRAWS = 100


def trial_rng(seed: int, *keys: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([int(seed), *map(int, keys)])))


def _check_kind(kind: str):
    if kind not in ('real', 'complex'):
        raise ValueError(f"kind must be 'real' or 'complex', got {kind!r}")


def gaussian(rng: np.random.Generator, rows: int, cols: int, kind: str = 'real') -> np.ndarray:
    _check_kind(kind)
    m = rng.standard_normal((rows, cols))
    if kind == 'complex':
        m = m + 1j * rng.standard_normal((rows, cols))
    return m


def gen_hermitian(rng: np.random.Generator, n: int, kind: str = 'real') -> np.ndarray:
    """(M + M^H) / 2 for Gaussian M; exactly Hermitian in floating point."""
    if n < 1:
        raise ValueError("n ≥ 1 required")
    m = gaussian(rng, n, n, kind)
    return (m + m.conj().T) / 2


def gen_subspace(rng: np.random.Generator, n: int, p: int, kind: str = 'real') -> Subspace:
    if not 1 <= p <= n:
        raise ValueError(f"Need 1 ≤ p ≤ n, got p={p}, n={n}")
    return orthonormalize(gaussian(rng, n, p, kind))


def gen_invariant_subspace(rng: np.random.Generator, a: np.ndarray, p: int) -> Subspace:
    """Span of p eigenvectors of A picked uniformly at random."""
    n = a.shape[0]
    if not 1 <= p <= n:
        raise ValueError(f"Need 1 ≤ p ≤ n, got p={p}, n={n}")
    _, vectors = eigh(a)
    columns = np.sort(rng.choice(n, size=p, replace=False))
    return Subspace(vectors[:, columns])


def gen_unitary(rng: np.random.Generator, n: int, kind: str = 'real') -> np.ndarray:
    q, r = scipy.linalg.qr(gaussian(rng, n, n, kind))
    # Fix column phases so the distribution is Haar
    d = np.diag(r)
    return q * (d / np.where(np.abs(d) == 0, 1.0, np.abs(d)))


def gen_unit_hermitian(rng: np.random.Generator, n: int, kind: str = 'real') -> np.ndarray:
    """Hermitian E with spectral norm 1."""
    e = gen_hermitian(rng, n, kind)
    norm = float(np.linalg.norm(e, 2))
    while norm == 0.0:
        e = gen_hermitian(rng, n, kind)
        norm = float(np.linalg.norm(e, 2))
    return e / norm


def gen_positive_definite(rng: np.random.Generator, n: int, kind: str = 'real',
                          floor: float = 0.1) -> np.ndarray:
    c = gaussian(rng, n, n, kind)
    t = c.conj().T @ c + floor * np.eye(n)
    return (t + t.conj().T) / 2


def gen_invertible(rng: np.random.Generator, n: int, kind: str = 'real',
                   max_condition: float = 1e4) -> np.ndarray:
    for _ in range(MAX_REDRAWS):
        t = gaussian(rng, n, n, kind)
        if condition_number(t) <= max_condition:
            return t
    raise RuntimeError(f"No matrix with condition number ≤ {max_condition:g} in {MAX_REDRAWS} draws")


def gen_unit_spectrum(rng: np.random.Generator, n: int, kind: str = 'real') -> np.ndarray:
    """Hermitian matrix with spectrum in [0, 1]; about one draw in four pins some eigenvalues to 0 or 1."""
    values = rng.uniform(0.0, 1.0, n)
    if rng.random() < 0.25:
        pinned = rng.random(n) < 0.5
        values[pinned] = np.round(values[pinned])
    u = gen_unitary(rng, n, kind)
    f = (u * values) @ u.conj().T
    return (f + f.conj().T) / 2


def draw_dimensions(rng: np.random.Generator, n_min: int, n_max: int, p_rule: float):
    n = int(rng.integers(n_min, n_max + 1))
    p_cap = max(1, int(np.floor(p_rule * n)))
    p = int(rng.integers(1, p_cap + 1))
    return n, p
