# numeric_core_2026/linalg.py
import logging
from typing import Callable, Optional, Tuple

import numpy as np
import scipy.linalg

from .errors import (
    DimensionMismatchError,
    EmptySubspaceError,
    NonFiniteError,
    NotHermitianError,
    NotPSDError,
)
from .subspace import Subspace
from .tolerance import DEFAULT_POLICY, TolerancePolicy

logger = logging.getLogger(__name__)


def as_matrix(m, name: str = 'matrix') -> np.ndarray:
    """Validate a dense matrix: 2-D, positive dimensions, finite entries.

    Real input stays float64 and complex input becomes complex128; the real field
    embeds in the complex one so results agree with a complex promotion.
    """
    arr = np.asarray(m)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
        raise DimensionMismatchError(f"{name} must be a non-empty 2-D array, got shape {arr.shape}")
    arr = arr.astype(np.complex128 if np.iscomplexobj(arr) else np.float64, copy=False)
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError(f"{name} has non-finite entries")
    return arr


def check_hermitian(h, policy: TolerancePolicy = DEFAULT_POLICY, name: str = 'matrix') -> np.ndarray:
    arr = as_matrix(h, name)
    if arr.shape[0] != arr.shape[1]:
        raise NotHermitianError(f"{name} is not square: {arr.shape}")
    asymmetry = float(np.max(np.abs(arr - arr.conj().T)))
    cutoff = policy.hermitian_cutoff(arr)
    if asymmetry > cutoff:
        raise NotHermitianError(
            f"{name} is not Hermitian: max |A - A^H| = {asymmetry:.3e} > {cutoff:.3e}"
        )
    return arr


def eigh(h, policy: TolerancePolicy = DEFAULT_POLICY) -> Tuple[np.ndarray, np.ndarray]:
    """Eigenvalues in decreasing order and the matching orthonormal eigenvectors."""
    arr = check_hermitian(h, policy)
    values, vectors = scipy.linalg.eigh(arr)
    return values[::-1].copy(), vectors[:, ::-1].copy()


def eigvalsh(h, policy: TolerancePolicy = DEFAULT_POLICY) -> np.ndarray:
    arr = check_hermitian(h, policy)
    return scipy.linalg.eigvalsh(arr)[::-1].copy()


def svd_decreasing(m) -> np.ndarray:
    arr = as_matrix(m)
    # svdvals already returns a decreasing vector
    return scipy.linalg.svdvals(arr)


def orthonormalize(m, tol: Optional[float] = None,
                   policy: TolerancePolicy = DEFAULT_POLICY) -> Subspace:
    """Orthonormal basis for the numerical range of m.

    Singular directions with s_i <= tol * s_max are dropped; without tol the cutoff is
    ``policy.rank_cutoff(shape, s_max)``.
    """
    arr = as_matrix(m)
    if tol is not None and tol < 0:
        raise ValueError("Rank tolerance must be nonnegative")
    u, s, _ = scipy.linalg.svd(arr, full_matrices=False)
    if s.size == 0 or s[0] == 0.0:
        raise EmptySubspaceError("empty subspace")
    cutoff = policy.rank_cutoff(arr.shape, s[0]) if tol is None else tol * s[0]
    rank = int(np.count_nonzero(s > cutoff))
    if rank < arr.shape[1]:
        logger.debug(f"Numerical rank {rank} of {arr.shape[1]} columns at cutoff {cutoff:.3e}")
    return Subspace(u[:, :rank], rank_tol=cutoff)


def hermitian_function(h, func: Callable[[np.ndarray], np.ndarray],
                       policy: TolerancePolicy = DEFAULT_POLICY) -> np.ndarray:
    """V diag(func(Lambda)) V^H for Hermitian h."""
    values, vectors = eigh(h, policy)
    return (vectors * func(values)) @ vectors.conj().T


def psd_sqrt(h, policy: TolerancePolicy = DEFAULT_POLICY) -> np.ndarray:
    values, vectors = eigh(h, policy)
    if values[-1] < -policy.atol:
        raise NotPSDError(f"not PSD: smallest eigenvalue {values[-1]:.3e}")
    root = np.sqrt(np.clip(values, 0.0, None))
    result = (vectors * root) @ vectors.conj().T
    # exact Hermitian symmetry for downstream checks
    return (result + result.conj().T) / 2


def inverse_singular_values(m) -> np.ndarray:
    """S(M^{-1}) computed from S(M) without forming the inverse."""
    s = svd_decreasing(m)
    if s[-1] == 0.0:
        raise np.linalg.LinAlgError("Matrix is singular")
    return (1.0 / s)[::-1]


def condition_number(m) -> float:
    s = svd_decreasing(m)
    return float(np.inf) if s[-1] == 0.0 else float(s[0] / s[-1])
