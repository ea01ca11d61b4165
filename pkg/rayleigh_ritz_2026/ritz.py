# rayleigh_ritz_2026/ritz.py
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from numeric_core_2026.errors import DimensionMismatchError
from numeric_core_2026.linalg import check_hermitian, eigvalsh, svd_decreasing
from numeric_core_2026.subspace import Subspace
from numeric_core_2026.tolerance import DEFAULT_POLICY, TolerancePolicy
from subspaces_2026.angles import join

logger = logging.getLogger(__name__)

INVARIANCE_FACTOR = 1e-10


@dataclass(frozen=True, eq=False)
class RitzData:
    """Matrix Rayleigh quotient X^H A X, its eigenvalues and the residual A X - X rho(X)."""

    rq: np.ndarray
    ritz_values: np.ndarray
    residual: np.ndarray

    @property
    def residual_norm(self) -> float:
        return float(svd_decreasing(self.residual)[0])


def _check_pair(a: np.ndarray, x: Subspace):
    if a.shape[0] != x.n:
        raise DimensionMismatchError(f"Matrix is {a.shape[0]}x{a.shape[1]} but subspace lives in C^{x.n}")


def ritz(a, x: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> RitzData:
    a = check_hermitian(a, policy, 'A')
    _check_pair(a, x)
    ax = a @ x.basis
    rq = x.basis.conj().T @ ax
    # Rounding leaves rq Hermitian only to machine precision
    rq = (rq + rq.conj().T) / 2
    return RitzData(
        rq=rq,
        ritz_values=eigvalsh(rq, policy),
        residual=ax - x.basis @ rq,
    )


def residual_singvals(a, x: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> np.ndarray:
    return svd_decreasing(ritz(a, x, policy).residual)


def projected_singvals(residual: np.ndarray, onto: Subspace) -> np.ndarray:
    """S(P_onto R) computed as S(B^H R); both have the same nonzero singular values."""
    if residual.shape[0] != onto.n:
        raise DimensionMismatchError("Residual and subspace live in different spaces")
    return svd_decreasing(onto.basis.conj().T @ residual)


def projected_residual_singvals(a, x: Subspace, onto: Subspace,
                                policy: TolerancePolicy = DEFAULT_POLICY) -> np.ndarray:
    x.check_same_ambient(onto)
    return projected_singvals(ritz(a, x, policy).residual, onto)


def ritz_extremes_on_join(a, x: Subspace, y: Subspace,
                          policy: TolerancePolicy = DEFAULT_POLICY,
                          joined: Optional[Subspace] = None) -> Tuple[float, float]:
    """(lambda_max, lambda_min) of A compressed to X + Y."""
    a = check_hermitian(a, policy, 'A')
    x.check_same_ambient(y)
    _check_pair(a, x)
    basis = (joined if joined is not None else join(x, y, policy)).basis
    compressed = basis.conj().T @ a @ basis
    values = eigvalsh((compressed + compressed.conj().T) / 2, policy)
    return float(values[0]), float(values[-1])


def invariance_threshold(a: np.ndarray, factor: float = INVARIANCE_FACTOR) -> float:
    return a.shape[0] * float(np.linalg.norm(a, 2)) * factor


def is_invariant(a, x: Subspace, policy: TolerancePolicy = DEFAULT_POLICY,
                 factor: float = INVARIANCE_FACTOR) -> bool:
    """True when ||R_X|| <= n ||A|| factor, i.e. X is invariant up to rounding."""
    a = check_hermitian(a, policy, 'A')
    data = ritz(a, x, policy)
    return data.residual_norm <= invariance_threshold(a, factor)
