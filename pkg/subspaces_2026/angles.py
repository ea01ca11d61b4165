# subspaces_2026/angles.py
import logging
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from numeric_core_2026.errors import DimensionMismatchError, EmptySubspaceError, InfiniteTangentError
from numeric_core_2026.linalg import as_matrix, orthonormalize, svd_decreasing
from numeric_core_2026.subspace import Subspace
from numeric_core_2026.tolerance import DEFAULT_POLICY, TolerancePolicy

logger = logging.getLogger(__name__)

# Below this cosine threshold arccos is accurate; above it the sine route is used
SMALL_ANGLE_COS = np.sqrt(0.5)


@dataclass(frozen=True, eq=False)
class AngleVector:
    """Principal angles in decreasing order, each in [0, pi/2]."""

    angles: np.ndarray

    def __post_init__(self):
        angles = np.clip(np.sort(np.asarray(self.angles, dtype=float).ravel())[::-1], 0.0, np.pi / 2)
        angles.setflags(write=False)
        object.__setattr__(self, 'angles', angles)

    def __len__(self):
        return self.angles.size

    @property
    def theta_max(self) -> float:
        return float(self.angles[0])

    @property
    def theta_min(self) -> float:
        return float(self.angles[-1])

    def cos(self) -> np.ndarray:
        """cos of Theta (decreasing angles), so this vector is increasing."""
        return np.cos(self.angles)

    def sin(self) -> np.ndarray:
        return np.sin(self.angles)

    def tan(self, atol: float = DEFAULT_POLICY.atol) -> np.ndarray:
        cos = self.cos()
        if np.any(cos <= atol):
            raise InfiniteTangentError(
                f"tangent infinite: theta_max = {self.theta_max:.17g} is within {atol:g} of pi/2"
            )
        return np.sin(self.angles) / cos

    def is_acute(self, atol: float = DEFAULT_POLICY.atol) -> bool:
        return self.theta_max < np.pi / 2 - atol

    def to_list(self):
        return [float(a) for a in self.angles]


def _sines_ascending(x: Subspace, y: Subspace) -> np.ndarray:
    # The smaller side projected onto the complement of the larger one
    small, large = (x, y) if x.p <= y.p else (y, x)
    residual = small.basis - large.basis @ (large.basis.conj().T @ small.basis)
    return np.clip(svd_decreasing(residual)[::-1], 0.0, 1.0)


def principal_angles(x: Subspace, y: Subspace) -> AngleVector:
    """Principal angles from the cosines S(X^H Y), refined through sines for small angles."""
    x.check_same_ambient(y)
    cos_desc = np.clip(svd_decreasing(x.basis.conj().T @ y.basis), 0.0, 1.0)
    angles_asc = np.arccos(cos_desc)
    small = cos_desc > SMALL_ANGLE_COS
    if np.any(small):
        sines = _sines_ascending(x, y)
        angles_asc[small] = np.arcsin(sines[:angles_asc.size][small])
    return AngleVector(angles_asc)


def sines_via_complement(x: Subspace, y: Subspace) -> np.ndarray:
    """S(P_{Y-perp} X), decreasing; equals sin Theta(X, Y) when dim X = dim Y."""
    x.check_same_ambient(y)
    return svd_decreasing(x.basis - y.basis @ (y.basis.conj().T @ x.basis))


def join(x: Subspace, y: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> Subspace:
    """Orthonormal basis of X + Y; its dimension is measured, not assumed."""
    x.check_same_ambient(y)
    return orthonormalize(np.hstack([x.basis, y.basis]), policy=policy)


def project_onto(subspace: Subspace, m) -> np.ndarray:
    arr = as_matrix(m)
    if arr.shape[0] != subspace.n:
        raise DimensionMismatchError(
            f"Cannot project {arr.shape[0]}-row matrix onto a subspace of C^{subspace.n}"
        )
    return subspace.basis @ (subspace.basis.conj().T @ arr)


def complement(subspace: Subspace) -> Subspace:
    if subspace.p == subspace.n:
        raise EmptySubspaceError("empty subspace: complement of the whole space")
    return Subspace(scipy.linalg.null_space(subspace.basis.conj().T))


def projector_product_singvals(p: Subspace, q: Subspace) -> np.ndarray:
    """S((I - P_P) P_Q P_P), the n x n product formed explicitly."""
    p.check_same_ambient(q)
    proj_p = p.projector()
    product = (np.eye(p.n) - proj_p) @ q.projector() @ proj_p
    return svd_decreasing(product)
