# dilation_2026/dilation.py
"""Hermitian matrices with spectrum in [0, 1] seen as compressions of orthogonal projectors.

F is the compression to the first n coordinates of the projector onto the range of
[sqrt(F); sqrt(I - F)] in C^{2n}, so a change from F to G is a change of trial subspace
for A = P_Z and every Ritz-value bound applies to it.
"""
import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from bounds_2026.report import BoundId, BoundReport, make_report
from majorization_2026.majorization import decreasing
from numeric_core_2026.errors import DimensionMismatchError, SpectrumRangeError
from numeric_core_2026.linalg import check_hermitian, eigh, eigvalsh, svd_decreasing
from numeric_core_2026.subspace import Subspace
from numeric_core_2026.tolerance import DEFAULT_POLICY, TolerancePolicy
from subspaces_2026.angles import AngleVector, principal_angles, projector_product_singvals

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class NormalizedPair:
    """F, G after the common map t -> (t - shift) / scale."""

    f: np.ndarray
    g: np.ndarray
    shift: float
    scale: float

    @property
    def n(self) -> int:
        return self.f.shape[0]


def normalize_pair(f_raw, g_raw, policy: TolerancePolicy = DEFAULT_POLICY) -> NormalizedPair:
    f = check_hermitian(f_raw, policy, 'F')
    g = check_hermitian(g_raw, policy, 'G')
    if f.shape != g.shape:
        raise DimensionMismatchError(f"F is {f.shape[0]}x{f.shape[0]} but G is {g.shape[0]}x{g.shape[0]}")
    values = np.concatenate([eigvalsh(f, policy), eigvalsh(g, policy)])
    shift = float(values.min())
    scale = float(values.max()) - shift
    if scale <= policy.atol * max(1.0, abs(shift)):
        # Point spectrum: only the shift is meaningful
        scale = 1.0
    identity = np.eye(f.shape[0])
    return NormalizedPair(
        f=(f - shift * identity) / scale,
        g=(g - shift * identity) / scale,
        shift=shift,
        scale=scale,
    )


def _unit_spectrum(f, policy: TolerancePolicy) -> Tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of F with the spectrum clamped into [0, 1]."""
    values, vectors = eigh(f, policy)
    if values[-1] < -policy.atol or values[0] > 1.0 + policy.atol:
        raise SpectrumRangeError(
            f"Spectrum [{values[-1]:.17g}, {values[0]:.17g}] is outside [0, 1]"
        )
    return np.clip(values, 0.0, 1.0), vectors


def _sqrt_blocks(f, policy: TolerancePolicy) -> Tuple[np.ndarray, np.ndarray]:
    values, vectors = _unit_spectrum(f, policy)
    vh = vectors.conj().T
    return (vectors * np.sqrt(values)) @ vh, (vectors * np.sqrt(1.0 - values)) @ vh


def dilation_basis(f, policy: TolerancePolicy = DEFAULT_POLICY) -> Subspace:
    """Orthonormal basis [sqrt(F); sqrt(I - F)] of the range of the dilation projector."""
    root, co_root = _sqrt_blocks(f, policy)
    return Subspace(np.vstack([root, co_root]))


def dilation_projector(f, policy: TolerancePolicy = DEFAULT_POLICY) -> np.ndarray:
    """[[F, sqrt(F(I-F))], [sqrt((I-F)F), I-F]], the 2n x 2n projector dilating F."""
    basis = dilation_basis(f, policy).basis
    projector = basis @ basis.conj().T
    return (projector + projector.conj().T) / 2


def coordinate_subspace(n: int) -> Subspace:
    """Z: the first n coordinate vectors of C^{2n}."""
    return Subspace(np.vstack([np.eye(n), np.zeros((n, n))]))


def dilation_residual_singvals(f, policy: TolerancePolicy = DEFAULT_POLICY) -> np.ndarray:
    """S(R_F) = (sqrt(1 - Lambda(F)) sqrt(Lambda(F)))_decreasing, from the spectrum alone."""
    values, _ = _unit_spectrum(f, policy)
    return decreasing(np.sqrt(1.0 - values) * np.sqrt(values))


def dilation_residual_geometric(f, policy: TolerancePolicy = DEFAULT_POLICY) -> np.ndarray:
    """S((I - P(F)) P_Z P(F)) on the 2n x 2n matrices; n leading values, the rest vanish."""
    f = check_hermitian(f, policy, 'F')
    n = f.shape[0]
    return projector_product_singvals(dilation_basis(f, policy), coordinate_subspace(n))


def dilation_angles(f, g, policy: TolerancePolicy = DEFAULT_POLICY) -> AngleVector:
    """Angles between the dilation ranges; cosines are S(sqrt(F) sqrt(G) + sqrt(I-F) sqrt(I-G))."""
    f = check_hermitian(f, policy, 'F')
    g = check_hermitian(g, policy, 'G')
    if f.shape != g.shape:
        raise DimensionMismatchError(f"F is {f.shape[0]}x{f.shape[0]} but G is {g.shape[0]}x{g.shape[0]}")
    return principal_angles(dilation_basis(f, policy), dilation_basis(g, policy))


def dilation_cosines(f, g, policy: TolerancePolicy = DEFAULT_POLICY) -> np.ndarray:
    """The closed cosine formula, decreasing."""
    root_f, co_f = _sqrt_blocks(f, policy)
    root_g, co_g = _sqrt_blocks(g, policy)
    return svd_decreasing(root_f @ root_g + co_f @ co_g)


def eval_additive_bound(f_raw, g_raw, policy: TolerancePolicy = DEFAULT_POLICY) -> BoundReport:
    """|Lambda(F) - Lambda(G)| against {S(R_F) + S(R_G)} tan Theta(F, G), on the original scale."""
    pair = normalize_pair(f_raw, g_raw, policy)
    angles = dilation_angles(pair.f, pair.g, policy)
    tan = angles.tan(policy.atol)
    residuals = dilation_residual_singvals(pair.f, policy) + dilation_residual_singvals(pair.g, policy)
    rhs = pair.scale * residuals * tan
    lhs = decreasing(np.abs(eigvalsh(f_raw, policy) - eigvalsh(g_raw, policy)))
    context = {
        'theta': angles.angles,
        'shift': pair.shift,
        'scale': pair.scale,
        'residual_sum': residuals,
    }
    return make_report(BoundId.ADDITIVE_TAN, lhs, rhs, pair.n, pair.n, context, policy)


def eval_weyl_additive(f_raw, g_raw, policy: TolerancePolicy = DEFAULT_POLICY) -> BoundReport:
    f = check_hermitian(f_raw, policy, 'F')
    g = check_hermitian(g_raw, policy, 'G')
    if f.shape != g.shape:
        raise DimensionMismatchError(f"F is {f.shape[0]}x{f.shape[0]} but G is {g.shape[0]}x{g.shape[0]}")
    lhs = np.abs(eigvalsh(f, policy) - eigvalsh(g, policy))
    return make_report(BoundId.WEYL_ADDITIVE, lhs, svd_decreasing(f - g), f.shape[0], f.shape[0],
                       {}, policy)
