# bounds_2026/block_discard.py
import logging
from typing import Sequence

import numpy as np

from majorization_2026.majorization import pad_zeros
from numeric_core_2026.errors import DimensionMismatchError, SingularBlockError
from numeric_core_2026.linalg import check_hermitian, eigh, svd_decreasing
from numeric_core_2026.subspace import Subspace
from numeric_core_2026.tolerance import DEFAULT_POLICY, TolerancePolicy
from .mixed import eval_cor_tangent
from .pair import RitzPair
from .report import BoundId, BoundReport, make_report

logger = logging.getLogger(__name__)


def coordinate_block(n: int, k: int, dtype=np.float64) -> Subspace:
    """Y = [I_k; 0] in C^n."""
    basis = np.zeros((n, k), dtype=dtype)
    basis[:k, :k] = np.eye(k)
    return Subspace(basis)


def eval_block_discard(a, k: int, eig_indices: Sequence[int],
                       policy: TolerancePolicy = DEFAULT_POLICY) -> BoundReport:
    """Change of k chosen eigenvalues of A when only the leading k x k block A11 is kept.

    ``eig_indices`` are 0-based positions in the decreasing spectrum of A. The verdict
    compares against S(A12) S(X2 X1^{-1}) and is conjectural; the proven scaled tangent
    bound for the same pair is stored under ``context['scaled']``.
    """
    a = check_hermitian(a, policy, 'A')
    n = a.shape[0]
    indices = [int(i) for i in eig_indices]
    if not 1 <= k <= n:
        raise DimensionMismatchError(f"Block size k={k} outside [1, {n}]")
    if len(indices) != k or len(set(indices)) != k:
        raise DimensionMismatchError(f"Need {k} distinct eigenvalue indices, got {indices}")
    if min(indices) < 0 or max(indices) >= n:
        raise DimensionMismatchError(f"Eigenvalue indices {indices} outside [0, {n - 1}]")

    _, vectors = eigh(a, policy)
    x_basis = vectors[:, sorted(indices)]
    x1, x2 = x_basis[:k, :], x_basis[k:, :]
    s_x1 = svd_decreasing(x1)
    if s_x1[-1] <= policy.rank_cutoff(x1.shape, 1.0):
        raise SingularBlockError(
            f"Leading block X1 is singular (s_min = {s_x1[-1]:.3e}); "
            "the general case with a singular X1 is not supported"
        )

    x = Subspace(x_basis)
    y = coordinate_block(n, k, a.dtype)
    pair = RitzPair.build(a, x, y, policy)

    a12 = a[:k, k:]
    if k < n:
        s_a12 = svd_decreasing(a12)
        tan_theta = svd_decreasing(np.linalg.solve(x1.T, x2.T).T)
    else:
        s_a12 = np.zeros(k)
        tan_theta = np.zeros(k)
    s_a12 = pad_zeros(s_a12, k)
    tan_theta = pad_zeros(tan_theta, k)
    rhs = s_a12 * tan_theta

    scaled = eval_cor_tangent(a, x, y, 'scaled', policy, pair=pair)
    context = pair.base_context(
        indices=sorted(indices),
        s_a12=s_a12,
        tan_theta=tan_theta,
        scaled={
            'bound_id': scaled.bound_id.value,
            'rhs': scaled.rhs,
            'margins': scaled.verdict.margins,
            'holds': scaled.holds,
            'c': scaled.context.get('c'),
        },
    )
    report = make_report(BoundId.BLOCK_DISCARD, pair.lhs, rhs, n, k, context, policy)
    logger.debug(f"block discard k={k}: lhs={report.lhs}, rhs={report.rhs}")
    return report
