# bounds_2026/pair.py
from dataclasses import dataclass
from typing import Optional

import numpy as np

from majorization_2026.majorization import decreasing, pad_zeros
from numeric_core_2026.errors import DimensionMismatchError, NotAcuteError
from numeric_core_2026.linalg import check_hermitian, svd_decreasing
from numeric_core_2026.subspace import Subspace
from numeric_core_2026.tolerance import DEFAULT_POLICY, TolerancePolicy
from rayleigh_ritz_2026.ritz import RitzData, invariance_threshold, projected_singvals, ritz
from subspaces_2026.angles import AngleVector, join, principal_angles


def add_padded(u, v) -> np.ndarray:
    """Entrywise sum of two decreasing nonnegative vectors after zero-padding."""
    length = max(np.size(u), np.size(v))
    return pad_zeros(u, length) + pad_zeros(v, length)


@dataclass(frozen=True, eq=False)
class RitzPair:
    """Everything the mixed and a posteriori bounds read from a triple (A, X, Y).

    Built once per trial; the evaluators only combine the stored vectors.
    """

    a: np.ndarray
    x: Subspace
    y: Subspace
    ritz_x: RitzData
    ritz_y: RitzData
    angles: AngleVector
    joined: Subspace
    s_py_rx: np.ndarray
    s_px_ry: np.ndarray
    s_pj_rx: np.ndarray
    s_pj_ry: np.ndarray
    s_rx: np.ndarray
    s_ry: np.ndarray
    policy: TolerancePolicy = DEFAULT_POLICY

    @classmethod
    def build(cls, a, x: Subspace, y: Subspace,
              policy: TolerancePolicy = DEFAULT_POLICY) -> 'RitzPair':
        a = check_hermitian(a, policy, 'A')
        x.check_same_ambient(y)
        if x.p != y.p:
            raise DimensionMismatchError(f"Bounds need dim X = dim Y, got {x.p} and {y.p}")
        if a.shape[0] != x.n:
            raise DimensionMismatchError(f"A is {a.shape[0]}x{a.shape[0]} but subspaces live in C^{x.n}")
        ritz_x = ritz(a, x, policy)
        ritz_y = ritz(a, y, policy)
        joined = join(x, y, policy)
        return cls(
            a=a, x=x, y=y, ritz_x=ritz_x, ritz_y=ritz_y,
            angles=principal_angles(x, y),
            joined=joined,
            s_py_rx=projected_singvals(ritz_x.residual, y),
            s_px_ry=projected_singvals(ritz_y.residual, x),
            s_pj_rx=projected_singvals(ritz_x.residual, joined),
            s_pj_ry=projected_singvals(ritz_y.residual, joined),
            s_rx=svd_decreasing(ritz_x.residual),
            s_ry=svd_decreasing(ritz_y.residual),
            policy=policy,
        )

    @property
    def n(self) -> int:
        return self.x.n

    @property
    def p(self) -> int:
        return self.x.p

    @property
    def lhs(self) -> np.ndarray:
        """Decreasing rearrangement of |Lambda(X^H A X) - Lambda(Y^H A Y)|."""
        return decreasing(np.abs(self.ritz_x.ritz_values - self.ritz_y.ritz_values))

    @property
    def x_invariant(self) -> bool:
        return self.ritz_x.residual_norm <= invariance_threshold(self.a)

    def projected_sum(self) -> np.ndarray:
        """S(P_Y R_X) + S(P_X R_Y)."""
        return add_padded(self.s_py_rx, self.s_px_ry)

    def joined_sum(self) -> np.ndarray:
        """S(P_{X+Y} R_X) + S(P_{X+Y} R_Y)."""
        return add_padded(self.s_pj_rx, self.s_pj_ry)

    def require_acute(self):
        if not self.angles.is_acute(self.policy.atol):
            raise NotAcuteError(
                f"subspaces not acute: theta_max = {self.angles.theta_max:.17g}"
            )

    @property
    def c(self) -> float:
        """cos(theta_min) / cos(theta_max)."""
        cos = self.angles.cos()
        return float(cos[-1] / cos[0])

    def base_context(self, **extra) -> dict:
        context = {
            'theta': self.angles.angles,
            'x_invariant': self.x_invariant,
            'join_dim': self.joined.p,
        }
        context.update(extra)
        return context


def ensure_pair(a, x: Optional[Subspace], y: Optional[Subspace],
                policy: TolerancePolicy, pair: Optional[RitzPair]) -> RitzPair:
    if pair is not None:
        return pair
    return RitzPair.build(a, x, y, policy)
