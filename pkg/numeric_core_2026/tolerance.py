# numeric_core_2026/tolerance.py
from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np


@dataclass(frozen=True)
class TolerancePolicy:
    """Shared floating-point tolerance contract.

    atol / rtol drive the majorization check tolerance, hermitian_tol is the factor in
    ``hermitian_tol * max(1, ||A||_max)`` and rank_tol_factor the factor in the
    numerical-rank cutoff ``rank_tol_factor * max(rows, cols) * s_max``.
    """

    atol: float = 1e-12
    rtol: float = 1e-10
    hermitian_tol: float = 1e-10
    rank_tol_factor: float = 1e-10

    def __post_init__(self):
        for name in ('atol', 'rtol', 'hermitian_tol', 'rank_tol_factor'):
            if getattr(self, name) < 0:
                raise ValueError(f"Tolerance {name} must be nonnegative")

    @classmethod
    def from_config(cls, config: Optional[Dict]) -> 'TolerancePolicy':
        if not config:
            return cls()
        return cls(
            atol=float(config.get('ATOL', 1e-12)),
            rtol=float(config.get('RTOL', 1e-10)),
            hermitian_tol=float(config.get('HERMITIAN_TOL_FACTOR', 1e-10)),
            rank_tol_factor=float(config.get('RANK_TOL_FACTOR', 1e-10)),
        )

    def check_tol(self, x, y) -> float:
        """Tolerance for a prefix-sum comparison of x against y."""
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        n = max(x.size, y.size, 1)
        scale = max(
            np.max(np.abs(x)) if x.size else 0.0,
            np.max(np.abs(y)) if y.size else 0.0,
            1.0,
        )
        return self.atol + self.rtol * n * scale

    def hermitian_cutoff(self, matrix: np.ndarray) -> float:
        return self.hermitian_tol * max(1.0, float(np.max(np.abs(matrix))) if matrix.size else 1.0)

    def rank_cutoff(self, shape, s_max: float) -> float:
        return self.rank_tol_factor * max(shape) * s_max


DEFAULT_POLICY = TolerancePolicy()
