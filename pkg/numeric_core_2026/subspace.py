# numeric_core_2026/subspace.py
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatchError, EmptySubspaceError, NonFiniteError, RitzBoundsError


@dataclass(frozen=True, eq=False)
class Subspace:
    """Subspace of C^n (or R^n) held as an n x p matrix with orthonormal columns.

    Construct through ``orthonormalize`` unless the columns are already orthonormal;
    the constructor only checks, it never repairs.
    """

    basis: np.ndarray
    rank_tol: float = 0.0
    orth_tol: float = field(default=1e-10, repr=False)

    def __post_init__(self):
        basis = np.asarray(self.basis)
        if basis.ndim == 1:
            basis = basis.reshape(-1, 1)
        if basis.ndim != 2 or basis.shape[1] == 0:
            raise EmptySubspaceError("empty subspace")
        if basis.shape[1] > basis.shape[0]:
            raise DimensionMismatchError(
                f"Subspace has {basis.shape[1]} columns in ambient dimension {basis.shape[0]}"
            )
        if not np.all(np.isfinite(basis)):
            raise NonFiniteError("Subspace basis has non-finite entries")
        gram_error = np.max(np.abs(basis.conj().T @ basis - np.eye(basis.shape[1])))
        if gram_error > self.orth_tol * max(basis.shape[1], 1):
            raise RitzBoundsError(f"Subspace basis is not orthonormal (Gram error {gram_error:.3e})")
        basis = basis.astype(np.complex128 if np.iscomplexobj(basis) else np.float64)
        basis.setflags(write=False)
        object.__setattr__(self, 'basis', basis)

    @property
    def n(self) -> int:
        return self.basis.shape[0]

    @property
    def p(self) -> int:
        return self.basis.shape[1]

    @property
    def is_real(self) -> bool:
        return not np.iscomplexobj(self.basis)

    def projector(self) -> np.ndarray:
        return self.basis @ self.basis.conj().T

    def rotated(self, unitary: np.ndarray) -> 'Subspace':
        """Same subspace, basis replaced by basis @ unitary."""
        return Subspace(self.basis @ unitary, rank_tol=self.rank_tol)

    def check_same_ambient(self, other: 'Subspace'):
        if self.n != other.n:
            raise DimensionMismatchError(
                f"Ambient dimensions differ: {self.n} vs {other.n}"
            )
