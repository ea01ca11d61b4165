# majorization_2026/majorization.py
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from numeric_core_2026.errors import DimensionMismatchError, NonFiniteError
from numeric_core_2026.tolerance import DEFAULT_POLICY, TolerancePolicy

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class MajorizationResult:
    """Verdict of a prefix-sum comparison x <_w y."""

    holds: bool
    margins: np.ndarray
    worst_index: int
    sum_equal: bool
    tol: float

    @property
    def worst_margin(self) -> float:
        return float(self.margins[self.worst_index])

    def to_dict(self):
        return {
            'holds': bool(self.holds),
            'margins': [float(m) for m in self.margins],
            'worst_index': int(self.worst_index),
            'sum_equal': bool(self.sum_equal),
            'tol': float(self.tol),
        }


def decreasing(values) -> np.ndarray:
    arr = np.asarray(values, dtype=float).ravel()
    return np.sort(arr)[::-1]


def pad_zeros(values, length: int) -> np.ndarray:
    """Append zeros up to ``length``; only legal for nonnegative vectors."""
    arr = np.asarray(values, dtype=float).ravel()
    if arr.size >= length:
        return arr
    return np.concatenate([arr, np.zeros(length - arr.size)])


def _aligned(x, y) -> Tuple[np.ndarray, np.ndarray]:
    x = np.asarray(x, dtype=float).ravel()
    y = np.asarray(y, dtype=float).ravel()
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise NonFiniteError("Majorization inputs must be finite")
    if x.size != y.size:
        if np.all(x >= 0) and np.all(y >= 0):
            length = max(x.size, y.size)
            x, y = pad_zeros(x, length), pad_zeros(y, length)
        else:
            raise DimensionMismatchError(
                f"Length mismatch {x.size} vs {y.size} with signed entries"
            )
    return decreasing(x), decreasing(y)


def prefix_margins(x, y) -> np.ndarray:
    """Prefix sums of y minus prefix sums of x, both rearranged decreasing."""
    xs, ys = _aligned(x, y)
    return np.cumsum(ys) - np.cumsum(xs)


def weak_majorize(x, y, tol: Optional[float] = None,
                  policy: TolerancePolicy = DEFAULT_POLICY) -> MajorizationResult:
    xs, ys = _aligned(x, y)
    if tol is None:
        tol = policy.check_tol(xs, ys)
    margins = np.cumsum(ys) - np.cumsum(xs)
    if margins.size == 0:
        return MajorizationResult(True, margins, 0, True, tol)
    worst = int(np.argmin(margins))
    return MajorizationResult(
        holds=bool(margins[worst] >= -tol),
        margins=margins,
        worst_index=worst,
        sum_equal=bool(abs(xs.sum() - ys.sum()) <= tol),
        tol=tol,
    )


def strong_majorize(x, y, tol: Optional[float] = None,
                    policy: TolerancePolicy = DEFAULT_POLICY) -> MajorizationResult:
    if np.asarray(x).size != np.asarray(y).size:
        raise DimensionMismatchError("Strong majorization needs equal lengths")
    weak = weak_majorize(x, y, tol, policy)
    return MajorizationResult(
        holds=weak.holds and weak.sum_equal,
        margins=weak.margins,
        worst_index=weak.worst_index,
        sum_equal=weak.sum_equal,
        tol=weak.tol,
    )
