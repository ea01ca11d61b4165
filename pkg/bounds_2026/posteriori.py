# bounds_2026/posteriori.py
"""A posteriori bounds driven by S(R_Y): Sun's tangent bound, Weyl-type matching,
Davis-Kahan angle bounds and the quadratic corollaries built on them."""
import itertools
import logging
from typing import Dict, Optional, Tuple

import numpy as np

from majorization_2026.majorization import decreasing
from numeric_core_2026.errors import GapConditionError, NotInvariantError
from numeric_core_2026.linalg import check_hermitian, eigvalsh, svd_decreasing
from numeric_core_2026.subspace import Subspace
from numeric_core_2026.tolerance import DEFAULT_POLICY, TolerancePolicy
from rayleigh_ritz_2026.ritz import ritz
from subspaces_2026.angles import complement
from .pair import RitzPair, ensure_pair
from .report import BoundId, BoundReport, make_report

logger = logging.getLogger(__name__)

DEFAULT_SEARCH_CAP = 12


def _require_invariant(pair: RitzPair):
    if not pair.x_invariant:
        raise NotInvariantError(
            f"X is not A-invariant: ||R_X|| = {pair.ritz_x.residual_norm:.3e}"
        )


def eval_sun91(a, x: Subspace, y: Subspace,
               policy: TolerancePolicy = DEFAULT_POLICY,
               pair: Optional[RitzPair] = None) -> BoundReport:
    """S(R_Y) tan(theta_max) for invariant X, with the comparison data against the tangent corollary."""
    pair = ensure_pair(a, x, y, policy, pair)
    _require_invariant(pair)
    pair.require_acute()
    tan_max = float(pair.angles.tan(policy.atol)[0])
    rhs = pair.s_ry * tan_max

    # Tangent corollary for invariant X is entrywise below this rhs
    cor_rhs = decreasing(pair.s_pj_ry * pair.angles.sin() / pair.angles.cos()[0])
    dominance_gap = float(np.min(decreasing(rhs) - cor_rhs))
    cos_max = float(pair.angles.cos()[0])
    sin_max = float(pair.angles.sin()[0])
    lhs = pair.lhs
    max_norm_lhs = cos_max * float(lhs[0])
    max_norm_rhs = sin_max * float(pair.s_ry[0])
    tol = policy.check_tol(lhs, pair.s_ry)

    context = pair.base_context(
        tan_theta_max=tan_max,
        cor_tan_rhs=cor_rhs,
        cor_tan_dominated=dominance_gap >= -tol,
        max_norm_lhs=max_norm_lhs,
        max_norm_rhs=max_norm_rhs,
        max_norm_holds=max_norm_lhs <= max_norm_rhs + tol,
    )
    return make_report(BoundId.SUN91, lhs, rhs, pair.n, pair.p, context, policy)


def _matching_margins(diffs: np.ndarray, target: np.ndarray) -> np.ndarray:
    """Prefix margins of each row of ``diffs`` (already decreasing) against ``target``."""
    return np.cumsum(target)[None, :] - np.cumsum(diffs, axis=1)


def _greedy_indices(eigenvalues: np.ndarray, ritz_values: np.ndarray) -> Tuple[int, ...]:
    available = list(range(eigenvalues.size))
    chosen = []
    for beta in ritz_values:
        best = min(available, key=lambda i: abs(eigenvalues[i] - beta))
        available.remove(best)
        chosen.append(best)
    return tuple(sorted(chosen))


def eval_weyl_matching(a, y: Subspace, cap: int = DEFAULT_SEARCH_CAP,
                       policy: TolerancePolicy = DEFAULT_POLICY) -> BoundReport:
    """Search for p eigenvalues of A whose distance to the Ritz values of Y is below 2 S(R_Y).

    Up to ``cap`` the search is exhaustive over all index subsets and keeps the one with
    the best worst-case prefix margin; above it a greedy nearest match is reported as
    heuristic. Indices in the context are 0-based into the decreasing spectrum of A.
    """
    a = check_hermitian(a, policy, 'A')
    n, p = a.shape[0], y.p
    eigenvalues = eigvalsh(a, policy)
    data = ritz(a, y, policy)
    beta = data.ritz_values
    s = svd_decreasing(data.residual)[:p]
    target = 2.0 * s
    middle = np.repeat(s, 2)[:p]
    tol = policy.check_tol(eigenvalues, target)

    if n <= cap:
        combos = np.array(list(itertools.combinations(range(n), p)), dtype=int)
        diffs = -np.sort(-np.abs(eigenvalues[combos] - beta[None, :]), axis=1)
        worst = _matching_margins(diffs, target).min(axis=1)
        best = int(np.argmax(worst))
        middle_worst = _matching_margins(diffs, middle).min(axis=1)
        indices = tuple(int(i) for i in combos[best])
        lhs = diffs[best]
        search = 'exhaustive'
        subsets = int(combos.shape[0])
        middle_exists = bool(np.max(middle_worst) >= -tol)
    else:
        logger.warning(f"n={n} above exhaustive search cap {cap}; using greedy matching")
        indices = _greedy_indices(eigenvalues, beta)
        lhs = decreasing(np.abs(eigenvalues[list(indices)] - beta))
        search = 'greedy'
        subsets = 1
        middle_exists = bool(np.min(np.cumsum(middle) - np.cumsum(lhs)) >= -tol)

    context = {
        'indices': list(indices),
        'eigenvalues': eigenvalues[list(indices)],
        'ritz_values': beta,
        'middle_rhs': middle,
        'middle_exists': middle_exists,
        'search': search,
        'subsets_checked': subsets,
    }
    return make_report(BoundId.WEYL_MATCHING, lhs, target, n, p, context, policy,
                       heuristic=(search == 'greedy'))


def _complement_spectrum(pair: RitzPair) -> np.ndarray:
    """Lambda(L2): A restricted to the orthogonal complement of the invariant X."""
    if pair.x.p == pair.x.n:
        return np.empty(0)
    basis = complement(pair.x).basis
    block = basis.conj().T @ pair.a @ basis
    return eigvalsh((block + block.conj().T) / 2, pair.policy)


def _distance_to_interval(values: np.ndarray, lo: float, hi: float) -> np.ndarray:
    return np.maximum(np.maximum(lo - values, values - hi), 0.0)


def spectral_gap(pair: RitzPair, variant: str) -> Dict[str, object]:
    """delta and the hypothesis that produced it, computed from Lambda(H_Y) and Lambda(L2)."""
    ritz_values = pair.ritz_y.ritz_values
    l2 = _complement_spectrum(pair)
    a_lo, a_hi = float(ritz_values.min()), float(ritz_values.max())
    if l2.size == 0:
        return {'delta': float('inf'), 'condition': 'empty complement', 'interval': [a_lo, a_hi]}

    if variant == 'sin':
        delta = float(_distance_to_interval(l2, a_lo, a_hi).min())
        if delta <= 0.0:
            raise GapConditionError(
                "gap condition not met: Lambda(L2) meets the Ritz interval", condition='sin')
        return {'delta': delta, 'condition': 'sin', 'interval': [a_lo, a_hi]}

    candidates = []
    # (1) Ritz values in [a, b], Lambda(L2) entirely on one side
    if l2.max() < a_lo:
        candidates.append((a_lo - float(l2.max()), 'tan(1)', [a_lo, a_hi]))
    elif l2.min() > a_hi:
        candidates.append((float(l2.min()) - a_hi, 'tan(1)', [a_lo, a_hi]))
    # (2) Lambda(L2) in [a, b], Ritz values outside it
    l2_lo, l2_hi = float(l2.min()), float(l2.max())
    outside = float(_distance_to_interval(ritz_values, l2_lo, l2_hi).min())
    if outside > 0.0:
        candidates.append((outside, 'tan(2)', [l2_lo, l2_hi]))
    if not candidates:
        raise GapConditionError(
            "gap condition not met: neither interval hypothesis holds", condition='tan(1),tan(2)')
    delta, condition, interval = max(candidates, key=lambda c: c[0])
    return {'delta': delta, 'condition': condition, 'interval': interval}


def _resolve_gap(pair: RitzPair, variant: str, delta: Optional[float]) -> Tuple[Dict[str, object], bool]:
    if delta is not None:
        if delta <= 0:
            raise ValueError("delta override must be positive")
        logger.info(f"Using user supplied delta={delta:g}; report will not gate")
        return {'delta': float(delta), 'condition': 'override'}, True
    return spectral_gap(pair, variant), False


def eval_davis_kahan(a, x: Subspace, y: Subspace, variant: str = 'sin',
                     delta: Optional[float] = None, projected: bool = False,
                     policy: TolerancePolicy = DEFAULT_POLICY,
                     pair: Optional[RitzPair] = None) -> BoundReport:
    """sin or tan of Theta(X, Y) against S(R_Y) / delta for an invariant X.

    ``projected`` swaps in S(P_{X+Y} R_Y) for the tan variant; that report is
    experimental and never gates.
    """
    if variant not in ('sin', 'tan'):
        raise ValueError(f"Unknown variant {variant!r}; expected 'sin' or 'tan'")
    if projected and variant != 'tan':
        raise ValueError("The projected residual form exists only for the tan variant")
    pair = ensure_pair(a, x, y, policy, pair)
    _require_invariant(pair)
    gap, overridden = _resolve_gap(pair, variant, delta)
    if variant == 'sin':
        lhs = pair.angles.sin()
        bound_id = BoundId.DAVIS_KAHAN_SIN
    else:
        lhs = pair.angles.tan(policy.atol)
        bound_id = BoundId.DAVIS_KAHAN_TAN_PROJECTED if projected else BoundId.DAVIS_KAHAN_TAN
    residual = pair.s_pj_ry if projected else pair.s_ry
    rhs = residual / gap['delta']
    context = pair.base_context(**gap)
    return make_report(bound_id, lhs, rhs, pair.n, pair.p, context, policy,
                       delta_override=overridden)


def eval_quadratic_aposteriori(a, x: Subspace, y: Subspace, variant: str = 'sin',
                               delta: Optional[float] = None,
                               policy: TolerancePolicy = DEFAULT_POLICY,
                               pair: Optional[RitzPair] = None) -> BoundReport:
    """Second order bounds; the verdict uses the middle rhs, the looser S-power rhs is in the context."""
    if variant not in ('sin', 'tan'):
        raise ValueError(f"Unknown variant {variant!r}; expected 'sin' or 'tan'")
    pair = ensure_pair(a, x, y, policy, pair)
    _require_invariant(pair)
    pair.require_acute()
    gap, overridden = _resolve_gap(pair, variant, delta)
    delta_value = gap['delta']
    lhs = pair.lhs
    if variant == 'sin':
        cos_max = float(pair.angles.cos()[0])
        middle = pair.s_pj_ry * pair.s_ry / (cos_max * delta_value)
        loose = pair.s_ry ** 2 / (cos_max * delta_value)
        bound_id = BoundId.QUAD_APOST_SIN
    else:
        lhs = lhs ** 2
        middle = pair.s_pj_ry ** 2 * pair.s_ry ** 2 / delta_value ** 2
        loose = pair.s_ry ** 4 / delta_value ** 2
        bound_id = BoundId.QUAD_APOST_TAN
    tol = policy.check_tol(lhs, loose)
    loose_margins = np.cumsum(decreasing(loose)) - np.cumsum(decreasing(lhs))
    context = pair.base_context(
        loose_rhs=loose,
        loose_holds=bool(loose_margins.min() >= -tol),
        **gap,
    )
    return make_report(bound_id, lhs, middle, pair.n, pair.p, context, policy,
                       delta_override=overridden)
