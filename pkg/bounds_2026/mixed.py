# bounds_2026/mixed.py
"""Mixed bounds: changes of Ritz values against angles and projected residuals."""
import logging
from typing import Optional

import numpy as np

from numeric_core_2026.errors import NotInvariantError
from numeric_core_2026.subspace import Subspace
from numeric_core_2026.tolerance import DEFAULT_POLICY, TolerancePolicy
from rayleigh_ritz_2026.ritz import ritz_extremes_on_join
from .pair import RitzPair, ensure_pair
from .report import BoundId, BoundReport, make_report

logger = logging.getLogger(__name__)

CONJECTURE_VARIANTS = ('cos', 'tan')
THM_MIXED_VARIANTS = ('cos', 'squared', 'scaled')
COR_TAN_VARIANTS = ('cosmax', 'squared', 'scaled')


def _check_variant(variant: str, allowed):
    if variant not in allowed:
        raise ValueError(f"Unknown variant {variant!r}; expected one of {', '.join(allowed)}")


def lhs_ritz_change(a, x: Subspace, y: Subspace,
                    policy: TolerancePolicy = DEFAULT_POLICY,
                    pair: Optional[RitzPair] = None) -> np.ndarray:
    return ensure_pair(a, x, y, policy, pair).lhs


def eval_conjecture(a, x: Subspace, y: Subspace, variant: str = 'cos',
                    policy: TolerancePolicy = DEFAULT_POLICY,
                    pair: Optional[RitzPair] = None) -> BoundReport:
    _check_variant(variant, CONJECTURE_VARIANTS)
    pair = ensure_pair(a, x, y, policy, pair)
    pair.require_acute()
    if variant == 'cos':
        rhs = pair.projected_sum() / pair.angles.cos()
        bound_id = BoundId.CONJECTURE_COS
    else:
        rhs = pair.joined_sum() * pair.angles.tan(policy.atol)
        bound_id = BoundId.CONJECTURE_TAN
    return make_report(bound_id, pair.lhs, rhs, pair.n, pair.p,
                       pair.base_context(), policy)


def eval_thm_mixed(a, x: Subspace, y: Subspace, variant: str = 'cos',
                   policy: TolerancePolicy = DEFAULT_POLICY,
                   pair: Optional[RitzPair] = None) -> BoundReport:
    _check_variant(variant, THM_MIXED_VARIANTS)
    pair = ensure_pair(a, x, y, policy, pair)
    pair.require_acute()
    total = pair.projected_sum()
    cos = pair.angles.cos()
    lhs = pair.lhs
    context = pair.base_context()
    if variant == 'cos':
        rhs = total / cos[0]
        bound_id = BoundId.THM_MIXED_COS
    elif variant == 'squared':
        lhs = lhs ** 2
        rhs = total ** 2 / cos ** 2
        bound_id = BoundId.THM_MIXED_SQUARED
    else:
        context['c'] = pair.c
        rhs = np.sqrt(pair.c) * total / cos
        bound_id = BoundId.THM_MIXED_SCALED
    return make_report(bound_id, lhs, rhs, pair.n, pair.p, context, policy)


def eval_cor_tangent(a, x: Subspace, y: Subspace, variant: str = 'cosmax',
                     policy: TolerancePolicy = DEFAULT_POLICY,
                     pair: Optional[RitzPair] = None) -> BoundReport:
    _check_variant(variant, COR_TAN_VARIANTS)
    pair = ensure_pair(a, x, y, policy, pair)
    pair.require_acute()
    total = pair.joined_sum()
    lhs = pair.lhs
    context = pair.base_context()
    if variant == 'cosmax':
        rhs = total * pair.angles.sin() / pair.angles.cos()[0]
        bound_id = BoundId.COR_TAN_COSMAX
    elif variant == 'squared':
        lhs = lhs ** 2
        rhs = total ** 2 * pair.angles.tan(policy.atol) ** 2
        bound_id = BoundId.COR_TAN_SQUARED
    else:
        context['c'] = pair.c
        rhs = np.sqrt(pair.c) * total * pair.angles.tan(policy.atol)
        bound_id = BoundId.COR_TAN_SCALED
    return make_report(bound_id, lhs, rhs, pair.n, pair.p, context, policy)


def eval_apriori(a, x: Subspace, y: Subspace, invariant_x: bool = False,
                 policy: TolerancePolicy = DEFAULT_POLICY,
                 pair: Optional[RitzPair] = None) -> BoundReport:
    """A priori bound (lambda_max - lambda_min) sin Theta, or sin^2 Theta for invariant X."""
    pair = ensure_pair(a, x, y, policy, pair)
    if invariant_x and not pair.x_invariant:
        raise NotInvariantError(
            f"X flagged invariant but ||R_X|| = {pair.ritz_x.residual_norm:.3e}"
        )
    lambda_max, lambda_min = ritz_extremes_on_join(pair.a, pair.x, pair.y, policy, pair.joined)
    sin = pair.angles.sin()
    if invariant_x:
        rhs = (lambda_max - lambda_min) * sin ** 2
        bound_id = BoundId.APRIORI_SIN_SQUARED
    else:
        rhs = (lambda_max - lambda_min) * sin
        bound_id = BoundId.APRIORI_SIN
    context = pair.base_context(lambda_max=lambda_max, lambda_min=lambda_min)
    return make_report(bound_id, pair.lhs, rhs, pair.n, pair.p, context, policy)


def eval_lemma_relation(a, x: Subspace, y: Subspace, side: str = 'y',
                        policy: TolerancePolicy = DEFAULT_POLICY,
                        pair: Optional[RitzPair] = None) -> BoundReport:
    """S(P_X R_Y) against S(P_{X+Y} R_Y) sin Theta (side 'y'), or the same with X and Y swapped."""
    if side not in ('x', 'y'):
        raise ValueError(f"side must be 'x' or 'y', got {side!r}")
    pair = ensure_pair(a, x, y, policy, pair)
    sin = pair.angles.sin()
    if side == 'y':
        lhs, rhs, bound_id = pair.s_px_ry, pair.s_pj_ry * sin, BoundId.LEMMA_SIN_RY
    else:
        lhs, rhs, bound_id = pair.s_py_rx, pair.s_pj_rx * sin, BoundId.LEMMA_SIN_RX
    return make_report(bound_id, lhs, rhs, pair.n, pair.p, pair.base_context(), policy)
