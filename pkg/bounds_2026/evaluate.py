# bounds_2026/evaluate.py
import logging
from typing import Callable, Dict, Iterable, List, Optional

from numeric_core_2026.errors import (
    GapConditionError,
    InfiniteTangentError,
    NotAcuteError,
    NotInvariantError,
)
from numeric_core_2026.subspace import Subspace
from numeric_core_2026.tolerance import DEFAULT_POLICY, TolerancePolicy
from .mixed import eval_apriori, eval_conjecture, eval_cor_tangent, eval_lemma_relation, eval_thm_mixed
from .pair import RitzPair
from .posteriori import (
    DEFAULT_SEARCH_CAP,
    eval_davis_kahan,
    eval_quadratic_aposteriori,
    eval_sun91,
    eval_weyl_matching,
)
from .report import BoundId, BoundReport

logger = logging.getLogger(__name__)

# Errors that mean "hypothesis not met for this input", not "bad input"
NOT_APPLICABLE = (NotAcuteError, InfiniteTangentError, NotInvariantError, GapConditionError)

TRIPLE_BOUNDS = [
    BoundId.CONJECTURE_COS, BoundId.CONJECTURE_TAN,
    BoundId.THM_MIXED_COS, BoundId.THM_MIXED_SQUARED, BoundId.THM_MIXED_SCALED,
    BoundId.COR_TAN_COSMAX, BoundId.COR_TAN_SQUARED, BoundId.COR_TAN_SCALED,
    BoundId.APRIORI_SIN, BoundId.APRIORI_SIN_SQUARED,
    BoundId.LEMMA_SIN_RX, BoundId.LEMMA_SIN_RY,
    BoundId.SUN91, BoundId.WEYL_MATCHING,
    BoundId.DAVIS_KAHAN_SIN, BoundId.DAVIS_KAHAN_TAN, BoundId.DAVIS_KAHAN_TAN_PROJECTED,
    BoundId.QUAD_APOST_SIN, BoundId.QUAD_APOST_TAN,
]

# Bounds whose hypotheses include an A-invariant X
INVARIANT_ONLY = {
    BoundId.APRIORI_SIN_SQUARED, BoundId.SUN91,
    BoundId.DAVIS_KAHAN_SIN, BoundId.DAVIS_KAHAN_TAN, BoundId.DAVIS_KAHAN_TAN_PROJECTED,
    BoundId.QUAD_APOST_SIN, BoundId.QUAD_APOST_TAN,
}


def _dispatch(cap: int, delta: Optional[float]) -> Dict[BoundId, Callable[[RitzPair], BoundReport]]:
    def triple(func, *args, **kwargs):
        return lambda pr: func(pr.a, pr.x, pr.y, *args, policy=pr.policy, pair=pr, **kwargs)

    return {
        BoundId.CONJECTURE_COS: triple(eval_conjecture, 'cos'),
        BoundId.CONJECTURE_TAN: triple(eval_conjecture, 'tan'),
        BoundId.THM_MIXED_COS: triple(eval_thm_mixed, 'cos'),
        BoundId.THM_MIXED_SQUARED: triple(eval_thm_mixed, 'squared'),
        BoundId.THM_MIXED_SCALED: triple(eval_thm_mixed, 'scaled'),
        BoundId.COR_TAN_COSMAX: triple(eval_cor_tangent, 'cosmax'),
        BoundId.COR_TAN_SQUARED: triple(eval_cor_tangent, 'squared'),
        BoundId.COR_TAN_SCALED: triple(eval_cor_tangent, 'scaled'),
        BoundId.APRIORI_SIN: triple(eval_apriori, False),
        BoundId.APRIORI_SIN_SQUARED: triple(eval_apriori, True),
        BoundId.LEMMA_SIN_RX: triple(eval_lemma_relation, 'x'),
        BoundId.LEMMA_SIN_RY: triple(eval_lemma_relation, 'y'),
        BoundId.SUN91: triple(eval_sun91),
        BoundId.WEYL_MATCHING: lambda pr: eval_weyl_matching(pr.a, pr.y, cap, pr.policy),
        BoundId.DAVIS_KAHAN_SIN: triple(eval_davis_kahan, 'sin', delta),
        BoundId.DAVIS_KAHAN_TAN: triple(eval_davis_kahan, 'tan', delta),
        BoundId.DAVIS_KAHAN_TAN_PROJECTED: triple(eval_davis_kahan, 'tan', delta, True),
        BoundId.QUAD_APOST_SIN: triple(eval_quadratic_aposteriori, 'sin', delta),
        BoundId.QUAD_APOST_TAN: triple(eval_quadratic_aposteriori, 'tan', delta),
    }


def evaluate_bound(a, x: Subspace, y: Subspace, bound_id: BoundId,
                   policy: TolerancePolicy = DEFAULT_POLICY,
                   cap: int = DEFAULT_SEARCH_CAP, delta: Optional[float] = None,
                   pair: Optional[RitzPair] = None) -> BoundReport:
    """Evaluate one bound; hypothesis failures propagate as their specific errors."""
    table = _dispatch(cap, delta)
    if bound_id not in table:
        raise ValueError(f"{bound_id.value} is not evaluated on an (A, X, Y) triple")
    pair = pair if pair is not None else RitzPair.build(a, x, y, policy)
    return table[bound_id](pair)


def evaluate_all(a, x: Subspace, y: Subspace,
                 policy: TolerancePolicy = DEFAULT_POLICY,
                 cap: int = DEFAULT_SEARCH_CAP,
                 bounds: Optional[Iterable[BoundId]] = None,
                 delta: Optional[float] = None,
                 pair: Optional[RitzPair] = None) -> List[BoundReport]:
    """Every applicable bound for (A, X, Y), in a fixed order.

    Bounds whose hypotheses fail for this input (X not invariant, unmet gap, angles not
    acute) are skipped and logged at debug level.
    """
    pair = pair if pair is not None else RitzPair.build(a, x, y, policy)
    table = _dispatch(cap, delta)
    selected = list(bounds) if bounds is not None else TRIPLE_BOUNDS
    invariant = pair.x_invariant
    reports = []
    for bound_id in selected:
        if bound_id not in table:
            raise ValueError(f"{bound_id.value} is not evaluated on an (A, X, Y) triple")
        if bound_id in INVARIANT_ONLY and not invariant:
            continue
        try:
            reports.append(table[bound_id](pair))
        except NOT_APPLICABLE as e:
            logger.debug(f"{bound_id.value} not applicable: {e}")
    return reports
