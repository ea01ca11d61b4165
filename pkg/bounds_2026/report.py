# bounds_2026/report.py
import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

import numpy as np

from majorization_2026.majorization import MajorizationResult, decreasing, pad_zeros, weak_majorize
from numeric_core_2026.tolerance import DEFAULT_POLICY, TolerancePolicy

logger = logging.getLogger(__name__)


class BoundGrade(Enum):
    PROVEN = "proven"
    CONJECTURAL = "conjectural"
    EXPERIMENTAL = "experimental"


class BoundId(Enum):
    CONJECTURE_COS = "conjecture_cos"
    CONJECTURE_TAN = "conjecture_tan"
    THM_MIXED_COS = "thm_mixed_cos"
    THM_MIXED_SQUARED = "thm_mixed_squared"
    THM_MIXED_SCALED = "thm_mixed_scaled"
    COR_TAN_COSMAX = "cor_tan_cosmax"
    COR_TAN_SQUARED = "cor_tan_squared"
    COR_TAN_SCALED = "cor_tan_scaled"
    APRIORI_SIN = "apriori_sin"
    APRIORI_SIN_SQUARED = "apriori_sin_squared"
    LEMMA_SIN_RX = "lemma_sin_rx"
    LEMMA_SIN_RY = "lemma_sin_ry"
    SUN91 = "sun91"
    WEYL_MATCHING = "weyl_matching"
    DAVIS_KAHAN_SIN = "davis_kahan_sin"
    DAVIS_KAHAN_TAN = "davis_kahan_tan"
    DAVIS_KAHAN_TAN_PROJECTED = "davis_kahan_tan_projected"
    QUAD_APOST_SIN = "quad_apost_sin"
    QUAD_APOST_TAN = "quad_apost_tan"
    BLOCK_DISCARD = "block_discard"
    ADDITIVE_TAN = "additive_tan"
    WEYL_ADDITIVE = "weyl_additive"

    @property
    def grade(self) -> BoundGrade:
        if self in _CONJECTURAL:
            return BoundGrade.CONJECTURAL
        if self in _EXPERIMENTAL:
            return BoundGrade.EXPERIMENTAL
        return BoundGrade.PROVEN

    @classmethod
    def parse(cls, name: str) -> 'BoundId':
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ValueError(f"Unknown bound id {name!r}") from None


_CONJECTURAL = {BoundId.CONJECTURE_COS, BoundId.CONJECTURE_TAN,
                BoundId.BLOCK_DISCARD, BoundId.ADDITIVE_TAN}
_EXPERIMENTAL = {BoundId.DAVIS_KAHAN_TAN_PROJECTED}

PROVEN_BOUNDS = [b for b in BoundId if b.grade is BoundGrade.PROVEN]
CONJECTURAL_BOUNDS = [b for b in BoundId if b.grade is BoundGrade.CONJECTURAL]


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        # JSON has no infinity; an infinite gap is written as null
        return float(value) if np.isfinite(value) else None
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    if isinstance(value, Enum):
        return value.value
    return value


@dataclass(frozen=True, eq=False)
class BoundReport:
    """One bound evaluated on one input: both sides, the prefix margins and the verdict."""

    bound_id: BoundId
    lhs: np.ndarray
    rhs: np.ndarray
    verdict: MajorizationResult
    n: int
    p: int
    context: Dict[str, Any] = field(default_factory=dict)
    heuristic: bool = False
    delta_override: bool = False

    @property
    def holds(self) -> bool:
        return self.verdict.holds

    @property
    def grade(self) -> BoundGrade:
        return self.bound_id.grade

    @property
    def worst_margin(self) -> float:
        return self.verdict.worst_margin

    @property
    def is_gating(self) -> bool:
        """Only proven bounds checked under their exact hypotheses can fail a run."""
        return self.grade is BoundGrade.PROVEN and not self.heuristic and not self.delta_override

    @property
    def is_violation(self) -> bool:
        return self.is_gating and not self.holds

    @property
    def is_counterexample(self) -> bool:
        return self.grade is BoundGrade.CONJECTURAL and not self.holds

    def to_dict(self) -> Dict[str, Any]:
        return _jsonable({
            'bound_id': self.bound_id.value,
            'grade': self.grade.value,
            'n': self.n,
            'p': self.p,
            'lhs': self.lhs,
            'rhs': self.rhs,
            'margins': self.verdict.margins,
            'holds': self.holds,
            'tol': self.verdict.tol,
            'heuristic': self.heuristic,
            'delta_override': self.delta_override,
            'context': self.context,
        })


def make_report(bound_id: BoundId, lhs, rhs, n: int, p: int,
                context: Optional[Dict[str, Any]] = None,
                policy: TolerancePolicy = DEFAULT_POLICY,
                heuristic: bool = False, delta_override: bool = False) -> BoundReport:
    """Zero-pad both sides to a common length, sort them and attach the weak-majorization verdict."""
    lhs = np.abs(np.asarray(lhs, dtype=float).ravel())
    rhs = np.asarray(rhs, dtype=float).ravel()
    length = max(lhs.size, rhs.size)
    lhs = decreasing(pad_zeros(lhs, length))
    rhs = decreasing(pad_zeros(rhs, length))
    verdict = weak_majorize(lhs, rhs, policy=policy)
    report = BoundReport(
        bound_id=bound_id, lhs=lhs, rhs=rhs, verdict=verdict, n=n, p=p,
        context=dict(context or {}), heuristic=heuristic, delta_override=delta_override,
    )
    if report.is_violation:
        logger.error(f"{bound_id.value} violated: worst margin {verdict.worst_margin:.3e} (tol {verdict.tol:.1e})")
    elif not report.holds:
        logger.warning(f"{bound_id.value} ({report.grade.value}) does not hold: "
                       f"worst margin {verdict.worst_margin:.3e}")
    return report


def reports_to_json(reports) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True)


def write_reports(path, reports):
    with open(path, 'w', encoding='utf-8', newline='\n') as handle:
        handle.write(reports_to_json(reports))
        handle.write('\n')
    logger.info(f"Wrote {len(reports)} bound reports to {path}")
