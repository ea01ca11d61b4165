# harness_2026/experiment.py
import logging
from dataclasses import asdict, dataclass, field, fields, replace
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
import yaml

logger = logging.getLogger(__name__)

SCALAR_KINDS = ('real', 'complex', 'mixed')
CHECKS = ('conjecture', 'theorems', 'all')
N_LIMITS = (2, 64)


class ProvenBoundViolation(RuntimeError):
    """A proven bound failed beyond tolerance: always an implementation bug."""

    def __init__(self, message: str, report=None, artifact_path: Optional[str] = None):
        super().__init__(message)
        self.report = report
        self.artifact_path = artifact_path


@dataclass(frozen=True)
class ExperimentConfig:
    """Seeded configuration shared by the fuzz, figure1 and appendix drivers."""

    seed: int = 42
    trials: int = 10000
    n_min: int = 2
    n_max: int = 20
    p_rule: float = 0.5
    eps_min: float = 1e-8
    eps_max: float = 1e-1
    eps_points: int = 29
    trials_per_eps: int = 10
    scalar_kind: str = 'mixed'
    check: str = 'all'
    workers: int = 1
    search_cap: int = 12
    counterexample_dir: str = 'counterexamples'
    output_path: Optional[str] = None
    slope_window: Tuple[float, float] = (1e-6, 1e-2)

    def __post_init__(self):
        self.validate()

    def validate(self):
        if self.trials < 1:
            raise ValueError("trials ≥ 1 required")
        if not (N_LIMITS[0] <= self.n_min <= self.n_max <= N_LIMITS[1]):
            raise ValueError(f"n_range [{self.n_min}, {self.n_max}] must lie within {list(N_LIMITS)}")
        if not 0.0 < self.p_rule <= 1.0:
            raise ValueError(f"p_rule must be in (0, 1], got {self.p_rule}")
        if not 0.0 < self.eps_min < self.eps_max:
            raise ValueError(f"eps grid needs 0 < eps_min < eps_max, got {self.eps_min}, {self.eps_max}")
        if self.eps_points < 3:
            raise ValueError("eps grid degenerate: need at least 3 points")
        if self.trials_per_eps < 1:
            raise ValueError("trials_per_eps ≥ 1 required")
        if self.scalar_kind not in SCALAR_KINDS:
            raise ValueError(f"scalar_kind must be one of {SCALAR_KINDS}")
        if self.check not in CHECKS:
            raise ValueError(f"check must be one of {CHECKS}")
        if self.workers < 1:
            raise ValueError("workers ≥ 1 required")
        lo, hi = self.slope_window
        if not 0.0 < lo < hi:
            raise ValueError(f"slope window must satisfy 0 < lo < hi, got {self.slope_window}")

    @classmethod
    def from_config(cls, config: Optional[Dict[str, Any]]) -> 'ExperimentConfig':
        """Defaults from the ConfigLoader2026 dictionary."""
        config = config or {}
        return cls(
            seed=int(config.get('FUZZ_SEED', 42)),
            trials=int(config.get('FUZZ_TRIALS', 10000)),
            n_min=int(config.get('N_MIN', 2)),
            n_max=int(config.get('N_MAX', 20)),
            p_rule=float(config.get('P_RULE', 0.5)),
            workers=int(config.get('WORKERS', 1)),
            search_cap=int(config.get('EXHAUSTIVE_SEARCH_CAP', 12)),
            counterexample_dir=str(config.get('COUNTEREXAMPLE_DIR', 'counterexamples')),
        )

    @classmethod
    def from_yaml(cls, path: str, base: Optional['ExperimentConfig'] = None) -> 'ExperimentConfig':
        with open(path, 'r', encoding='utf-8') as handle:
            data = yaml.safe_load(handle) or {}
        if not isinstance(data, dict):
            raise ValueError(f"{path}: expected a mapping at top level")
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            logger.warning(f"{path}: ignoring unknown keys {sorted(unknown)}")
        values = {k: v for k, v in data.items() if k in known}
        if 'slope_window' in values:
            values['slope_window'] = tuple(float(v) for v in values['slope_window'])
        logger.info(f"Loaded experiment config from {path}")
        return replace(base or cls(), **values)

    def with_overrides(self, **overrides) -> 'ExperimentConfig':
        """Copy with every non-None override applied."""
        values = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **values) if values else self

    def eps_grid(self) -> np.ndarray:
        return np.geomspace(self.eps_min, self.eps_max, self.eps_points)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['slope_window'] = list(self.slope_window)
        data['ensemble'] = 'gaussian'
        return data


@dataclass
class TrialRecord:
    """Outcome of one fuzz trial. ``elapsed`` never reaches the written record stream."""

    trial_id: int
    n: int = 0
    p: int = 0
    kind: str = 'real'
    x_kind: str = 'random'
    skipped: bool = False
    skip_reason: str = ''
    worst_margins: Dict[str, float] = field(default_factory=dict)
    holds: Dict[str, bool] = field(default_factory=dict)
    not_applicable: List[str] = field(default_factory=list)
    violations: List[str] = field(default_factory=list)
    counterexamples: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        data = asdict(self)
        if not include_timing:
            data.pop('elapsed')
        return data


@dataclass(frozen=True)
class SweepRow:
    eps: float
    max_lhs: float
    max_mixed_rhs: float
    max_weyl_rhs: float

    def __post_init__(self):
        if min(self.eps, self.max_lhs, self.max_mixed_rhs, self.max_weyl_rhs) < 0:
            raise ValueError("Sweep row values must be nonnegative")
