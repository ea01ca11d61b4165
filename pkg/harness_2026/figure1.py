# harness_2026/figure1.py
import json
import logging
import os
import time
from dataclasses import asdict, dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from scipy import stats

from dilation_2026.dilation import eval_additive_bound, eval_weyl_additive
from numeric_core_2026.tolerance import DEFAULT_POLICY, TolerancePolicy
from .artifacts import write_counterexample
from .experiment import ExperimentConfig, ProvenBoundViolation, SweepRow
from .generators import gen_unit_hermitian, trial_rng

logger = logging.getLogger(__name__)

CSV_COLUMNS = ['eps', 'max_lhs', 'max_mixed_rhs', 'max_weyl_rhs']
ANGLE_RANGE = (0.1, np.pi / 2 - 0.1)
# Grid eps up to which the largest mixed term must stay below the largest Weyl term.
# With theta up to pi/2 - 0.1 the crossover sits between 1e-3 and 1e-2.
OUTPERFORM_EPS = 1e-3


def fit_loglog_slope(rows: Iterable[Tuple[float, float]], window: Tuple[float, float]) -> float:
    """Least-squares slope of log(value) against log(eps) over eps in [lo, hi]."""
    lo, hi = window
    points = [(float(e), float(v)) for e, v in rows if lo <= e <= hi]
    if len(points) < 3:
        raise ValueError(f"Need at least 3 points in window [{lo:g}, {hi:g}], got {len(points)}")
    eps, values = np.array(points).T
    if np.any(eps <= 0) or np.any(values <= 0):
        raise ValueError("Log-log fit needs positive eps and values")
    return float(stats.linregress(np.log(eps), np.log(values)).slope)


@dataclass
class Repetition:
    """Base projectors and perturbation directions of one repetition."""

    theta: float
    f_bar: np.ndarray
    g_bar: np.ndarray
    e_f: np.ndarray
    e_g: np.ndarray

    def perturbed(self, eps: float) -> Tuple[np.ndarray, np.ndarray]:
        return self.f_bar + eps * self.e_f, self.g_bar + eps * self.e_g


@dataclass
class SweepResult:
    rows: List[SweepRow]
    slopes: Dict[str, float]
    outperforms_below: Optional[float]
    counterexample_paths: List[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 3 if self.counterexample_paths else 0

    @property
    def meets_outperform_eps(self) -> bool:
        limit = OUTPERFORM_EPS * (1 + 1e-9)
        return all(r.max_mixed_rhs < r.max_weyl_rhs for r in self.rows if r.eps <= limit)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([asdict(r) for r in self.rows], columns=CSV_COLUMNS)

    def summary(self) -> Dict:
        return {
            'slopes': self.slopes,
            'outperforms_below': self.outperforms_below,
            'outperform_eps': OUTPERFORM_EPS,
            'meets_outperform_eps': self.meets_outperform_eps,
            'counterexamples': self.counterexample_paths,
        }


class Figure1Sweep2026:
    """Additive-perturbation sweep: rank-1 projectors in R^2 perturbed by eps-scaled unit-norm noise.

    For each eps the maximum over repetitions of the largest eigenvalue change, the largest
    mixed-bound term and the largest Weyl term is recorded.
    """

    def __init__(self, config: ExperimentConfig, policy: TolerancePolicy = DEFAULT_POLICY):
        self.config = config
        self.policy = policy
        self.logger = logging.getLogger(__name__)

    def repetition(self, index: int) -> Repetition:
        rng = trial_rng(self.config.seed, index)
        theta = float(rng.uniform(*ANGLE_RANGE))
        phi = float(rng.uniform(0.0, np.pi))
        u = np.array([np.cos(phi), np.sin(phi)])
        v = np.array([np.cos(phi + theta), np.sin(phi + theta)])
        return Repetition(
            theta=theta,
            f_bar=np.outer(u, u),
            g_bar=np.outer(v, v),
            e_f=gen_unit_hermitian(rng, 2, 'real'),
            e_g=gen_unit_hermitian(rng, 2, 'real'),
        )

    def _counterexample(self, eps: float, index: int, f, g, report) -> str:
        name = f"figure1_eps_{eps:.3e}_rep_{index:03d}"
        payload = {
            'seed': self.config.seed,
            'eps': eps,
            'repetition': index,
            'config': self.config.to_dict(),
            'report': report.to_dict(),
        }
        return write_counterexample(self.config.counterexample_dir, name, {'F': f, 'G': g}, payload)

    def sweep_point(self, eps: float, repetitions: Sequence[Repetition],
                    counterexamples: List[str]) -> SweepRow:
        max_lhs = max_mixed = max_weyl = 0.0
        for index, rep in enumerate(repetitions):
            f, g = rep.perturbed(eps)
            mixed = eval_additive_bound(f, g, self.policy)
            weyl = eval_weyl_additive(f, g, self.policy)
            if weyl.is_violation:
                path = self._counterexample(eps, index, f, g, weyl)
                raise ProvenBoundViolation(
                    f"Weyl bound violated at eps={eps:g}, repetition {index}; artifact {path}", weyl, path)
            if not mixed.holds:
                counterexamples.append(self._counterexample(eps, index, f, g, mixed))
            max_lhs = max(max_lhs, float(mixed.lhs[0]))
            max_mixed = max(max_mixed, float(mixed.rhs[0]))
            max_weyl = max(max_weyl, float(weyl.rhs[0]))
        return SweepRow(eps=float(eps), max_lhs=max_lhs, max_mixed_rhs=max_mixed, max_weyl_rhs=max_weyl)

    @staticmethod
    def outperforms_below(rows: Sequence[SweepRow]) -> Optional[float]:
        """Largest grid eps up to which the mixed term stays below the Weyl term at every point."""
        threshold = None
        for row in sorted(rows, key=lambda r: r.eps):
            if row.max_mixed_rhs >= row.max_weyl_rhs:
                break
            threshold = row.eps
        return threshold

    def slopes(self, rows: Sequence[SweepRow]) -> Dict[str, float]:
        result = {}
        for column in CSV_COLUMNS[1:]:
            pairs = [(r.eps, getattr(r, column)) for r in rows]
            try:
                result[column] = fit_loglog_slope(pairs, self.config.slope_window)
            except ValueError as e:
                self.logger.warning(f"No slope for {column}: {e}")
                result[column] = float('nan')
        return result

    def run(self) -> SweepResult:
        cfg = self.config
        started = time.perf_counter()
        self.logger.info(f"📈 Sweeping {cfg.eps_points} eps values in [{cfg.eps_min:g}, {cfg.eps_max:g}], "
                         f"{cfg.trials_per_eps} repetitions each (seed {cfg.seed})")
        repetitions = [self.repetition(r) for r in range(cfg.trials_per_eps)]
        counterexamples: List[str] = []
        rows = [self.sweep_point(float(eps), repetitions, counterexamples) for eps in cfg.eps_grid()]
        slopes = self.slopes(rows)
        threshold = self.outperforms_below(rows)
        self.logger.info(
            f"✅ Sweep done in {time.perf_counter() - started:.2f}s; slopes "
            + ', '.join(f"{k}={v:.3f}" for k, v in slopes.items())
            + (f"; mixed below Weyl for eps ≤ {threshold:g}" if threshold is not None else "")
        )
        result = SweepResult(rows=rows, slopes=slopes, outperforms_below=threshold,
                             counterexample_paths=counterexamples)
        if not result.meets_outperform_eps:
            self.logger.warning(f"⚠️ Mixed term not below Weyl at every eps ≤ {OUTPERFORM_EPS:g} "
                                f"(holds up to {threshold})")
        return result

    @staticmethod
    def write(result: SweepResult, path: str) -> str:
        """CSV at ``path`` plus ``<stem>_slopes.json`` beside it; returns the summary path."""
        result.to_frame().to_csv(path, index=False, float_format='%.17g')
        stem, _ = os.path.splitext(path)
        summary_path = f"{stem}_slopes.json"
        summary = result.summary()
        summary['slopes'] = {k: (None if not np.isfinite(v) else v) for k, v in summary['slopes'].items()}
        with open(summary_path, 'w', encoding='utf-8', newline='\n') as handle:
            json.dump(summary, handle, indent=2, sort_keys=True)
            handle.write('\n')
        logger.info(f"Wrote {len(result.rows)} sweep rows to {path} and slopes to {summary_path}")
        return summary_path
