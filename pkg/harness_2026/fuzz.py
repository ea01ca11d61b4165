# harness_2026/fuzz.py
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np
import pandas as pd

from bounds_2026.block_discard import eval_block_discard
from bounds_2026.evaluate import TRIPLE_BOUNDS, evaluate_all
from bounds_2026.pair import RitzPair
from bounds_2026.report import BoundGrade, BoundId, BoundReport
from numeric_core_2026.errors import SingularBlockError
from numeric_core_2026.tolerance import DEFAULT_POLICY, TolerancePolicy
from subspaces_2026.angles import principal_angles
from .artifacts import write_counterexample, write_jsonl
from .experiment import ExperimentConfig, ProvenBoundViolation, TrialRecord
from .generators import draw_dimensions, gen_hermitian, gen_invariant_subspace, gen_subspace, trial_rng

logger = logging.getLogger(__name__)

SKIP_ANGLE = np.pi / 2 - 1e-8
BLOCK_DISCARD_MAX_N = 10


@dataclass
class TrialOutcome:
    record: TrialRecord
    failing: List[BoundReport] = field(default_factory=list)
    matrices: Dict[str, np.ndarray] = field(default_factory=dict)
    block_indices: Optional[List[int]] = None


@dataclass
class FuzzSummary:
    trials: int
    skipped: int
    violations: int
    counterexample_paths: List[str]
    table: pd.DataFrame
    records: List[TrialRecord]

    @property
    def exit_code(self) -> int:
        return 3 if self.counterexample_paths else 0


class FuzzRunner2026:
    """Random (A, X, Y) trials checked against the selected bounds.

    Proven bounds gate the run: the first violation writes an artifact and raises
    ProvenBoundViolation. Conjectural failures only write artifacts.
    """

    def __init__(self, config: ExperimentConfig, policy: TolerancePolicy = DEFAULT_POLICY):
        self.config = config
        self.policy = policy
        self.logger = logging.getLogger(__name__)
        self.bounds = self.selected_bounds(config.check)
        self.check_block_discard = config.check in ('conjecture', 'all')

    @staticmethod
    def selected_bounds(check: str) -> List[BoundId]:
        if check == 'conjecture':
            return [BoundId.CONJECTURE_COS, BoundId.CONJECTURE_TAN]
        if check == 'theorems':
            return [b for b in TRIPLE_BOUNDS if b.grade is not BoundGrade.CONJECTURAL]
        return list(TRIPLE_BOUNDS)

    def _kind(self, trial_id: int) -> str:
        if self.config.scalar_kind != 'mixed':
            return self.config.scalar_kind
        return 'real' if (trial_id // 2) % 2 == 0 else 'complex'

    def run_trial(self, trial_id: int) -> TrialOutcome:
        start = time.perf_counter()
        cfg = self.config
        rng = trial_rng(cfg.seed, trial_id)
        kind = self._kind(trial_id)
        n, p = draw_dimensions(rng, cfg.n_min, cfg.n_max, cfg.p_rule)
        a = gen_hermitian(rng, n, kind)
        y = gen_subspace(rng, n, p, kind)
        invariant = trial_id % 2 == 1
        x = gen_invariant_subspace(rng, a, p) if invariant else gen_subspace(rng, n, p, kind)
        block_indices = sorted(int(i) for i in rng.choice(n, size=p, replace=False))

        record = TrialRecord(trial_id=trial_id, n=n, p=p, kind=kind,
                             x_kind='invariant' if invariant else 'random')
        outcome = TrialOutcome(record=record)

        angles = principal_angles(x, y)
        if angles.theta_max >= SKIP_ANGLE:
            record.skipped = True
            record.skip_reason = f"theta_max={angles.theta_max:.17g}"
            self.logger.debug(f"Trial {trial_id}: skipped, {record.skip_reason}")
        else:
            pair = RitzPair.build(a, x, y, self.policy)
            reports = evaluate_all(a, x, y, self.policy, cfg.search_cap, self.bounds, pair=pair)
            self._record(outcome, reports)
            evaluated = {r.bound_id for r in reports}
            record.not_applicable = [b.value for b in self.bounds if b not in evaluated]
            if any(r.is_violation or r.is_counterexample for r in reports):
                outcome.matrices = {'A': a, 'X': x.basis, 'Y': y.basis}

        if self.check_block_discard and n <= BLOCK_DISCARD_MAX_N:
            self._block_discard(outcome, a, p, block_indices)

        record.elapsed = time.perf_counter() - start
        return outcome

    def _record(self, outcome: TrialOutcome, reports: List[BoundReport]):
        record = outcome.record
        for report in reports:
            key = report.bound_id.value
            record.worst_margins[key] = report.worst_margin
            record.holds[key] = report.holds
            if report.is_violation:
                record.violations.append(key)
                outcome.failing.append(report)
            elif report.is_counterexample:
                record.counterexamples.append(key)
                outcome.failing.append(report)

    def _block_discard(self, outcome: TrialOutcome, a: np.ndarray, k: int, indices: List[int]):
        record = outcome.record
        try:
            report = eval_block_discard(a, k, indices, self.policy)
        except SingularBlockError as e:
            record.not_applicable.append(BoundId.BLOCK_DISCARD.value)
            self.logger.debug(f"Trial {record.trial_id}: {e}")
            return
        self._record(outcome, [report])
        scaled = report.context['scaled']
        record.worst_margins['block_discard_scaled'] = float(np.min(scaled['margins']))
        record.holds['block_discard_scaled'] = bool(scaled['holds'])
        if not scaled['holds']:
            record.violations.append('block_discard_scaled')
            outcome.failing.append(report)
        if outcome.failing and 'A' not in outcome.matrices:
            outcome.matrices = {'A': a}
        outcome.block_indices = indices

    def _artifact(self, outcome: TrialOutcome, report: BoundReport) -> str:
        record = outcome.record
        name = f"trial_{record.trial_id:06d}_{report.bound_id.value}"
        if report.bound_id is BoundId.BLOCK_DISCARD:
            eigs = ','.join(str(i + 1) for i in outcome.block_indices)
            matrices = {'A': outcome.matrices['A']}
            replay = f"block-discard --matrix A.mat --k {record.p} --eigs {eigs}"
        else:
            matrices = outcome.matrices
            replay = f"bounds --matrix A.mat --x X.mat --y Y.mat --bound {report.bound_id.value}"
        payload = {
            'seed': self.config.seed,
            'trial_id': record.trial_id,
            'kind': record.kind,
            'config': self.config.to_dict(),
            'report': report.to_dict(),
            'replay': replay,
        }
        return write_counterexample(self.config.counterexample_dir, name, matrices, payload)

    def _handle_failures(self, outcome: TrialOutcome, counterexamples: List[str]):
        for report in outcome.failing:
            path = self._artifact(outcome, report)
            scaled_failed = (report.bound_id is BoundId.BLOCK_DISCARD
                             and not report.context['scaled']['holds'])
            if report.is_violation or scaled_failed:
                name = 'block_discard_scaled' if scaled_failed else report.bound_id.value
                message = (f"Proven bound {name} violated in trial {outcome.record.trial_id}: "
                           f"worst margin {report.worst_margin:.3e}; artifact {path}")
                self.logger.error(f"❌ {message}")
                raise ProvenBoundViolation(message, report, path)
            counterexamples.append(path)
            self.logger.warning(f"⚠️ Conjecture counterexample ({report.bound_id.value}) at {path}")

    def summarize(self, records: List[TrialRecord]) -> pd.DataFrame:
        rows = [
            {'bound': bound, 'margin': margin, 'holds': record.holds[bound]}
            for record in records
            for bound, margin in record.worst_margins.items()
        ]
        if not rows:
            return pd.DataFrame(columns=['bound', 'evaluated', 'held', 'worst_margin'])
        frame = pd.DataFrame(rows)
        table = frame.groupby('bound', sort=True).agg(
            evaluated=('margin', 'size'),
            held=('holds', 'sum'),
            worst_margin=('margin', 'min'),
        ).reset_index()
        table['held'] = table['held'].astype(int)
        return table

    def run(self, records_path: Optional[str] = None) -> FuzzSummary:
        cfg = self.config
        self.logger.info(f"🔬 Fuzzing {cfg.trials} trials (seed {cfg.seed}, check {cfg.check}, "
                         f"n in [{cfg.n_min}, {cfg.n_max}], workers {cfg.workers})")
        started = time.perf_counter()
        records: List[TrialRecord] = []
        counterexamples: List[str] = []
        executor = ThreadPoolExecutor(max_workers=cfg.workers)
        try:
            # map yields in trial order whatever the worker count
            for outcome in executor.map(self.run_trial, range(cfg.trials)):
                records.append(outcome.record)
                if outcome.failing:
                    self._handle_failures(outcome, counterexamples)
        finally:
            executor.shutdown(wait=True, cancel_futures=True)

        if records_path:
            write_jsonl(records_path, (r.to_dict() for r in records))

        skipped = sum(1 for r in records if r.skipped)
        table = self.summarize(records)
        self.logger.info(f"✅ {cfg.trials} trials done in {time.perf_counter() - started:.1f}s: "
                         f"{skipped} skipped, {len(counterexamples)} counterexamples")
        return FuzzSummary(
            trials=cfg.trials,
            skipped=skipped,
            violations=0,
            counterexample_paths=counterexamples,
            table=table,
            records=records,
        )
