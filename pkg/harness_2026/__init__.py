from .experiment import ExperimentConfig, TrialRecord, SweepRow, ProvenBoundViolation
from .generators import (
    trial_rng,
    gen_hermitian,
    gen_subspace,
    gen_invariant_subspace,
    gen_unit_hermitian,
    gen_unit_spectrum,
)
from .fuzz import FuzzRunner2026, FuzzSummary
from .figure1 import Figure1Sweep2026, SweepResult, fit_loglog_slope
from .appendix import AppendixSuite2026
