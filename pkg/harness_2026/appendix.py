# harness_2026/appendix.py
import logging
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

import numpy as np
import pandas as pd
import scipy.linalg

from dilation_2026.dilation import (
    coordinate_subspace,
    dilation_basis,
    dilation_projector,
    dilation_residual_geometric,
    dilation_residual_singvals,
)
from majorization_2026.majorization import decreasing, pad_zeros, weak_majorize
from numeric_core_2026.linalg import eigvalsh, inverse_singular_values, psd_sqrt, svd_decreasing
from numeric_core_2026.tolerance import DEFAULT_POLICY, TolerancePolicy
from rayleigh_ritz_2026.ritz import residual_singvals, ritz
from subspaces_2026.angles import principal_angles, projector_product_singvals
from .experiment import ExperimentConfig
from .generators import (
    gaussian,
    gen_hermitian,
    gen_invertible,
    gen_positive_definite,
    gen_subspace,
    gen_unit_spectrum,
    gen_unitary,
    trial_rng,
)

logger = logging.getLogger(__name__)

APPENDIX_MAX_N = 8
PREFIX_FORM_TRIALS = 100
MAX_CONDITION = 1e2
IDENTITY_TOL = 1e-10


@dataclass(frozen=True)
class Check:
    margin: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.margin >= -self.tol


def _abs_power(m: np.ndarray, t: float) -> np.ndarray:
    """|M|^t with |M| = (M^H M)^{1/2}, built from the SVD of M."""
    _, s, vh = scipy.linalg.svd(m)
    return (vh.conj().T * s ** t) @ vh


def _sv(m: np.ndarray, length: int) -> np.ndarray:
    return pad_zeros(svd_decreasing(m), length)


class AppendixSuite2026:
    """Randomized checks of the matrix inequalities the Ritz bounds are built on.

    Every property runs on ``config.trials`` instances drawn from the substream
    (seed, property index, instance); a property passes only with zero failures.
    """

    def __init__(self, config: ExperimentConfig, policy: TolerancePolicy = DEFAULT_POLICY):
        self.config = config
        self.policy = policy
        self.logger = logging.getLogger(__name__)
        self.properties: List[Tuple[str, Callable, int]] = [
            ('fan', self.check_fan, config.trials),
            ('product', self.check_product, config.trials),
            ('weyl', self.check_weyl, config.trials),
            ('condition_number', self.check_condition_number, config.trials),
            ('normal_product', self.check_normal_product, config.trials),
            ('power_half', lambda rng, n, kind: self.check_power(rng, n, kind, 0.5), config.trials),
            ('power_two', lambda rng, n, kind: self.check_power(rng, n, kind, 2.0), config.trials),
            ('sqrt_lemma', self.check_sqrt_lemma, config.trials),
            ('real_part_theorem', self.check_real_part_theorem, config.trials),
            ('real_part_lemma', self.check_real_part_lemma, config.trials),
            ('pd_commutator', self.check_pd_commutator, config.trials),
            ('two_sided_commutator', self.check_two_sided_commutator, config.trials),
            ('commutator_prefix_form', self.check_commutator_prefix_form,
             min(config.trials, PREFIX_FORM_TRIALS)),
            ('commutator_lemma', self.check_commutator_lemma, config.trials),
            ('invertible_commutator_1', self.check_invertible_min, config.trials),
            ('invertible_commutator_2', self.check_invertible_two_sided, config.trials),
            ('invertible_commutator_3', self.check_invertible_inverse, config.trials),
            ('projector_lemma', self.check_projector_lemma, config.trials),
            ('dilation_identities', self.check_dilation_identities, config.trials),
        ]

    # helpers

    def _weak(self, x, y) -> Check:
        result = weak_majorize(x, y, policy=self.policy)
        return Check(result.worst_margin, result.tol)

    @staticmethod
    def _close(x, y, tol: float = IDENTITY_TOL) -> Check:
        diff = np.abs(np.asarray(x) - np.asarray(y))
        return Check(-float(np.max(diff)) if diff.size else 0.0, tol)

    def _kind(self, instance: int) -> str:
        if self.config.scalar_kind != 'mixed':
            return self.config.scalar_kind
        return 'real' if instance % 2 == 0 else 'complex'

    def _dimension(self, rng: np.random.Generator) -> int:
        hi = max(self.config.n_min, min(self.config.n_max, APPENDIX_MAX_N))
        return int(rng.integers(self.config.n_min, hi + 1))

    # properties

    def check_fan(self, rng, n, kind) -> List[Check]:
        a, b = gaussian(rng, n, n, kind), gaussian(rng, n, n, kind)
        return [self._weak(svd_decreasing(a + b), svd_decreasing(a) + svd_decreasing(b))]

    def check_product(self, rng, n, kind) -> List[Check]:
        m, k, l = (int(v) for v in rng.integers(1, n + 1, size=3))
        a, b = gaussian(rng, m, k, kind), gaussian(rng, k, l, kind)
        length = max(m, k, l)
        s_ab, s_a, s_b = _sv(a @ b, length), _sv(a, length), _sv(b, length)
        return [
            self._weak(s_ab, s_a * s_b),
            # entrywise forms
            Check(float(np.min(s_a[0] * s_b - s_ab)), self.policy.check_tol(s_ab, s_a[0] * s_b)),
            Check(float(np.min(s_a * s_b[0] - s_ab)), self.policy.check_tol(s_ab, s_a * s_b[0])),
        ]

    def check_weyl(self, rng, n, kind) -> List[Check]:
        a, b = gen_hermitian(rng, n, kind), gen_hermitian(rng, n, kind)
        return [self._weak(np.abs(eigvalsh(a) - eigvalsh(b)), svd_decreasing(a - b))]

    def check_condition_number(self, rng, n, kind) -> List[Check]:
        j = gen_invertible(rng, n, kind, MAX_CONDITION)
        t = gen_invertible(rng, n, kind, MAX_CONDITION)
        d1, d2 = rng.standard_normal(n), rng.standard_normal(n)
        a = (j * d1) @ scipy.linalg.inv(j)
        b = (t * d2) @ scipy.linalg.inv(t)
        s_j, s_t = svd_decreasing(j), svd_decreasing(t)
        factor = np.sqrt((s_j[0] / s_j[-1]) * (s_t[0] / s_t[-1]))
        return [self._weak(np.abs(decreasing(d1) - decreasing(d2)), factor * svd_decreasing(a - b))]

    def check_normal_product(self, rng, n, kind) -> List[Check]:
        if rng.random() < 0.5:
            u = gen_unitary(rng, n, kind)
            a = (u * rng.uniform(0.0, 1.0, n)) @ u.conj().T
            b = (u * rng.uniform(0.0, 1.0, n)) @ u.conj().T
        else:
            a = gen_invertible(rng, n, kind, MAX_CONDITION)
            u = gen_unitary(rng, n, 'complex')
            spectrum = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            normal = (u * spectrum) @ u.conj().T
            b = scipy.linalg.solve(a, normal)
        return [self._weak(svd_decreasing(_abs_power(a @ b, 0.5)), svd_decreasing(_abs_power(b @ a, 0.5)))]

    def check_power(self, rng, n, kind, t: float) -> List[Check]:
        a, b = gaussian(rng, n, n, kind), gaussian(rng, n, n, kind)
        return [self._weak(svd_decreasing(a @ b) ** t, svd_decreasing(a) ** t * svd_decreasing(b) ** t)]

    def check_sqrt_lemma(self, rng, n, kind) -> List[Check]:
        a, b = gaussian(rng, n, n, kind), gaussian(rng, n, n, kind)
        t = a @ b
        root = psd_sqrt(_abs_power(t, 1.0), self.policy)
        s_t = svd_decreasing(t)
        # compare squares: sqrt amplifies rounding near zero
        identity = self._close(svd_decreasing(root) ** 2, s_t, IDENTITY_TOL * max(1.0, s_t[0]))
        bound = self._weak(np.sqrt(s_t), np.sqrt(svd_decreasing(a)) * np.sqrt(svd_decreasing(b)))
        return [identity, bound]

    def check_real_part_theorem(self, rng, n, kind) -> List[Check]:
        a = gen_invertible(rng, n, kind, MAX_CONDITION)
        h = gen_hermitian(rng, n, kind)
        b = scipy.linalg.solve(a, h)
        ba = b @ a
        return [self._weak(svd_decreasing(a @ b), svd_decreasing((ba + ba.conj().T) / 2))]

    def check_real_part_lemma(self, rng, n, kind) -> List[Check]:
        a = gaussian(rng, n, n, kind)
        return [self._weak(svd_decreasing((a + a.conj().T) / 2), svd_decreasing(a))]

    def _commutator_triple(self, rng, n, kind):
        a, b = gen_hermitian(rng, n, kind), gen_hermitian(rng, n, kind)
        t = gen_positive_definite(rng, n, kind)
        t_inv = scipy.linalg.inv(t)
        return a, b, t, t_inv

    def check_pd_commutator(self, rng, n, kind) -> List[Check]:
        a, b, t, _ = self._commutator_triple(rng, n, kind)
        s_min = svd_decreasing(t)[-1]
        return [self._weak(s_min * svd_decreasing(a - b), svd_decreasing(a @ t - t @ b))]

    def check_two_sided_commutator(self, rng, n, kind) -> List[Check]:
        a, b, t, t_inv = self._commutator_triple(rng, n, kind)
        rhs = svd_decreasing(a @ t - t @ b) * svd_decreasing(t_inv @ a - b @ t_inv)
        return [self._weak(svd_decreasing(a - b) ** 2, rhs)]

    def check_commutator_prefix_form(self, rng, n, kind) -> List[Check]:
        """Norm form: (sum_k s_i(A-B))^2 <= (sum_k s_i(AT-TB)) (sum_k s_i(T^-1 A - B T^-1))."""
        a, b, t, t_inv = self._commutator_triple(rng, n, kind)
        lhs = np.cumsum(svd_decreasing(a - b)) ** 2
        rhs = np.cumsum(svd_decreasing(a @ t - t @ b)) * np.cumsum(svd_decreasing(t_inv @ a - b @ t_inv))
        checks = [Check(float(np.min(rhs - lhs)), self.policy.check_tol(lhs, rhs))]
        # the entrywise-product form holds on the same instance
        weak = svd_decreasing(a @ t - t @ b) * svd_decreasing(t_inv @ a - b @ t_inv)
        checks.append(self._weak(svd_decreasing(a - b) ** 2, weak))
        return checks

    def check_commutator_lemma(self, rng, n, kind) -> List[Check]:
        a, b, t, _ = self._commutator_triple(rng, n, kind)
        rhs = inverse_singular_values(t) ** 2 * svd_decreasing(a @ t - t @ b) ** 2
        return [self._weak(svd_decreasing(a - b) ** 2, rhs)]

    def _invertible_triple(self, rng, n, kind):
        a, b = gen_hermitian(rng, n, kind), gen_hermitian(rng, n, kind)
        t = gen_invertible(rng, n, kind, MAX_CONDITION)
        return a, b, t, np.abs(eigvalsh(a) - eigvalsh(b))

    def check_invertible_min(self, rng, n, kind) -> List[Check]:
        a, b, t, gaps = self._invertible_triple(rng, n, kind)
        return [self._weak(svd_decreasing(t)[-1] * gaps, svd_decreasing(a @ t - t @ b))]

    def check_invertible_two_sided(self, rng, n, kind) -> List[Check]:
        a, b, t, gaps = self._invertible_triple(rng, n, kind)
        t_inv = scipy.linalg.inv(t)
        rhs = svd_decreasing(a @ t - t @ b) * svd_decreasing(t_inv @ a - b @ t_inv)
        return [self._weak(gaps ** 2, rhs)]

    def check_invertible_inverse(self, rng, n, kind) -> List[Check]:
        a, b, t, gaps = self._invertible_triple(rng, n, kind)
        rhs = inverse_singular_values(t) ** 2 * svd_decreasing(a @ t - t @ b) ** 2
        return [self._weak(gaps ** 2, rhs)]

    def check_projector_lemma(self, rng, n, kind) -> List[Check]:
        p, q = (int(v) for v in rng.integers(1, n + 1, size=2))
        sp, sq = gen_subspace(rng, n, p, kind), gen_subspace(rng, n, q, kind)
        angles = principal_angles(sp, sq)
        expected = pad_zeros(decreasing(angles.sin() * angles.cos()), n)
        return [self._close(projector_product_singvals(sp, sq), expected)]

    def check_dilation_identities(self, rng, n, kind) -> List[Check]:
        f = gen_unit_spectrum(rng, n, kind)
        projector = dilation_projector(f, self.policy)
        closed = dilation_residual_singvals(f, self.policy)
        basis = dilation_basis(f, self.policy)
        z_projector = coordinate_subspace(n).projector()
        on_basis = ritz(z_projector, basis, self.policy)
        return [
            self._close(projector @ projector, projector),
            self._close(np.trace(projector).real, float(n), 1e-8),
            self._close(np.linalg.matrix_rank(projector, tol=1e-8), n, 0.0),
            self._close(pad_zeros(closed, 2 * n), dilation_residual_geometric(f, self.policy)),
            self._close(on_basis.ritz_values, eigvalsh(f)),
            self._close(residual_singvals(z_projector, basis, self.policy), closed),
        ]

    # driver

    def run_property(self, index: int, name: str, check: Callable, trials: int) -> Dict:
        failures = 0
        worst = np.inf
        for instance in range(trials):
            rng = trial_rng(self.config.seed, index, instance)
            n = self._dimension(rng)
            checks = check(rng, n, self._kind(instance))
            worst = min(worst, min(c.margin for c in checks))
            if not all(c.passed for c in checks):
                failures += 1
                self.logger.error(f"❌ {name} failed on instance {instance} (n={n}), "
                                  f"margins {[c.margin for c in checks]}")
        return {'property': name, 'trials': trials, 'failures': failures, 'worst_margin': float(worst)}

    def run(self) -> pd.DataFrame:
        started = time.perf_counter()
        self.logger.info(f"🧪 Appendix suite: {len(self.properties)} properties, "
                         f"{self.config.trials} instances each (seed {self.config.seed})")
        rows = [self.run_property(i, name, check, trials)
                for i, (name, check, trials) in enumerate(self.properties)]
        table = pd.DataFrame(rows, columns=['property', 'trials', 'failures', 'worst_margin'])
        failed = int((table['failures'] > 0).sum())
        log = self.logger.error if failed else self.logger.info
        log(f"Appendix suite done in {time.perf_counter() - started:.1f}s: {failed} properties failed")
        return table
