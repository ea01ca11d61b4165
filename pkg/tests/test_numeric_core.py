# tests/test_numeric_core.py
import numpy as np
import pytest
from numpy.testing import assert_allclose

from numeric_core_2026 import (
    DimensionMismatchError,
    EmptySubspaceError,
    NonFiniteError,
    NotHermitianError,
    NotPSDError,
    RitzBoundsError,
    Subspace,
    TolerancePolicy,
    condition_number,
    eigh,
    eigvalsh,
    inverse_singular_values,
    orthonormalize,
    psd_sqrt,
    svd_decreasing,
)
from numeric_core_2026.linalg import as_matrix, check_hermitian, hermitian_function


class TestEigh:
    def test_diagonal_input_sorted_decreasing(self):
        values, vectors = eigh(np.diag([2.0, 1.0, 3.0]))
        assert_allclose(values, [3.0, 2.0, 1.0])
        assert_allclose(np.abs(vectors), np.eye(3)[:, [2, 0, 1]], atol=1e-14)

    def test_identity(self):
        assert_allclose(eigvalsh(np.eye(4)), np.ones(4))

    def test_swap_matrix(self):
        values, vectors = eigh(np.array([[0.0, 1.0], [1.0, 0.0]]))
        assert_allclose(values, [1.0, -1.0], atol=1e-15)
        assert_allclose(np.abs(vectors), np.full((2, 2), np.sqrt(0.5)), atol=1e-15)

    def test_complex_hermitian_has_real_spectrum(self, rng):
        m = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
        h = (m + m.conj().T) / 2
        values, vectors = eigh(h)
        assert values.dtype == np.float64
        assert np.all(np.diff(values) <= 0)
        assert_allclose(h @ vectors, vectors * values, atol=1e-12)

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitianError, match="not Hermitian"):
            eigh(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_rejects_non_square(self):
        with pytest.raises(NotHermitianError):
            eigh(np.ones((2, 3)))

    def test_rejects_non_finite(self):
        with pytest.raises(NonFiniteError):
            eigh(np.array([[np.nan, 0.0], [0.0, 1.0]]))

    def test_tiny_asymmetry_accepted(self):
        h = np.array([[1.0, 2.0], [2.0 + 1e-14, 3.0]])
        assert check_hermitian(h).shape == (2, 2)


class TestSvd:
    @pytest.mark.parametrize("matrix, expected", [
        ([[0.0, 1.0], [0.0, 0.0]], [1.0, 0.0]),
        (np.eye(3), [1.0, 1.0, 1.0]),
        ([[3.0, 0.0], [0.0, 4.0], [0.0, 0.0]], [4.0, 3.0]),
    ])
    def test_examples(self, matrix, expected):
        assert_allclose(svd_decreasing(np.array(matrix)), expected)

    def test_inverse_singular_values(self):
        assert_allclose(inverse_singular_values(np.diag([2.0, 4.0])), [0.5, 0.25])
        assert condition_number(np.diag([2.0, 4.0])) == pytest.approx(2.0)

    def test_singular_condition_number_infinite(self):
        assert condition_number(np.diag([1.0, 0.0])) == np.inf


class TestOrthonormalize:
    def test_single_column(self):
        basis = orthonormalize(np.array([[2.0], [0.0]])).basis
        assert_allclose(np.abs(basis), [[1.0], [0.0]])

    def test_duplicated_column_has_rank_one(self):
        s = orthonormalize(np.array([[1.0, 1.0], [0.0, 0.0]]))
        assert s.p == 1
        assert_allclose(np.abs(s.basis), [[1.0], [0.0]])

    def test_zero_matrix(self):
        with pytest.raises(EmptySubspaceError, match="empty subspace"):
            orthonormalize(np.zeros((3, 2)))

    def test_projector_preserved(self, rng):
        q, _ = np.linalg.qr(rng.standard_normal((6, 2)))
        s = orthonormalize(q)
        assert s.p == 2
        assert_allclose(s.projector(), q @ q.T, atol=1e-12)

    def test_negative_tolerance(self):
        with pytest.raises(ValueError):
            orthonormalize(np.eye(2), tol=-1.0)

    def test_policy_rank_cutoff(self):
        weak = np.diag([1.0, 1e-3])
        coarse = TolerancePolicy(rank_tol_factor=1e-3)
        assert orthonormalize(weak).p == 2
        s = orthonormalize(weak, policy=coarse)
        assert s.p == 1
        assert s.rank_tol == pytest.approx(coarse.rank_cutoff(weak.shape, 1.0))
        assert orthonormalize(weak, tol=1e-4, policy=coarse).p == 2


class TestPsdSqrt:
    def test_diagonal(self):
        assert_allclose(psd_sqrt(np.diag([4.0, 9.0])), np.diag([2.0, 3.0]), atol=1e-15)

    def test_half_identity(self):
        assert_allclose(psd_sqrt(np.eye(2) / 2), np.eye(2) / np.sqrt(2), atol=1e-15)

    def test_rejects_negative(self):
        with pytest.raises(NotPSDError, match="not PSD"):
            psd_sqrt(np.diag([1.0, -0.5]))

    def test_tiny_negative_clamped(self):
        root = psd_sqrt(np.diag([1.0, -1e-14]))
        assert_allclose(root, np.diag([1.0, 0.0]), atol=1e-15)

    def test_hermitian_function(self):
        h = np.array([[2.0, 1.0], [1.0, 2.0]])
        assert_allclose(hermitian_function(h, lambda v: v ** 2), h @ h, atol=1e-13)


class TestSubspace:
    def test_vector_is_reshaped(self):
        s = Subspace(np.array([1.0, 0.0, 0.0]))
        assert (s.n, s.p) == (3, 1)
        assert s.is_real

    def test_basis_is_read_only(self):
        s = Subspace(np.eye(3)[:, :2])
        with pytest.raises(ValueError):
            s.basis[0, 0] = 5.0

    def test_rejects_non_orthonormal(self):
        with pytest.raises(RitzBoundsError, match="not orthonormal"):
            Subspace(np.array([[1.0, 1.0], [0.0, 1.0]]))

    def test_rejects_too_many_columns(self):
        with pytest.raises(DimensionMismatchError):
            Subspace(np.ones((1, 2)))

    def test_rotation_keeps_projector(self):
        s = Subspace(np.eye(3)[:, :2])
        c, t = np.cos(0.3), np.sin(0.3)
        rotated = s.rotated(np.array([[c, -t], [t, c]]))
        assert_allclose(rotated.projector(), s.projector(), atol=1e-15)

    def test_ambient_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            Subspace(np.eye(3)[:, :1]).check_same_ambient(Subspace(np.eye(4)[:, :1]))


class TestTolerancePolicy:
    def test_check_tol_scales_with_size_and_magnitude(self):
        policy = TolerancePolicy()
        assert policy.check_tol([0.5], [0.5]) == pytest.approx(1e-12 + 1e-10)
        assert policy.check_tol([10.0, 1.0, 0.0], [2.0]) == pytest.approx(1e-12 + 1e-10 * 3 * 10.0)

    def test_negative_values_rejected(self):
        with pytest.raises(ValueError):
            TolerancePolicy(atol=-1.0)

    def test_from_empty_config(self):
        assert TolerancePolicy.from_config({}) == TolerancePolicy()

    def test_as_matrix_keeps_real_dtype(self):
        assert as_matrix([[1, 2], [3, 4]]).dtype == np.float64
        assert as_matrix([[1j]]).dtype == np.complex128

    def test_real_input_matches_complex_promotion(self, rng):
        a = rng.standard_normal((5, 5))
        a = a + a.T
        assert eigvalsh(a).dtype == np.float64
        assert_allclose(eigvalsh(a), eigvalsh(a.astype(np.complex128)), atol=1e-10)
        assert_allclose(svd_decreasing(a[:, :3]), svd_decreasing(a[:, :3] + 0j), atol=1e-10)
        assert orthonormalize(a[:, :2]).is_real
