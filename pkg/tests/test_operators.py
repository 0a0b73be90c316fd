"""
Copyright (C) 2026 The wydcheck authors

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program.  If not, see <https://www.gnu.org/licenses/>.
"""
import numpy as np
import pytest

from .utils import SIGMA_X, SIGMA_Y, SIGMA_Z, maximally_mixed, pure_state
from helpers.errors import (
    NotSquare,
    NotHermitian,
    NotPSD,
    TraceNotOne,
    NotUnitary,
    NotFinite,
    ConvergenceFailure,
    DimensionMismatch,
    DimensionTooLarge,
    EmptyList,
    NegativeExponent,
    InvalidAlpha
)
from operators import (
    Alpha,
    HALF,
    HermitianOperator,
    DensityMatrix,
    validate_hermitian,
    spectral_decompose,
    density_from,
    matrix_power,
    commutator,
    anticommutator,
    trace_product,
    kron,
    center_observable,
    local_observable
)


@pytest.fixture
def two_level_rho():
    return density_from(np.diag([0.25, 0.75]))


@pytest.fixture
def two_level_a():
    return validate_hermitian([[0, 4 + 2j], [4 - 2j, 0]])


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def random_matrix(rng, n):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def random_hermitian_matrix(rng, n):
    matrix = random_matrix(rng, n)
    return (matrix + matrix.conj().T) / 2


### Alpha

@pytest.mark.parametrize("value", [0.0, 1.0, -0.1, 1.5, float("nan")])
def test_alpha_rejects_endpoints(value):
    with pytest.raises(InvalidAlpha):
        Alpha(value)


def test_alpha_exponents():
    alpha = Alpha(0.25)

    assert alpha.complement == 0.75
    assert alpha.skew_exponent == 0.5
    assert not alpha.is_half
    assert HALF.is_half
    assert Alpha.of(alpha) is alpha
    assert Alpha.of(0.25) == alpha


### Hermitian validation

def test_validate_two_level_observable(two_level_a):
    assert two_level_a.n == 2
    assert two_level_a.element(0, 1) == 4 + 2j
    assert two_level_a.element(1, 0) == 4 - 2j


def test_validate_identity():
    identity = validate_hermitian([[1, 0], [0, 1]])
    assert np.array_equal(identity.matrix, np.eye(2))


def test_validate_not_hermitian():
    with pytest.raises(NotHermitian) as e:
        validate_hermitian([[0, 1], [2, 0]], 1e-9)
    assert e.value.deviation == pytest.approx(1.0)


def test_validate_symmetrizes_within_tolerance():
    operator = validate_hermitian([[1, 1 + 1e-11], [1, 0]], 1e-9)
    assert operator.element(0, 1) == operator.element(1, 0)


@pytest.mark.parametrize("value", [np.nan, np.inf, -np.inf, complex(0, np.nan)])
def test_validate_non_finite(value):
    with pytest.raises(NotFinite):
        validate_hermitian([[value, 0], [0, 0]])


def test_validate_not_square():
    with pytest.raises(NotSquare):
        validate_hermitian(np.zeros((2, 3)))


def test_validate_too_large():
    with pytest.raises(DimensionTooLarge):
        validate_hermitian(np.eye(65))


def test_operator_is_immutable(two_level_a):
    with pytest.raises(ValueError):
        two_level_a.matrix[0, 0] = 1


### Spectral decomposition

def test_decompose_two_level_state():
    decomposition = spectral_decompose(HermitianOperator(np.diag([0.25, 0.75])))
    assert np.allclose(decomposition.eigenvalues, [0.75, 0.25])


def test_decompose_projector():
    decomposition = spectral_decompose(HermitianOperator([[0.5, 0.5], [0.5, 0.5]]))
    assert np.allclose(decomposition.eigenvalues, [1.0, 0.0], atol=1e-12)


@pytest.mark.parametrize("n", [2, 3, 4, 8])
def test_decompose_reconstruction(rng, n):
    matrix = random_hermitian_matrix(rng, n)
    decomposition = spectral_decompose(HermitianOperator(matrix))

    error = np.max(np.abs(decomposition.reconstruct() - matrix))
    assert error <= 1e-9 * (1 + np.max(np.abs(matrix)))

    vectors = decomposition.eigenvectors
    assert np.allclose(vectors.conj().T @ vectors, np.eye(n), atol=1e-10)
    assert np.all(np.diff(decomposition.eigenvalues) <= 0)


def test_decompose_fixes_phases(rng):
    decomposition = spectral_decompose(HermitianOperator(random_hermitian_matrix(rng, 4)))

    for column in decomposition.eigenvectors.T:
        pivot = column[np.argmax(np.abs(column))]
        assert abs(pivot.imag) < 1e-12
        assert pivot.real > 0


def test_decompose_solver_failure(monkeypatch):
    def failing_eigh(*args, **kwargs):
        raise np.linalg.LinAlgError("did not converge")

    monkeypatch.setattr("scipy.linalg.eigh", failing_eigh)

    with pytest.raises(ConvergenceFailure) as e:
        spectral_decompose(HermitianOperator(np.eye(3)))
    assert e.value.dimension == 3
    assert e.value.iterations is None
    assert "3x3" in str(e.value)
    assert "iteration" not in str(e.value)


### Density matrices

def test_density_two_level_state(two_level_rho):
    assert np.allclose(two_level_rho.eigenvalues, [0.75, 0.25])
    assert two_level_rho.rank == 2
    assert not two_level_rho.is_pure


def test_density_maximally_mixed():
    assert np.allclose(maximally_mixed(2).eigenvalues, [0.5, 0.5])


def test_density_not_psd():
    with pytest.raises(NotPSD) as e:
        density_from(np.diag([1.5, -0.5]))
    assert e.value.min_eigenvalue == pytest.approx(-0.5)


def test_density_trace():
    with pytest.raises(TraceNotOne):
        density_from(np.diag([0.5, 0.6]))


def test_density_clamps_rounding_noise():
    rho = density_from(np.diag([1.0 + 5e-13, -5e-13]))

    assert rho.eigenvalues[1] == 0.0
    assert rho.is_pure
    assert np.sum(rho.eigenvalues) == pytest.approx(1.0, abs=1e-15)


def test_density_from_spectrum():
    basis = np.array([[0, 1], [1, 0]], dtype=complex)
    rho = DensityMatrix.from_spectrum([0.75, 0.25], basis)
    assert np.allclose(rho.matrix, np.diag([0.25, 0.75]))


def test_density_from_spectrum_not_unitary():
    with pytest.raises(NotUnitary):
        DensityMatrix.from_spectrum([0.5, 0.5], [[1, 1], [0, 1]])


def test_density_non_finite():
    with pytest.raises(NotFinite):
        density_from([[np.nan, 0], [0, 1]])


@pytest.mark.parametrize("eigenvalues, basis", [
    ([np.nan, 1.0], None),
    ([np.inf, 0.0], None),
    ([0.5, 0.5], [[np.nan, 0], [0, 1]]),
])
def test_density_from_spectrum_non_finite(eigenvalues, basis):
    with pytest.raises(NotFinite):
        DensityMatrix.from_spectrum(eigenvalues, basis)


def test_density_tensor(two_level_rho):
    joint = two_level_rho.tensor(maximally_mixed(3))

    assert joint.n == 6
    assert np.real(np.trace(joint.matrix)) == pytest.approx(1.0)
    assert np.allclose(joint.matrix, np.kron(two_level_rho.matrix, np.eye(3) / 3))


def test_density_mix(two_level_rho):
    mixed = two_level_rho.mix(maximally_mixed(2), 0.5)
    assert np.allclose(mixed.matrix, np.diag([0.375, 0.625]))


### Matrix power

def test_power_square_root(two_level_rho):
    assert np.allclose(matrix_power(two_level_rho, 0.5).matrix, np.diag([0.5, 0.8660254]))


def test_power_quarter(two_level_rho):
    assert np.allclose(matrix_power(two_level_rho, 0.25).matrix, np.diag([0.7071068, 0.9306049]))


def test_power_zero_is_identity():
    rho = pure_state([1, 0])
    assert np.array_equal(matrix_power(rho, 0).matrix, np.eye(2))


def test_power_keeps_kernel():
    rho = pure_state([1, 0])
    assert np.allclose(matrix_power(rho, 0.01).matrix, np.diag([1, 0]))


def test_power_negative(two_level_rho):
    with pytest.raises(NegativeExponent):
        matrix_power(two_level_rho, -0.5)


@pytest.mark.parametrize("alpha", [0.1, 0.25, 0.6, 0.9])
def test_power_multiplicative(rng, alpha):
    matrix = random_matrix(rng, 4)
    product = matrix @ matrix.conj().T
    rho = density_from(product / np.trace(product).real)

    recombined = rho.power(alpha).matrix @ rho.power(1 - alpha).matrix
    assert np.max(np.abs(recombined - rho.matrix)) <= 1e-9


### Commutators and traces

def test_commutator_pauli():
    assert np.allclose(commutator(SIGMA_X, SIGMA_Y), 2j * SIGMA_Z.matrix)
    assert np.allclose(commutator(SIGMA_X, SIGMA_X), 0)


def test_commutator_two_level(two_level_rho, two_level_a):
    b = validate_hermitian([[0, 1 - 5j], [1 + 5j, 0]])
    value = trace_product([two_level_rho, commutator(two_level_a, b)])
    assert value == pytest.approx(-22j)


def test_anticommutator_examples():
    assert np.allclose(anticommutator(SIGMA_X, SIGMA_X), 2 * np.eye(2))
    assert np.allclose(anticommutator(SIGMA_X, SIGMA_Y), 0)
    assert np.allclose(anticommutator(np.diag([1, 2]), np.diag([3, 4])), np.diag([6, 16]))


def test_commutator_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        commutator(SIGMA_X, np.eye(3))


def test_commutator_adjoint(rng):
    a, b = random_hermitian_matrix(rng, 3), random_hermitian_matrix(rng, 3)
    c, d = commutator(a, b), anticommutator(a, b)

    assert np.max(np.abs(c.conj().T + c)) <= 1e-12
    assert np.max(np.abs(d.conj().T - d)) <= 1e-12


def test_trace_product_examples(two_level_rho, two_level_a):
    assert trace_product([np.eye(2)]) == 2
    assert trace_product([SIGMA_X, SIGMA_X]) == 2

    value = trace_product([two_level_rho.power(0.25), two_level_a, two_level_rho.power(0.75), two_level_a])
    assert value.real == pytest.approx(17.9778, abs=1e-3)


def test_trace_product_empty():
    with pytest.raises(EmptyList):
        trace_product([])


def test_trace_product_cyclic(rng):
    matrices = [random_matrix(rng, 3) for _ in range(4)]
    reference = trace_product(matrices)

    for shift in range(1, 4):
        rotated = trace_product(matrices[shift:] + matrices[:shift])
        assert abs(rotated - reference) <= 1e-10 * max(1.0, abs(reference))


### Tensor products

def test_kron_examples():
    assert np.array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))
    assert np.allclose(kron(np.diag([1, 2]), np.diag([3, 4])), np.diag([3, 4, 6, 8]))
    assert isinstance(kron(SIGMA_X, SIGMA_Z), HermitianOperator)


def test_kron_mixed_product(rng):
    a, c = random_matrix(rng, 2), random_matrix(rng, 2)
    b, d = random_matrix(rng, 3), random_matrix(rng, 3)

    assert np.max(np.abs(kron(a, b) @ kron(c, d) - kron(a @ c, b @ d))) <= 1e-12
    assert np.max(np.abs(kron(a + c, b) - kron(a, b) - kron(c, b))) <= 1e-12


def test_local_observable():
    joint = local_observable(SIGMA_Z, SIGMA_Z)
    assert np.allclose(joint.matrix, np.diag([2, 0, 0, -2]))


### Centering

def test_center_identity(two_level_rho):
    assert np.allclose(center_observable(two_level_rho, np.eye(2)).matrix, 0)


def test_center_traceless():
    assert np.allclose(center_observable(maximally_mixed(2), SIGMA_Z).matrix, SIGMA_Z.matrix)


def test_center_projector(two_level_rho):
    centered = center_observable(two_level_rho, np.diag([1, 0]))
    assert np.allclose(centered.matrix, np.diag([0.75, -0.25]))
    assert abs(np.trace(two_level_rho.matrix @ centered.matrix)) < 1e-12
