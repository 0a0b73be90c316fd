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

from helpers.errors import (
    NotPSD,
    TraceNotOne,
    NotUnitary,
    NegativeExponent,
    OutOfRange,
    NotFinite,
    DimensionMismatch
)
from .hermitian import HermitianOperator, validate_hermitian, as_matrix, TOL_HERM
from .spectral import SpectralDecomposition, spectral_decompose, fix_phases

TOL_TRACE = 1e-9
TOL_PSD = 1e-12
TOL_UNITARY = 1e-9


def _clamp_spectrum(eigenvalues, tol_psd):
    """
    Reject clearly negative eigenvalues, snap rounding noise (|lambda| <= tol_psd)
    to exact zeros and renormalize the spectrum to a unit sum
    """
    eigenvalues = np.array(eigenvalues, dtype=float)

    minimum = float(np.min(eigenvalues))
    if minimum < -tol_psd:
        raise NotPSD(minimum, tol_psd)

    eigenvalues[np.abs(eigenvalues) <= tol_psd] = 0.0
    return eigenvalues / np.sum(eigenvalues)


def _check_trace(trace, tol_trace):
    deviation = abs(trace - 1.0)
    if deviation > tol_trace:
        raise TraceNotOne(deviation, tol_trace)


class DensityMatrix:
    """
    Positive semidefinite, unit-trace state whose spectral decomposition is
    computed once, on construction
    Use density_from or DensityMatrix.from_spectrum rather than the constructor
    """
    __slots__ = ("_spectral", "_op")

    def __init__(self, spectral):
        self._spectral = spectral
        self._op = HermitianOperator(spectral.reconstruct())

    @classmethod
    def from_spectrum(cls, eigenvalues, basis=None, tol_trace=TOL_TRACE, tol_psd=TOL_PSD):
        """
        Build the state sum_i lambda_i |x_i><x_i| where x_i is the i-th column
        of basis (identity when omitted)
        """
        eigenvalues = np.asarray(eigenvalues, dtype=float)
        if eigenvalues.ndim != 1 or eigenvalues.size == 0:
            raise OutOfRange("Eigenvalues must be a non-empty vector")
        if not np.all(np.isfinite(eigenvalues)):
            raise NotFinite("Eigenvalues")

        n = eigenvalues.shape[0]
        basis = np.eye(n, dtype=complex) if basis is None else np.asarray(as_matrix(basis), dtype=complex)
        if basis.shape != (n, n):
            raise DimensionMismatch([(n,), basis.shape])
        if not np.all(np.isfinite(basis)):
            raise NotFinite("Basis")

        deviation = float(np.max(np.abs(basis.conj().T @ basis - np.eye(n))))
        if deviation > TOL_UNITARY:
            raise NotUnitary(deviation)

        _check_trace(float(np.sum(eigenvalues)), tol_trace)
        eigenvalues = _clamp_spectrum(eigenvalues, tol_psd)

        order = np.argsort(eigenvalues, kind="stable")[::-1]
        spectral = SpectralDecomposition(eigenvalues[order], fix_phases(basis[:, order]))
        return cls(spectral)

    @property
    def spectral(self):
        return self._spectral

    @property
    def op(self):
        return self._op

    @property
    def matrix(self):
        return self._op.matrix

    @property
    def eigenvalues(self):
        return self._spectral.eigenvalues

    @property
    def n(self):
        return self._op.n

    @property
    def rank(self):
        return int(np.count_nonzero(self.eigenvalues))

    @property
    def is_pure(self):
        return self.rank == 1

    def power(self, exponent):
        return matrix_power(self, exponent)

    def tensor(self, other):
        """
        rho1 x rho2, built from the Kronecker products of both spectral
        decompositions so no new eigensolve is needed
        """
        eigenvalues = np.kron(self.eigenvalues, other.eigenvalues)
        eigenvectors = np.kron(self._spectral.eigenvectors, other.spectral.eigenvectors)
        order = np.argsort(eigenvalues, kind="stable")[::-1]
        return DensityMatrix(SpectralDecomposition(eigenvalues[order], eigenvectors[:, order]))

    def mix(self, other, weight):
        """
        weight * self + (1 - weight) * other
        """
        if not 0 <= weight <= 1:
            raise OutOfRange("Mixing weight must lie in [0, 1], got {}".format(weight))
        return density_from(weight * self.matrix + (1 - weight) * other.matrix)

    def commutes_with(self, X, tolerance=1e-10):
        matrix, other = self.matrix, as_matrix(X)
        return bool(np.max(np.abs(matrix @ other - other @ matrix)) <= tolerance)

    def __repr__(self):
        return "DensityMatrix(n={}, eigenvalues={})".format(self.n, self.eigenvalues)


def density_from(raw, tol_trace=TOL_TRACE, tol_psd=TOL_PSD, tol_herm=TOL_HERM):
    """
    Validate raw as a density matrix and cache its spectral decomposition
    """
    operator = validate_hermitian(raw, tol_herm)
    decomposition = spectral_decompose(operator)

    # Positivity first, so that diag(1.5, -0.5) is reported as not PSD
    minimum = float(np.min(decomposition.eigenvalues))
    if minimum < -tol_psd:
        raise NotPSD(minimum, tol_psd)

    _check_trace(float(np.real(np.trace(operator.matrix))), tol_trace)

    eigenvalues = _clamp_spectrum(decomposition.eigenvalues, tol_psd)
    return DensityMatrix(SpectralDecomposition(eigenvalues, decomposition.eigenvectors))


def matrix_power(rho, exponent):
    """
    rho^p computed on the cached spectrum, with the conventions 0^p = 0 for
    p > 0 and rho^0 = identity
    """
    if exponent < 0:
        raise NegativeExponent(exponent)

    if exponent == 0:
        return HermitianOperator.identity(rho.n)

    return rho.spectral.power(exponent)
