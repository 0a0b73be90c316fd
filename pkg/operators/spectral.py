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
import scipy.linalg

from helpers.errors import ConvergenceFailure
from helpers.profiler import Profiler
from .hermitian import HermitianOperator, as_matrix

RESIDUAL_TOLERANCE = 1e-10


def spectral_power(eigenvalues, exponent):
    """
    Apply t -> t^exponent to a nonnegative spectrum, with 0^p = 0 for p > 0
    and t^0 = 1 for every t (including 0)
    """
    eigenvalues = np.asarray(eigenvalues, dtype=float)
    if exponent == 0:
        return np.ones_like(eigenvalues)

    powered = np.zeros_like(eigenvalues)
    positive = eigenvalues > 0
    powered[positive] = eigenvalues[positive] ** exponent
    return powered


def fix_phases(eigenvectors):
    """
    Multiply each column by a phase so that its largest-magnitude component
    is real and positive
    """
    eigenvectors = np.array(eigenvectors, dtype=complex)
    for column in range(eigenvectors.shape[1]):
        vector = eigenvectors[:, column]
        pivot = vector[np.argmax(np.abs(vector))]
        if pivot != 0:
            eigenvectors[:, column] = vector * (np.conj(pivot) / abs(pivot))
    return eigenvectors


class SpectralDecomposition:
    """
    Eigenvalues sorted in descending order, and the matching orthonormal
    eigenvectors stored as the columns of a unitary matrix
    """
    __slots__ = ("_eigenvalues", "_eigenvectors")

    def __init__(self, eigenvalues, eigenvectors):
        eigenvalues = np.array(eigenvalues, dtype=float)
        eigenvectors = np.array(eigenvectors, dtype=complex)
        eigenvalues.setflags(write=False)
        eigenvectors.setflags(write=False)
        self._eigenvalues = eigenvalues
        self._eigenvectors = eigenvectors

    @property
    def eigenvalues(self):
        return self._eigenvalues

    @property
    def eigenvectors(self):
        return self._eigenvectors

    @property
    def n(self):
        return self._eigenvalues.shape[0]

    @property
    def spectral(self):
        # Lets measures accept either a state or its decomposition
        return self

    def reconstruct(self, function=None):
        """
        Sum_i f(lambda_i) |x_i><x_i|, with f the identity by default
        """
        values = self._eigenvalues if function is None else function(self._eigenvalues)
        vectors = self._eigenvectors
        matrix = (vectors * values) @ vectors.conj().T
        return (matrix + matrix.conj().T) / 2

    def in_eigenbasis(self, X):
        """
        Matrix elements X_ij = <x_i|X|x_j>
        """
        vectors = self._eigenvectors
        return vectors.conj().T @ as_matrix(X) @ vectors

    def power(self, exponent):
        return HermitianOperator(self.reconstruct(lambda values: spectral_power(values, exponent)))

    def __repr__(self):
        return "SpectralDecomposition(eigenvalues={})".format(self._eigenvalues)


@Profiler.profilable
def spectral_decompose(H):
    """
    Eigendecomposition of a Hermitian operator, with eigenvalues in descending
    order and eigenvector phases fixed for reproducible output
    """
    matrix = as_matrix(H)

    try:
        eigenvalues, eigenvectors = scipy.linalg.eigh(matrix, check_finite=True)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise ConvergenceFailure(matrix.shape[0], reason=str(e)) from e

    order = np.argsort(eigenvalues, kind="stable")[::-1]
    eigenvalues = eigenvalues[order]
    eigenvectors = fix_phases(eigenvectors[:, order])

    # Make sure the solver actually returned eigenpairs
    scale = 1.0 + np.linalg.norm(matrix, 2)
    residual = np.linalg.norm(matrix @ eigenvectors - eigenvectors * eigenvalues, axis=0)
    worst = float(np.max(residual, initial=0.0))
    if worst > RESIDUAL_TOLERANCE * scale:
        raise ConvergenceFailure(matrix.shape[0], residual=worst)

    return SpectralDecomposition(eigenvalues, eigenvectors)
