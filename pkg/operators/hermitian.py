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
    NotSquare,
    NotHermitian,
    NotFinite,
    DimensionMismatch,
    DimensionTooLarge,
    EmptyList
)

# Dense matrices only, larger problems are out of scope
MAX_DIMENSION = 64

TOL_HERM = 1e-9


def as_matrix(value):
    """
    Return the raw complex matrix behind an operator, a state or an array
    """
    matrix = getattr(value, "matrix", value)
    return np.asarray(matrix, dtype=complex)


def check_dimensions(*operators):
    """
    Raise DimensionMismatch unless all the given operators share the same
    square shape, and return that dimension
    """
    shapes = [as_matrix(op).shape for op in operators]
    if len(set(shapes)) > 1:
        raise DimensionMismatch(shapes)
    return shapes[0][0]


class HermitianOperator:
    """
    Immutable n x n complex matrix which is known to be self-adjoint
    Use validate_hermitian to build one from untrusted data
    """
    __slots__ = ("_matrix",)

    def __init__(self, matrix):
        matrix = np.array(matrix, dtype=complex)
        matrix.setflags(write=False)
        self._matrix = matrix

    @classmethod
    def identity(cls, n):
        return cls(np.eye(n, dtype=complex))

    @classmethod
    def zeros(cls, n):
        return cls(np.zeros((n, n), dtype=complex))

    @property
    def matrix(self):
        return self._matrix

    @property
    def n(self):
        return self._matrix.shape[0]

    def element(self, i, j):
        return self._matrix[i, j]

    def __add__(self, other):
        check_dimensions(self, other)
        return HermitianOperator(self._matrix + as_matrix(other))

    def __mul__(self, scalar):
        # Only real scalars keep the operator self-adjoint
        return HermitianOperator(float(scalar) * self._matrix)

    __rmul__ = __mul__

    def __repr__(self):
        return "HermitianOperator(n={})".format(self.n)


def validate_hermitian(raw, tol_herm=TOL_HERM):
    """
    Check that raw is a square, self-adjoint matrix (up to tol_herm) and
    return its symmetrized version (raw + raw^H) / 2
    """
    matrix = np.asarray(raw, dtype=complex)

    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise NotSquare(matrix.shape)

    if matrix.shape[0] > MAX_DIMENSION:
        raise DimensionTooLarge("Dimension {} exceeds the supported maximum of {}".format(
            matrix.shape[0],
            MAX_DIMENSION
        ))

    if not np.all(np.isfinite(matrix)):
        raise NotFinite("Matrix")

    deviation = float(np.max(np.abs(matrix - matrix.conj().T), initial=0.0))
    if deviation > tol_herm:
        raise NotHermitian(deviation, tol_herm)

    return HermitianOperator((matrix + matrix.conj().T) / 2)


def commutator(A, B):
    """
    [A, B] = AB - BA, anti-Hermitian when A and B are Hermitian
    """
    check_dimensions(A, B)
    a, b = as_matrix(A), as_matrix(B)
    return a @ b - b @ a


def anticommutator(A, B):
    """
    {A, B} = AB + BA, Hermitian when A and B are Hermitian
    """
    check_dimensions(A, B)
    a, b = as_matrix(A), as_matrix(B)
    return a @ b + b @ a


def trace_product(matrices):
    """
    Trace of the left-to-right product of the given matrices
    """
    matrices = list(matrices)
    if not matrices:
        raise EmptyList("Cannot compute the trace of an empty product")

    check_dimensions(*matrices)

    product = as_matrix(matrices[0])
    for matrix in matrices[1:]:
        product = product @ as_matrix(matrix)

    return complex(np.trace(product))


def kron(A, B):
    """
    Kronecker product of two operators
    Hermitian operators stay Hermitian, anything else comes back as an array
    """
    product = np.kron(as_matrix(A), as_matrix(B))
    if isinstance(A, HermitianOperator) and isinstance(B, HermitianOperator):
        return HermitianOperator(product)
    return product


def local_observable(A1, A2):
    """
    A1 x I2 + I1 x A2, the observable of a composite system made of two
    independent local observables
    """
    identity1 = HermitianOperator.identity(as_matrix(A1).shape[0])
    identity2 = HermitianOperator.identity(as_matrix(A2).shape[0])
    return kron(A1, identity2) + kron(identity1, A2)


def expectation(rho, X):
    """
    Tr(rho X), real for a state and an observable
    """
    check_dimensions(rho, X)
    return float(np.real(np.trace(as_matrix(rho) @ as_matrix(X))))


def center_observable(rho, X):
    """
    X0 = X - Tr(rho X) I, so that Tr(rho X0) = 0
    """
    mean = expectation(rho, X)
    return HermitianOperator(as_matrix(X) - mean * np.eye(as_matrix(X).shape[0]))
