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

from operators import Alpha, check_dimensions, spectral_power
from .information import nonnegative


def _decomposition(state):
    # Accept a DensityMatrix as well as a bare SpectralDecomposition
    return state.spectral


def _upper_pairs(n):
    return np.triu_indices(n, k=1)


def _cross_weights(eigenvalues, alpha):
    """
    lambda_i^alpha lambda_j^(1-alpha) + lambda_i^(1-alpha) lambda_j^alpha
    for every pair i < j
    """
    first = spectral_power(eigenvalues, alpha.value)
    second = spectral_power(eigenvalues, alpha.complement)
    i, j = _upper_pairs(len(eigenvalues))
    return first[i] * second[j] + second[i] * first[j]


def variance_spectral(decomp, X):
    decomp = _decomposition(decomp)
    check_dimensions(decomp.eigenvectors, X)
    eigenvalues = decomp.eigenvalues
    elements = decomp.in_eigenbasis(X)

    # <x_i|X^2|x_i> = sum_j |X_ij|^2
    second = float(np.sum(eigenvalues * np.sum(np.abs(elements) ** 2, axis=1)))
    mean = float(np.sum(eigenvalues * np.real(np.diag(elements))))
    return nonnegative(second - mean ** 2, "V(rho, X)", second)


def i_alpha_spectral(decomp, X, alpha):
    """
    sum_{i<j} (lambda_i + lambda_j - lambda_i^a lambda_j^(1-a) - lambda_i^(1-a) lambda_j^a) |X_ij|^2
    """
    alpha = Alpha.of(alpha)
    decomp = _decomposition(decomp)
    check_dimensions(decomp.eigenvectors, X)

    eigenvalues = decomp.eigenvalues
    i, j = _upper_pairs(decomp.n)
    weights = eigenvalues[i] + eigenvalues[j] - _cross_weights(eigenvalues, alpha)
    elements = np.abs(decomp.in_eigenbasis(X)[i, j]) ** 2

    return nonnegative(float(np.sum(weights * elements)), "I_alpha(rho, X)", float(np.sum(elements)))


def j_alpha_spectral(decomp, Y, alpha):
    """
    2 sum_i lambda_i |Y_ii|^2 - 2 (sum_i lambda_i Y_ii)^2
    + sum_{i<j} (lambda_i + lambda_j + lambda_i^a lambda_j^(1-a) + lambda_i^(1-a) lambda_j^a) |Y_ij|^2
    """
    alpha = Alpha.of(alpha)
    decomp = _decomposition(decomp)
    check_dimensions(decomp.eigenvectors, Y)

    eigenvalues = decomp.eigenvalues
    elements = decomp.in_eigenbasis(Y)
    diagonal = np.real(np.diag(elements))

    i, j = _upper_pairs(decomp.n)
    weights = eigenvalues[i] + eigenvalues[j] + _cross_weights(eigenvalues, alpha)
    off_diagonal = float(np.sum(weights * np.abs(elements[i, j]) ** 2))

    second = float(np.sum(eigenvalues * diagonal ** 2))
    mean = float(np.sum(eigenvalues * diagonal))
    value = 2 * second - 2 * mean ** 2 + off_diagonal

    return nonnegative(value, "J_alpha(rho, Y)", second + off_diagonal)


def _imaginary_pair_products(decomp, A, B):
    """
    Im(A_ij B_ji) for every pair i < j
    """
    check_dimensions(decomp.eigenvectors, A, B)
    i, j = _upper_pairs(decomp.n)
    a = decomp.in_eigenbasis(A)
    b = decomp.in_eigenbasis(B)
    return np.imag(a[i, j] * b[j, i])


def commutator_expectation_spectral(decomp, A, B):
    """
    2i Im sum_{i<j} (lambda_i - lambda_j) A_ij B_ji
    """
    decomp = _decomposition(decomp)
    eigenvalues = decomp.eigenvalues
    i, j = _upper_pairs(decomp.n)
    products = _imaginary_pair_products(decomp, A, B)
    return complex(0.0, 2 * float(np.sum((eigenvalues[i] - eigenvalues[j]) * products)))


def l_alpha_coefficients(eigenvalues, alpha):
    """
    (lambda_i - lambda_j) - (lambda_i^|2a-1| - lambda_j^|2a-1|) for every pair i < j
    """
    alpha = Alpha.of(alpha)
    eigenvalues = np.asarray(eigenvalues, dtype=float)
    powered = spectral_power(eigenvalues, alpha.skew_exponent)
    i, j = _upper_pairs(len(eigenvalues))
    return (eigenvalues[i] - eigenvalues[j]) - (powered[i] - powered[j])


def l_alpha_spectral(decomp, A, B, alpha):
    """
    2i sum_{i<j} (lambda_i - lambda_j - (lambda_i^|2a-1| - lambda_j^|2a-1|)) Im(A_ij B_ji)
    """
    decomp = _decomposition(decomp)
    coefficients = l_alpha_coefficients(decomp.eigenvalues, alpha)
    products = _imaginary_pair_products(decomp, A, B)
    return complex(0.0, 2 * float(np.sum(coefficients * products)))
