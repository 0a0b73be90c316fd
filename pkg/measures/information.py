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
import math

import numpy as np

from helpers.errors import NumericalFailure, NonImaginaryResult
from operators import (
    Alpha,
    HALF,
    as_matrix,
    check_dimensions,
    commutator,
    anticommutator,
    trace_product,
    expectation,
    center_observable
)
from .components import UncertaintyComponents

# Provably nonnegative quantities within this slack (relative to the size
# of the terms involved) are clamped to 0, anything below is a bug
CLAMP_TOLERANCE = 1e-12
IMAGINARY_TOLERANCE = 1e-10
U_ALPHA_TOLERANCE = 1e-9


def nonnegative(value, name, scale=1.0):
    if value >= 0:
        return value

    if value >= -CLAMP_TOLERANCE * max(1.0, abs(scale)):
        return 0.0

    raise NumericalFailure("{} evaluated to {:.3e}, below the rounding slack".format(name, value))


def quarter_squared_modulus(value):
    """
    1/4 |z|^2, the right-hand side of every relation checked by this tool
    """
    return 0.25 * abs(value) ** 2


def _real_trace(*matrices):
    return trace_product(matrices).real


def _second_moment(rho, X):
    x = as_matrix(X)
    return _real_trace(rho, x, x)


def _skew_trace(rho, X, alpha):
    """
    Tr(rho^alpha X rho^(1-alpha) X)
    """
    x = as_matrix(X)
    return _real_trace(rho.power(alpha.value), x, rho.power(alpha.complement), x)


def _imaginary_trace(rho_like, commutator_matrix, scale):
    value = trace_product([rho_like, commutator_matrix])
    if abs(value.real) > IMAGINARY_TOLERANCE * scale:
        raise NonImaginaryResult(value)
    return value.imag


def _commutator_scale(A, B):
    return 1.0 + np.linalg.norm(as_matrix(A)) * np.linalg.norm(as_matrix(B))


### Variance and its quantum part

def variance(rho, X):
    """
    V(rho, X) = Tr(rho X^2) - Tr(rho X)^2
    """
    check_dimensions(rho, X)
    second = _second_moment(rho, X)
    return nonnegative(second - expectation(rho, X) ** 2, "V(rho, X)", second)


def i_alpha(rho, X, alpha):
    """
    Wigner-Yanase-Dyson information Tr(rho X^2) - Tr(rho^alpha X rho^(1-alpha) X)
    """
    alpha = Alpha.of(alpha)
    check_dimensions(rho, X)
    second = _second_moment(rho, X)
    return nonnegative(second - _skew_trace(rho, X, alpha), "I_alpha(rho, X)", second)


def j_alpha(rho, Y, alpha):
    """
    Tr(rho Y^2) + Tr(rho^alpha Y rho^(1-alpha) Y) - 2 Tr(rho Y)^2
    """
    alpha = Alpha.of(alpha)
    check_dimensions(rho, Y)
    second = _second_moment(rho, Y)
    value = second + _skew_trace(rho, Y, alpha) - 2 * expectation(rho, Y) ** 2
    return nonnegative(value, "J_alpha(rho, Y)", second)


def u_alpha(rho, X, alpha):
    """
    sqrt(I_alpha J_alpha), cross-checked against sqrt(V^2 - (V - I_alpha)^2)
    """
    return _u_from_parts(variance(rho, X), i_alpha(rho, X, alpha), j_alpha(rho, X, alpha))


def _u_from_parts(variance_value, i_value, j_value):
    # Compare the squares, the square root amplifies rounding near 0
    product = i_value * j_value
    difference = variance_value ** 2 - (variance_value - i_value) ** 2

    if abs(product - difference) > U_ALPHA_TOLERANCE * max(1.0, variance_value ** 2):
        raise NumericalFailure("U_alpha^2 disagrees between IJ = {:.12e} and V^2 - (V - I)^2 = {:.12e}".format(
            product,
            difference
        ))

    return math.sqrt(max(0.0, product))


def skew_information(rho, X):
    """
    Wigner-Yanase skew information -1/2 Tr([rho^(1/2), X]^2), computed from
    the commutator rather than from i_alpha
    """
    check_dimensions(rho, X)
    c = commutator(rho.power(0.5), X)
    second = _second_moment(rho, X)
    return nonnegative(-0.5 * np.trace(c @ c).real, "I(rho, X)", second)


def dyson_i_alpha(rho, X, alpha):
    """
    I_alpha in Dyson's commutator form -1/2 Tr([rho^alpha, X][rho^(1-alpha), X])
    """
    alpha = Alpha.of(alpha)
    check_dimensions(rho, X)
    left = commutator(rho.power(alpha.value), X)
    right = commutator(rho.power(alpha.complement), X)
    second = _second_moment(rho, X)
    return nonnegative(-0.5 * np.trace(left @ right).real, "I_alpha(rho, X)", second)


def anticommutator_j_alpha(rho, Y, alpha):
    """
    J_alpha in its anticommutator form 1/2 Tr({rho^alpha, Y0}{rho^(1-alpha), Y0})
    """
    alpha = Alpha.of(alpha)
    check_dimensions(rho, Y)
    centered = center_observable(rho, Y)
    left = anticommutator(rho.power(alpha.value), centered)
    right = anticommutator(rho.power(alpha.complement), centered)
    second = _second_moment(rho, Y)
    return nonnegative(0.5 * np.trace(left @ right).real, "J_alpha(rho, Y)", second)


def luo_j(rho, Y):
    """
    J(rho, Y) = 1/2 Tr({rho^(1/2), Y0}^2)
    """
    return anticommutator_j_alpha(rho, Y, HALF)


### Commutator terms

def commutator_expectation(rho, A, B):
    """
    Tr(rho [A, B]), purely imaginary for Hermitian A and B
    """
    check_dimensions(rho, A, B)
    imaginary = _imaginary_trace(rho, commutator(A, B), _commutator_scale(A, B))
    return complex(0.0, imaginary)


def l_alpha(rho, A, B, alpha):
    """
    Tr(rho [A, B]) - Tr(rho^|2 alpha - 1| [A, B])
    At alpha = 1/2 this is exactly Tr(rho [A, B]) (rho^0 is the identity)
    """
    alpha = Alpha.of(alpha)
    first = commutator_expectation(rho, A, B)
    if alpha.is_half:
        return first

    second = _imaginary_trace(
        rho.power(alpha.skew_exponent),
        commutator(A, B),
        _commutator_scale(A, B)
    )
    return complex(0.0, first.imag - second)


def decompose_variance(rho, X, alpha):
    """
    Fill V, I_alpha, J_alpha, U_alpha and the classical part V - I_alpha
    """
    alpha = Alpha.of(alpha)
    variance_value = variance(rho, X)
    i_value = i_alpha(rho, X, alpha)
    j_value = j_alpha(rho, X, alpha)
    u_value = _u_from_parts(variance_value, i_value, j_value)

    components = UncertaintyComponents(
        variance=variance_value,
        i_alpha=i_value,
        j_alpha=j_value,
        u_alpha=u_value,
        classical=variance_value - i_value,
    )

    if not components.identities_hold():
        raise NumericalFailure("Variance decomposition does not satisfy I + J = 2V: {}".format(components))

    return components
