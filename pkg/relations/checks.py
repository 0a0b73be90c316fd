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
from helpers.logger import Logger
from measures import (
    variance,
    decompose_variance,
    commutator_expectation,
    l_alpha,
    quarter_squared_modulus
)
from operators import Alpha, HALF, check_dimensions
from .report import (
    RelationReport,
    TOL_REL,
    HEISENBERG,
    LUO_IJ,
    LUO_U,
    WYD_IJ,
    WYD_JI,
    WYD_U
)


def _components(rho, A, B, alpha):
    return {
        "A": decompose_variance(rho, A, alpha),
        "B": decompose_variance(rho, B, alpha),
    }


def check_heisenberg(rho, X, Y, tol_rel=TOL_REL):
    """
    V(rho, X) V(rho, Y) >= 1/4 |Tr(rho [X, Y])|^2
    """
    check_dimensions(rho, X, Y)
    lhs = variance(rho, X) * variance(rho, Y)
    rhs = quarter_squared_modulus(commutator_expectation(rho, X, Y))
    return RelationReport.build(HEISENBERG, HALF, lhs, rhs, _components(rho, X, Y, HALF), tol_rel)


def check_luo_ij(rho, X, Y, tol_rel=TOL_REL):
    """
    I(rho, X) J(rho, Y) >= 1/4 |Tr(rho [X, Y])|^2, with the skew information
    """
    check_dimensions(rho, X, Y)
    components = _components(rho, X, Y, HALF)
    lhs = components["A"].i_alpha * components["B"].j_alpha
    rhs = quarter_squared_modulus(commutator_expectation(rho, X, Y))
    return RelationReport.build(LUO_IJ, HALF, lhs, rhs, components, tol_rel)


def check_luo_u(rho, X, Y, tol_rel=TOL_REL):
    """
    U(rho, X) U(rho, Y) >= 1/4 |Tr(rho [X, Y])|^2
    """
    check_dimensions(rho, X, Y)
    components = _components(rho, X, Y, HALF)
    lhs = components["A"].u_alpha * components["B"].u_alpha
    rhs = quarter_squared_modulus(commutator_expectation(rho, X, Y))
    return RelationReport.build(LUO_U, HALF, lhs, rhs, components, tol_rel)


def check_wyd_ij(rho, A, B, alpha, swapped=False, tol_rel=TOL_REL):
    """
    I_alpha(rho, A) J_alpha(rho, B) >= 1/4 |l_alpha(rho, A, B)|^2, or
    I_alpha(rho, B) J_alpha(rho, A) on the right-hand side when swapped
    """
    alpha = Alpha.of(alpha)
    check_dimensions(rho, A, B)
    components = _components(rho, A, B, alpha)

    if swapped:
        lhs = components["B"].i_alpha * components["A"].j_alpha
    else:
        lhs = components["A"].i_alpha * components["B"].j_alpha

    rhs = quarter_squared_modulus(l_alpha(rho, A, B, alpha))
    return RelationReport.build(WYD_JI if swapped else WYD_IJ, alpha, lhs, rhs, components, tol_rel)


def check_wyd_u(rho, A, B, alpha, tol_rel=TOL_REL):
    """
    U_alpha(rho, A) U_alpha(rho, B) >= 1/4 |l_alpha(rho, A, B)|^2
    """
    alpha = Alpha.of(alpha)
    check_dimensions(rho, A, B)
    components = _components(rho, A, B, alpha)
    lhs = components["A"].u_alpha * components["B"].u_alpha
    rhs = quarter_squared_modulus(l_alpha(rho, A, B, alpha))
    return RelationReport.build(WYD_U, alpha, lhs, rhs, components, tol_rel)


def verify_luo_violation(rho, A, B, alpha, tol_rel=TOL_REL):
    """
    Evaluate I_alpha(rho, A) J_alpha(rho, B) >= 1/4 |Tr(rho [A, B])|^2, i.e.
    the skew information relation with the Dyson quantities plugged in
    """
    alpha = Alpha.of(alpha)
    check_dimensions(rho, A, B)
    components = _components(rho, A, B, alpha)
    lhs = components["A"].i_alpha * components["B"].j_alpha
    rhs = quarter_squared_modulus(commutator_expectation(rho, A, B))
    report = RelationReport.build(LUO_IJ, alpha, lhs, rhs, components, tol_rel)

    if not report.holds:
        Logger.debug("I_alpha J_alpha relation violated at alpha={}: {:.6f} < {:.6f}".format(
            alpha.value,
            report.lhs,
            report.rhs
        ))

    return report
