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
from helpers.errors import EmptyList
from helpers.profiler import Profiler
from measures import decompose_variance, commutator_expectation, l_alpha, quarter_squared_modulus
from operators import Alpha, check_dimensions

SWEEP_COLUMNS = (
    "alpha",
    "I_J_product",
    "U_product",
    "l_bound",
    "commutator_bound",
    "margin_wyd",
    "margin_luo",
)


@Profiler.profilable
def sweep_alpha(rho, A, B, alpha_grid):
    """
    Tightness of the alpha-relations along a grid of alpha values, one row
    per alpha with the columns of SWEEP_COLUMNS
    """
    alphas = [Alpha.of(alpha) for alpha in alpha_grid]
    if not alphas:
        raise EmptyList("The alpha grid is empty")

    check_dimensions(rho, A, B)
    commutator_bound = quarter_squared_modulus(commutator_expectation(rho, A, B))

    rows = []
    for alpha in alphas:
        first = decompose_variance(rho, A, alpha)
        second = decompose_variance(rho, B, alpha)
        product = first.i_alpha * second.j_alpha
        l_bound = quarter_squared_modulus(l_alpha(rho, A, B, alpha))

        rows.append({
            "alpha": alpha.value,
            "I_J_product": product,
            "U_product": first.u_alpha * second.u_alpha,
            "l_bound": l_bound,
            "commutator_bound": commutator_bound,
            "margin_wyd": product - l_bound,
            "margin_luo": product - commutator_bound,
        })

    return rows
