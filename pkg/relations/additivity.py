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
from dataclasses import dataclass, field

from measures import i_alpha, j_alpha
from operators import Alpha, as_matrix, expectation, local_observable, trace_product

ADDITIVITY_TOLERANCE = 1e-9

MEASURES = {
    "I": i_alpha,
    "J": j_alpha,
}


@dataclass(frozen=True)
class AdditivityReport:
    """
    |M(rho1 x rho2, A1 x I + I x A2) - M(rho1, A1) - M(rho2, A2)| for one
    information measure M, with the deviations of the intermediate trace
    identities
    """
    which: str
    alpha: float
    joint: float
    first: float
    second: float
    deviation: float
    identities: dict = field(default_factory=dict)
    holds: bool = True

    def to_dict(self):
        return {
            "which": self.which,
            "alpha": self.alpha,
            "joint": self.joint,
            "first": self.first,
            "second": self.second,
            "deviation": self.deviation,
            "identities": dict(self.identities),
            "holds": self.holds,
        }


def _skew_trace(rho, X, alpha):
    x = as_matrix(X)
    return trace_product([rho.power(alpha.value), x, rho.power(alpha.complement), x]).real


def _second_moment(rho, X):
    x = as_matrix(X)
    return trace_product([rho, x, x]).real


def trace_identities(rho1, rho2, A1, A2, alpha):
    """
    Deviations of the three trace identities that make I_alpha and J_alpha
    additive on product states:
      Tr(r^a L r^(1-a) L) = Tr(r1^a A1 r1^(1-a) A1) + 2 m1 m2 + Tr(r2^a A2 r2^(1-a) A2)
      Tr(r L^2) = Tr(r1 A1^2) + 2 m1 m2 + Tr(r2 A2^2)
      Tr(r L) = m1 + m2
    with r = rho1 x rho2, L = A1 x I + I x A2 and m_k = Tr(rho_k A_k)
    """
    alpha = Alpha.of(alpha)
    rho = rho1.tensor(rho2)
    joint = local_observable(A1, A2)
    mean1, mean2 = expectation(rho1, A1), expectation(rho2, A2)

    skew = _skew_trace(rho, joint, alpha)
    skew_parts = _skew_trace(rho1, A1, alpha) + 2 * mean1 * mean2 + _skew_trace(rho2, A2, alpha)

    second = _second_moment(rho, joint)
    second_parts = _second_moment(rho1, A1) + 2 * mean1 * mean2 + _second_moment(rho2, A2)

    mean = expectation(rho, joint)

    return {
        "skew_trace": abs(skew - skew_parts),
        "second_moment": abs(second - second_parts),
        "expectation": abs(mean - (mean1 + mean2)),
    }


def check_additivity(rho1, rho2, A1, A2, alpha, which="I", tolerance=ADDITIVITY_TOLERANCE):
    """
    Compare an information measure of a product state and a sum of local
    observables with the sum of the local values
    """
    if which not in MEASURES:
        raise ValueError("Unknown measure {}, expected one of {}".format(which, ", ".join(MEASURES)))

    alpha = Alpha.of(alpha)
    measure = MEASURES[which]

    joint = measure(rho1.tensor(rho2), local_observable(A1, A2), alpha)
    first = measure(rho1, A1, alpha)
    second = measure(rho2, A2, alpha)
    deviation = abs(joint - first - second)

    identities = trace_identities(rho1, rho2, A1, A2, alpha)
    scale = max(1.0, abs(joint), abs(first) + abs(second))
    holds = deviation <= tolerance * scale and all(
        value <= tolerance * scale for value in identities.values()
    )

    return AdditivityReport(
        which=which,
        alpha=alpha.value,
        joint=joint,
        first=first,
        second=second,
        deviation=deviation,
        identities=identities,
        holds=holds,
    )
