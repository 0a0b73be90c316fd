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
from dataclasses import dataclass

IDENTITY_TOLERANCE = 1e-9


def _close(a, b, tolerance=IDENTITY_TOLERANCE):
    return abs(a - b) <= tolerance * max(1.0, abs(a), abs(b))


@dataclass(frozen=True)
class UncertaintyComponents:
    """
    Split of the variance of an observable into quantum (I_alpha) and
    classical (V - I_alpha) parts, with the anticommutator counterpart
    J_alpha and U_alpha = sqrt(I_alpha J_alpha)
    """
    variance: float
    i_alpha: float
    j_alpha: float
    u_alpha: float
    classical: float

    def identities_hold(self):
        """
        I + J = 2V, classical = V - I >= 0 and U^2 = I J, up to rounding
        """
        return (
            _close(self.i_alpha + self.j_alpha, 2 * self.variance)
            and self.classical >= -IDENTITY_TOLERANCE * max(1.0, self.variance)
            and _close(self.u_alpha ** 2, self.i_alpha * self.j_alpha)
        )

    def to_dict(self):
        return {
            "variance": self.variance,
            "i_alpha": self.i_alpha,
            "j_alpha": self.j_alpha,
            "u_alpha": self.u_alpha,
            "classical": self.classical,
        }
