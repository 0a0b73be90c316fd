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

TOL_REL = 1e-9

HEISENBERG = "heisenberg"
LUO_IJ = "luo_ij"
LUO_U = "luo_u"
WYD_IJ = "wyd_ij"
WYD_JI = "wyd_ji"
WYD_U = "wyd_u"

RELATION_IDS = (HEISENBERG, LUO_IJ, LUO_U, WYD_IJ, WYD_JI, WYD_U)


def relation_holds(lhs, rhs, tol_rel=TOL_REL):
    """
    lhs >= rhs up to floating point noise, relative to the size of both sides
    """
    return (lhs - rhs) >= -tol_rel * max(1.0, abs(lhs), abs(rhs))


@dataclass(frozen=True)
class RelationReport:
    """
    Outcome of one inequality check lhs >= rhs
    """
    relation: str
    alpha: float
    lhs: float
    rhs: float
    margin: float
    holds: bool
    components: dict = field(default_factory=dict)

    @classmethod
    def build(cls, relation, alpha, lhs, rhs, components=None, tol_rel=TOL_REL):
        return cls(
            relation=relation,
            alpha=float(alpha),
            lhs=float(lhs),
            rhs=float(rhs),
            margin=float(lhs - rhs),
            holds=relation_holds(lhs, rhs, tol_rel),
            components=components or {},
        )

    def to_dict(self):
        return {
            "relation": self.relation,
            "alpha": self.alpha,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "holds": self.holds,
            "components": {
                name: value.to_dict() for name, value in self.components.items()
            },
        }


@dataclass(frozen=True)
class LemmaGapRecord:
    """
    Both sides of the scalar inequality behind the alpha-relations, for one
    pair of eigenvalues
    """
    lambda_i: float
    lambda_j: float
    alpha: float
    lhs: float
    rhs: float
    gap: float

    def to_dict(self):
        return {
            "lambda_i": self.lambda_i,
            "lambda_j": self.lambda_j,
            "alpha": self.alpha,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "gap": self.gap,
        }
