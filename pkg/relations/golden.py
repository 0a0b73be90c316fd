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

import numpy as np

from helpers.errors import GoldenMismatch
from helpers.logger import Logger
from measures import i_alpha, j_alpha, commutator_expectation, l_alpha, quarter_squared_modulus
from operators import Alpha, HermitianOperator, DensityMatrix
from .checks import check_wyd_ij, check_wyd_u, verify_luo_violation
from .report import TOL_REL, LUO_IJ, WYD_IJ, WYD_JI, WYD_U

# Two-level counter example: spectrum (1/4, 3/4), A = [[x, u+iv], [u-iv, y]],
# B = [[a, c+di], [c-di, b]] with u=4, v=2, a=b=0, c=1, d=-5 and x=y=0
GOLDEN_ALPHA = 0.25
GOLDEN_EIGENVALUES = (0.25, 0.75)
GOLDEN_U, GOLDEN_V = 4.0, 2.0
GOLDEN_C, GOLDEN_D = 1.0, -5.0

# Expected values, each with the precision it is known to
GOLDEN_VALUES = {
    "i_j_product": (99.83, 0.01),
    "commutator_bound": (121.0, 1e-9),
    "l_bound": (8.6874, 0.001),
}


def two_level_instance():
    """
    Return (rho, A, B, alpha) for the two-level counter example
    """
    rho = DensityMatrix.from_spectrum(GOLDEN_EIGENVALUES)
    A = HermitianOperator(np.array([
        [0, complex(GOLDEN_U, GOLDEN_V)],
        [complex(GOLDEN_U, -GOLDEN_V), 0]
    ]))
    B = HermitianOperator(np.array([
        [0, complex(GOLDEN_C, GOLDEN_D)],
        [complex(GOLDEN_C, -GOLDEN_D), 0]
    ]))
    return rho, A, B, Alpha(GOLDEN_ALPHA)


@dataclass(frozen=True)
class GoldenCheck:
    field: str
    expected: object
    got: object
    tolerance: float = None

    @property
    def passed(self):
        if self.tolerance is None:
            return self.expected == self.got
        return abs(self.got - self.expected) <= self.tolerance

    def to_dict(self):
        return {
            "field": self.field,
            "expected": self.expected,
            "got": self.got,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class GoldenReport:
    alpha: float
    values: dict
    checks: list = field(default_factory=list)
    reports: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    def to_dict(self):
        return {
            "alpha": self.alpha,
            "passed": self.passed,
            "values": dict(self.values),
            "checks": [check.to_dict() for check in self.checks],
            "reports": {name: report.to_dict() for name, report in self.reports.items()},
        }


def verify_paper_counterexample(alpha=GOLDEN_ALPHA, tolerance=None, tol_rel=TOL_REL):
    """
    Rebuild the two-level counter example and compare it with the printed
    numbers. The golden values only exist for the printed alpha; at any other
    alpha the report carries the computed values and relation verdicts only
    tolerance, when given, replaces the per-value tolerances
    """
    rho, A, B, _ = two_level_instance()
    alpha = Alpha.of(alpha)

    values = {
        "i_alpha_a": i_alpha(rho, A, alpha),
        "j_alpha_b": j_alpha(rho, B, alpha),
        "commutator_bound": quarter_squared_modulus(commutator_expectation(rho, A, B)),
        "l_bound": quarter_squared_modulus(l_alpha(rho, A, B, alpha)),
    }
    values["i_j_product"] = values["i_alpha_a"] * values["j_alpha_b"]

    reports = {
        LUO_IJ: verify_luo_violation(rho, A, B, alpha, tol_rel),
        WYD_IJ: check_wyd_ij(rho, A, B, alpha, tol_rel=tol_rel),
        WYD_JI: check_wyd_ij(rho, A, B, alpha, swapped=True, tol_rel=tol_rel),
        WYD_U: check_wyd_u(rho, A, B, alpha, tol_rel=tol_rel),
    }

    checks = []
    if alpha.value == GOLDEN_ALPHA:
        for name, (expected, default_tolerance) in GOLDEN_VALUES.items():
            checks.append(GoldenCheck(
                field=name,
                expected=expected,
                got=values[name],
                tolerance=default_tolerance if tolerance is None else tolerance,
            ))
        checks.append(GoldenCheck(field="luo_violated", expected=True, got=not reports[LUO_IJ].holds))
        checks.append(GoldenCheck(
            field="wyd_relations_hold",
            expected=True,
            got=all(reports[name].holds for name in (WYD_IJ, WYD_JI, WYD_U)),
        ))

    report = GoldenReport(alpha=alpha.value, values=values, checks=checks, reports=reports)

    for check in checks:
        Logger.debug("{}: expected {}, got {}".format(check.field, check.expected, check.got))

    failed = [check for check in checks if not check.passed]
    if failed:
        first = failed[0]
        raise GoldenMismatch(first.field, first.expected, first.got, report=report)

    Logger.info("Counter example reproduced at alpha={}".format(alpha.value))
    return report
