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
# The relations package contains the inequality checkers, the scalar lemma
# and additivity checks, and the golden counter example
from .report import (
    RelationReport,
    LemmaGapRecord,
    TOL_REL,
    RELATION_IDS,
    HEISENBERG,
    LUO_IJ,
    LUO_U,
    WYD_IJ,
    WYD_JI,
    WYD_U,
    relation_holds
)
from .checks import (
    check_heisenberg,
    check_luo_ij,
    check_luo_u,
    check_wyd_ij,
    check_wyd_u,
    verify_luo_violation
)
from .lemma import scalar_lemma_gap, pair_lemma_gaps, min_pair_gap, scan_scalar_lemma
from .additivity import check_additivity, trace_identities
from .golden import verify_paper_counterexample, two_level_instance, GOLDEN_ALPHA


def _swapped_wyd_ij(rho, A, B, alpha, tol_rel=TOL_REL):
    return check_wyd_ij(rho, A, B, alpha, swapped=True, tol_rel=tol_rel)


def _unswapped_wyd_ij(rho, A, B, alpha, tol_rel=TOL_REL):
    return check_wyd_ij(rho, A, B, alpha, swapped=False, tol_rel=tol_rel)


def _fixed_alpha(check):
    # The alpha = 1/2 relations ignore the requested alpha
    def wrapper(rho, A, B, alpha, tol_rel=TOL_REL):
        return check(rho, A, B, tol_rel=tol_rel)
    return wrapper


# Every checker, with the uniform signature (rho, A, B, alpha, tol_rel)
RELATIONS = {
    HEISENBERG: _fixed_alpha(check_heisenberg),
    LUO_IJ: verify_luo_violation,
    LUO_U: _fixed_alpha(check_luo_u),
    WYD_IJ: _unswapped_wyd_ij,
    WYD_JI: _swapped_wyd_ij,
    WYD_U: check_wyd_u,
}

# Relations whose right-hand side depends on alpha through l_alpha
ALPHA_RELATIONS = (WYD_IJ, WYD_JI, WYD_U)
