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
import multiprocessing
from dataclasses import dataclass, field
from functools import partial

from helpers.errors import OutOfRange, NumericalFailure
from helpers.logger import Logger
from helpers.profiler import Profiler
from helpers.utils import matrix_to_json
from operators import Alpha, HALF
from relations import RELATIONS, ALPHA_RELATIONS, LUO_IJ, TOL_REL, min_pair_gap
from .ensembles import SampleSpec, GINIBRE_NORMALIZED, EIGEN_DIRICHLET_HAAR, random_instance
from .rng import trial_seed, check_master_seed


@dataclass(frozen=True)
class SearchSpec:
    trials: int
    dims: tuple
    alpha_grid: tuple
    relation_id: str
    master_seed: int
    methods: tuple = (GINIBRE_NORMALIZED, EIGEN_DIRICHLET_HAAR)
    scale: float = 1.0
    tol_rel: float = TOL_REL

    def __post_init__(self):
        if self.trials < 0:
            raise OutOfRange("Number of trials must be >= 0, got {}".format(self.trials))

        if not self.dims:
            raise OutOfRange("The list of dimensions is empty")

        if not self.alpha_grid:
            raise OutOfRange("The alpha grid is empty")

        if not self.methods:
            raise OutOfRange("The list of sampling methods is empty")

        if self.relation_id not in RELATIONS:
            raise OutOfRange("Unknown relation \"{}\" (expected one of {})".format(
                self.relation_id,
                ", ".join(RELATIONS)
            ))

        check_master_seed(self.master_seed)

        # Fail now rather than in the workers
        for alpha in self.alpha_grid:
            Alpha.of(alpha)
        for dim, method in {(dim, method) for dim in self.dims for method in self.methods}:
            SampleSpec(dim, 0, method, self.scale)

    @property
    def alphas(self):
        """
        The relations which do not depend on alpha are evaluated once
        """
        if self.relation_id in ALPHA_RELATIONS or self.relation_id == LUO_IJ:
            return tuple(Alpha.of(alpha) for alpha in self.alpha_grid)
        return (HALF,)

    def sample_spec(self, trial_index):
        """
        Dimensions and methods are cycled through so that every combination
        gets the same number of trials
        """
        dim = self.dims[trial_index % len(self.dims)]
        method = self.methods[(trial_index // len(self.dims)) % len(self.methods)]
        return SampleSpec(dim, trial_seed(self.master_seed, trial_index), method, self.scale)


@dataclass(frozen=True)
class ViolationRecord:
    """
    A (rho, A, B, alpha) for which the relation does not hold, with
    everything needed to draw it again
    """
    trial_index: int
    seed: int
    dim: int
    method: str
    scale: float
    alpha: float
    report: object
    matrices: dict
    min_pair_gap: float = None

    def to_dict(self):
        return {
            "trial_index": self.trial_index,
            "seed": self.seed,
            "dim": self.dim,
            "method": self.method,
            "scale": self.scale,
            "alpha": self.alpha,
            "min_pair_gap": self.min_pair_gap,
            "report": self.report.to_dict(),
            "matrices": self.matrices,
        }


@dataclass
class TrialOutcome:
    trial_index: int
    skipped: bool = False
    margins: list = field(default_factory=list)
    violations: list = field(default_factory=list)


@dataclass(frozen=True)
class SearchResult:
    spec: SearchSpec
    records: list
    trials: int
    skipped: int
    worst_margin: float
    min_holding_margin: float

    @property
    def violations(self):
        return len(self.records)

    def summary(self):
        return {
            "trials": self.trials,
            "violations": self.violations,
            "skipped": self.skipped,
            "worst_margin": self.worst_margin,
            "min_holding_margin": self.min_holding_margin,
        }


def _violation_record(spec, trial_index, sample, rho, A, B, alpha, report):
    gap = None
    if spec.relation_id in ALPHA_RELATIONS:
        worst_pair = min_pair_gap(rho, alpha)
        gap = worst_pair.gap if worst_pair else None

    return ViolationRecord(
        trial_index=trial_index,
        seed=sample.seed,
        dim=sample.dim,
        method=sample.method,
        scale=sample.observable_scale,
        alpha=alpha.value,
        report=report,
        matrices={
            "rho": matrix_to_json(rho),
            "A": matrix_to_json(A),
            "B": matrix_to_json(B),
        },
        min_pair_gap=gap,
    )


@Profiler.profilable
def run_trial(spec, trial_index):
    """
    Draw one instance and evaluate the relation at every alpha of the grid
    """
    sample = spec.sample_spec(trial_index)
    Logger.progress("Trial {}/{} (n={}, {})...".format(trial_index + 1, spec.trials, sample.dim, sample.method))
    outcome = TrialOutcome(trial_index)
    check = RELATIONS[spec.relation_id]

    try:
        rho, A, B = random_instance(sample)
        for alpha in spec.alphas:
            report = check(rho, A, B, alpha, tol_rel=spec.tol_rel)
            outcome.margins.append((report.margin, report.holds))
            if not report.holds:
                record = _violation_record(spec, trial_index, sample, rho, A, B, alpha, report)
                outcome.violations.append(record)
    except NumericalFailure as e:
        Logger.warn("Skipping trial {} (seed {}): {}".format(trial_index, sample.seed, e))
        return TrialOutcome(trial_index, skipped=True)

    return outcome


@Profiler.profilable
def search_violations(spec, jobs=1):
    """
    Run spec.trials independent trials and collect every violation
    Results are merged in trial order, so they do not depend on jobs
    """
    func = partial(run_trial, spec)
    indexes = range(spec.trials)

    if jobs > 1 and spec.trials > 1:
        with multiprocessing.Pool(jobs) as pool:
            outcomes = pool.map(func, indexes)
    else:
        outcomes = [func(index) for index in indexes]

    records = []
    margins = []
    holding = []
    skipped = 0

    for outcome in outcomes:
        if outcome.skipped:
            skipped += 1
            continue
        records.extend(outcome.violations)
        for margin, holds in outcome.margins:
            margins.append(margin)
            if holds:
                holding.append(margin)

    result = SearchResult(
        spec=spec,
        records=records,
        trials=spec.trials,
        skipped=skipped,
        worst_margin=min(margins) if margins else 0.0,
        min_holding_margin=min(holding) if holding else 0.0,
    )

    if records:
        Logger.info("Relation {} violated {} time(s) in {} trial(s), worst margin {:.6e}".format(
            spec.relation_id,
            len(records),
            spec.trials,
            result.worst_margin
        ))
    else:
        Logger.info("Relation {} held in {} trial(s), minimum margin {:.6e}".format(
            spec.relation_id,
            spec.trials - skipped,
            result.min_holding_margin
        ))

    return result


def replay_violation(record, tol_rel=TOL_REL):
    """
    Draw the instance of a record again from its seed and re-evaluate the
    relation, returning the new report
    """
    sample = SampleSpec(record.dim, record.seed, record.method, record.scale)
    rho, A, B = random_instance(sample)
    return RELATIONS[record.report.relation](rho, A, B, record.alpha, tol_rel=tol_rel)
