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
import contextlib

from measures import decompose_variance
from operators import Alpha
from relations import (
    RELATIONS,
    ALPHA_RELATIONS,
    two_level_instance,
    verify_paper_counterexample,
    min_pair_gap,
    scan_scalar_lemma
)
from sampling import SearchSpec, SWEEP_COLUMNS, search_violations, sweep_alpha
from .errors import InvalidInput, GoldenMismatch
from .logger import Logger, open_output
from .utils import dump_json, to_csv, parse_grid, load_density, load_observable

EXIT_OK = 0
EXIT_VIOLATION = 1

REPORT_COLUMNS = ("relation", "alpha", "lhs", "rhs", "margin", "holds")
COMPONENT_COLUMNS = ("alpha", "variance", "i_alpha", "j_alpha", "u_alpha", "classical")
GOLDEN_COLUMNS = ("field", "expected", "got", "tolerance", "passed")
SUMMARY_COLUMNS = ("trials", "violations", "skipped", "worst_margin", "min_holding_margin")
LEMMA_COLUMNS = ("samples", "negative", "min_gap", "lambda_i", "lambda_j", "alpha")


class Runner():
    """
    Runs one command of the command line, writes its results through
    Logger.output and returns the exit code
    """

    def __init__(self, config):
        self.config = config

    def run(self):
        commands = {
            "verify-paper": self.cmd_verify_paper,
            "measure": self.cmd_measure,
            "check": self.cmd_check,
            "sweep": self.cmd_sweep,
            "search": self.cmd_search,
            "lemma": self.cmd_lemma,
        }
        return commands[self.config.command]()

    ### Helpers

    @property
    def tol_rel(self):
        # --tol overrides the relation tolerance, except for verify-paper
        if self.config.tol is not None:
            return self.config.tol
        return self.config.tol_rel

    def _emit(self, document, rows, columns):
        if self.config.format == "csv":
            Logger.output(to_csv(rows, columns))
        else:
            Logger.output(dump_json(document))
        Logger.flush_output()

    def _load_instance(self, observables=2):
        """
        Load rho, A (and B) from the given paths, or fall back to the two-level
        counter example when none is given
        """
        paths = [self.config.rho, self.config.a]
        if observables > 1:
            paths.append(self.config.b)

        if all(path is None for path in paths):
            Logger.debug("No input given, using the two-level counter example")
            rho, A, B, _ = two_level_instance()
            return (rho, A, B)[:observables + 1]

        if any(path is None for path in paths):
            raise InvalidInput("--rho, --a{} must be given together".format(" and --b" if observables > 1 else ""))

        config = self.config
        rho = load_density(config.rho, config.tol_trace, config.tol_psd, config.tol_herm)
        instance = [rho, load_observable(config.a, config.tol_herm)]
        if observables > 1:
            instance.append(load_observable(config.b, config.tol_herm))
        return tuple(instance)

    def _alpha_grid(self):
        grid = parse_grid(self.config.grid)
        if not grid:
            raise InvalidInput("The alpha grid is empty")
        return [Alpha.of(alpha) for alpha in grid]

    ### Commands

    def cmd_verify_paper(self):
        try:
            report = verify_paper_counterexample(self.config.alpha, tolerance=self.config.tol, tol_rel=self.config.tol_rel)
        except GoldenMismatch as e:
            if e.report is not None:
                self._emit_golden(e.report)
            raise

        self._emit_golden(report)
        return EXIT_OK

    def _emit_golden(self, report):
        for check in report.checks:
            Logger.info("{:<20} expected {:<8} got {} [{}]".format(
                check.field,
                str(check.expected),
                check.got,
                "ok" if check.passed else "FAILED"
            ))

        self._emit(report.to_dict(), [check.to_dict() for check in report.checks], GOLDEN_COLUMNS)

    def cmd_measure(self):
        rho, X = self._load_instance(observables=1)
        alpha = Alpha.of(self.config.alpha)
        components = decompose_variance(rho, X, alpha)

        document = dict(alpha=alpha.value, **components.to_dict())
        self._emit(document, [document], COMPONENT_COLUMNS)
        return EXIT_OK

    def cmd_check(self):
        rho, A, B = self._load_instance()
        relation = self.config.relation
        report = RELATIONS[relation](rho, A, B, Alpha.of(self.config.alpha), tol_rel=self.tol_rel)

        if not report.holds:
            Logger.info("Relation {} violated: {} < {}".format(relation, report.lhs, report.rhs))
            if relation in ALPHA_RELATIONS:
                worst = min_pair_gap(rho, report.alpha)
                if worst is not None:
                    Logger.info("Smallest eigenvalue pair gap: {:.6e} at ({}, {})".format(
                        worst.gap,
                        worst.lambda_i,
                        worst.lambda_j
                    ))

        self._emit(report.to_dict(), [report.to_dict()], REPORT_COLUMNS)
        return EXIT_OK if report.holds else EXIT_VIOLATION

    def cmd_sweep(self):
        rho, A, B = self._load_instance()
        rows = sweep_alpha(rho, A, B, self._alpha_grid())
        self._emit(rows, rows, SWEEP_COLUMNS)
        return EXIT_OK

    def cmd_search(self):
        config = self.config
        spec = SearchSpec(
            trials=config.trials,
            dims=tuple(config.dims),
            alpha_grid=tuple(alpha.value for alpha in self._alpha_grid()),
            relation_id=config.relation,
            master_seed=config.seed,
            methods=tuple(config.methods),
            scale=config.scale,
            tol_rel=self.tol_rel,
        )

        with contextlib.ExitStack() as stack:
            # Opened first so that a bad path does not waste the search
            records_file = stack.enter_context(open_output(config.records)) if config.records else None
            result = search_violations(spec, jobs=config.jobs)

            summary = result.summary()
            lines = [dump_json(record.to_dict()) for record in result.records]

            if records_file:
                for line in lines:
                    records_file.write(line + "\n")
                self._emit(summary, [summary], SUMMARY_COLUMNS)
            elif config.format == "csv":
                self._emit(summary, [summary], SUMMARY_COLUMNS)
                if lines:
                    Logger.warn("Use --records to save the {} violation(s)".format(len(lines)))
            else:
                # JSON lines, summary first
                Logger.output("\n".join([dump_json(summary)] + lines))
                Logger.flush_output()

        return EXIT_VIOLATION if result.records else EXIT_OK

    def cmd_lemma(self):
        scan = scan_scalar_lemma(self.config.trials, self.config.seed)

        row = {"samples": scan.samples, "negative": scan.negative, "min_gap": scan.min_gap}
        worst = scan.worst.to_dict() if scan.worst else {}
        for key in ("lambda_i", "lambda_j", "alpha"):
            row[key] = worst.get(key)

        self._emit(scan.to_dict(), [row], LEMMA_COLUMNS)
        return EXIT_VIOLATION if scan.negative else EXIT_OK
