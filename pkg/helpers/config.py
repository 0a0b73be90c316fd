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
import sys
import pathlib
import argparse
import argcomplete
from configparser import ConfigParser

from operators import Alpha
from relations import RELATION_IDS
from sampling import METHODS
from .errors import InvalidInput
from .logger import Logger
from .utils import read_list_from_config, parse_dims

COMMANDS = ("verify-paper", "measure", "check", "sweep", "search", "lemma")


def default_config_path():
    current_dir = pathlib.Path(__file__).parent.absolute()
    return current_dir.parent / "config.cfg"


def _coerce(value, default_value):
    """
    Convert a string read from the config file to the type of the default
    """
    if default_value is None or not isinstance(value, str):
        return value

    if isinstance(default_value, bool):
        lowered = value.strip().lower()
        if lowered in ("1", "yes", "true", "on"):
            return True
        if lowered in ("0", "no", "false", "off"):
            return False
        raise InvalidInput("Invalid boolean value \"{}\"".format(value))

    try:
        if isinstance(default_value, int):
            return int(value)
        if isinstance(default_value, float):
            return float(value)
    except ValueError:
        raise InvalidInput("Invalid value \"{}\" (expected {})".format(value, type(default_value).__name__))

    return value


class Config(ConfigParser):
    """
    ConfigParser subclass to handle arguments and default values
    """
    # Dict of default values
    __sections = {
        "wyd": {
            "command": None,
            "data_file": "-",
            "format": "json",
            "debug": False,
            "log_level": "INFO",
            "show_progress": True,
            "profile": False,
            "alpha": 0.25,
            "relation": "wyd_u",
            "rho": None,
            "a": None,
            "b": None,
            "tol": None,
            "tol_rel": 1e-9,
            "tol_herm": 1e-9,
            "tol_trace": 1e-9,
            "tol_psd": 1e-12,
            "grid": "0.05:0.95:0.05"
        },
        "search": {
            "seed": 7,
            "trials": 1000,
            "dims": [2, 3, 4, 5],
            "methods": ["ginibre_normalized", "eigen_dirichlet_haar"],
            "scale": 1.0,
            "jobs": 1,
            "records": None
        }
    }

    def __init__(self, arguments=None, config_file=None):
        super().__init__()

        self.read(config_file or default_config_path(), encoding="utf-8")
        self._merge(arguments)

    def _merge(self, arguments):
        """
        Merge options passed through arguments and in config file
        """
        args = vars(arguments) if arguments else {}

        for section, values in self.__sections.items():
            for key, default_value in values.items():
                arg_value = args.get(key, None)
                config_value = self.get(section, key, fallback=None)
                self._merge_values(section, key, arg_value, config_value, default_value)

    def _merge_values(self, section, key, arg_value, config_value, default_value):
        """
        Use one value, with the given order of priority:
        1. Value passed through CLI (arg_value)
        2. Value set in config (config_value)
        3. Default value (default_value)
        """
        if arg_value is not None:
            value = arg_value
        elif isinstance(default_value, list) and config_value is not None:
            items = read_list_from_config(self, section, key)
            value = [_coerce(item, default_value[0]) for item in items] if default_value else items
        elif config_value is not None:
            value = _coerce(config_value, default_value)
        else:
            value = default_value

        self._set(section, key, value)

    def _set(self, section, key, value):
        # Every value is also stored as an attribute for convenience
        setattr(self, key, value)

        # Values stored in the config must be strings
        if isinstance(value, list):
            value = ", ".join(str(item) for item in value)
        else:
            value = str(value)

        if not self.has_section(section):
            self.add_section(section)
        self[section][key] = value

    def update(self, key, value):
        for section, config in self.__sections.items():
            for attribute in config.keys():
                if attribute == key:
                    self._set(section, key, value)
                    return

        raise ValueError("Unkown key {}".format(key))


def make_config(argv=None):
    if argv is None:
        argv = sys.argv[1:]

    arguments = setup_argparser("wydcheck", "Wigner-Yanase-Dyson uncertainty relations checker", argv)
    config = Config(arguments)
    Logger.setup_logging(debug=config.debug, progress=config.show_progress, log_level=config.log_level, output_file=config.data_file)
    check_config(config)
    return config


def check_config(config):
    if config.format not in ("json", "csv"):
        raise InvalidInput("Unknown output format \"{}\"".format(config.format))

    if config.jobs is not None and config.jobs <= 0:
        raise InvalidInput("Number of jobs must be > 0")

    for name in ("tol_rel", "tol_herm", "tol_trace", "tol_psd", "tol"):
        value = getattr(config, name)
        if value is not None and value < 0:
            raise InvalidInput("{} must be >= 0, got {}".format(name, value))

    if config.relation not in RELATION_IDS:
        raise InvalidInput("Unknown relation \"{}\"".format(config.relation))

    unknown = [method for method in config.methods if method not in METHODS]
    if unknown:
        raise InvalidInput("Unknown sampling method(s): {}".format(", ".join(unknown)))

    # Raises InvalidAlpha
    Alpha.of(config.alpha)

    if config.command == "search" and config.trials <= 0:
        raise InvalidInput("Number of trials must be > 0, got {}".format(config.trials))

    if config.command == "lemma" and config.trials <= 0:
        raise InvalidInput("Number of samples must be > 0, got {}".format(config.trials))


def _add_common_arguments(parser):
    parser.add_argument("-o", "--out", dest="data_file", help="Path to the file in which to write the results (- for stdout)", default=None)
    parser.add_argument("--format", help="Output format", choices=["json", "csv"], default=None)
    parser.add_argument("-L", "--log_level", help="Define the log level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], default=None)
    parser.add_argument("-d", "--debug", action="store_true", help="Print debug messages", default=None)
    parser.add_argument("--no-progress", action="store_false", dest="show_progress", help="Hide progress messages", default=None)
    parser.add_argument("--profile", action="store_true", help="Measure the number of calls and time spent in different functions", default=None)
    parser.add_argument("--tol", type=float, help="Relative tolerance of the relation checks (golden value tolerance for verify-paper)", default=None)
    parser.add_argument("--tol-herm", dest="tol_herm", type=float, help="Tolerance on |M - M^H| (default is 1e-9)", default=None)
    parser.add_argument("--tol-trace", dest="tol_trace", type=float, help="Tolerance on |Tr(rho) - 1| (default is 1e-9)", default=None)
    parser.add_argument("--tol-psd", dest="tol_psd", type=float, help="Eigenvalues above -%(metavar)s are rounding noise (default is 1e-12)", metavar="TOL", default=None)


def _add_instance_arguments(parser, observables=2):
    parser.add_argument("--rho", help="Path to the density matrix JSON (the two-level counter example when omitted)", default=None)
    parser.add_argument("--a", help="Path to the first observable JSON", default=None)
    if observables > 1:
        parser.add_argument("--b", help="Path to the second observable JSON", default=None)


def setup_argparser(name, description, command_line_options):
    parser = argparse.ArgumentParser(prog=name, description="{} - {}".format(name, description))
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    verify = commands.add_parser("verify-paper", help="Reproduce the two-level counter example and its bound")
    verify.add_argument("--alpha", type=float, help="Dyson parameter (golden values only exist for 0.25)", default=None)
    _add_common_arguments(verify)

    measure = commands.add_parser("measure", help="Compute V, I_alpha, J_alpha and U_alpha of an observable")
    _add_instance_arguments(measure, observables=1)
    measure.add_argument("--alpha", type=float, help="Dyson parameter (default is 0.25)", default=None)
    _add_common_arguments(measure)

    check = commands.add_parser("check", help="Check one uncertainty relation (exit code 1 when violated)")
    _add_instance_arguments(check)
    check.add_argument("--relation", choices=RELATION_IDS, help="Relation to check", default=None)
    check.add_argument("--alpha", type=float, help="Dyson parameter (default is 0.25)", default=None)
    _add_common_arguments(check)

    sweep = commands.add_parser("sweep", help="Tabulate both sides of the relations along an alpha grid")
    _add_instance_arguments(sweep)
    sweep.add_argument("--grid", help="Alpha grid, either start:stop:step or a comma separated list", default=None)
    _add_common_arguments(sweep)

    search = commands.add_parser("search", help="Look for violations on random instances (exit code 1 when found)")
    search.add_argument("--relation", choices=RELATION_IDS, help="Relation to check", default=None)
    search.add_argument("--alpha", dest="grid", help="Single alpha to check, shorthand for a one point --grid", default=None)
    search.add_argument("--grid", help="Alpha grid, either start:stop:step or a comma separated list", default=None)
    search.add_argument("--trials", type=int, help="Number of random instances", default=None)
    search.add_argument("--dims", type=parse_dims, help="Comma separated list of dimensions", default=None)
    search.add_argument("--seed", type=int, help="Master seed", default=None)
    search.add_argument("--method", dest="methods", action="append", choices=METHODS, help="State ensemble, can be repeated", default=None)
    search.add_argument("--scale", type=float, help="Standard deviation of the observable entries", default=None)
    search.add_argument("--records", help="Path to the JSON-lines file of violations (appended to the output when omitted)", default=None)
    search.add_argument("-j", "--jobs", type=int, help="Number of jobs to run in parallel (default is 1)", default=None)
    _add_common_arguments(search)

    lemma = commands.add_parser("lemma", help="Scan the scalar eigenvalue inequality on random points (exit code 1 when negative)")
    lemma.add_argument("--trials", type=int, help="Number of random points", default=None)
    lemma.add_argument("--seed", type=int, help="Seed", default=None)
    _add_common_arguments(lemma)

    argcomplete.autocomplete(parser)
    return parser.parse_args(command_line_options)
