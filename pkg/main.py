#!/usr/bin/env python3
# PYTHON_ARGCOMPLETE_OK

"""
Compute Wigner-Yanase-Dyson information quantities and check the
uncertainty relations built on them

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

from helpers.runner import Runner
from helpers.logger import Logger
from helpers.profiler import Profiler
from helpers.config import make_config
from helpers.errors import WydError

EXIT_FAILURE = 3


def main(argv=None):
    """
    Run one command and return its exit code: 0 when everything holds,
    1 when a violation was found, 2 on invalid input, 3 on numerical or
    golden value failures
    """
    Profiler.reset()

    try:
        config = make_config(argv)
        Profiler.PROFILING_ENABLED = config.profile
        code = Runner(config).run()
        Profiler.print()
        return code
    except SystemExit as e:
        # Raised by argparse, 2 for usage errors and 0 for --help
        return e.code if isinstance(e.code, int) else 2
    except WydError as e:
        Logger.error(e)
        return e.exit_code
    except Exception as e:
        Logger.error("Unexpected error: {!r}".format(e))
        return EXIT_FAILURE
    finally:
        Logger.cleanup()


if __name__ == "__main__":
    sys.exit(main())
