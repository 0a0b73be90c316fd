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
import time
from functools import wraps


class Profiler():
    """
    Records the number of calls and the time spent in decorated functions,
    enabled with --profile
    """
    STATS = {}
    PROFILING_ENABLED = False

    @classmethod
    def reset(cls):
        cls.STATS = {}

    @classmethod
    def rows(cls):
        """
        List of (qualified name, total time, call count), sorted by name
        """
        return [
            (func, cls.STATS[func]["total_time"], cls.STATS[func]["calls"])
            for func in sorted(cls.STATS.keys())
        ]

    @classmethod
    def print(cls):
        if not cls.PROFILING_ENABLED or not cls.STATS:
            return

        print("\n### Profiler stats", file=sys.stderr)
        rows = cls.rows()

        longest_column = max(len(row[0]) for row in rows)
        column_format = "{:<" + str(longest_column) + "}"
        row_format = column_format + "   {:<8}   {} call(s)"

        for func, total_time, call_count in rows:
            print(row_format.format(
                func,
                "{:.3f}s".format(total_time),
                call_count
            ), file=sys.stderr)

    @classmethod
    def record_time(cls, func_name, start, end):
        if not cls.PROFILING_ENABLED:
            return

        stats = cls.STATS.setdefault(func_name, {"total_time": 0.0, "calls": 0})
        stats["total_time"] += end - start
        stats["calls"] += 1

    @classmethod
    def profilable(cls, func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            if not cls.PROFILING_ENABLED:
                return func(*args, **kwargs)

            start = time.perf_counter()
            try:
                return func(*args, **kwargs)
            finally:
                cls.record_time(func.__qualname__, start, time.perf_counter())

        return wrapper
