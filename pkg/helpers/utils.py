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
import io
import csv
import json
import math
import numbers
from configparser import NoOptionError, NoSectionError

import numpy as np

from operators import validate_hermitian, density_from, DensityMatrix
from .errors import ParseError, InvalidInput

SIGNIFICANT_DIGITS = 12


### Number formatting

def format_number(value):
    """
    12 significant digits, scientific notation
    """
    return "{:.{}e}".format(float(value), SIGNIFICANT_DIGITS - 1)


def _encode(value):
    if value is None or isinstance(value, (bool, str, np.bool_)):
        return json.dumps(bool(value) if isinstance(value, np.bool_) else value)

    if isinstance(value, numbers.Integral):
        return str(int(value))

    if isinstance(value, numbers.Real):
        if not math.isfinite(value):
            return "null"
        return format_number(value)

    if isinstance(value, dict):
        return "{" + ", ".join(
            "{}: {}".format(json.dumps(str(key)), _encode(item)) for key, item in value.items()
        ) + "}"

    if isinstance(value, (list, tuple, np.ndarray)):
        return "[" + ", ".join(_encode(item) for item in value) + "]"

    raise TypeError("Cannot serialize {!r}".format(value))


def dump_json(value):
    """
    Serialize to JSON with every float written in scientific notation with
    12 significant digits, keeping the key order of the given dicts
    """
    return _encode(value)


def to_csv(rows, columns):
    """
    Render a list of dicts as CSV with the given column order
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_cell(row[column]) for column in columns])
    return buffer.getvalue().rstrip("\n")


def _csv_cell(value):
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        return format_number(value)
    if value is None:
        return ""
    return str(value)


### Matrix JSON

def matrix_to_json(matrix):
    matrix = np.asarray(getattr(matrix, "matrix", matrix), dtype=complex)
    return {
        "n": int(matrix.shape[0]),
        "re": matrix.real.tolist(),
        "im": matrix.imag.tolist(),
    }


def _real_grid(data, key, n, name):
    try:
        grid = np.array(data[key], dtype=float)
    except (TypeError, ValueError) as e:
        raise ParseError("{}: field \"{}\" must be an array of numbers ({})".format(name, key, e))

    if grid.shape != (n, n):
        raise ParseError("{}: field \"{}\" must be a {}x{} array, got shape {}".format(
            name, key, n, n, grid.shape
        ))

    if not np.all(np.isfinite(grid)):
        raise ParseError("{}: field \"{}\" contains NaN or infinite values".format(name, key))
    return grid


def matrix_from_json(data, name="matrix"):
    """
    Parse {"n": n, "re": [[...]], "im": [[...]]}, "im" being optional
    """
    if not isinstance(data, dict):
        raise ParseError("{}: expected a JSON object".format(name))

    for key in ("n", "re"):
        if key not in data:
            raise ParseError("{}: missing field \"{}\"".format(name, key))

    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n <= 0:
        raise ParseError("{}: field \"n\" must be a positive integer, got {!r}".format(name, n))

    real = _real_grid(data, "re", n, name)
    imaginary = _real_grid(data, "im", n, name) if "im" in data else np.zeros((n, n))
    return real + 1j * imaginary


def read_json(path):
    """
    Load a JSON document, reporting the line and column of syntax errors
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise ParseError("{}: invalid JSON at line {}, column {}: {}".format(path, e.lineno, e.colno, e.msg))
    except OSError as e:
        raise ParseError("{}: cannot read file ({})".format(path, e.strerror))


def load_observable(path, tol_herm):
    return validate_hermitian(matrix_from_json(read_json(path), name=str(path)), tol_herm)


def density_from_json(data, tol_trace, tol_psd, tol_herm, name="rho"):
    """
    Either a matrix JSON object, or {"eigenvalues": [...], "basis": <matrix JSON>}
    """
    if isinstance(data, dict) and "eigenvalues" in data:
        try:
            eigenvalues = np.array(data["eigenvalues"], dtype=float)
        except (TypeError, ValueError) as e:
            raise ParseError("{}: field \"eigenvalues\" must be an array of numbers ({})".format(name, e))

        basis = None
        if "basis" in data:
            basis = matrix_from_json(data["basis"], name="{}.basis".format(name))

        return DensityMatrix.from_spectrum(eigenvalues, basis, tol_trace=tol_trace, tol_psd=tol_psd)

    return density_from(matrix_from_json(data, name=name), tol_trace, tol_psd, tol_herm)


def load_density(path, tol_trace, tol_psd, tol_herm):
    return density_from_json(read_json(path), tol_trace, tol_psd, tol_herm, name=str(path))


### Command line values

def parse_grid(text):
    """
    Parse an alpha grid, either "start:stop:step" (both ends included) or a
    comma-separated list
    """
    text = (text or "").strip()
    if not text:
        return []

    try:
        if ":" in text:
            start, stop, step = (float(part) for part in text.split(":"))
            if step <= 0:
                raise InvalidInput("Grid step must be > 0, got {}".format(step))
            count = int(math.floor((stop - start) / step + 1e-9)) + 1
            values = [start + k * step for k in range(max(count, 0))]
        else:
            values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise InvalidInput("Invalid grid \"{}\": {}".format(text, e))

    # Round so that 0.05 * 10 is exactly 0.5
    return [round(value, 12) for value in values]


def parse_dims(text):
    try:
        return [int(part) for part in str(text).split(",") if part.strip()]
    except ValueError as e:
        raise InvalidInput("Invalid dimension list \"{}\": {}".format(text, e))


def read_list_from_config(config_file, section, key, fallback=None):
    """
    Read a comma separated list from the configuration
    """
    fallback = fallback or []

    try:
        value = config_file.get(section, key)
    except (NoOptionError, NoSectionError):
        value = None

    if not value:
        return fallback

    return [item.strip() for item in value.split(",") if item.strip()]
