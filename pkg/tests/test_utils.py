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
import json

import numpy as np
import pytest

from .utils import data_path, write_matrix, make_config
from helpers.errors import ParseError, NotHermitian, NotFinite, InvalidInput, TraceNotOne
from helpers.utils import (
    format_number,
    dump_json,
    to_csv,
    matrix_to_json,
    matrix_from_json,
    load_density,
    load_observable,
    parse_grid,
    parse_dims
)


### Serialization

def test_format_number():
    assert format_number(99.8347) == "9.98347000000e+01"
    assert format_number(-22) == "-2.20000000000e+01"
    assert float(format_number(1 / 3)) == pytest.approx(1 / 3, rel=1e-11)


def test_dump_json():
    document = {"b": 1, "a": [0.5, True, None], "c": {"x": "text"}}
    text = dump_json(document)

    assert text == '{"b": 1, "a": [5.00000000000e-01, true, null], "c": {"x": "text"}}'
    assert list(json.loads(text)) == ["b", "a", "c"]


def test_dump_json_numpy_values():
    assert json.loads(dump_json({"x": np.float64(0.25), "n": np.int64(3), "ok": np.bool_(True)})) == {
        "x": 0.25,
        "n": 3,
        "ok": True,
    }


def test_dump_json_non_finite():
    assert dump_json([float("nan"), float("inf")]) == "[null, null]"


def test_csv_matches_json():
    rows = [{"alpha": 0.25, "value": 99.8347, "holds": False}]
    csv_text = to_csv(rows, ["alpha", "value", "holds"])
    json_text = dump_json(rows)

    header, line = csv_text.split("\n")
    assert header == "alpha,value,holds"
    assert line.split(",")[:2] == [format_number(0.25), format_number(99.8347)]
    assert line.endswith("false")
    assert format_number(99.8347) in json_text


### Matrix files

def test_matrix_round_trip():
    matrix = np.array([[0, 4 + 2j], [4 - 2j, 0]])
    assert np.array_equal(matrix_from_json(matrix_to_json(matrix)), matrix)


def test_matrix_without_imaginary_part():
    assert np.array_equal(matrix_from_json({"n": 2, "re": [[1, 0], [0, 1]]}), np.eye(2))


@pytest.mark.parametrize("data", [
    [1, 2],
    {"re": [[1]]},
    {"n": 0, "re": []},
    {"n": "2", "re": [[1, 0], [0, 1]]},
    {"n": 2, "re": [[1, 0]]},
    {"n": 2, "re": [[1, 0], [0, "x"]]},
    {"n": 2, "re": [[1, 0], [0, 1]], "im": [[0, 0]]},
    {"n": 2, "re": [[float("nan"), 0], [0, 1]]},
    {"n": 2, "re": [[1, 0], [0, 1]], "im": [[0, float("inf")], [0, 0]]},
])
def test_matrix_parse_errors(data):
    with pytest.raises(ParseError):
        matrix_from_json(data)


def test_load_two_level_files():
    config = make_config()
    rho = load_density(data_path("two_level_rho.json"), config.tol_trace, config.tol_psd, config.tol_herm)
    A = load_observable(data_path("two_level_a.json"), config.tol_herm)

    assert np.allclose(rho.eigenvalues, [0.75, 0.25])
    assert A.element(0, 1) == 4 + 2j


def test_load_spectrum_form():
    rho = load_density(data_path("spectrum_rho.json"), 1e-9, 1e-12, 1e-9)
    assert np.allclose(rho.matrix, np.diag([0.25, 0.75]))


def test_load_malformed():
    with pytest.raises(ParseError) as e:
        load_density(data_path("malformed.json"), 1e-9, 1e-12, 1e-9)
    assert "line" in str(e.value)


def test_load_missing_file(tmp_path):
    with pytest.raises(ParseError):
        load_observable(str(tmp_path / "missing.json"), 1e-9)


def test_load_not_hermitian():
    with pytest.raises(NotHermitian):
        load_observable(data_path("not_hermitian.json"), 1e-9)


def test_load_non_finite_matrix(tmp_path):
    path = tmp_path / "a.json"
    path.write_text('{"n": 2, "re": [[NaN, 0], [0, 0]]}', encoding="utf-8")

    with pytest.raises(ParseError):
        load_observable(str(path), 1e-9)


def test_load_non_finite_spectrum(tmp_path):
    path = tmp_path / "rho.json"
    path.write_text('{"eigenvalues": [NaN, 1]}', encoding="utf-8")

    with pytest.raises(NotFinite):
        load_density(str(path), 1e-9, 1e-12, 1e-9)


def test_load_trace_tolerance(tmp_path):
    path = write_matrix(tmp_path / "rho.json", np.diag([0.5, 0.5 + 1e-6]))

    with pytest.raises(TraceNotOne):
        load_density(path, 1e-9, 1e-12, 1e-9)
    assert load_density(path, 1e-5, 1e-12, 1e-9).n == 2


### Command line values

def test_parse_grid_range():
    grid = parse_grid("0.05:0.95:0.05")

    assert len(grid) == 19
    assert grid[0] == 0.05
    assert grid[9] == 0.5
    assert grid[-1] == 0.95


def test_parse_grid_list():
    assert parse_grid("0.25, 0.5") == [0.25, 0.5]
    assert parse_grid("0.5") == [0.5]
    assert parse_grid("") == []


@pytest.mark.parametrize("text", ["a:b:c", "0.1:0.5:0", "0.1,x", "0.1:0.5"])
def test_parse_grid_errors(text):
    with pytest.raises(InvalidInput):
        parse_grid(text)


def test_parse_dims():
    assert parse_dims("2,3, 4") == [2, 3, 4]

    with pytest.raises(InvalidInput):
        parse_dims("2,x")
