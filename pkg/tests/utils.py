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
import pathlib

import numpy as np

from helpers.config import Config
from helpers.logger import Logger
from operators import density_from, DensityMatrix, HermitianOperator
from sampling import SampleSpec, random_density, random_hermitian

DATA_DIR = pathlib.Path(__file__).parent / "data"

SIGMA_X = HermitianOperator([[0, 1], [1, 0]])
SIGMA_Y = HermitianOperator([[0, -1j], [1j, 0]])
SIGMA_Z = HermitianOperator([[1, 0], [0, -1]])


def make_config():
    config = Config()
    Logger.setup_logging(progress=False, output_file="/dev/null")
    return config


def data_path(name):
    return str(DATA_DIR / name)


def maximally_mixed(n):
    return density_from(np.eye(n) / n)


def pure_state(vector):
    vector = np.asarray(vector, dtype=complex)
    vector = vector / np.linalg.norm(vector)
    return density_from(np.outer(vector, vector.conj()))


def relative_close(a, b, tolerance=1e-9):
    return abs(a - b) <= tolerance * max(1.0, abs(a), abs(b))


def random_states(count, dims=(2, 3, 4, 5), seed=42, methods=("ginibre_normalized", "eigen_dirichlet_haar")):
    """
    Yield (rho, A, B) triples drawn from a single default_rng stream
    """
    rng = np.random.default_rng(seed)
    for index in range(count):
        dim = dims[index % len(dims)]
        method = methods[index % len(methods)]
        rho = random_density(SampleSpec(dim, 0, method), rng)
        yield rho, random_hermitian(dim, 1.0, rng), random_hermitian(dim, 1.0, rng)


def write_matrix(path, matrix):
    matrix = np.asarray(matrix, dtype=complex)
    with open(path, "w", encoding="utf-8") as f:
        json.dump({"n": matrix.shape[0], "re": matrix.real.tolist(), "im": matrix.imag.tolist()}, f)
    return str(path)


def counterexample_instance():
    """
    Three-level state with an eigenvalue pair (0.1, 0.02) for which the
    alpha-relations fail at alpha = 0.6
    """
    rho = DensityMatrix.from_spectrum([0.88, 0.1, 0.02])
    A = HermitianOperator([[0, 0, 0], [0, 0, 1], [0, 1, 0]])
    B = HermitianOperator([[0, 0, 0], [0, 0, 1j], [0, -1j, 0]])
    return rho, A, B
