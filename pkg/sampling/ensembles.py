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
from dataclasses import dataclass

import numpy as np
from scipy.linalg import qr

from helpers.errors import OutOfRange
from operators import HermitianOperator, DensityMatrix, density_from, MAX_DIMENSION
from .rng import trial_generator, check_master_seed

EIGEN_DIRICHLET_HAAR = "eigen_dirichlet_haar"
GINIBRE_NORMALIZED = "ginibre_normalized"
PURE = "pure"

METHODS = (EIGEN_DIRICHLET_HAAR, GINIBRE_NORMALIZED, PURE)


@dataclass(frozen=True)
class SampleSpec:
    """
    How to draw one (rho, A, B) instance
    """
    dim: int
    seed: int
    method: str = GINIBRE_NORMALIZED
    observable_scale: float = 1.0

    def __post_init__(self):
        if not 2 <= self.dim <= MAX_DIMENSION:
            raise OutOfRange("Dimension must lie in [2, {}], got {}".format(MAX_DIMENSION, self.dim))

        if self.method not in METHODS:
            raise OutOfRange("Unknown sampling method \"{}\" (expected one of {})".format(
                self.method,
                ", ".join(METHODS)
            ))

        if not self.observable_scale > 0:
            raise OutOfRange("Observable scale must be > 0, got {}".format(self.observable_scale))

        check_master_seed(self.seed)


def _complex_gaussian(shape, rng):
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def random_unitary(dim, rng):
    """
    Haar distributed unitary: QR decomposition of a complex Gaussian matrix,
    with the phases of R's diagonal moved into Q
    """
    if dim < 1:
        raise OutOfRange("Dimension must be >= 1, got {}".format(dim))

    q, r = qr(_complex_gaussian((dim, dim), rng))
    diagonal = np.diag(r)
    phases = diagonal / np.abs(diagonal)
    return q * phases


def random_density(spec, rng):
    if spec.method == EIGEN_DIRICHLET_HAAR:
        eigenvalues = rng.dirichlet(np.ones(spec.dim))
        return DensityMatrix.from_spectrum(eigenvalues, random_unitary(spec.dim, rng))

    if spec.method == PURE:
        eigenvalues = np.zeros(spec.dim)
        eigenvalues[0] = 1.0
        return DensityMatrix.from_spectrum(eigenvalues, random_unitary(spec.dim, rng))

    # Hilbert-Schmidt measure
    ginibre = _complex_gaussian((spec.dim, spec.dim), rng)
    product = ginibre @ ginibre.conj().T
    return density_from(product / np.real(np.trace(product)))


def random_hermitian(dim, scale, rng):
    """
    GUE-like observable: complex Gaussian entries with standard deviation
    scale, symmetrized
    """
    if scale < 0:
        raise OutOfRange("Observable scale must be >= 0, got {}".format(scale))

    # Draw anyway so that the stream position does not depend on the scale
    entries = scale * _complex_gaussian((dim, dim), rng)
    if scale == 0:
        return HermitianOperator.zeros(dim)

    return HermitianOperator((entries + entries.conj().T) / 2)


def random_instance(spec):
    """
    Draw (rho, A, B) from the generator of spec.seed, in that order
    """
    rng = trial_generator(spec.seed)
    rho = random_density(spec, rng)
    A = random_hermitian(spec.dim, spec.observable_scale, rng)
    B = random_hermitian(spec.dim, spec.observable_scale, rng)
    return rho, A, B
