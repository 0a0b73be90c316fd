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

from helpers.errors import OutOfRange
from helpers.logger import Logger
from helpers.profiler import Profiler
from operators import Alpha
from operators.spectral import spectral_power
from .report import LemmaGapRecord


def _check_eigenvalue(value, name):
    if not 0 <= value <= 1:
        raise OutOfRange("{} must lie in [0, 1], got {}".format(name, value))


def scalar_lemma_gap(lambda_i, lambda_j, alpha):
    """
    Gap between (li + lj)^2 - (li^b lj^(1-b) + li^(1-b) lj^b)^2 and
    |(li - lj) - (li^(2b-1) - lj^(2b-1))|^2 where b = max(alpha, 1 - alpha)
    """
    _check_eigenvalue(lambda_i, "lambda_i")
    _check_eigenvalue(lambda_j, "lambda_j")
    alpha = Alpha.of(alpha)

    # Below 1/2, the same inequality is evaluated at beta = 1 - alpha
    beta = alpha.value if alpha.value >= 0.5 else alpha.complement
    values = np.array([lambda_i, lambda_j], dtype=float)
    high = spectral_power(values, beta)
    low = spectral_power(values, 1.0 - beta)
    skew = spectral_power(values, 2.0 * beta - 1.0)

    lhs = (lambda_i + lambda_j) ** 2 - (high[0] * low[1] + low[0] * high[1]) ** 2
    rhs = abs((lambda_i - lambda_j) - (skew[0] - skew[1])) ** 2

    return LemmaGapRecord(
        lambda_i=float(lambda_i),
        lambda_j=float(lambda_j),
        alpha=alpha.value,
        lhs=float(lhs),
        rhs=float(rhs),
        gap=float(lhs - rhs),
    )


def pair_lemma_gaps(decomp, alpha):
    """
    Scalar lemma records for every pair of eigenvalues of a state
    """
    eigenvalues = decomp.spectral.eigenvalues
    records = []
    for i in range(len(eigenvalues)):
        for j in range(i + 1, len(eigenvalues)):
            records.append(scalar_lemma_gap(
                float(min(max(eigenvalues[i], 0.0), 1.0)),
                float(min(max(eigenvalues[j], 0.0), 1.0)),
                alpha
            ))
    return records


def min_pair_gap(decomp, alpha):
    """
    Smallest scalar lemma gap over the eigenvalue pairs of a state
    If it is nonnegative, the alpha-relations are guaranteed to hold for
    every pair of observables in this state
    """
    records = pair_lemma_gaps(decomp, alpha)
    if not records:
        return None
    return min(records, key=lambda record: record.gap)


@dataclass(frozen=True)
class LemmaScan:
    samples: int
    negative: int
    min_gap: float
    worst: LemmaGapRecord

    def to_dict(self):
        return {
            "samples": self.samples,
            "negative": self.negative,
            "min_gap": self.min_gap,
            "worst": self.worst.to_dict() if self.worst else None,
        }


@Profiler.profilable
def scan_scalar_lemma(samples, seed, tolerance=1e-12):
    """
    Evaluate the scalar lemma on uniformly drawn (lambda_i, lambda_j, alpha)
    in [0, 1]^2 x (0, 1) and report the smallest gap observed
    """
    rng = np.random.default_rng(seed)
    worst = None
    negative = 0

    for index in range(samples):
        lambda_i, lambda_j = rng.uniform(0.0, 1.0, size=2)

        # uniform() may return the excluded endpoint 0
        alpha = rng.uniform(0.0, 1.0)
        while alpha == 0.0:
            alpha = rng.uniform(0.0, 1.0)

        record = scalar_lemma_gap(lambda_i, lambda_j, alpha)
        if record.gap < -tolerance:
            negative += 1
        if worst is None or record.gap < worst.gap:
            worst = record

    min_gap = worst.gap if worst else 0.0
    Logger.info("Scalar lemma: minimum gap {:.6e} over {} samples, {} below -{:.0e}".format(
        min_gap,
        samples,
        negative,
        tolerance
    ))
    return LemmaScan(samples=samples, negative=negative, min_gap=min_gap, worst=worst)
