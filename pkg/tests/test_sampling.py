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
import numpy as np
import pytest

from helpers.errors import OutOfRange, InvalidAlpha, EmptyList
from helpers.utils import dump_json
from operators import HermitianOperator
from relations import LUO_IJ, WYD_U, HEISENBERG, two_level_instance
from sampling import (
    SampleSpec,
    SearchSpec,
    METHODS,
    PURE,
    GINIBRE_NORMALIZED,
    EIGEN_DIRICHLET_HAAR,
    trial_seed,
    trial_generator,
    random_unitary,
    random_density,
    random_hermitian,
    random_instance,
    search_violations,
    run_trial,
    replay_violation,
    sweep_alpha,
    SWEEP_COLUMNS
)


### Seeds

def test_trial_seed_is_deterministic():
    assert trial_seed(7, 3) == trial_seed(7, 3)
    assert trial_seed(7, 3) != trial_seed(7, 4)
    assert trial_seed(7, 3) != trial_seed(8, 3)
    assert 0 <= trial_seed(7, 3) < 2 ** 64


def test_generator_streams():
    first = trial_generator(123).standard_normal(5)
    second = trial_generator(123).standard_normal(5)
    assert np.array_equal(first, second)


@pytest.mark.parametrize("seed", [-1, 2 ** 64, 1.5, True])
def test_invalid_seed(seed):
    with pytest.raises(OutOfRange):
        trial_seed(seed, 0)


### Ensembles

def test_unitary_dimension_one():
    U = random_unitary(1, trial_generator(1))
    assert U.shape == (1, 1)
    assert abs(abs(U[0, 0]) - 1) < 1e-12


@pytest.mark.parametrize("dim", [2, 4, 7])
def test_unitary(dim):
    U = random_unitary(dim, trial_generator(dim))
    assert np.max(np.abs(U.conj().T @ U - np.eye(dim))) <= 1e-10
    assert np.array_equal(U, random_unitary(dim, trial_generator(dim)))


def test_unitary_phases_are_uniform():
    # Without the phase correction, diagonal entries of Q are biased
    rng = trial_generator(5)
    mean = np.mean([random_unitary(2, rng)[0, 0] for _ in range(4000)])
    assert abs(mean) < 0.05


@pytest.mark.parametrize("method", METHODS)
@pytest.mark.parametrize("dim", [2, 3, 5])
def test_density_is_valid(method, dim):
    rng = trial_generator(11)
    for _ in range(20):
        rho = random_density(SampleSpec(dim, 0, method), rng)
        assert rho.n == dim
        assert np.real(np.trace(rho.matrix)) == pytest.approx(1.0, abs=1e-10)
        assert np.min(rho.eigenvalues) >= 0
        assert np.allclose(rho.matrix, rho.matrix.conj().T)


def test_pure_density():
    rho = random_density(SampleSpec(4, 0, PURE), trial_generator(2))
    assert rho.eigenvalues[0] == pytest.approx(1.0, abs=1e-10)
    assert np.allclose(rho.eigenvalues[1:], 0, atol=1e-10)
    assert rho.is_pure


def test_ginibre_mean_eigenvalue():
    rng = trial_generator(3)
    spec = SampleSpec(3, 0, GINIBRE_NORMALIZED)
    eigenvalues = np.array([random_density(spec, rng).eigenvalues for _ in range(10000)])
    assert np.mean(eigenvalues) == pytest.approx(1 / 3, abs=0.01)


def test_hermitian():
    rng = trial_generator(4)
    H = random_hermitian(3, 2.0, rng)

    assert isinstance(H, HermitianOperator)
    assert np.max(np.abs(H.matrix - H.matrix.conj().T)) <= 1e-12
    assert np.array_equal(H.matrix, random_hermitian(3, 2.0, trial_generator(4)).matrix)


def test_hermitian_zero_scale():
    assert np.array_equal(random_hermitian(3, 0, trial_generator(1)).matrix, np.zeros((3, 3)))


def test_hermitian_zero_mean():
    rng = trial_generator(6)
    samples = np.array([random_hermitian(2, 1.5, rng).matrix for _ in range(10000)])
    assert np.max(np.abs(np.mean(samples, axis=0))) <= 0.05 * 1.5


@pytest.mark.parametrize("spec", [
    dict(dim=1, seed=0),
    dict(dim=65, seed=0),
    dict(dim=2, seed=0, method="uniform"),
    dict(dim=2, seed=0, observable_scale=0),
    dict(dim=2, seed=-3),
])
def test_invalid_sample_spec(spec):
    with pytest.raises(OutOfRange):
        SampleSpec(**spec)


def test_instance_is_reproducible():
    spec = SampleSpec(3, trial_seed(7, 0), EIGEN_DIRICHLET_HAAR)
    first, second = random_instance(spec), random_instance(spec)

    for a, b in zip(first, second):
        assert np.array_equal(a.matrix, b.matrix)


### Search

def make_spec(**kwargs):
    values = dict(
        trials=40,
        dims=(2,),
        alpha_grid=(0.01, 0.25),
        relation_id=LUO_IJ,
        master_seed=7,
    )
    values.update(kwargs)
    return SearchSpec(**values)


def test_luo_violations_are_found():
    result = search_violations(make_spec())

    assert result.violations > 0
    assert result.summary()["worst_margin"] < 0
    for record in result.records:
        assert not record.report.holds
        assert record.dim == 2
        assert set(record.matrices) == {"rho", "A", "B"}


def test_records_replay():
    result = search_violations(make_spec())

    for record in result.records:
        report = replay_violation(record)
        assert not report.holds
        assert abs(report.margin - record.report.margin) <= 1e-12


def test_search_is_deterministic():
    first = search_violations(make_spec(dims=(2, 3)))
    second = search_violations(make_spec(dims=(2, 3)))

    assert dump_json(first.summary()) == dump_json(second.summary())
    assert [dump_json(r.to_dict()) for r in first.records] == [dump_json(r.to_dict()) for r in second.records]


def test_search_does_not_depend_on_jobs():
    spec = make_spec(trials=12, dims=(2, 3))
    serial = search_violations(spec, jobs=1)
    parallel = search_violations(spec, jobs=2)

    assert dump_json(serial.summary()) == dump_json(parallel.summary())
    assert [dump_json(r.to_dict()) for r in serial.records] == [dump_json(r.to_dict()) for r in parallel.records]


def test_trial_matches_search():
    spec = make_spec(trials=5)
    outcome = run_trial(spec, 3)
    records = [record for record in search_violations(spec).records if record.trial_index == 3]

    assert [record.to_dict() for record in outcome.violations] == [record.to_dict() for record in records]


def test_search_without_trials():
    result = search_violations(make_spec(trials=0))

    assert result.records == []
    assert result.summary() == {
        "trials": 0,
        "violations": 0,
        "skipped": 0,
        "worst_margin": 0.0,
        "min_holding_margin": 0.0,
    }


def test_search_heisenberg_holds():
    result = search_violations(make_spec(relation_id=HEISENBERG, dims=(2, 3, 4), trials=30))

    assert result.violations == 0
    assert result.min_holding_margin >= 0


def test_search_alpha_relations_report_pair_gap():
    result = search_violations(make_spec(relation_id=WYD_U, dims=(3, 4, 5), trials=60, alpha_grid=(0.3, 0.6)))

    for record in result.records:
        assert record.min_pair_gap < 1e-12


@pytest.mark.parametrize("kwargs,error", [
    (dict(trials=-1), OutOfRange),
    (dict(dims=()), OutOfRange),
    (dict(alpha_grid=()), OutOfRange),
    (dict(alpha_grid=(0.0,)), InvalidAlpha),
    (dict(relation_id="bogus"), OutOfRange),
    (dict(methods=("bogus",)), OutOfRange),
    (dict(dims=(1,)), OutOfRange),
])
def test_invalid_search_spec(kwargs, error):
    with pytest.raises(error):
        make_spec(**kwargs)


### Sweep

def test_sweep_two_level_rows():
    rho, A, B, _ = two_level_instance()
    rows = sweep_alpha(rho, A, B, [0.25, 0.5])

    assert [list(row) for row in rows] == [list(SWEEP_COLUMNS)] * 2

    quarter, half = rows
    assert quarter["I_J_product"] == pytest.approx(99.834, abs=0.01)
    assert quarter["l_bound"] == pytest.approx(8.68741, abs=1e-4)
    assert quarter["commutator_bound"] == pytest.approx(121.0)
    assert quarter["margin_luo"] < 0 < quarter["margin_wyd"]

    assert half["I_J_product"] == pytest.approx(130.0)
    assert half["l_bound"] == pytest.approx(half["commutator_bound"], abs=1e-10)


def test_sweep_same_observable():
    rho, A, _, _ = two_level_instance()
    rows = sweep_alpha(rho, A, A, [0.1, 0.3, 0.5, 0.8])
    assert all(row["l_bound"] == pytest.approx(0.0, abs=1e-12) for row in rows)


def test_sweep_pure_state_is_flat():
    rho = random_density(SampleSpec(3, 0, PURE), trial_generator(8))
    A = random_hermitian(3, 1.0, trial_generator(9))
    B = random_hermitian(3, 1.0, trial_generator(10))

    products = [row["I_J_product"] for row in sweep_alpha(rho, A, B, [0.1, 0.4, 0.7])]
    assert products == pytest.approx([products[0]] * 3, rel=1e-9)


def test_sweep_symmetric_grid():
    rho, A, B = random_instance(SampleSpec(4, trial_seed(7, 1)))
    grid = [round(0.05 * k, 12) for k in range(1, 20)]
    products = [row["I_J_product"] for row in sweep_alpha(rho, A, B, grid)]

    for low, high in zip(products, reversed(products)):
        assert low == pytest.approx(high, rel=1e-9)


def test_sweep_empty_grid():
    rho, A, B, _ = two_level_instance()
    with pytest.raises(EmptyList):
        sweep_alpha(rho, A, B, [])
