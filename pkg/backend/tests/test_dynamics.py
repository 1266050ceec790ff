from django.core.exceptions import ValidationError

from hypothesis import given, settings
from hypothesis.strategies import floats, integers

import numpy as np

import pytest

from gauge.dynamics import Hamiltonian, evolve_closed, evolve_ode
from gauge.states import encode_state
from geometry.triple import SpectralTriple, standard_qubit_triple
from linalg.exceptions import ShapeError
from linalg.kernel import SIGMA_X, SIGMA_Y, SIGMA_Z
from linalg.norms import max_norm
from linalg.random import random_hermitian, random_unit_vector

KET_0 = np.array([1, 0])
KET_PLUS = np.array([1, 1]) / np.sqrt(2)


class TestEvolveClosed:

    def test_zero_time(self, qubit):
        state = encode_state(KET_0, qubit)
        evolved = evolve_closed(state, SIGMA_Y, 0)
        np.testing.assert_array_equal(evolved.value.matrix,
                                      state.value.matrix)

    def test_global_phase(self, qubit):
        state = encode_state(KET_0, qubit)
        evolved = evolve_closed(state, SIGMA_Z, np.pi)
        np.testing.assert_allclose(
            evolved.value.matrix, state.value.matrix, atol=1e-12
        )

    def test_commuting_with_dirac(self, qubit):
        evolved = evolve_closed(encode_state(KET_0, qubit), SIGMA_X, 1.0)
        vector = np.array([np.cos(1), 1j * np.sin(1)])
        np.testing.assert_allclose(
            evolved.value.matrix, np.outer(vector, vector.conj()),
            atol=1e-12,
        )

    @settings(deadline=None, max_examples=25)
    @given(integers(0, 2 ** 32 - 1), integers(1, 2),
           floats(-2, 2), floats(-2, 2))
    def test_group_law(self, seed, n, t, s):
        rng = np.random.default_rng(seed)
        dim = 2 ** n
        hamiltonian = Hamiltonian(random_hermitian(rng, dim))
        state = encode_state(random_unit_vector(rng, dim),
                             standard_qubit_triple(n))
        twice = evolve_closed(evolve_closed(state, hamiltonian, s),
                              hamiltonian, t)
        once = evolve_closed(state, hamiltonian, t + s)
        assert max_norm(twice.value.matrix - once.value.matrix) <= 1e-10

    def test_wrong_dimension(self, qubit):
        with pytest.raises(ShapeError):
            evolve_closed(encode_state(KET_0, qubit), np.eye(4), 1.0)


class TestEvolveOde:

    def test_zero_time(self, qubit):
        state = encode_state(KET_0, qubit)
        assert evolve_ode(state, SIGMA_Z, 0, steps=5) is state.value

    def test_stationary(self, qubit):
        state = encode_state(KET_PLUS, qubit)
        evolved = evolve_ode(state, SIGMA_X, 3.0, steps=50)
        np.testing.assert_allclose(evolved.matrix, state.value.matrix,
                                   atol=1e-12)

    def test_matches_closed_form(self, qubit):
        state = encode_state(KET_0, qubit)
        closed = evolve_closed(state, SIGMA_Z, 1.0).value.matrix
        solved = evolve_ode(state, SIGMA_Z, 1.0, steps=1000).matrix
        assert max_norm(closed - solved) <= 1e-6

    @settings(deadline=None, max_examples=10)
    @given(integers(0, 2 ** 32 - 1), integers(1, 2), floats(-1.5, 1.5))
    def test_matches_closed_form_random(self, seed, n, t):
        rng = np.random.default_rng(seed)
        dim = 2 ** n
        hamiltonian = random_hermitian(rng, dim)
        state = encode_state(random_unit_vector(rng, dim),
                             SpectralTriple(random_hermitian(rng, dim)))
        closed = evolve_closed(state, hamiltonian, t).value.matrix
        solved = evolve_ode(state, hamiltonian, t).matrix
        assert max_norm(closed - solved) <= 1e-6

    @pytest.mark.parametrize('seed', range(3))
    @pytest.mark.parametrize('steps', [20, 40])
    def test_fourth_order_convergence(self, seed, steps):
        rng = np.random.default_rng(seed)
        hamiltonian = random_hermitian(rng, 2)
        state = encode_state(random_unit_vector(rng, 2),
                             SpectralTriple(random_hermitian(rng, 2)))
        closed = evolve_closed(state, hamiltonian, 1.0).value.matrix
        coarse = max_norm(
            evolve_ode(state, hamiltonian, 1.0, steps).matrix - closed
        )
        fine = max_norm(
            evolve_ode(state, hamiltonian, 1.0, 2 * steps).matrix - closed
        )
        assert 8 <= coarse / fine <= 32

    @pytest.mark.parametrize('steps', [0, -3])
    def test_steps_must_be_positive(self, qubit, steps):
        with pytest.raises(ValidationError):
            evolve_ode(encode_state(KET_0, qubit), SIGMA_Z, 1.0, steps)

    def test_time_must_be_finite(self, qubit):
        with pytest.raises(ValidationError):
            evolve_ode(encode_state(KET_0, qubit), SIGMA_Z, np.inf)


def test_non_hermitian_hamiltonian():
    with pytest.raises(ValidationError):
        Hamiltonian([[0, 1], [0, 0]])


def test_propagator(rng):
    hamiltonian = Hamiltonian(random_hermitian(rng, 4))
    propagator = hamiltonian.propagator(0.7).matrix
    np.testing.assert_allclose(
        propagator @ propagator.conj().T, np.eye(4), atol=1e-12
    )
