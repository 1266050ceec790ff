from api import conf

from django.core.exceptions import ValidationError

import numpy as np

import pytest

from circuits.circuit import compile_circuit
from circuits.deutsch_jozsa import (OracleSpec, build_oracle_unitary,
                                    deutsch_jozsa, deutsch_jozsa_circuit,
                                    hadamard_layer, initial_state,
                                    predicted_output_state)
from geometry.triple import SpectralTriple, standard_qubit_triple
from linalg.exceptions import ShapeError
from linalg.kernel import SIGMA_X
from linalg.random import random_hermitian

CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
)
IDENTITY = OracleSpec(n=1, table=(0, 1))


class TestOracleSpec:

    @pytest.mark.parametrize('name, n, expected', [
        (conf.CONSTANT_ZERO, 2, (0, 0, 0, 0)),
        (conf.CONSTANT_ONE, 2, (1, 1, 1, 1)),
        (conf.BALANCED_PARITY, 2, (0, 1, 1, 0)),
        (conf.BALANCED_FIRST_BIT, 2, (0, 0, 1, 1)),
    ])
    def test_builtin(self, name, n, expected):
        oracle = OracleSpec.builtin(name, n)
        assert oracle.table == expected
        assert oracle.label == name

    @pytest.mark.parametrize('table, classification', [
        ((0, 0, 0, 0), conf.CONSTANT),
        ((1, 1, 1, 1), conf.CONSTANT),
        ((1, 0, 0, 1), conf.BALANCED),
        ((1, 0, 0, 0), conf.NEITHER),
    ])
    def test_classification(self, table, classification):
        assert OracleSpec(n=2, table=table).classification == classification

    @pytest.mark.parametrize('n', [1, 3, 5])
    def test_random_balanced(self, n):
        first = OracleSpec.random_balanced(n, np.random.default_rng(3))
        second = OracleSpec.random_balanced(n, np.random.default_rng(3))
        assert first.classification == conf.BALANCED
        assert first.table == second.table

    def test_wrong_length(self):
        with pytest.raises(ValidationError) as error:
            OracleSpec(n=2, table=(0, 1, 1))
        assert error.value.code == 'table_length'

    def test_wrong_values(self):
        with pytest.raises(ValidationError):
            OracleSpec(n=1, table=(0, 2))

    def test_unknown_builtin(self):
        with pytest.raises(ValidationError):
            OracleSpec.builtin('sometimes', 2)


class TestOracleUnitary:

    def test_constant_zero(self):
        np.testing.assert_array_equal(
            build_oracle_unitary(OracleSpec.builtin(conf.CONSTANT_ZERO, 1))
            .matrix,
            np.eye(4),
        )

    def test_constant_one(self):
        np.testing.assert_array_equal(
            build_oracle_unitary(OracleSpec.builtin(conf.CONSTANT_ONE, 1))
            .matrix,
            np.kron(np.eye(2), SIGMA_X),
        )

    def test_identity_function(self):
        np.testing.assert_array_equal(
            build_oracle_unitary(IDENTITY).matrix, CNOT
        )


class TestHadamardLayer:

    def test_one(self):
        np.testing.assert_allclose(
            hadamard_layer(1).matrix,
            np.array([[1, 1], [1, -1]]) / np.sqrt(2),
        )

    def test_two(self):
        np.testing.assert_allclose(
            hadamard_layer(2).matrix,
            np.array([[1, 1, 1, 1], [1, -1, 1, -1],
                      [1, 1, -1, -1], [1, -1, -1, 1]]) / 2,
        )

    @pytest.mark.parametrize('k', [1, 2, 3, 4])
    def test_involution(self, k):
        layer = hadamard_layer(k).matrix
        np.testing.assert_allclose(layer @ layer, np.eye(2 ** k),
                                   atol=1e-14)

    def test_needs_a_qubit(self):
        with pytest.raises(ValidationError):
            hadamard_layer(0)


class TestDeutschJozsa:

    @pytest.mark.parametrize('name, probability, verdict', [
        (conf.CONSTANT_ZERO, 1, conf.CONSTANT),
        (conf.BALANCED_PARITY, 0, conf.BALANCED),
    ])
    def test_three_bits(self, name, probability, verdict):
        result = deutsch_jozsa(OracleSpec.builtin(name, 3))
        assert result.probability == pytest.approx(probability, abs=1e-9)
        assert result.verdict == verdict
        assert result.gauge_transform_count == 3

    def test_identity_function(self):
        result = deutsch_jozsa(IDENTITY)
        assert result.probability == pytest.approx(0, abs=1e-9)
        assert result.verdict == conf.BALANCED

    @pytest.mark.parametrize('name', [conf.CONSTANT_ZERO, conf.CONSTANT_ONE])
    @pytest.mark.parametrize('n', range(1, 9))
    def test_constant(self, name, n):
        result = deutsch_jozsa(OracleSpec.builtin(name, n))
        assert abs(result.probability - 1) <= 1e-9
        assert result.verdict == conf.CONSTANT

    @pytest.mark.parametrize('name', [
        conf.BALANCED_PARITY, conf.BALANCED_FIRST_BIT,
    ])
    @pytest.mark.parametrize('n', range(1, 9))
    def test_balanced_builtin(self, name, n):
        result = deutsch_jozsa(OracleSpec.builtin(name, n))
        assert abs(result.probability) <= 1e-9
        assert result.verdict == conf.BALANCED

    @pytest.mark.parametrize('n', range(1, 7))
    def test_random_balanced(self, n):
        rng = np.random.default_rng(n)
        for _ in range(50):
            result = deutsch_jozsa(OracleSpec.random_balanced(n, rng))
            assert abs(result.probability) <= 1e-9
            assert result.verdict == conf.BALANCED

    @pytest.mark.parametrize('name', [
        conf.CONSTANT_ONE, conf.BALANCED_FIRST_BIT,
    ])
    def test_independent_of_dirac(self, rng, name):
        oracle = OracleSpec.builtin(name, 3)
        triple = SpectralTriple(random_hermitian(rng, 16))
        assert deutsch_jozsa(oracle, triple).probability == pytest.approx(
            deutsch_jozsa(oracle).probability, abs=1e-10
        )

    def test_neither(self):
        result = deutsch_jozsa(OracleSpec(n=2, table=(1, 0, 0, 0)))
        assert result.verdict == conf.INDETERMINATE
        assert result.probability == pytest.approx(0.25)

    def test_wrong_triple(self):
        with pytest.raises(ShapeError):
            deutsch_jozsa(IDENTITY, standard_qubit_triple(3))


@pytest.mark.parametrize('oracle', [
    IDENTITY,
    OracleSpec.builtin(conf.BALANCED_PARITY, 3),
    OracleSpec(n=2, table=(1, 0, 0, 0)),
])
def test_predicted_output_state(oracle):
    circuit = deutsch_jozsa_circuit(oracle)
    assert len(circuit.gates) == 3
    output = compile_circuit(circuit).matrix @ initial_state(oracle.n)
    np.testing.assert_allclose(output, predicted_output_state(oracle),
                               atol=1e-12)
