from django.core.exceptions import ValidationError

from hypothesis import given, settings
from hypothesis.strategies import integers

import numpy as np

import pytest

from geometry.triple import (SpectralTriple, iterated_product, product_triple,
                             qubit_triple, standard_qubit_triple)
from linalg.exceptions import ShapeError
from linalg.kernel import SIGMA_X, SIGMA_Z, commutator
from linalg.random import random_hermitian

SIGMA_X_PAIR = np.kron(SIGMA_X, np.eye(2)) + np.kron(np.eye(2), SIGMA_X)


def test_qubit_triple():
    triple = qubit_triple()
    assert triple.dim == 2
    np.testing.assert_array_equal(triple.D, SIGMA_X)


def test_product_of_qubits():
    product = product_triple(qubit_triple(), qubit_triple())
    np.testing.assert_array_equal(product.D, SIGMA_X_PAIR)
    np.testing.assert_allclose(
        np.linalg.eigvalsh(product.D), [-2, 0, 0, 2], atol=1e-12
    )


def test_product_with_zero_factor():
    zero = SpectralTriple(np.zeros((2, 2)), factor=True)
    product = product_triple(qubit_triple(), zero)
    np.testing.assert_array_equal(product.D, np.kron(SIGMA_X, np.eye(2)))


def test_product_of_scalar_factors_is_rejected():
    zero = SpectralTriple(np.zeros((2, 2)), factor=True)
    with pytest.raises(ValidationError):
        product_triple(zero, zero)


@pytest.mark.parametrize('dirac', [np.zeros((2, 2)), 2 * np.eye(4)])
def test_scalar_dirac_is_rejected(dirac):
    with pytest.raises(ValidationError):
        SpectralTriple(dirac)


def test_non_hermitian_dirac_is_rejected():
    with pytest.raises(ValidationError):
        SpectralTriple([[0, 1], [0, 0]])


@settings(deadline=None, max_examples=20)
@given(integers(0, 2 ** 32 - 1))
def test_product_is_associative(seed):
    rng = np.random.default_rng(seed)
    a, b, c = (SpectralTriple(random_hermitian(rng, 2)) for _ in range(3))
    left = product_triple(product_triple(a, b), c)
    right = product_triple(a, product_triple(b, c))
    np.testing.assert_allclose(left.D, right.D, atol=1e-12)


class TestStandardQubitTriple:

    def test_one_qubit(self):
        np.testing.assert_array_equal(standard_qubit_triple(1).D, SIGMA_X)

    def test_two_qubits(self):
        np.testing.assert_array_equal(standard_qubit_triple(2).D,
                                      SIGMA_X_PAIR)

    def test_three_qubits(self):
        dirac = standard_qubit_triple(3).D
        assert abs(np.trace(dirac)) < 1e-12
        assert np.linalg.norm(dirac, 2) == pytest.approx(3)

    @pytest.mark.parametrize('n', [1, 2, 3, 4])
    def test_matches_iterated_product(self, n):
        np.testing.assert_allclose(
            standard_qubit_triple(n).D,
            iterated_product(qubit_triple(), n).D,
            atol=1e-12,
        )

    @pytest.mark.parametrize('n', range(1, 7))
    def test_flip_pattern(self, n):
        dirac = standard_qubit_triple(n).D
        np.testing.assert_array_equal(np.imag(dirac), 0)
        np.testing.assert_array_equal(dirac, dirac.T)
        assert set(np.unique(dirac.real)) <= {0, 1}
        np.testing.assert_array_equal(dirac.real.sum(axis=1), n)

    def test_needs_a_qubit(self):
        with pytest.raises(ShapeError):
            standard_qubit_triple(0)


def test_check_dim():
    triple = standard_qubit_triple(2)
    triple.check_dim(4)
    with pytest.raises(ShapeError):
        triple.check_dim(2)


class TestProbe:

    def assert_witness(self, triple):
        phi, b = triple.probe()
        np.testing.assert_allclose(np.linalg.norm(phi), 1)
        np.testing.assert_allclose(b, b.conj().T, atol=1e-14)
        np.testing.assert_allclose(
            1j * commutator(triple.D, b) @ phi, phi, atol=1e-10
        )

    @pytest.mark.parametrize('n', [1, 2, 3])
    def test_standard(self, n):
        self.assert_witness(standard_qubit_triple(n))

    def test_degenerate_spectrum(self):
        self.assert_witness(
            SpectralTriple(np.diag([1.0, 1.0, -2.0, -2.0]))
        )

    @settings(deadline=None, max_examples=30)
    @given(integers(0, 2 ** 32 - 1), integers(2, 8))
    def test_random(self, seed, dim):
        rng = np.random.default_rng(seed)
        self.assert_witness(SpectralTriple(random_hermitian(rng, dim)))

    def test_perturbed_qubit(self):
        self.assert_witness(SpectralTriple(SIGMA_X + 1e-3 * SIGMA_Z))

    def test_is_deterministic(self):
        first = standard_qubit_triple(2).probe()
        second = standard_qubit_triple(2).probe()
        np.testing.assert_array_equal(first[0], second[0])
        np.testing.assert_array_equal(first[1], second[1])
