"""Seeded random operators and states for the verification corpora."""
import numpy as np

from .norms import dagger


def _gaussian(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_unitary(rng, dim):
    """Haar-distributed unitary (QR of a complex Gaussian matrix)."""
    q, r = np.linalg.qr(_gaussian(rng, (dim, dim)))
    diagonal = np.diagonal(r)
    return q * (diagonal / np.abs(diagonal))


def random_hermitian(rng, dim, scale=1.0):
    """Selfadjoint matrix with entries bounded by `scale`."""
    matrix = _gaussian(rng, (dim, dim))
    matrix = (matrix + dagger(matrix)) / 2
    return scale * matrix / np.max(np.abs(matrix))


def random_unit_vector(rng, dim):
    vector = _gaussian(rng, dim)
    return vector / np.linalg.norm(vector)
