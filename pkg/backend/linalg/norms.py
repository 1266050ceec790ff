"""Norm helpers shared by validators and operators."""
import numpy as np


def max_norm(matrix):
    """Largest absolute entry, zero for an empty array."""
    matrix = np.asarray(matrix)
    if matrix.size == 0:
        return 0.0
    return float(np.max(np.abs(matrix)))


def dagger(matrix):
    """Conjugate transpose."""
    return np.conj(np.asarray(matrix)).T


def relative_bound(matrix, tolerance):
    """Bound `tolerance * max(1, ‖matrix‖_max)` used by every check."""
    return tolerance * max(1.0, max_norm(matrix))
