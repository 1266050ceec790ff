"""JSON form of complex numbers, vectors and matrices.

A complex number is a pair `[re, im]`, a matrix a row-major
nested list of pairs.
"""
import numpy as np


def encode_complex(value):
    """Pair [re, im] of plain floats.

    Args:
        value (complex): Number to encode.

    Returns:
        list: Real and imaginary part, `-0.0` normalized to `0.0`.
    """
    value = complex(value)
    return [float(value.real) + 0.0, float(value.imag) + 0.0]


def encode_vector(vector):
    return [encode_complex(v) for v in np.asarray(vector).ravel()]


def encode_matrix(matrix):
    return [encode_vector(row) for row in np.asarray(matrix)]
