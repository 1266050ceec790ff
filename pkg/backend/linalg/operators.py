"""Immutable matrix and operator values.

A complex matrix is a read-only two-dimensional `complex128` ndarray;
`as_matrix` and `as_vector` produce such values from anything array-like.

Types:
    HermitianOperator:
        Selfadjoint square matrix (D, H, V, b).
    UnitaryOperator:
        Square matrix with UU† = U†U = I.
"""
from dataclasses import dataclass

import numpy as np

from .exceptions import ShapeError
from .validators import FiniteValidator, HermitianValidator, UnitaryValidator


def _freeze(array):
    array = np.array(array, dtype=complex, copy=True)
    array.setflags(write=False)
    return array


def as_matrix(value):
    """Converts a value into a read-only complex matrix.

    Args:
        value (array_like): Nested rows of numbers or an ndarray.

    Raises:
        ShapeError: The value is not two-dimensional.
        ValidationError: An entry is NaN or infinite.

    Returns:
        numpy.ndarray: Read-only `complex128` copy.
    """
    if isinstance(value, (HermitianOperator, UnitaryOperator)):
        return value.matrix
    matrix = np.asarray(value, dtype=complex)
    if matrix.ndim != 2 or 0 in matrix.shape:
        raise ShapeError(
            'Expected a non-empty matrix, got shape %(shape)s.',
            params={'shape': matrix.shape},
        )
    FiniteValidator()(matrix)
    return _freeze(matrix)


def as_vector(value):
    """Converts a value into a read-only complex vector."""
    vector = np.asarray(value, dtype=complex)
    if vector.ndim != 1 or vector.size == 0:
        raise ShapeError(
            'Expected a non-empty vector, got shape %(shape)s.',
            params={'shape': vector.shape},
        )
    FiniteValidator()(vector)
    return _freeze(vector)


@dataclass(frozen=True, eq=False)
class HermitianOperator:
    """Selfadjoint operator.

    Attributes:
        matrix(numpy.ndarray):
            Square read-only matrix, selfadjoint within
            `conf.OPERATOR_TOLERANCE` unless `tolerance` says otherwise.
    """
    matrix: np.ndarray
    tolerance: float = None

    def __post_init__(self):
        matrix = as_matrix(self.matrix)
        HermitianValidator(tolerance=self.tolerance)(matrix)
        object.__setattr__(self, 'matrix', matrix)

    @property
    def dim(self):
        return self.matrix.shape[0]


@dataclass(frozen=True, eq=False)
class UnitaryOperator:
    """Unitary operator.

    Attributes:
        matrix(numpy.ndarray):
            Square read-only matrix, unitary within `conf.OPERATOR_TOLERANCE`.
    """
    matrix: np.ndarray

    def __post_init__(self):
        matrix = as_matrix(self.matrix)
        UnitaryValidator()(matrix)
        object.__setattr__(self, 'matrix', matrix)

    @property
    def dim(self):
        return self.matrix.shape[0]

    @property
    def adjoint(self):
        return UnitaryOperator(np.conj(self.matrix).T)

    @classmethod
    def identity(cls, dim):
        return cls(np.eye(dim))
