"""Validators for matrices and vectors of the `linalg` package.

Every validator is a callable object that raises `ValidationError`
and returns nothing when the value is acceptable.
"""
from api import conf

from django.core.exceptions import ValidationError
from django.utils.deconstruct import deconstructible

import numpy as np

from .exceptions import ShapeError
from .norms import dagger, max_norm, relative_bound


@deconstructible
class FiniteValidator:
    """Checks that no entry is NaN or infinite.

    Args:
        message(str):
            Message raised for a non-finite value.

    Raises:
        ValidationError:
            The value contains NaN or Inf.
    """
    message = 'Entries must be finite numbers.'
    code = 'not_finite'

    def __init__(self, message=None):
        if message is not None:
            self.message = message

    def __call__(self, value):
        if not np.all(np.isfinite(value)):
            raise ValidationError(self.message, code=self.code)


@deconstructible
class SquareValidator:
    """Checks that the value is a square matrix.

    Raises:
        ShapeError:
            The value is not two-dimensional or not square.
    """
    message = 'Expected a square matrix, got shape %(shape)s.'

    def __call__(self, value):
        shape = np.shape(value)
        if len(shape) != 2 or shape[0] != shape[1] or shape[0] == 0:
            raise ShapeError(self.message, params={'shape': shape})


class _DeviationValidator:
    """Base for checks of the form `deviation <= tol * max(1, ‖A‖_max)`.

    Subclasses define `deviation(matrix)`.

    Args:
        tolerance(float):
            Relative tolerance. By default - `conf.OPERATOR_TOLERANCE`.
        message(str):
            Message raised when the deviation is too large.
    """
    tolerance = conf.OPERATOR_TOLERANCE
    message = None
    code = None

    def __init__(self, tolerance=None, message=None):
        if tolerance is not None:
            self.tolerance = tolerance
        if message is not None:
            self.message = message

    def deviation(self, matrix):
        raise NotImplementedError

    def __call__(self, value):
        SquareValidator()(value)
        deviation = self.deviation(value)
        if deviation > relative_bound(value, self.tolerance):
            raise ValidationError(
                self.message,
                code=self.code,
                params={'deviation': deviation, 'tolerance': self.tolerance},
            )


@deconstructible
class HermitianValidator(_DeviationValidator):
    """Checks `‖A − A†‖_max` against the relative tolerance."""
    message = (
        'Operator is not selfadjoint: ‖A − A†‖ = %(deviation).3e '
        '(tolerance %(tolerance).0e).'
    )
    code = 'not_hermitian'

    def deviation(self, matrix):
        return max_norm(matrix - dagger(matrix))


@deconstructible
class UnitaryValidator(_DeviationValidator):
    """Checks both `‖UU† − I‖_max` and `‖U†U − I‖_max`."""
    message = (
        'Operator is not unitary: ‖UU† − I‖ = %(deviation).3e '
        '(tolerance %(tolerance).0e).'
    )
    code = 'not_unitary'

    def deviation(self, matrix):
        identity = np.eye(matrix.shape[0])
        return max(
            max_norm(matrix @ dagger(matrix) - identity),
            max_norm(dagger(matrix) @ matrix - identity),
        )


@deconstructible
class IdempotentValidator(_DeviationValidator):
    """Checks `‖E² − E‖_max`."""
    message = (
        'Operator is not a projector: ‖E² − E‖ = %(deviation).3e '
        '(tolerance %(tolerance).0e).'
    )
    code = 'not_idempotent'

    def deviation(self, matrix):
        return max_norm(matrix @ matrix - matrix)


@deconstructible
class UnitNormValidator:
    """Checks that a vector has unit Euclidean norm.

    Args:
        tolerance(float):
            Absolute tolerance on `| ‖ψ‖ − 1 |`.
            By default - `conf.NORM_TOLERANCE`.

    Raises:
        ShapeError:
            The value is not a non-empty vector.
        ValidationError:
            The norm differs from one.
    """
    tolerance = conf.NORM_TOLERANCE
    message = 'State vector must have unit norm, got %(norm).15g.'
    code = 'not_unit'

    def __init__(self, tolerance=None, message=None):
        if tolerance is not None:
            self.tolerance = tolerance
        if message is not None:
            self.message = message

    def __call__(self, value):
        if np.ndim(value) != 1 or np.size(value) == 0:
            raise ShapeError(
                'Expected a state vector, got shape %(shape)s.',
                params={'shape': np.shape(value)},
            )
        norm = float(np.linalg.norm(value))
        if abs(norm - 1.0) > self.tolerance:
            raise ValidationError(
                self.message, code=self.code, params={'norm': norm}
            )


@deconstructible
class NonScalarValidator:
    """Checks that a selfadjoint matrix is not a multiple of the identity.

    The matrix must have at least two eigenvalues further apart
    than `gap`.

    Args:
        gap(float):
            Minimal spread of the spectrum. By default - `conf.SCALAR_GAP`.
    """
    gap = conf.SCALAR_GAP
    message = (
        'Dirac operator is a scalar multiple of the identity '
        '(spectral spread %(spread).3e).'
    )
    code = 'scalar_dirac'

    def __init__(self, gap=None, message=None):
        if gap is not None:
            self.gap = gap
        if message is not None:
            self.message = message

    def __call__(self, value):
        eigenvalues = np.linalg.eigvalsh(value)
        spread = float(eigenvalues[-1] - eigenvalues[0])
        if spread <= self.gap:
            raise ValidationError(
                self.message, code=self.code, params={'spread': spread}
            )
