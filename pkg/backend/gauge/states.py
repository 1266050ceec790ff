"""Gauge states, gauge transforms and measurement.

Models:
    GaugeState:
        Connection value together with its preparation (φ, w), so that
        V = |wφ⟩⟨wφ| + wDw† − D and probabilities are computable.
    EventProjector:
        Selfadjoint idempotent operator E.
"""
import logging
from dataclasses import dataclass, replace

from api import conf

import numpy as np

from linalg.exceptions import CorruptionError, ProbabilityRangeError
from linalg.kernel import commutator
from linalg.norms import dagger, max_norm, relative_bound
from linalg.operators import (HermitianOperator, UnitaryOperator, as_matrix,
                              as_vector)
from linalg.validators import IdempotentValidator, UnitNormValidator

from .connection import Connection, transport_witness

logger = logging.getLogger(__name__)


def projector(vector):
    """|ψ⟩⟨ψ|."""
    return np.outer(vector, np.conj(vector))


def canonical_value(triple, base_state, cum_unitary):
    """|wφ⟩⟨wφ| + wDw† − D."""
    w = as_matrix(cum_unitary)
    return (
        projector(w @ base_state)
        + w @ triple.D @ dagger(w)
        - triple.D
    )


@dataclass(frozen=True, eq=False)
class EventProjector:
    """Event E of a measurement.

    Attributes:
        matrix(HermitianOperator):
            Selfadjoint and idempotent within `conf.OPERATOR_TOLERANCE`.
    """
    matrix: HermitianOperator

    def __post_init__(self):
        matrix = self.matrix
        if not isinstance(matrix, HermitianOperator):
            matrix = HermitianOperator(matrix)
        IdempotentValidator()(matrix.matrix)
        object.__setattr__(self, 'matrix', matrix)

    @property
    def dim(self):
        return self.matrix.dim


@dataclass(frozen=True, eq=False)
class GaugeState:
    """Gauge state on a spectral triple.

    A gauge state cannot exist without its preparation: probabilities
    of events are defined through it.

    Attributes:
        triple(SpectralTriple):
            Ambient triple.
        value(HermitianOperator):
            The connection V.
        base_state(numpy.ndarray):
            Unit vector φ the state was prepared from.
        cum_unitary(UnitaryOperator):
            Product w of all gauge transforms applied so far.
        witness(tuple or None):
            Pairs (a_j, b_j) with V = Σ_j a_j [D, b_j], when known.

    Raises:
        ValidationError:
            φ is not a unit vector, w is not unitary or V not selfadjoint.
        ShapeError:
            Dimensions do not match the triple.
        CorruptionError:
            V differs from |wφ⟩⟨wφ| + wDw† − D.
    """
    triple: object
    value: HermitianOperator
    base_state: np.ndarray
    cum_unitary: UnitaryOperator
    witness: tuple = None

    def __post_init__(self):
        value = self.value
        if not isinstance(value, HermitianOperator):
            value = HermitianOperator(value)
        cum_unitary = self.cum_unitary
        if not isinstance(cum_unitary, UnitaryOperator):
            cum_unitary = UnitaryOperator(cum_unitary)
        base_state = as_vector(self.base_state)
        UnitNormValidator()(base_state)
        for dim in (value.dim, cum_unitary.dim, base_state.shape[0]):
            self.triple.check_dim(dim)

        residual = max_norm(
            value.matrix
            - canonical_value(self.triple, base_state, cum_unitary)
        )
        if residual > relative_bound(value.matrix, conf.CANONICAL_TOLERANCE):
            raise CorruptionError(
                'Gauge state violates its canonical form: '
                f'residual {residual:.3e}.'
            )
        object.__setattr__(self, 'value', value)
        object.__setattr__(self, 'cum_unitary', cum_unitary)
        object.__setattr__(self, 'base_state', base_state)

    @classmethod
    def prepared(cls, triple, psi, u=None):
        """Builds G_u(V_ψ) straight from its canonical form."""
        psi = as_vector(psi)
        u = UnitaryOperator.identity(triple.dim) if u is None else u
        return cls(
            triple=triple,
            value=HermitianOperator(canonical_value(triple, psi, u)),
            base_state=psi,
            cum_unitary=u,
        )

    @property
    def dim(self):
        return self.triple.dim

    @property
    def connection(self):
        return Connection(self.value, self.witness)

    @property
    def physical_state(self):
        """The vector wφ."""
        return self.cum_unitary.matrix @ self.base_state


def encode_state(psi, triple):
    """Encodes a pure state as the connection V_ψ = |ψ⟩⟨ψ|.

    The witness is {(i a†, b a), (−i a† b, a)} with a = |φ⟩⟨ψ|,
    where (φ, b) come from `SpectralTriple.probe`.

    Args:
        psi (array_like): Unit vector ψ.
        triple (SpectralTriple): Triple with a non-scalar D.

    Raises:
        ValidationError: ψ is not a unit vector or D is scalar.
        ShapeError: Dimension of ψ does not match the triple.
        CorruptionError: The witness does not reproduce |ψ⟩⟨ψ|.

    Returns:
        GaugeState: V_ψ with base state ψ and w = I.
    """
    psi = as_vector(psi)
    UnitNormValidator()(psi)
    triple.check_dim(psi.shape[0])
    phi, b = triple.probe()

    a = np.outer(phi, np.conj(psi))
    a_adjoint = dagger(a)
    witness = ((1j * a_adjoint, b @ a), (-1j * a_adjoint @ b, a))
    value = projector(psi)

    connection = Connection(HermitianOperator(value), witness)
    deviation = max_norm(value - connection.reconstruct(triple))
    if deviation > relative_bound(value, conf.WITNESS_TOLERANCE):
        raise CorruptionError(
            f'Witness does not reproduce |ψ⟩⟨ψ|: deviation {deviation:.3e}.'
        )
    return GaugeState(
        triple=triple,
        value=connection.value,
        base_state=psi,
        cum_unitary=UnitaryOperator.identity(triple.dim),
        witness=connection.witness,
    )


def gauge_transform(state, u):
    """Applies G_u(V) = uVu† + u[D, u†].

    Args:
        state (GaugeState): The gauge state V.
        u (UnitaryOperator or array_like): The unitary u.

    Raises:
        ValidationError: u is not unitary.
        ShapeError: Dimension of u does not match the triple.

    Returns:
        GaugeState: New state with w' = u·w and the same base state.
    """
    if not isinstance(u, UnitaryOperator):
        u = UnitaryOperator(u)
    state.triple.check_dim(u.dim)
    matrix, adjoint = u.matrix, dagger(u.matrix)
    value = (
        matrix @ state.value.matrix @ adjoint
        + matrix @ commutator(state.triple.D, adjoint)
    )
    witness = None
    if state.witness is not None:
        witness = transport_witness(state.witness, matrix)
    return replace(
        state,
        value=HermitianOperator(value),
        cum_unitary=UnitaryOperator(matrix @ state.cum_unitary.matrix),
        witness=witness,
    )


def canonical_form(state):
    """Returns (ψ', w) with V = |ψ'⟩⟨ψ'| + wDw† − D.

    Raises:
        CorruptionError: The identity does not hold.
    """
    psi = state.physical_state
    residual = max_norm(
        state.value.matrix
        - canonical_value(state.triple, state.base_state, state.cum_unitary)
    )
    if residual > relative_bound(
        state.value.matrix, conf.CANONICAL_TOLERANCE
    ):
        raise CorruptionError(
            f'Canonical form residual {residual:.3e} exceeds tolerance.'
        )
    return psi, state.cum_unitary


def measure_probability(state, event):
    """Probability ⟨φ| w† E w |φ⟩ of the event E on the gauge state.

    Values within `conf.PROBABILITY_TOLERANCE` outside [0, 1] are
    clamped to the boundary.

    Raises:
        ShapeError: Dimension of E does not match.
        ValidationError: E is not a projector.
        ProbabilityRangeError: Imaginary part or range excursion too large.
    """
    if not isinstance(event, EventProjector):
        event = EventProjector(event)
    state.triple.check_dim(event.dim)
    psi = state.physical_state
    amplitude = np.vdot(psi, event.matrix.matrix @ psi)
    tolerance = conf.PROBABILITY_TOLERANCE
    if abs(amplitude.imag) > tolerance:
        raise ProbabilityRangeError(
            f'Probability has imaginary part {amplitude.imag:.3e}.'
        )
    probability = float(amplitude.real)
    if not -tolerance <= probability <= 1 + tolerance:
        raise ProbabilityRangeError(
            f'Probability {probability!r} is outside [0, 1].'
        )
    clamped = min(1.0, max(0.0, probability))
    if clamped != probability:
        logger.debug('probability %r clamped to %r', probability, clamped)
    return clamped


def is_quantum_state(state):
    """True iff V is a rank-one projector, i.e. a plain quantum state."""
    value = state.value.matrix
    return (
        max_norm(value @ value - value)
        <= relative_bound(value, conf.OPERATOR_TOLERANCE)
        and abs(np.trace(value) - 1) <= conf.OPERATOR_TOLERANCE
    )
