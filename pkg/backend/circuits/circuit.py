"""Quantum circuit model and its gauge counterpart.

A circuit Γ = U_N ⋯ U_1 either compiles to one unitary or runs as
the gauge program G(Γ) = G_{U_N} ⋯ G_{U_1} on an encoded state.
"""
import logging
from dataclasses import dataclass, field

from django.core.exceptions import ValidationError

import numpy as np

from gauge.states import (EventProjector, encode_state, gauge_transform,
                          measure_probability)
from linalg.exceptions import ShapeError
from linalg.kernel import tensor
from linalg.operators import UnitaryOperator

from .gates import GateSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class QuantumCircuit:
    """Ordered gate list over n qubits, the first gate is applied first.

    Attributes:
        n(int):
            Number of qubits.
        gates(tuple):
            GateSpec items with every target below n.
    """
    n: int
    gates: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.n < 1:
            raise ShapeError('A circuit needs at least one qubit.')
        gates = tuple(
            gate if isinstance(gate, GateSpec) else GateSpec(**gate)
            for gate in self.gates
        )
        for gate in gates:
            if max(gate.targets) >= self.n or min(gate.targets) < 0:
                raise ShapeError(
                    'Gate %(label)s targets %(targets)s outside '
                    '%(n)s qubits.',
                    params={'label': gate.label, 'targets': gate.targets,
                            'n': self.n},
                )
        object.__setattr__(self, 'gates', gates)

    @property
    def dim(self):
        return 2 ** self.n


@dataclass(frozen=True, eq=False)
class ReadoutSpec:
    """Measured bit pattern on some qubits.

    Attributes:
        qubits(tuple):
            Distinct qubit indices.
        bits(tuple):
            Expected value, 0 or 1, for each listed qubit.
    """
    qubits: tuple = ()
    bits: tuple = ()

    def __post_init__(self):
        qubits = tuple(int(q) for q in self.qubits)
        bits = tuple(int(b) for b in self.bits)
        if len(qubits) != len(bits):
            raise ValidationError(
                'Readout needs one bit per qubit.', code='readout'
            )
        if len(set(qubits)) != len(qubits):
            raise ShapeError('Duplicate readout qubits %(qubits)s.',
                             params={'qubits': qubits})
        if not set(bits) <= {0, 1}:
            raise ValidationError(
                'Readout bits must be 0 or 1.', code='readout'
            )
        object.__setattr__(self, 'qubits', qubits)
        object.__setattr__(self, 'bits', bits)

    @classmethod
    def first_qubit_one(cls):
        """Π_1: the first qubit reads |1⟩."""
        return cls(qubits=(0,), bits=(1,))

    @classmethod
    def all_zero(cls, k):
        """Π_{|0⟩^{⊗k}} on the first k qubits."""
        return cls(qubits=tuple(range(k)), bits=(0,) * k)

    def check_range(self, n):
        for qubit in self.qubits:
            if not 0 <= qubit < n:
                raise ShapeError(
                    'Readout qubit %(qubit)s out of range for %(n)s qubits.',
                    params={'qubit': qubit, 'n': n},
                )


def compile_circuit(circuit):
    """Γ = U_N ⋯ U_1 as one unitary on 2^n dimensions."""
    gamma = np.eye(circuit.dim, dtype=complex)
    for gate in circuit.gates:
        gamma = gate.embedded(circuit.n) @ gamma
    return UnitaryOperator(gamma)


def projector_of(readout, n):
    """Tensor product of |b⟩⟨b| on listed qubits and I elsewhere."""
    readout.check_range(n)
    wanted = dict(zip(readout.qubits, readout.bits))
    factors = []
    for qubit in range(n):
        if qubit in wanted:
            factor = np.zeros((2, 2), dtype=complex)
            factor[wanted[qubit], wanted[qubit]] = 1
        else:
            factor = np.eye(2, dtype=complex)
        factors.append(factor)
    return EventProjector(tensor(*factors))


def run_gauge_computation(circuit, psi0, triple):
    """Encodes ψ₀ and applies G_{U_k} for every gate in order.

    Raises:
        ShapeError: The triple does not have dimension 2^n.

    Returns:
        GaugeState: G(Γ)(V_ψ).
    """
    triple.check_dim(circuit.dim)
    state = encode_state(psi0, triple)
    for gate in circuit.gates:
        state = gauge_transform(
            state, UnitaryOperator(gate.embedded(circuit.n))
        )
    logger.debug('ran %s gauge transforms', len(circuit.gates))
    return state


def gauge_readout(state, readout):
    """Probability of the readout on a gauge state."""
    n = state.dim.bit_length() - 1
    return measure_probability(state, projector_of(readout, n))
