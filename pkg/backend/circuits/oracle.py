"""Independent state-vector simulator used as a reference.

It evolves a vector gate by gate and never forms Γ or any gauge value,
so a composition bug in the gauge path cannot cancel here.
"""
import numpy as np

from linalg.exceptions import ShapeError
from linalg.operators import as_vector
from linalg.validators import UnitNormValidator


def statevector_oracle(circuit, psi0, readout):
    """Returns ‖Π ψ_final‖² for the readout pattern.

    Raises:
        ShapeError: ψ₀ has the wrong dimension or a readout qubit is
            out of range.
    """
    state = as_vector(psi0)
    UnitNormValidator()(state)
    if state.shape[0] != circuit.dim:
        raise ShapeError(
            'State of dimension %(got)s for a %(n)s-qubit circuit.',
            params={'got': state.shape[0], 'n': circuit.n},
        )
    for gate in circuit.gates:
        state = gate.embedded(circuit.n) @ state

    indices = np.arange(circuit.dim)
    mask = np.ones(circuit.dim, dtype=bool)
    for qubit, bit in zip(readout.qubits, readout.bits):
        if not 0 <= qubit < circuit.n:
            raise ShapeError(
                'Readout qubit %(qubit)s out of range for %(n)s qubits.',
                params={'qubit': qubit, 'n': circuit.n},
            )
        mask &= ((indices >> (circuit.n - 1 - qubit)) & 1) == bit
    return float(np.sum(np.abs(state[mask]) ** 2))
