"""Gate specifications of the circuit model.

Named gates use the usual conventions; for CNOT the first target is the
control, the second one the flipped qubit.
"""
from dataclasses import dataclass

from django.core.exceptions import ValidationError

import numpy as np

from linalg.exceptions import ShapeError
from linalg.kernel import SIGMA_X, SIGMA_Y, SIGMA_Z, embed_gate
from linalg.operators import UnitaryOperator, as_matrix

HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)

NAMED_GATES = {
    'X': SIGMA_X,
    'Y': SIGMA_Y,
    'Z': SIGMA_Z,
    'H': HADAMARD,
    'S': np.diag([1, 1j]),
    'T': np.diag([1, np.exp(1j * np.pi / 4)]),
    'CNOT': np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
        dtype=complex,
    ),
    'CZ': np.diag([1, 1, 1, -1]).astype(complex),
    'SWAP': np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]],
        dtype=complex,
    ),
}

for _gate in NAMED_GATES.values():
    _gate.setflags(write=False)


def arity(matrix):
    """Number of qubits a 2^k × 2^k matrix acts on."""
    size = matrix.shape[0]
    k = size.bit_length() - 1
    if size != 2 ** k or k < 1 or matrix.shape != (size, size):
        raise ShapeError(
            'Gate matrix must be 2^k × 2^k, got %(shape)s.',
            params={'shape': matrix.shape},
        )
    return k


@dataclass(frozen=True, eq=False)
class GateSpec:
    """One gate U_k of a circuit.

    Exactly one of `name` and `matrix` is given.

    Attributes:
        targets(tuple):
            Distinct qubit indices, the first one is the most significant
            factor of the gate matrix.
        name(str):
            One of `NAMED_GATES`.
        matrix(numpy.ndarray):
            Explicit unitary of size 2^k for k targets.

    Raises:
        ValidationError:
            Unknown name, both or neither of name and matrix,
            or a non-unitary matrix.
        ShapeError:
            Arity does not match the number of targets.
    """
    targets: tuple
    name: str = None
    matrix: np.ndarray = None

    def __post_init__(self):
        targets = tuple(int(t) for t in self.targets)
        if (self.name is None) == (self.matrix is None):
            raise ValidationError(
                'A gate needs either a name or a matrix.', code='gate'
            )
        if self.name is not None:
            if self.name not in NAMED_GATES:
                raise ValidationError(
                    'Unknown gate %(name)s, supported: %(names)s.',
                    code='gate_name',
                    params={'name': self.name,
                            'names': ', '.join(NAMED_GATES)},
                )
            matrix = as_matrix(NAMED_GATES[self.name])
        else:
            matrix = UnitaryOperator(self.matrix).matrix
        if len(set(targets)) != len(targets):
            raise ShapeError('Duplicate targets %(targets)s.',
                             params={'targets': targets})
        if arity(matrix) != len(targets):
            raise ShapeError(
                'Gate %(label)s acts on %(k)s qubits, '
                'got targets %(targets)s.',
                params={'label': self.label, 'k': arity(matrix),
                        'targets': targets},
            )
        object.__setattr__(self, 'targets', targets)
        object.__setattr__(self, 'matrix', matrix)

    @property
    def label(self):
        return self.name or 'matrix'

    def embedded(self, n):
        """The gate as a 2^n × 2^n unitary."""
        return embed_gate(self.matrix, self.targets, n)

