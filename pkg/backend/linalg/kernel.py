"""Dense complex matrix kernel.

Qubit 0 is the leftmost (most significant) tensor factor: the basis index
of |x_0 x_1 … x_{n−1}⟩ is the integer with x_0 as its most significant bit.
"""
import logging
from functools import reduce

import numpy as np

from .exceptions import ShapeError
from .operators import HermitianOperator, UnitaryOperator, as_matrix

logger = logging.getLogger(__name__)

IDENTITY_2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

for _pauli in (IDENTITY_2, SIGMA_X, SIGMA_Y, SIGMA_Z):
    _pauli.setflags(write=False)


def commutator(a, b):
    """Returns `[a, b] = ab − ba`.

    Raises:
        ShapeError: Operands are not square matrices of one dimension.
    """
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise ShapeError(
            'Commutator needs square matrices of one size, '
            'got %(left)s and %(right)s.',
            params={'left': a.shape, 'right': b.shape},
        )
    return a @ b - b @ a


def tensor(*factors):
    """Kronecker product, the first factor's index varies slowest."""
    return reduce(np.kron, (as_matrix(f) for f in factors))


def embed_gate(gate, targets, n):
    """Embeds a gate acting on `targets` into an n-qubit operator.

    The first listed target is the most significant factor of the gate,
    every other qubit gets the identity. Non-adjacent and reversed
    targets are handled by permuting tensor axes.

    Args:
        gate (array_like): 2^k × 2^k matrix for k targets.
        targets (list of int): Distinct qubit indices, each below `n`.
        n (int): Number of qubits.

    Raises:
        ShapeError:
            Target out of range or repeated, or gate of the wrong size.

    Returns:
        numpy.ndarray: 2^n × 2^n matrix.
    """
    gate = as_matrix(gate)
    targets = [int(t) for t in targets]
    if n < 1:
        raise ShapeError('Qubit count must be positive, got %(n)s.',
                         params={'n': n})
    if not targets:
        raise ShapeError('A gate needs at least one target.')
    if len(set(targets)) != len(targets):
        raise ShapeError('Duplicate targets %(targets)s.',
                         params={'targets': targets})
    for target in targets:
        if not 0 <= target < n:
            raise ShapeError(
                'Target %(target)s out of range for %(n)s qubits.',
                params={'target': target, 'n': n},
            )
    size = 2 ** len(targets)
    if gate.shape != (size, size):
        raise ShapeError(
            'Gate on %(count)s qubits must be %(size)s×%(size)s, '
            'got %(shape)s.',
            params={'count': len(targets), 'size': size,
                    'shape': gate.shape},
        )

    rest = [q for q in range(n) if q not in targets]
    full = np.kron(gate, np.eye(2 ** len(rest)))
    order = targets + rest
    if order == list(range(n)):
        return full
    # axis i of `full` belongs to qubit order[i]
    inverse = list(np.argsort(order))
    axes = inverse + [n + i for i in inverse]
    logger.debug('embedding gate on %s with axis order %s', targets, order)
    return (
        full.reshape([2] * (2 * n))
        .transpose(axes)
        .reshape(2 ** n, 2 ** n)
    )


def canonical_eigh(matrix):
    """Eigen-decomposition of a selfadjoint matrix with a fixed phase.

    Each eigenvector is scaled so that its first nonzero component is
    real and positive, which makes the decomposition deterministic.

    Returns:
        tuple: Ascending eigenvalues and eigenvectors as columns.
    """
    eigenvalues, vectors = np.linalg.eigh(as_matrix(matrix))
    for column in range(vectors.shape[1]):
        vector = vectors[:, column]
        pivot = vector[np.flatnonzero(np.abs(vector) > 1e-12)[0]]
        vectors[:, column] = vector * (abs(pivot) / pivot)
    return eigenvalues, vectors


def expm_unitary(hamiltonian, t):
    """Returns `e^{itH}` computed through the eigen-decomposition of H.

    Args:
        hamiltonian (HermitianOperator or array_like): Selfadjoint H.
        t (float): Time.

    Raises:
        ValidationError: H is not selfadjoint.

    Returns:
        UnitaryOperator: The propagator.
    """
    if not isinstance(hamiltonian, HermitianOperator):
        hamiltonian = HermitianOperator(hamiltonian)
    if t == 0:
        return UnitaryOperator.identity(hamiltonian.dim)
    eigenvalues, vectors = np.linalg.eigh(hamiltonian.matrix)
    phases = np.exp(1j * t * eigenvalues)
    return UnitaryOperator((vectors * phases) @ np.conj(vectors).T)
