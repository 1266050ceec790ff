"""Noncommutative connections V = Σ_j a_j [D, b_j]."""
from dataclasses import dataclass

from api import conf

import numpy as np

from linalg.exceptions import UnverifiableError
from linalg.kernel import commutator
from linalg.norms import max_norm, relative_bound
from linalg.operators import HermitianOperator, as_matrix


@dataclass(frozen=True, eq=False)
class Connection:
    """Selfadjoint operator with an optional decomposition witness.

    Attributes:
        value(HermitianOperator):
            The operator V.
        witness(tuple or None):
            Pairs (a_j, b_j) with V = Σ_j a_j [D, b_j] for the
            ambient D, or None when no decomposition is known.
    """
    value: HermitianOperator
    witness: tuple = None

    def __post_init__(self):
        if not isinstance(self.value, HermitianOperator):
            object.__setattr__(self, 'value', HermitianOperator(self.value))
        if self.witness is not None:
            object.__setattr__(self, 'witness', tuple(
                (as_matrix(a), as_matrix(b)) for a, b in self.witness
            ))

    def reconstruct(self, triple):
        """Returns Σ_j a_j [D, b_j].

        Raises:
            UnverifiableError: The connection has no witness.
        """
        if self.witness is None:
            raise UnverifiableError('Connection carries no witness.')
        total = np.zeros((triple.dim, triple.dim), dtype=complex)
        for a, b in self.witness:
            total = total + a @ commutator(triple.D, b)
        return total


def verify_connection(connection, triple):
    """Checks the witness of a connection against the triple.

    Args:
        connection (Connection): Connection with a witness.
        triple (SpectralTriple): Ambient triple providing D.

    Raises:
        UnverifiableError: The witness is missing.
        ShapeError: Dimensions of V and D differ.

    Returns:
        bool: True iff V is selfadjoint and equals Σ_j a_j [D, b_j]
        within `conf.WITNESS_TOLERANCE`.
    """
    value = connection.value.matrix
    triple.check_dim(value.shape[0])
    reconstructed = connection.reconstruct(triple)
    return max_norm(value - reconstructed) <= relative_bound(
        value, conf.WITNESS_TOLERANCE
    )


def transport_witness(witness, u):
    """Witness of G_u(V) from a witness of V.

    Uses u a [D, b] u† = u a [D, b u†] − u a b [D, u†] and
    u [D, u†] for the gauge term, so the result has one more pair.
    """
    u_adjoint = np.conj(u).T
    pairs = [(u @ a, b @ u_adjoint) for a, b in witness]
    rest = np.eye(u.shape[0], dtype=complex)
    for a, b in witness:
        rest = rest - a @ b
    pairs.append((u @ rest, u_adjoint))
    return tuple(pairs)
