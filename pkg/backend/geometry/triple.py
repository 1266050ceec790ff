"""Finite spectral triples (𝒜, ℍ, D).

The algebra 𝒜 is always all of 𝕄_N, so a triple is fully described
by its Dirac operator D on ℍ = ℂ^N.
"""
import logging
from dataclasses import dataclass
from functools import reduce

from api import conf

import numpy as np

from linalg.exceptions import CorruptionError, ShapeError
from linalg.kernel import SIGMA_X, canonical_eigh, commutator, embed_gate
from linalg.norms import max_norm
from linalg.operators import HermitianOperator
from linalg.validators import NonScalarValidator

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SpectralTriple:
    """Spectral triple of dimension N.

    Attributes:
        dirac(HermitianOperator):
            The Dirac operator D, N×N.
        factor(bool):
            When true, D may be a scalar multiple of the identity.
            Such triples only serve as operands of `product_triple`.
    """
    dirac: HermitianOperator
    factor: bool = False

    def __post_init__(self):
        dirac = self.dirac
        if not isinstance(dirac, HermitianOperator):
            dirac = HermitianOperator(dirac)
        if not self.factor:
            NonScalarValidator()(dirac.matrix)
        object.__setattr__(self, 'dirac', dirac)

    @property
    def dim(self):
        return self.dirac.dim

    @property
    def D(self):
        return self.dirac.matrix

    def require_nontrivial(self):
        """Raises `ValidationError` when D is a multiple of I."""
        NonScalarValidator()(self.D)

    def check_dim(self, dim):
        if dim != self.dim:
            raise ShapeError(
                'Operand of dimension %(got)s does not fit a triple '
                'of dimension %(dim)s.',
                params={'got': dim, 'dim': self.dim},
            )

    def probe(self):
        """Explicit witness for the state-as-connection identity.

        Picks eigenvectors e₁, e₂ of D with the largest eigenvalue gap
        (lowest indices first) and returns φ = (e₁ − i e₂)/√2 and
        b = (λ₁ − λ₂)⁻¹ (|e₁⟩⟨e₂| + |e₂⟩⟨e₁|), so that i[D, b]φ = φ.

        Raises:
            ValidationError: D is a multiple of the identity.
            CorruptionError: i[D, b] does not fix φ.

        Returns:
            tuple: Vector φ and selfadjoint matrix b.
        """
        self.require_nontrivial()
        eigenvalues, vectors = canonical_eigh(self.D)
        low = 0
        high = int(np.flatnonzero(
            eigenvalues >= eigenvalues[-1] - conf.SCALAR_GAP
        )[0])
        e1, e2 = vectors[:, low], vectors[:, high]
        gap = eigenvalues[low] - eigenvalues[high]
        b = (np.outer(e1, np.conj(e2)) + np.outer(e2, np.conj(e1))) / gap
        phi = (e1 - 1j * e2) / np.sqrt(2)
        logger.debug(
            'probe pair (%s, %s) with eigenvalues %.6g, %.6g',
            low, high, eigenvalues[low], eigenvalues[high],
        )

        residual = max_norm(1j * commutator(self.D, b) @ phi - phi)
        if residual > conf.WITNESS_TOLERANCE:
            raise CorruptionError(
                f'i[D, b] does not fix φ: residual {residual:.3e}'
            )
        return phi, b


def product_triple(first, second):
    """Product of two triples, D = D₁ ⊗ I₂ + I₁ ⊗ D₂.

    Operands may be `factor` triples; the product is validated
    as an ordinary triple.
    """
    dirac = (
        np.kron(first.D, np.eye(second.dim))
        + np.kron(np.eye(first.dim), second.D)
    )
    return SpectralTriple(HermitianOperator(dirac))


def qubit_triple():
    """The single-qubit triple (𝕄₂, ℂ², σ_x)."""
    return SpectralTriple(HermitianOperator(SIGMA_X))


def standard_qubit_triple(n):
    """Triple on n qubits with D = Σᵢ σ_x acting on qubit i.

    Raises:
        ShapeError: n is not positive.
    """
    if n < 1:
        raise ShapeError(
            'A qubit triple needs at least one qubit, got %(n)s.',
            params={'n': n},
        )
    dirac = reduce(
        np.add, (embed_gate(SIGMA_X, [i], n) for i in range(n))
    )
    return SpectralTriple(HermitianOperator(dirac))


def iterated_product(triple, n):
    """n-fold product of `triple` with itself."""
    return reduce(product_triple, [triple] * n)
