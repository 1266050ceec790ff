"""Deutsch-Jozsa algorithm in gauge form.

The register holds x on the first n qubits and y on the last one.
The program is G_{H^{⊗n}⊗I} G_{U_f} G_{H^{⊗(n+1)}} applied to
V_ψ with ψ = |0⟩^{⊗n} ⊗ |1⟩, read out with Π_{|0⟩^{⊗n}}.
"""
import logging
from dataclasses import dataclass
from functools import reduce

from api import conf

from django.core.exceptions import ValidationError

import numpy as np

from geometry.triple import standard_qubit_triple
from linalg.operators import UnitaryOperator

from .circuit import (QuantumCircuit, ReadoutSpec, gauge_readout,
                      run_gauge_computation)
from .gates import HADAMARD, GateSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class OracleSpec:
    """Truth table of f: {0,1}^n → {0,1}.

    Attributes:
        n(int):
            Input bit width.
        table(tuple):
            f(x) for x = 0 … 2^n − 1, x_0 the most significant bit.
        label(str):
            Builtin name or `table`.
    """
    n: int
    table: tuple
    label: str = 'table'

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError(
                'Oracle width must be positive, got %(n)s.',
                code='oracle', params={'n': self.n},
            )
        table = tuple(int(v) for v in self.table)
        if len(table) != 2 ** self.n:
            raise ValidationError(
                'Truth table for n=%(n)s needs %(size)s values, '
                'got %(got)s.',
                code='table_length',
                params={'n': self.n, 'size': 2 ** self.n, 'got': len(table)},
            )
        if not set(table) <= {0, 1}:
            raise ValidationError(
                'Truth table values must be 0 or 1.', code='table_values'
            )
        object.__setattr__(self, 'table', table)

    @classmethod
    def builtin(cls, name, n, rng=None):
        """Builds one of `conf.BUILTIN_ORACLES`.

        Raises:
            ValidationError: Unknown name.
        """
        inputs = np.arange(2 ** n)
        match name:
            case conf.CONSTANT_ZERO:
                table = np.zeros(2 ** n, dtype=int)
            case conf.CONSTANT_ONE:
                table = np.ones(2 ** n, dtype=int)
            case conf.BALANCED_PARITY:
                table = np.array([bin(x).count('1') % 2 for x in inputs])
            case conf.BALANCED_FIRST_BIT:
                table = (inputs >> (n - 1)) & 1
            case conf.RANDOM_BALANCED:
                return cls.random_balanced(n, rng or np.random.default_rng())
            case _:
                raise ValidationError(
                    'Unknown oracle %(name)s, supported: %(names)s.',
                    code='oracle_name',
                    params={'name': name,
                            'names': ', '.join(conf.BUILTIN_ORACLES)},
                )
        return cls(n=n, table=tuple(table), label=name)

    @classmethod
    def random_balanced(cls, n, rng):
        """Uniformly random balanced table."""
        table = np.zeros(2 ** n, dtype=int)
        table[rng.permutation(2 ** n)[:2 ** (n - 1)]] = 1
        return cls(n=n, table=tuple(table), label=conf.RANDOM_BALANCED)

    @property
    def classification(self):
        ones = sum(self.table)
        if ones in (0, len(self.table)):
            return conf.CONSTANT
        if 2 * ones == len(self.table):
            return conf.BALANCED
        return conf.NEITHER


@dataclass(frozen=True)
class DeutschJozsaResult:
    probability: float
    verdict: str
    classification: str
    gauge_transform_count: int
    state: object


def build_oracle_unitary(oracle):
    """U_f |x, y⟩ = |x, y ⊕ f(x)⟩ as a 2^{n+1} permutation matrix."""
    size = 2 ** (oracle.n + 1)
    indices = np.arange(size)
    x, y = indices >> 1, indices & 1
    images = (x << 1) | (y ^ np.asarray(oracle.table)[x])
    unitary = np.zeros((size, size), dtype=complex)
    unitary[images, indices] = 1
    return UnitaryOperator(unitary)


def hadamard_layer(k):
    """H^{⊗k}.

    Raises:
        ValidationError: k is not positive.
    """
    if k < 1:
        raise ValidationError(
            'Hadamard layer needs k ≥ 1, got %(k)s.',
            code='hadamard', params={'k': k},
        )
    return UnitaryOperator(reduce(np.kron, [HADAMARD] * k))


def initial_state(n):
    """ψ = |0⟩^{⊗n} ⊗ |1⟩."""
    psi = np.zeros(2 ** (n + 1), dtype=complex)
    psi[1] = 1
    return psi


def deutsch_jozsa_circuit(oracle):
    """The three stages H^{⊗(n+1)}, U_f, H^{⊗n} ⊗ I as one circuit."""
    n = oracle.n
    everything = tuple(range(n + 1))
    stages = (
        hadamard_layer(n + 1).matrix,
        build_oracle_unitary(oracle).matrix,
        np.kron(hadamard_layer(n).matrix, np.eye(2)),
    )
    return QuantumCircuit(
        n=n + 1,
        gates=tuple(GateSpec(targets=everything, matrix=m) for m in stages),
    )


def predicted_output_state(oracle):
    """Γψ = Σ_{x,y} (−1)^{x·y + f(x)} 2^{−n} |y⟩ ⊗ (|0⟩ − |1⟩)/√2."""
    n = oracle.n
    xs = np.arange(2 ** n)
    dots = np.array(
        [[bin(x & y).count('1') % 2 for x in xs] for y in xs]
    )
    signs = (-1.0) ** (dots + np.asarray(oracle.table)[None, :])
    amplitudes = signs.sum(axis=1) / 2 ** n
    minus = np.array([1, -1]) / np.sqrt(2)
    return np.kron(amplitudes, minus).astype(complex)


def deutsch_jozsa(oracle, triple=None):
    """Runs the algorithm as a gauge computation.

    Args:
        oracle (OracleSpec): The function f.
        triple (SpectralTriple): Triple of dimension 2^{n+1}.
            By default - `standard_qubit_triple(n + 1)`.

    Raises:
        ShapeError: The triple has the wrong dimension.

    Returns:
        DeutschJozsaResult: Probability of |0⟩^{⊗n} on the first n qubits
        and the verdict; tables that are neither constant nor balanced
        get `conf.INDETERMINATE`.
    """
    if triple is None:
        triple = standard_qubit_triple(oracle.n + 1)
    circuit = deutsch_jozsa_circuit(oracle)
    state = run_gauge_computation(circuit, initial_state(oracle.n), triple)
    probability = gauge_readout(state, ReadoutSpec.all_zero(oracle.n))

    classification = oracle.classification
    if classification == conf.NEITHER:
        verdict = conf.INDETERMINATE
    elif probability > conf.VERDICT_THRESHOLD:
        verdict = conf.CONSTANT
    else:
        verdict = conf.BALANCED
    logger.debug('oracle %s: probability %r, verdict %s',
                 oracle.label, probability, verdict)
    return DeutschJozsaResult(
        probability=probability,
        verdict=verdict,
        classification=classification,
        gauge_transform_count=len(circuit.gates),
        state=state,
    )
