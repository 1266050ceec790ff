"""Serializers for the file formats and the run report.

Input serializers only check the JSON layout; the numeric invariants
(unitarity, selfadjointness, ranges) are checked by the domain types
their `create` builds, so they surface as domain validation errors.
"""
import numpy as np

from rest_framework.serializers import (CharField, ChoiceField, Field,
                                        FloatField, IntegerField, JSONField,
                                        ListField, Serializer, ValidationError)

from circuits.circuit import QuantumCircuit, ReadoutSpec
from circuits.deutsch_jozsa import OracleSpec
from circuits.gates import NAMED_GATES, GateSpec
from gauge.dynamics import Hamiltonian
from gauge.states import GaugeState

from .codec import encode_matrix, encode_vector


def _to_complex(pair):
    if (
        not isinstance(pair, (list, tuple))
        or len(pair) != 2
        or not all(
            isinstance(p, (int, float)) and not isinstance(p, bool)
            for p in pair
        )
    ):
        raise ValidationError(f'{pair!r} is not a [re, im] pair.')
    return complex(pair[0], pair[1])


class VectorField(Field):
    """Vector as a list of [re, im] pairs."""

    def to_internal_value(self, data):
        if not isinstance(data, list) or not data:
            raise ValidationError('Expected a non-empty list of [re, im].')
        return np.array([_to_complex(p) for p in data], dtype=complex)

    def to_representation(self, value):
        return encode_vector(value)


class MatrixField(Field):
    """Matrix as row-major nested lists of [re, im] pairs."""

    def to_internal_value(self, data):
        if not isinstance(data, list) or not data:
            raise ValidationError('Expected a non-empty list of rows.')
        rows = []
        for index, row in enumerate(data):
            if not isinstance(row, list):
                raise ValidationError(f'Row {index} is not a list.')
            rows.append([_to_complex(p) for p in row])
        if len({len(row) for row in rows}) != 1:
            raise ValidationError('Rows have different lengths.')
        return np.array(rows, dtype=complex)

    def to_representation(self, value):
        return encode_matrix(value)


class VectorSerializer(Serializer):
    """State vector file: a list of [re, im] pairs."""
    vector = VectorField()


class TripleSerializer(Serializer):
    """Spectral triple file {"dim": N, "dirac": matrix}."""
    dim = IntegerField(min_value=1)
    dirac = MatrixField()

    def validate(self, data):
        """Checks that D is N×N.

        Raises:
            ValidationError: Shape of `dirac` differs from `dim`.
        """
        if data['dirac'].shape != (data['dim'], data['dim']):
            raise ValidationError({
                'dirac': f'Expected {data["dim"]}×{data["dim"]}, '
                         f'got {data["dirac"].shape}.'
            })
        return data


class GateSerializer(Serializer):
    """One gate: {"name": ..., "targets": [...]} or {"matrix": ...}."""
    name = CharField(required=False)
    matrix = MatrixField(required=False)
    targets = ListField(child=IntegerField(min_value=0), min_length=1)

    def validate_name(self, name):
        """Rejects unknown names with the list of supported ones."""
        if name not in NAMED_GATES:
            raise ValidationError(
                f'Unknown gate {name}, supported: {", ".join(NAMED_GATES)}.'
            )
        return name

    def validate(self, data):
        if ('name' in data) == ('matrix' in data):
            raise ValidationError(
                'A gate needs exactly one of `name` and `matrix`.'
            )
        return data


class ReadoutSerializer(Serializer):
    qubits = ListField(child=IntegerField(min_value=0))
    bits = ListField(child=ChoiceField(choices=(0, 1)))


class CircuitSerializer(Serializer):
    """Circuit file.

    Example:
        {"qubits": 2,
         "gates": [{"name": "H", "targets": [0]},
                   {"name": "CNOT", "targets": [0, 1]}],
         "readout": {"qubits": [0], "bits": [1]}}

    Without `readout` the first qubit is read for |1⟩.
    """
    qubits = IntegerField(min_value=1)
    gates = GateSerializer(many=True)
    readout = ReadoutSerializer(required=False)

    def create(self, validated_data):
        """Builds the circuit and its readout.

        Returns:
            tuple: QuantumCircuit and ReadoutSpec.
        """
        circuit = QuantumCircuit(
            n=validated_data['qubits'],
            gates=tuple(GateSpec(**gate) for gate in validated_data['gates']),
        )
        readout = validated_data.get('readout')
        if readout is None:
            readout = ReadoutSpec.first_qubit_one()
        else:
            readout = ReadoutSpec(**readout)
            readout.check_range(circuit.n)
        return circuit, readout


class OracleSerializer(Serializer):
    """Oracle file {"n": k, "table": [0, 1, ...]}."""
    n = IntegerField(min_value=1)
    table = ListField(child=ChoiceField(choices=(0, 1)))

    def create(self, validated_data):
        return OracleSpec(**validated_data)


class HamiltonianSerializer(Serializer):
    """Hamiltonian file, {"matrix": matrix}."""
    matrix = MatrixField()

    def create(self, validated_data):
        return Hamiltonian(validated_data['matrix'])


class GaugeStateSerializer(Serializer):
    """Export form of a gauge state.

    Import needs the ambient triple in `context['triple']`; the built
    state re-validates every invariant.
    """
    value = MatrixField(source='value.matrix')
    base_state = VectorField()
    cum_unitary = MatrixField(source='cum_unitary.matrix')

    def create(self, validated_data):
        return GaugeState(
            triple=self.context['triple'],
            value=validated_data['value']['matrix'],
            base_state=validated_data['base_state'],
            cum_unitary=validated_data['cum_unitary']['matrix'],
        )


class CheckSerializer(Serializer):
    """One numeric check of a report."""
    name = CharField()
    deviation = FloatField()
    tolerance = FloatField()
    status = CharField()


class RunReportSerializer(Serializer):
    """Report of one command run, fields in fixed order."""
    command = CharField()
    inputs = JSONField()
    inputs_digest = CharField()
    results = JSONField()
    checks = CheckSerializer(many=True)
    max_deviation = FloatField()
    status = CharField()

    def to_representation(self, instance):
        data = super().to_representation(instance)
        if instance.wall_time is not None:
            data['wall_time'] = instance.wall_time
        return data
