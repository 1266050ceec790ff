"""Runs a circuit file as a gauge computation and on the state-vector
reference, and compares the readouts.
"""
from api import conf
from api.mixins import ReportCommandMixin
from api.serializers import CircuitSerializer, GaugeStateSerializer
from api.services import parse_dirac, parse_state, read_json

from django.core.management.base import BaseCommand

from circuits.circuit import (compile_circuit, gauge_readout,
                              run_gauge_computation)
from circuits.oracle import statevector_oracle
from gauge.states import projector
from linalg.norms import dagger, max_norm, relative_bound


class Command(ReportCommandMixin, BaseCommand):
    help = 'Runs a circuit file in the gauge model and checks it.'
    input_options = ('circuit', 'state', 'dirac')

    def add_command_arguments(self, parser):
        parser.add_argument('circuit', help='Circuit JSON file.')
        parser.add_argument('--state', help=conf.HELP_STATE)
        parser.add_argument('--dirac', help=conf.HELP_DIRAC)

    def build_report(self, report, circuit, state=None, dirac=None,
                     **options):
        serializer = CircuitSerializer(
            data=read_json(circuit, report.sources)
        )
        serializer.is_valid(raise_exception=True)
        circuit, readout = serializer.save()
        psi = parse_state(state, circuit.n, digests=report.sources)
        triple = parse_dirac(dirac, circuit.n, report.sources)

        final = run_gauge_computation(circuit, psi, triple)
        gauge_probability = gauge_readout(final, readout)
        oracle_probability = statevector_oracle(circuit, psi, readout)
        gap = abs(gauge_probability - oracle_probability)

        gamma = compile_circuit(circuit).matrix
        expected = (
            projector(gamma @ psi)
            + gamma @ triple.D @ dagger(gamma)
            - triple.D
        )
        report.check('readout gap', gap, conf.READOUT_TOLERANCE)
        report.check(
            'final value',
            max_norm(final.value.matrix - expected),
            relative_bound(expected, conf.CANONICAL_TOLERANCE),
        )
        report.results = {
            'qubits': circuit.n,
            'gauge_transform_count': len(circuit.gates),
            'readout': {
                'qubits': list(readout.qubits),
                'bits': list(readout.bits),
            },
            'gauge_probability': gauge_probability,
            'oracle_probability': oracle_probability,
            'gap': gap,
            'final_state': GaugeStateSerializer(final).data,
        }
