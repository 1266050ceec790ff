"""Runs Deutsch-Jozsa as three gauge transforms."""
from api import conf
from api.mixins import ReportCommandMixin
from api.serializers import OracleSerializer
from api.services import parse_dirac, read_json

from django.conf import settings
from django.core.management.base import BaseCommand

import numpy as np

from circuits.circuit import ReadoutSpec
from circuits.deutsch_jozsa import (OracleSpec, deutsch_jozsa,
                                    deutsch_jozsa_circuit, initial_state)
from circuits.oracle import statevector_oracle
from geometry.triple import SpectralTriple
from linalg.random import random_hermitian

RANDOM_DIRAC = 'random'


def expected_probability(oracle):
    """|2^{-n} Σ_x (−1)^{f(x)}|², the weight of |0⟩^{⊗n}."""
    signs = (-1.0) ** np.asarray(oracle.table)
    return float(signs.mean() ** 2)


class Command(ReportCommandMixin, BaseCommand):
    help = 'Decides constant or balanced for an oracle f.'
    input_options = (
        'n', 'oracle', 'oracle_file', 'dirac', 'compare_dirac', 'seed',
    )

    def add_command_arguments(self, parser):
        parser.add_argument(
            '--n', type=int, default=3, help='Input bit width of f.'
        )
        source = parser.add_mutually_exclusive_group()
        source.add_argument(
            '--oracle', default=conf.BALANCED_PARITY, help=conf.HELP_ORACLE
        )
        source.add_argument(
            '--oracle-file', help='Oracle JSON file {"n": k, "table": [...]}.'
        )
        parser.add_argument('--dirac', help=conf.HELP_DIRAC)
        parser.add_argument(
            '--compare-dirac',
            help='Second Dirac operator: `random` or a triple file.',
        )
        parser.add_argument(
            '--seed', type=int,
            help='Seed of the random choices. By default - GAUGEQC_SEED.',
        )

    def get_oracle(self, n, oracle, oracle_file, rng, sources):
        if oracle_file is None:
            return OracleSpec.builtin(oracle, n, rng)
        serializer = OracleSerializer(data=read_json(oracle_file, sources))
        serializer.is_valid(raise_exception=True)
        return serializer.save()

    def get_compare_triple(self, value, n, rng, sources):
        if value == RANDOM_DIRAC:
            return SpectralTriple(random_hermitian(rng, 2 ** (n + 1)))
        return parse_dirac(value, n + 1, sources)

    def build_report(self, report, n=3, oracle=conf.BALANCED_PARITY,
                     oracle_file=None, dirac=None, compare_dirac=None,
                     seed=None, **options):
        if seed is None:
            seed = settings.GAUGEQC_SEED
            report.inputs['seed'] = seed
        rng = np.random.default_rng(seed)
        spec = self.get_oracle(n, oracle, oracle_file, rng, report.sources)
        triple = parse_dirac(dirac, spec.n + 1, report.sources)

        result = deutsch_jozsa(spec, triple)
        reference = statevector_oracle(
            deutsch_jozsa_circuit(spec),
            initial_state(spec.n),
            ReadoutSpec.all_zero(spec.n),
        )
        report.check(
            'oracle agreement',
            abs(result.probability - reference),
            conf.READOUT_TOLERANCE,
        )
        report.check(
            'expected probability',
            abs(result.probability - expected_probability(spec)),
            conf.DJ_TOLERANCE,
        )
        report.results = {
            'n': spec.n,
            'oracle': spec.label,
            'probability': result.probability,
            'verdict': result.verdict,
            'gauge_transform_count': result.gauge_transform_count,
            'classification': result.classification,
            'table': list(spec.table),
            'oracle_probability': reference,
        }
        if compare_dirac is not None:
            other = deutsch_jozsa(spec, self.get_compare_triple(
                compare_dirac, spec.n, rng, report.sources
            ))
            report.check(
                'dirac independence',
                abs(result.probability - other.probability),
                conf.READOUT_TOLERANCE,
            )
            report.results['compare_probability'] = other.probability
