"""Recomputes the qubit example: D = σ_x on ℂ²."""
from api import conf
from api.codec import encode_matrix
from api.mixins import ReportCommandMixin

from django.core.management.base import BaseCommand

import numpy as np

from gauge.states import encode_state, gauge_transform, measure_probability
from geometry.triple import SpectralTriple
from linalg.kernel import SIGMA_X, SIGMA_Y, SIGMA_Z
from linalg.norms import max_norm

# The six displayed matrices of the qubit example
PAPER_MATRICES = {
    'V_0': [[1, 0], [0, 0]],
    'G_sigma_x(V_0)': [[0, 0], [0, 1]],
    'G_sigma_y(V_0)': [[0, -2], [-2, 1]],
    'G_sigma_z(V_0)': [[1, -2], [-2, 0]],
    'V_1': [[0, 0], [0, 1]],
    'G_sigma_y(V_1)': [[1, -2], [-2, 0]],
}


class Command(ReportCommandMixin, BaseCommand):
    help = (
        'Recomputes the six qubit-example matrices and the two '
        'preparations of [[1, -2], [-2, 0]].'
    )
    input_options = ('perturb',)

    def add_command_arguments(self, parser):
        parser.add_argument(
            '--perturb', type=float, default=0.0,
            help='Adds PERTURB * sigma_z to D (negative control).',
        )

    def build_report(self, report, perturb=0.0, **options):
        triple = SpectralTriple(SIGMA_X + perturb * SIGMA_Z)
        zero = encode_state([1, 0], triple)
        one = encode_state([0, 1], triple)
        states = {
            'V_0': zero,
            'G_sigma_x(V_0)': gauge_transform(zero, SIGMA_X),
            'G_sigma_y(V_0)': gauge_transform(zero, SIGMA_Y),
            'G_sigma_z(V_0)': gauge_transform(zero, SIGMA_Z),
            'V_1': one,
            'G_sigma_y(V_1)': gauge_transform(one, SIGMA_Y),
        }

        matrices = {}
        for name, state in states.items():
            value = state.value.matrix
            matrices[name] = encode_matrix(value)
            report.check(
                name,
                max_norm(value - np.array(PAPER_MATRICES[name])),
                conf.PAPER_TOLERANCE,
            )

        first = states['G_sigma_z(V_0)']
        second = states['G_sigma_y(V_1)']
        report.check(
            'G_sigma_y(V_1) = G_sigma_z(V_0)',
            max_norm(first.value.matrix - second.value.matrix),
            conf.PAPER_TOLERANCE,
        )
        probabilities = {}
        for bit, event in (('0', [[1, 0], [0, 0]]), ('1', [[0, 0], [0, 1]])):
            p_first = measure_probability(first, event)
            p_second = measure_probability(second, event)
            probabilities[bit] = [p_first, p_second]
            report.check(
                f'P({bit}) of both preparations',
                abs(p_first - p_second),
                conf.PAPER_TOLERANCE,
            )
        for name in ('V_0', 'V_1'):
            connection = states[name].connection
            report.check(
                f'witness of {name}',
                max_norm(
                    connection.value.matrix - connection.reconstruct(triple)
                ),
                conf.WITNESS_TOLERANCE,
            )

        report.results = {
            'dirac': encode_matrix(triple.D),
            'matrices': matrices,
            'preparation_probabilities': probabilities,
        }
