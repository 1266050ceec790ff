"""Evolves a gauge state under a Hamiltonian, in closed form and by RK4."""
from api import conf
from api.codec import encode_matrix
from api.mixins import ReportCommandMixin
from api.serializers import HamiltonianSerializer
from api.services import parse_dirac, parse_state, read_json

from django.core.management.base import BaseCommand

from gauge.dynamics import default_steps, evolve_closed, evolve_ode
from gauge.states import encode_state
from linalg.exceptions import ShapeError
from linalg.norms import max_norm


def qubit_count(dim):
    """n with 2^n = dim.

    Raises:
        ShapeError: dim is not a power of two.
    """
    n = dim.bit_length() - 1
    if 2 ** n != dim:
        raise ShapeError(
            'Hamiltonian dimension %(dim)s is not a power of two.',
            params={'dim': dim},
        )
    return n


class Command(ReportCommandMixin, BaseCommand):
    help = 'Compares e^{itH} transport with the RK4 solution of dV/dt.'
    input_options = ('hamiltonian', 't', 'steps', 'state', 'dirac')

    def add_command_arguments(self, parser):
        parser.add_argument(
            'hamiltonian',
            help='Hamiltonian JSON file: a matrix or {"matrix": ...}.',
        )
        parser.add_argument('--t', type=float, default=1.0)
        parser.add_argument(
            '--steps', type=int,
            help='RK4 steps. By default - '
                 f'{conf.RK4_STEPS_PER_UNIT} per unit of time.',
        )
        parser.add_argument('--state', help=conf.HELP_STATE)
        parser.add_argument('--dirac', help=conf.HELP_DIRAC)

    def build_report(self, report, hamiltonian, t=1.0, steps=None,
                     state=None, dirac=None, **options):
        document = read_json(hamiltonian, report.sources)
        if not isinstance(document, dict):
            document = {'matrix': document}
        serializer = HamiltonianSerializer(data=document)
        serializer.is_valid(raise_exception=True)
        hamiltonian = serializer.save()

        n = qubit_count(hamiltonian.dim)
        triple = parse_dirac(dirac, n, report.sources)
        initial = encode_state(
            parse_state(state, n, digests=report.sources), triple
        )

        closed = evolve_closed(initial, hamiltonian, t).value.matrix
        solved = evolve_ode(initial, hamiltonian, t, steps).matrix
        halves = evolve_closed(
            evolve_closed(initial, hamiltonian, t / 2), hamiltonian, t / 2
        ).value.matrix
        gap = max_norm(closed - solved)

        report.check('ode agreement', gap, conf.ODE_AGREEMENT_TOLERANCE)
        report.check(
            'group law at t/2',
            max_norm(closed - halves),
            conf.CANONICAL_TOLERANCE,
        )
        report.results = {
            't': t,
            'steps': steps if steps is not None else default_steps(t),
            'closed_form': encode_matrix(closed),
            'rk4': encode_matrix(solved),
            'gap': gap,
        }
