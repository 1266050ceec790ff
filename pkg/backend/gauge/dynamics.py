"""Time evolution of gauge states under a Hamiltonian.

Two paths are provided: the closed form V_t = G_{u_t}(V) with
u_t = e^{itH}, and direct RK4 integration of

    i dV/dt = [V, H] + [D, H].

The second one is the verification path and yields a bare matrix.
"""
import logging
import math
from dataclasses import dataclass

from api import conf

from django.core.exceptions import ValidationError

from linalg.kernel import commutator, expm_unitary
from linalg.operators import HermitianOperator
from linalg.validators import HermitianValidator

from .states import gauge_transform

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Hamiltonian:
    """Time-independent Hamiltonian.

    Attributes:
        matrix(HermitianOperator):
            Selfadjoint H.
    """
    matrix: HermitianOperator

    def __post_init__(self):
        if not isinstance(self.matrix, HermitianOperator):
            object.__setattr__(self, 'matrix', HermitianOperator(self.matrix))

    @property
    def dim(self):
        return self.matrix.dim

    def propagator(self, t):
        """u_t = e^{itH}."""
        return expm_unitary(self.matrix, t)


def _as_hamiltonian(hamiltonian):
    if isinstance(hamiltonian, Hamiltonian):
        return hamiltonian
    return Hamiltonian(hamiltonian)


def default_steps(t):
    return int(math.ceil(conf.RK4_STEPS_PER_UNIT * max(1.0, abs(t))))


def evolve_closed(state, hamiltonian, t):
    """V_t = G_{u_t}(V) with u_t = e^{itH}; provenance follows u_t."""
    hamiltonian = _as_hamiltonian(hamiltonian)
    state.triple.check_dim(hamiltonian.dim)
    return gauge_transform(state, hamiltonian.propagator(t))


def evolve_ode(state, hamiltonian, t, steps=None):
    """Integrates dV/dt = −i([V, H] + [D, H]) with classical RK4.

    Args:
        state (GaugeState): Initial gauge state V₀.
        hamiltonian (Hamiltonian or array_like): Selfadjoint H.
        t (float): Final time.
        steps (int): Number of fixed steps of size t/steps.
            By default - `conf.RK4_STEPS_PER_UNIT * max(1, |t|)`.

    Raises:
        ValidationError: `steps` is not positive or `t` is not finite.
        ShapeError: Dimension of H does not match the triple.

    Returns:
        HermitianOperator: V_t, without provenance.
    """
    hamiltonian = _as_hamiltonian(hamiltonian)
    state.triple.check_dim(hamiltonian.dim)
    if not math.isfinite(t):
        raise ValidationError('Time must be finite.', code='not_finite')
    steps = default_steps(t) if steps is None else int(steps)
    if steps < 1:
        raise ValidationError(
            'Number of steps must be positive, got %(steps)s.',
            code='steps', params={'steps': steps},
        )

    if t == 0:
        return state.value

    h = hamiltonian.matrix.matrix
    drift = commutator(state.triple.D, h)

    def rhs(v):
        return -1j * (v @ h - h @ v + drift)

    dt = t / steps
    v = state.value.matrix
    logger.debug('RK4 with %s steps of %.3e', steps, dt)
    for _ in range(steps):
        k1 = rhs(v)
        k2 = rhs(v + dt / 2 * k1)
        k3 = rhs(v + dt / 2 * k2)
        k4 = rhs(v + dt * k3)
        v = v + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4)

    HermitianValidator(tolerance=conf.ODE_HERMITIAN_TOLERANCE)(v)
    return HermitianOperator((v + v.conj().T) / 2)
