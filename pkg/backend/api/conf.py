"""
Module with the numeric and command settings of `gaugeqc`.

The values live in a separate file so that tuning a tolerance
cannot accidentally break the main code.
"""

"""
Tolerances.
All of them are relative: the bound is `tol * max(1, ‖A‖_max)`.
"""
# Selfadjointness, unitarity and idempotence of operators
OPERATOR_TOLERANCE = 1e-10

# Unit norm of state vectors
NORM_TOLERANCE = 1e-12

# Two eigenvalues closer than this are treated as one
SCALAR_GAP = 1e-9

# Residual of the canonical form V = |wφ⟩⟨wφ| + wDw† − D
CANONICAL_TOLERANCE = 1e-10

# Reconstruction of V from the witness {(a_j, b_j)}
WITNESS_TOLERANCE = 1e-10

# Imaginary part of ⟨φ|w†Ew|φ⟩ and the clamp band around [0, 1]
PROBABILITY_TOLERANCE = 1e-10

# Selfadjointness of RK4 iterates
ODE_HERMITIAN_TOLERANCE = 1e-8

# Agreement of the RK4 path with the closed form
ODE_AGREEMENT_TOLERANCE = 1e-6

# Reference matrices of the single-qubit worked example
PAPER_TOLERANCE = 1e-12

# Gauge readout against the state-vector oracle
READOUT_TOLERANCE = 1e-10

# Deutsch-Jozsa probabilities against the exact values 0 and 1
DJ_TOLERANCE = 1e-9

"""
Dynamics.
"""
# RK4 steps per unit of time, the default is STEPS_PER_UNIT * max(1, |t|)
RK4_STEPS_PER_UNIT = 1000

"""
Deutsch-Jozsa.
"""
CONSTANT_ZERO = 'constant0'
CONSTANT_ONE = 'constant1'
BALANCED_PARITY = 'balanced-parity'
BALANCED_FIRST_BIT = 'balanced-firstbit'
RANDOM_BALANCED = 'random-balanced'

BUILTIN_ORACLES = (
    CONSTANT_ZERO,
    CONSTANT_ONE,
    BALANCED_PARITY,
    BALANCED_FIRST_BIT,
    RANDOM_BALANCED,
)

# Classification of the truth table
CONSTANT = 'constant'
BALANCED = 'balanced'
NEITHER = 'neither'

# Verdict is `constant` iff the probability exceeds the threshold
VERDICT_THRESHOLD = 0.5
INDETERMINATE = 'indeterminate-input'

"""
Command line.
"""
# Exit codes
EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VALIDATION = 3
EXIT_CHECK = 4

# Name of the builtin Dirac operator, `standard` or `standard:n`
STANDARD_DIRAC = 'standard'

# Check statuses
PASS = 'pass'
FAIL = 'fail'

"""help-texts for commands"""
HELP_STATE = (
    'Initial state: a bit string such as `01` or a JSON file '
    'with a vector of [re, im] pairs.'
)
HELP_DIRAC = (
    f'Dirac operator: `{STANDARD_DIRAC}`, `{STANDARD_DIRAC}:n` '
    'or a JSON file {"dim": N, "dirac": [[[re, im], ...], ...]}.'
)
HELP_ORACLE = (
    'Builtin oracle: ' + ', '.join(BUILTIN_ORACLES) + '.'
)
HELP_WALL_TIME = 'Include wall time in the JSON report.'
