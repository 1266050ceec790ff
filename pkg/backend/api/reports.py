"""Run reports of the commands.

Models:
    Check:
        One numeric comparison with its tolerance.
    RunReport:
        Command echo, inputs and their digest, results, checks.
"""
from dataclasses import dataclass, field

from . import conf
from .services import inputs_digest


@dataclass
class Check:
    """Deviation of one computed quantity from its reference.

    Attributes:
        name(str):
            What was compared, e.g. `G_sigma_y(V_0)`.
        deviation(float):
            Observed max-norm deviation.
        tolerance(float):
            Allowed deviation.
    """
    name: str
    deviation: float
    tolerance: float

    @property
    def passed(self):
        return self.deviation <= self.tolerance

    @property
    def status(self):
        return conf.PASS if self.passed else conf.FAIL


@dataclass
class RunReport:
    """Everything a command reports on standard output.

    `sources` maps every file read for the run to the SHA-256 of its
    text; it enters the inputs digest but is not echoed.
    """
    command: str
    inputs: dict
    sources: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    wall_time: float = None

    @property
    def inputs_digest(self):
        return inputs_digest(self.inputs, self.sources)

    @property
    def max_deviation(self):
        return max((c.deviation for c in self.checks), default=0.0)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def status(self):
        return conf.PASS if self.passed else conf.FAIL

    @property
    def failed(self):
        return [c.name for c in self.checks if not c.passed]

    def check(self, name, deviation, tolerance):
        """Records a check and returns it."""
        check = Check(name, float(deviation), float(tolerance))
        self.checks.append(check)
        return check
