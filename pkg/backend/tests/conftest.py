import json
from collections import namedtuple
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError

import numpy as np

import pytest

from circuits.circuit import QuantumCircuit
from circuits.gates import NAMED_GATES, GateSpec, arity
from geometry.triple import qubit_triple
from linalg.random import random_unitary

CommandResult = namedtuple('CommandResult', 'code report message output')


@pytest.fixture
def rng():
    return np.random.default_rng(20240101)


@pytest.fixture
def qubit():
    return qubit_triple()


@pytest.fixture
def write_json(tmp_path):
    """Writes a JSON document into the test directory, returns its path."""
    def write(name, data):
        path = tmp_path / name
        if isinstance(data, str):
            path.write_text(data, encoding='utf-8')
        else:
            path.write_text(json.dumps(data), encoding='utf-8')
        return str(path)
    return write


@pytest.fixture
def run_command():
    """Runs a management command and returns its exit code, the parsed
    JSON report (None when nothing was written), the message and the raw
    standard output.
    """
    def run(name, *args, **options):
        stdout, stderr = StringIO(), StringIO()
        try:
            call_command(name, *args, stdout=stdout, stderr=stderr,
                         **options)
        except CommandError as error:
            code, message = error.returncode, str(error)
        else:
            code, message = 0, stderr.getvalue()
        text = stdout.getvalue()
        return CommandResult(code, json.loads(text) if text else None,
                             message, text)
    return run


def make_random_circuit(rng, n, depth):
    """Mix of named gates and random 1- and 2-qubit unitaries."""
    names = [
        name for name, matrix in NAMED_GATES.items() if arity(matrix) <= n
    ]
    gates = []
    for _ in range(depth):
        if rng.random() < 0.5:
            name = names[rng.integers(len(names))]
            k = arity(NAMED_GATES[name])
            targets = rng.choice(n, size=k, replace=False)
            gates.append(GateSpec(targets=tuple(targets), name=name))
        else:
            k = int(rng.integers(1, min(n, 2) + 1))
            targets = rng.choice(n, size=k, replace=False)
            gates.append(GateSpec(
                targets=tuple(targets),
                matrix=random_unitary(rng, 2 ** k),
            ))
    return QuantumCircuit(n=n, gates=tuple(gates))


@pytest.fixture
def random_circuit():
    return make_random_circuit
