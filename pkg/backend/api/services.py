"""Module of helper functions for the commands.
"""
import hashlib
import json
from pathlib import Path

from django.core.exceptions import ValidationError

from rest_framework.renderers import JSONRenderer

import numpy as np

from geometry.triple import SpectralTriple, standard_qubit_triple
from linalg.exceptions import ShapeError

from . import conf
from .serializers import TripleSerializer, VectorSerializer


def read_json(path, digests=None):
    """Reads a JSON document.

    Args:
        path (str): File to read.
        digests (dict): When given, receives the SHA-256 of the file text
            under the path.

    Raises:
        OSError: The file cannot be read.
        json.JSONDecodeError: The text is not JSON; line and column are
            part of the message.
    """
    text = Path(path).read_text(encoding='utf-8')
    if digests is not None:
        digests[str(path)] = hashlib.sha256(text.encode('utf-8')).hexdigest()
    return json.loads(text)


def render_json(data):
    """Renders data as compact JSON text with a fixed field order."""
    return JSONRenderer().render(data).decode('utf-8')


def inputs_digest(inputs, sources=None):
    """SHA-256 of the canonical JSON of the command inputs
    and of the digests of the files they name.
    """
    canonical = json.dumps(
        {'inputs': inputs, 'sources': sources or {}},
        sort_keys=True, separators=(',', ':'),
    )
    return hashlib.sha256(canonical.encode('utf-8')).hexdigest()


def basis_state(bits):
    """Unit vector |b_0 b_1 …⟩ for a bit string.

    Raises:
        ValidationError: The string is empty or contains other characters.
    """
    if not bits or not set(bits) <= {'0', '1'}:
        raise ValidationError(
            '%(bits)s is not a bit string.',
            code='state', params={'bits': bits},
        )
    vector = np.zeros(2 ** len(bits), dtype=complex)
    vector[int(bits, 2)] = 1
    return vector


def parse_state(value, n, default=None, digests=None):
    """Initial state from a `--state` option.

    Args:
        value (str or None):
            Bit string, path to a JSON vector, or None for the default.
        n (int):
            Number of qubits the state must have.
        default (array_like):
            Used when value is None. By default - |0…0⟩.
        digests (dict): Passed to `read_json`.

    Raises:
        ShapeError: The state does not have 2^n entries.

    Returns:
        numpy.ndarray: The state vector, not yet checked for unit norm.
    """
    if value is None:
        vector = basis_state('0' * n) if default is None else default
    elif set(value) <= {'0', '1'}:
        vector = basis_state(value)
    else:
        serializer = VectorSerializer(
            data={'vector': read_json(value, digests)}
        )
        serializer.is_valid(raise_exception=True)
        vector = serializer.validated_data['vector']
    if len(vector) != 2 ** n:
        raise ShapeError(
            'State of dimension %(got)s for %(n)s qubits.',
            params={'got': len(vector), 'n': n},
        )
    return np.asarray(vector, dtype=complex)


def parse_dirac(value, n, digests=None):
    """Spectral triple from a `--dirac` option.

    Args:
        value (str or None):
            `standard`, `standard:k`, a path to a triple file,
            or None for `standard`.
        n (int):
            Number of qubits the triple must cover.
        digests (dict):
            Passed to `read_json`.

    Raises:
        ShapeError: The triple does not have dimension 2^n.

    Returns:
        SpectralTriple: The triple.
    """
    value = value or conf.STANDARD_DIRAC
    if value == conf.STANDARD_DIRAC:
        triple = standard_qubit_triple(n)
    elif value.startswith(conf.STANDARD_DIRAC + ':'):
        width = value.split(':', 1)[1]
        if not width.isdecimal():
            raise ValidationError(
                '%(value)s: qubit count must be a number.',
                code='dirac', params={'value': value},
            )
        triple = standard_qubit_triple(int(width))
    else:
        serializer = TripleSerializer(data=read_json(value, digests))
        serializer.is_valid(raise_exception=True)
        triple = SpectralTriple(serializer.validated_data['dirac'])
    triple.check_dim(2 ** n)
    return triple
