"""Exact verification and semisimple decomposition of linked nets.

Nets are passed as JSON text in the same format the command-line tool reads
and writes, or as already-decoded dicts.
"""

import json

from . import _linkednets as _core
from ._linkednets import (
    DecompositionPreconditions,
    Error,
    InconsistentPresentation,
    InvalidInput,
    PreconditionFailed,
    WindowInsufficient,
    delta,
    hull,
    normalize,
)

__all__ = [
    "DecompositionPreconditions",
    "Error",
    "InconsistentPresentation",
    "InvalidInput",
    "PreconditionFailed",
    "WindowInsufficient",
    "check_intersection",
    "decompose",
    "delta",
    "example_nonsemisimple",
    "generate",
    "hull",
    "intersection_at",
    "normalize",
    "validate",
]


def _text(net):
    return net if isinstance(net, str) else json.dumps(net)


def validate(net):
    return json.loads(_core.validate(_text(net)))


def intersection_at(net, vertex, allow_large_n=False):
    return json.loads(_core.intersection_at(_text(net), list(vertex), allow_large_n))


def check_intersection(net, mode="generators", allow_large_n=False):
    return json.loads(_core.check_intersection(_text(net), mode, allow_large_n))


def decompose(net, whole_window_fallback=False, allow_large_n=False):
    return json.loads(_core.decompose(_text(net), whole_window_fallback, allow_large_n))


def generate(spec):
    """Random semisimple net from a generator spec (dict or JSON text)."""
    return json.loads(_core.generate(_text(spec)))


def example_nonsemisimple():
    return json.loads(_core.example_nonsemisimple())
