"""Exact structure theory for Lie s-algebras.

Thin dict-level wrappers over the C++ core: every operation takes and
returns plain JSON-compatible dictionaries. See the project README for the
schemas; the ``run`` escape hatch executes any CLI invocation in-process.
"""

import json as _json

from . import _core
from ._core import DomainError, SchemaError

__all__ = [
    "DomainError",
    "SchemaError",
    "canonicalize",
    "construct",
    "decide",
    "h_of_module",
    "invariant_forms",
    "iso_test",
    "jacobi",
    "levi_verify",
    "minimal_check",
    "run",
    "semidirect",
]


def _loads(text):
    return _json.loads(text)


def run(args):
    """Run a CLI invocation in-process; returns (exit_code, parsed_output)."""
    code, out = _core.run(list(args))
    return code, _loads(out)


def jacobi(algebra):
    return _loads(_core.jacobi(_json.dumps(algebra)))


def decide(question, algebra, levi=None, witness_bound=2):
    return _loads(
        _core.decide(
            question,
            _json.dumps(algebra),
            "" if levi is None else _json.dumps(levi),
            witness_bound,
        )
    )


def levi_verify(algebra, levi=None):
    return _loads(
        _core.levi_verify(_json.dumps(algebra), "" if levi is None else _json.dumps(levi))
    )


def minimal_check(salgebra):
    return _loads(_core.minimal_check(_json.dumps(salgebra)))


def canonicalize(salgebra):
    return _loads(_core.canonicalize(_json.dumps(salgebra)))


def iso_test(left, right):
    return _loads(_core.iso_test(_json.dumps(left), _json.dumps(right)))


def invariant_forms(rep, form_class="all"):
    return _loads(_core.invariant_forms(_json.dumps(rep), form_class))


def construct(name, n=1, i=3, dim=3, t=0):
    return _loads(_core.construct(name, n, i, dim, t))


def h_of_module(rep, z=None):
    return _loads(_core.h_of_module(_json.dumps(rep), "" if z is None else _json.dumps(z)))


def semidirect(salgebra):
    return _loads(_core.semidirect(_json.dumps(salgebra)))
