"""Exact Euler characteristic series of tautological sheaves on Hilbert schemes.

Thin wrappers over the compiled ``_core`` module: structured values cross the
boundary as JSON, so every function here just dumps its arguments and loads
the result.
"""

import json

from . import _core

UsageError = _core.UsageError
InvalidFanError = _core.InvalidFanError
InadmissibleSpecializationError = _core.InadmissibleSpecializationError

__all__ = [
    "combine",
    "predicted_series",
    "predicted_closed_form",
    "hilb_series",
    "check_conjecture",
    "check_degeneration",
    "generators",
    "chi",
    "UsageError",
    "InvalidFanError",
    "InadmissibleSpecializationError",
]


def _dump(x):
    return x if isinstance(x, str) else json.dumps(x)


def combine(a, b, d, order):
    """Run the three combination routes on coefficient lists; returns a dict
    with keys "log", "direct", "strata", "agree"."""
    return json.loads(_core.combine(_dump(a), _dump(b), _dump(d), order))


def predicted_series(surface, K, L, order):
    return json.loads(_core.predicted_series(_dump(surface), _dump(K), _dump(L), order))


def predicted_closed_form(surface, K, L, order):
    return json.loads(_core.predicted_closed_form(_dump(surface), _dump(K), _dump(L), order))


def hilb_series(surface, K, L, order, spec=None):
    a, b = spec if spec is not None else (0, 0)
    return json.loads(_core.hilb_series(_dump(surface), _dump(K), _dump(L), order, a, b))


def check_conjecture(surface, K, L, order):
    return json.loads(_core.check_conjecture(_dump(surface), _dump(K), _dump(L), order))


def check_degeneration(surface, chart, K0, L0, cK, cL, order):
    return json.loads(
        _core.check_degeneration(_dump(surface), chart, _dump(K0), _dump(L0), cK, cL, order)
    )


def generators(n, order=None):
    return json.loads(_core.generators(n, -1 if order is None else order))


def chi(surface, bundle):
    return _core.chi(_dump(surface), _dump(bundle))
