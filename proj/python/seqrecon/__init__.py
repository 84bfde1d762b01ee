"""Deletion balls, extremal intersections and sequence reconstruction.

Structured results are returned as plain dicts with the same shape as the
CLI's JSON output.
"""

import json

from . import _core
from ._core import BudgetExceeded, Error, ball, ball_size, claim_ids, deletion_distance, dq, intersect

__all__ = [
    "BudgetExceeded",
    "Error",
    "ball",
    "ball_size",
    "build_code",
    "claim_ids",
    "decode",
    "deletion_distance",
    "dq",
    "formula",
    "formula_table",
    "intersect",
    "pair",
    "required_channels",
    "search",
    "simulate",
    "verify",
]


def _wrap(fn):
    def call(*args, **kwargs):
        return json.loads(fn(*args, **kwargs))

    call.__name__ = fn.__name__
    call.__doc__ = fn.__doc__
    return call


formula = _wrap(_core.formula)
formula_table = _wrap(_core.formula_table)
search = _wrap(_core.search)
pair = _wrap(_core.pair)
verify = _wrap(_core.verify)
build_code = _wrap(_core.build_code)
required_channels = _wrap(_core.required_channels)
decode = _wrap(_core.decode)
simulate = _wrap(_core.simulate)
