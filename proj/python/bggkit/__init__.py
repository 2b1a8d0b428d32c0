"""Graded BGG reciprocity for Drinfeld doubles of finite groups."""

import json

from ._bggkit import (
    InconsistencyError,
    InputError,
    OracleError,
    ResourceError,
    fusion,
    ind,
    taft,
    tensor,
    weights,
)
from ._bggkit import bgg_report as _bgg_report

__all__ = [
    "InconsistencyError",
    "InputError",
    "OracleError",
    "ResourceError",
    "bgg",
    "fusion",
    "ind",
    "taft",
    "tensor",
    "weights",
]


def bgg(profile, simples=None, decomposition=None, aliases=None, ungraded=False):
    """BGG report as a dict, in the same layout as report.json."""
    return json.loads(_bgg_report(str(profile), _path(simples), _path(decomposition), _path(aliases), ungraded))


def _path(p):
    return None if p is None else str(p)
