"""Exact Waldschmidt constants of planar point configurations."""

import json
from fractions import Fraction

from ._core import InternalError, WaldError
from . import _core

__all__ = [
    "InternalError",
    "WaldError",
    "alpha",
    "classify",
    "fixture",
    "fixture_names",
    "lower_bound",
    "sweep",
    "to_fraction",
    "verify_upper",
]


def _points(points):
    if isinstance(points, dict):
        points = points["points"]
    return json.dumps({"points": [[str(int(c)) for c in p] for p in points]})


def to_fraction(text):
    return Fraction(text)


def classify(points, m_max=8, sweep_intervals=True, aux_cap=40):
    return json.loads(_core.classify_json(_points(points), m_max, sweep_intervals, aux_cap))


def alpha(points, m):
    return json.loads(_core.alpha_json(_points(points), m))


def sweep(points, m_max=8):
    return json.loads(_core.sweep_json(_points(points), m_max))


def lower_bound(points, aux=None, grouped=False, aux_cap=40):
    aux_text = None if aux is None else json.dumps(aux)
    return json.loads(_core.lower_json(_points(points), aux_text, grouped, aux_cap))


def verify_upper(points, divisor):
    return Fraction(json.loads(_core.upper_json(_points(points), json.dumps(divisor))))


def fixture(name):
    return json.loads(_core.fixture_json(name))


def fixture_names():
    return list(_core.fixture_names())
