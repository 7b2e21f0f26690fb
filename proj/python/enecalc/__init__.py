"""Exact ene-product calculator.

Everything crosses from the C++ core as JSON; these wrappers decode it into
plain dicts and lists. Exact scalars arrive as strings ("3/4", {"re", "im"}),
never floats.
"""

import json

from enecalc._core import EneError, EneParseError, __version__
from enecalc import _core

ParseError = EneParseError


def evaluate(text, order=16):
    """Evaluate an expression. Returns a dict with a "kind" discriminant:
    rational, series, transalgebraic, or symbol."""
    return json.loads(_core.eval_json(text, order))


def series(text, order=16):
    """Laurent expansion at 0 through the given order."""
    return json.loads(_core.series_json(text, order))


def ene(left, right, order=16):
    """Ene product of two expressions."""
    return json.loads(_core.ene_json(left, right, order))


def render(text):
    """Parse and re-render an expression in canonical spacing."""
    return _core.render(text)


def euler_table(max_k, as_text=False):
    """Euler numerator rows 1..max_k, as a dict (or the aligned text table)."""
    if as_text:
        return _core.euler_table_text(max_k)
    return json.loads(_core.euler_table_json(max_k))


def verify(suite, order=12, max_k=12, trials=100, seed=20260817):
    """Run one self-check suite (ring, euler, generators, polylog, bridge,
    limits). Deterministic for a fixed seed."""
    return json.loads(_core.verify_json(suite, order, max_k, trials, seed))


def limit(text, k_min=8, k_max=256, grid="circle:0,0,0.5,64", exclusion=0.1):
    """Convergence study of the Euler-style approximants of a transalgebraic
    function over a sample grid."""
    return json.loads(_core.limit_json(text, k_min, k_max, grid, exclusion))


def collapse(text, k):
    """Divisor collapse witnesses of the k-th approximant."""
    return json.loads(_core.collapse_json(text, k))


__all__ = [
    "EneError",
    "EneParseError",
    "ParseError",
    "__version__",
    "collapse",
    "ene",
    "euler_table",
    "evaluate",
    "limit",
    "render",
    "series",
    "verify",
]
