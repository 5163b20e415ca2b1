"""Substitutions, Rauzy fractals and the balanced pair algorithm."""

import json
import os

from ._rauzy import RauzyError, __version__
from . import _rauzy

__all__ = ["RauzyError", "analyze", "reverse", "fractal", "bpa", "verify", "__version__"]


def _text(sub):
    if isinstance(sub, dict):
        return json.dumps(sub)
    if isinstance(sub, os.PathLike) or (isinstance(sub, str) and os.path.isfile(sub)):
        with open(sub, encoding="utf-8") as f:
            return f.read()
    return sub


def analyze(sub, tol=None):
    """Analysis report of a substitution (dict, JSON/text form, or a path)."""
    args = {} if tol is None else {"tol": tol}
    return json.loads(_rauzy.analyze(_text(sub), **args))


def reverse(sub):
    """Reversed substitution in the same text form the CLI writes."""
    return _rauzy.reverse(_text(sub))


def fractal(sub, n=100_000, threads=1, tol=None):
    """Returns (coords, labels, label_names); coords has shape (n, d)."""
    args = {} if tol is None else {"tol": tol}
    return _rauzy.fractal(_text(sub), n, threads, **args)


def bpa(first, second=None, **limits):
    return json.loads(_rauzy.bpa(_text(first), None if second is None else _text(second), **limits))


def verify():
    return [{"id": i, "passed": p, "detail": d} for i, p, d in _rauzy.verify()]
