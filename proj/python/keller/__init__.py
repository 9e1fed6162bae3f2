"""Exact analysis of plane polynomial maps F = (P, Q)."""

import json

from . import _keller
from ._keller import DegreeCapExceeded, KellerError, ParseError, absolute_factor_count, dual_graph_dot, jacobian

__all__ = [
    "DegreeCapExceeded",
    "KellerError",
    "ParseError",
    "absolute_factor_count",
    "analyze",
    "dual_graph_dot",
    "jacobian",
    "jelonek",
    "pencil",
    "resolve",
    "run_corpus",
]


def analyze(P, Q, seed=None):
    """Full dossier of F = (P, Q): checks, pencil profile, resolution, non-proper set."""
    return json.loads(_keller.analyze(P, Q, seed))


def pencil(P, Q, samples=50, seed=None):
    return json.loads(_keller.pencil(P, Q, samples, seed))


def resolve(P, Q):
    return json.loads(_keller.resolve(P, Q))


def jelonek(P, Q, seed=None):
    return json.loads(_keller.jelonek(P, Q, seed))


def run_corpus(path, jobs=1, seed=None):
    """Returns (report, summary table)."""
    report, table = _keller.run_corpus(str(path), jobs, seed)
    return json.loads(report), table
