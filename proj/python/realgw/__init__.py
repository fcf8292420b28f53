"""Exact fixed-locus sums for real genus-one invariants of P^(2m-1).

Rational functions cross the boundary as strings in the variables x, y
(m = 2) or x1..xm; numbers come back as fractions.Fraction.
"""

import json
from fractions import Fraction

from . import _realgw
from ._realgw import ConstraintError, PoleError

__all__ = [
    "ConstraintError",
    "PoleError",
    "classical_sanity",
    "compute",
    "cross_eval_check",
    "evaluate",
    "graphs",
    "normalize",
    "psi_integral",
    "report",
    "sign_flip",
]


def report(m, phi, degree, t=None, format="json", convention="parity", threads=0):
    return _realgw.report(m, phi, degree, t, format, convention, threads)


def compute(m, phi, degree, t=None, convention="parity", threads=0):
    """Parsed JSON report; `total` is a Fraction when weight independent."""
    r = json.loads(report(m, phi, degree, t, "json", convention, threads))
    if r["weight_independent"]:
        r["total"] = Fraction(r["total"])
    return r


def cross_eval_check(m, phi, degree, trials=100, seed=1, convention="parity"):
    passed, _, _ = _realgw.cross_eval_check(m, phi, degree, trials, seed, convention)
    return passed


def sign_flip(m, degree, convention="parity"):
    dependent, total = _realgw.sign_flip(m, degree, convention)
    return {"weight_dependent": dependent, "flipped_total": total}


def graphs(m, degree, phi="eta"):
    return json.loads(_realgw.graphs_json(m, degree, phi))


def psi_integral(exponents):
    return Fraction(_realgw.psi_integral(list(exponents)))


def classical_sanity(m, k):
    return _realgw.classical_sanity(m, k)


def evaluate(m, expr, point):
    return Fraction(_realgw.evaluate(m, expr, [str(Fraction(p)) for p in point]))


def normalize(m, expr):
    return _realgw.normalize(m, expr)
