"""Vector-valued Jack polynomials: exact construction with torus wavefunctions.

Exact results come back as dictionaries with rationals encoded as "p/q"
strings (the same documents the command line tool prints). Numeric results
are NumPy arrays.
"""

import json
from fractions import Fraction

import numpy as np

from . import _vvjack
from ._vvjack import (
    InadmissibleKappa,
    InvalidArgument,
    InvalidShape,
    NumericError,
    RegularityError,
    VVJackError,
)

__all__ = [
    "tableaux",
    "nsjp",
    "norm",
    "jack",
    "minimal_jack",
    "count",
    "verify",
    "wave_check",
    "integrate_L",
    "density",
    "rational",
    "VVJackError",
    "InvalidShape",
    "InvalidArgument",
    "InadmissibleKappa",
    "RegularityError",
    "NumericError",
]


def _ints(seq):
    if isinstance(seq, str):
        return [int(p) for p in seq.split(",")]
    return [int(p) for p in seq]


def _kappa(k):
    # str() of a float is its shortest round-trip decimal, which parses exactly.
    return str(k)


def _tableau(t):
    if t is None:
        return None
    if isinstance(t, int):
        return f"T{t}"
    if isinstance(t, (list, tuple)):
        return ",".join(str(c) for c in t)
    return str(t)


def rational(text):
    """Convert a "p/q" string from a report into a Fraction."""
    return Fraction(text)


def tableaux(tau):
    return json.loads(_vvjack.tableaux(_ints(tau)))


def nsjp(tau, alpha, kappa, tableau=0, schedule="leftmost", force_kappa=False, degree_bound=8):
    return json.loads(_vvjack.nsjp(_ints(tau), _ints(alpha), _kappa(kappa), _tableau(tableau), schedule,
                                   force_kappa, degree_bound))


def norm(tau, alpha, kappa, tableau=0, force_kappa=False, degree_bound=8):
    return json.loads(_vvjack.norm(_ints(tau), _ints(alpha), _kappa(kappa), _tableau(tableau), force_kappa,
                                   degree_bound))


def jack(tau, lam, kappa, tableau=None, shift=0, force_kappa=False, degree_bound=8):
    """One symmetric polynomial when tableau is given, else every one with label lam."""
    return json.loads(_vvjack.jack(_ints(tau), _ints(lam), _kappa(kappa), _tableau(tableau), shift, force_kappa,
                                   degree_bound))


def minimal_jack(tau, kappa, force_kappa=False, degree_bound=8):
    return json.loads(_vvjack.minimal_jack(_ints(tau), _kappa(kappa), force_kappa, degree_bound))


def count(tau, max_degree, restrict=False, kappa=None):
    return json.loads(_vvjack.count(_ints(tau), max_degree, restrict, None if kappa is None else _kappa(kappa)))


def verify(tau, kappa, max_degree=4, samples=20, seed=1, force_kappa=False, degree_bound=8):
    return json.loads(_vvjack.verify(_ints(tau), _kappa(kappa), max_degree, samples, seed, force_kappa, degree_bound))


def wave_check(tau, kappa, tol=1e-10, points=20, seed=1):
    return json.loads(_vvjack.wave_check(_ints(tau), _kappa(kappa), tol, points, seed))


def integrate_L(tau, kappa, theta, tol=1e-10):
    """L at the point with angles theta, in the orthonormal tableau basis."""
    return np.asarray(_vvjack.integrate_L(_ints(tau), float(Fraction(_kappa(kappa))), [float(t) for t in theta], tol))


def density(tau, kappa, points, lam=None, tableau=None, tol=1e-10):
    """||L J||^2 / ||J||^2 at each row of points (angles); J defaults to the minimal polynomial."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    return np.asarray(_vvjack.density(_ints(tau), _kappa(kappa), pts.tolist(),
                                      None if lam is None else _ints(lam), _tableau(tableau), tol))
