# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
import numpy as np
from scipy.special import gammaln
from sklearn.base import BaseEstimator

from anisobolev import options
from anisobolev.core.field import Field
from anisobolev.core.measure import MonomialWeight
from anisobolev.core.profile import MonotoneProfile, geometric_grid


class _NoOracle:
    """ Marker for families without a closed-form rearrangement """

    def __bool__(self):
        return False

    def __repr__(self):
        return "NO_ORACLE"


NO_ORACLE = _NoOracle()

FAMILIES = {}


def register(cls):
    FAMILIES[cls.tag] = cls
    return cls


def ball_mass(A):
    """ ``mu`` of the Euclidean unit ball: ``prod Gamma((A_i+1)/2) / Gamma(D/2+1)`` """
    A = np.asarray(A, dtype=float)
    D = A.size + A.sum()
    return float(np.exp(np.sum(gammaln((A + 1.0) / 2.0)) - gammaln(D / 2.0 + 1.0)))


def cube_mass(A):
    """ ``mu`` of the cube ``[-1, 1]^n``: ``prod 2 / (A_i + 1)`` """
    A = np.asarray(A, dtype=float)
    return float(np.prod(2.0 / (A + 1.0)))


def centered(center, n):
    if center is None:
        return np.zeros(n)
    c = np.broadcast_to(np.asarray(center, dtype=float).ravel(), (n,))
    return np.array(c)


class TestFunction(Field):
    """ Base class of the parametric test families.

    Subclasses implement ``evaluate``, ``gradient`` and ``support``. A
    family with a closed-form rearrangement for a weight overrides
    ``_oracle(w)`` to return ``(T, f_star, breaks)``: the measure of the
    support, a vectorized ``f*`` on [0, T] and the points where ``f*``
    is not smooth.
    """

    __test__ = False
    tag = None
    parameter_box = {}

    @property
    def n(self):
        return self._n

    @n.setter
    def n(self, value):
        if int(value) < 1:
            raise ValueError("Dimension must be a positive integer, got {}".format(value))
        self._n = int(value)

    @classmethod
    def build(cls, n, **params):
        return cls(n=n, **params)

    def _oracle(self, w):
        return NO_ORACLE

    def oracle(self, w):
        """ ``(T, f_star, breaks)`` or ``NO_ORACLE`` """
        w = w if isinstance(w, MonomialWeight) else MonomialWeight(tuple(w))
        if w.n != self.n:
            raise ValueError(
                "Weight dimension {} does not match function dimension {}".format(w.n, self.n))
        return self._oracle(w)


def oracle_profile(f, w, grid_size=None):
    """ Closed-form rearrangement ``f*`` as a dense piecewise-linear profile.

    Parameters
    ----------
    f: TestFunction
    w: MonomialWeight or sequence of float
    grid_size: int, optional
        Knots are the union of the geometric grid and an even grid of this
        size. Defaults to ``options.GRID_SIZE``.

    Returns
    -------
    MonotoneProfile or NO_ORACLE
    """
    found = f.oracle(w) if isinstance(f, TestFunction) else NO_ORACLE
    if not found:
        return NO_ORACLE
    T, f_star, breaks = found
    grid_size = options.GRID_SIZE if grid_size is None else int(grid_size)
    knots = np.union1d(geometric_grid(T, grid_size), np.linspace(0.0, T, grid_size + 1)[1:])
    knots = np.union1d(knots, [b for b in breaks if 0 < b < T])
    top = float(f_star(np.zeros(1))[0])
    return MonotoneProfile(knots, np.maximum(f_star(knots), 0.0), kind="linear",
                           head=(top, 0.0), mass=T, grid_size=grid_size)


class FamilySpec(BaseEstimator):
    """ A test family together with its admissible parameter box.

    Parameters
    ----------
    tag: str
        One of ``cone``, ``tensor_bump``, ``radial_power``,
        ``double_revolution``, ``plateau``.
    n: int
        Dimension of the instances.
    box: dict, optional
        ``name -> (low, high)`` bounds overriding the family defaults.
    """

    def __init__(self, tag="cone", n=1, box=None):
        self.tag = tag
        self.n = n
        self.box = box

    @property
    def family(self):
        try:
            return FAMILIES[self.tag]
        except KeyError:
            raise ValueError(
                "Invalid family {}. Accepted values are {}".format(
                    self.tag, ", ".join(sorted(FAMILIES))))

    @property
    def parameter_box(self):
        bounds = dict(self.family.parameter_box)
        bounds.update(self.box or {})
        return bounds


def instantiate(spec, params=None):
    """ Builds the member of ``spec`` with ``params``.

    Unknown parameter names and values outside the family box raise
    ``ValueError``.
    """
    params = dict(params or {})
    bounds = spec.parameter_box
    for key, value in params.items():
        if key not in bounds:
            raise ValueError(
                "Invalid parameter {} for family {}. Accepted values are {}".format(
                    key, spec.tag, ", ".join(sorted(bounds))))
        if value is None:
            continue
        low, high = bounds[key]
        values = np.atleast_1d(np.asarray(value, dtype=float))
        if np.any(values < low) or np.any(values > high):
            raise ValueError(
                "Parameter {}={} outside [{}, {}] for family {}".format(
                    key, value, low, high, spec.tag))
    return spec.family.build(spec.n, **params)
