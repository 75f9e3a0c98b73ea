# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
import numpy as np
from sklearn.base import BaseEstimator

from anisobolev.core.io import EstimatorIO
from anisobolev.core.measure import BoxDomain


class Field(BaseEstimator, EstimatorIO):
    """ Base class of scalar fields on R^n with gradients.

    Subclasses implement ``evaluate`` and ``gradient`` on (N, n) arrays of
    points and expose the ``support`` box outside of which they vanish.
    """

    tag = None
    lipschitz_only = False

    def evaluate(self, x):
        raise NotImplementedError

    def gradient(self, x):
        raise NotImplementedError

    @property
    def support(self):
        raise NotImplementedError

    @property
    def n(self):
        return self.support.n

    def __call__(self, x):
        return self.evaluate(np.asarray(x, dtype=float))

    def finite_difference_gradient(self, x, step=1e-6):
        """ Central-difference gradient, used to cross-check ``gradient`` """
        x = np.atleast_2d(np.asarray(x, dtype=float))
        lo, hi = self.support.bounds
        h = step * np.max(hi - lo)
        out = np.empty(x.shape)
        for i in range(x.shape[1]):
            e = np.zeros(x.shape[1])
            e[i] = h
            out[:, i] = (self.evaluate(x + e) - self.evaluate(x - e)) / (2 * h)
        return out


class CallableField(Field):
    """ Field wrapping a plain vectorized callable.

    Parameters
    ----------
    func: callable
        Maps (N, n) points to N values.
    box: BoxDomain
        Box containing the support.
    grad: callable, optional
        Maps (N, n) points to (N, n) gradients; finite differences otherwise.
    """

    def __init__(self, func=None, box=None, grad=None):
        self.func = func
        self.box = box
        self.grad = grad

    def evaluate(self, x):
        return np.asarray(self.func(x), dtype=float)

    def gradient(self, x):
        if self.grad is None:
            return self.finite_difference_gradient(x)
        return np.asarray(self.grad(x), dtype=float)

    @property
    def support(self):
        return self.box


class Dilation(Field):
    """ The field ``x -> base(scale * x)`` with per-axis or scalar ``scale`` """

    def __init__(self, base=None, scale=1.0):
        self.base = base
        self.scale = scale

    @property
    def _factor(self):
        factor = np.broadcast_to(
            np.asarray(self.scale, dtype=float), (self.base.n,))
        if np.any(factor <= 0):
            raise ValueError("Dilation factors must be positive")
        return factor

    def evaluate(self, x):
        return self.base.evaluate(np.asarray(x, dtype=float) * self._factor)

    def gradient(self, x):
        factor = self._factor
        return self.base.gradient(np.asarray(x, dtype=float) * factor) * factor

    @property
    def support(self):
        return self.base.support.scale(self._factor)

    @property
    def lipschitz_only(self):
        return self.base.lipschitz_only


class Truncation(Field):
    """ Truncation of ``|base|`` between the levels ``t1 < t2``.

    Equals ``t2 - t1`` where ``|f| > t2``, ``|f| - t1`` where
    ``t1 < |f| <= t2`` and ``0`` elsewhere.
    """

    def __init__(self, base=None, t1=0.0, t2=1.0):
        self.base = base
        self.t1 = t1
        self.t2 = t2

    def evaluate(self, x):
        a = np.abs(self.base.evaluate(x))
        return np.clip(a - self.t1, 0.0, self.t2 - self.t1)

    def gradient(self, x):
        f = self.base.evaluate(x)
        a = np.abs(f)
        inside = (a > self.t1) & (a <= self.t2)
        return self.base.gradient(x) * (np.sign(f) * inside)[:, None]

    @property
    def support(self):
        return self.base.support


class FieldSum(Field):
    """ Pointwise sum of two fields """

    def __init__(self, left=None, right=None):
        self.left = left
        self.right = right

    def evaluate(self, x):
        return self.left.evaluate(x) + self.right.evaluate(x)

    def gradient(self, x):
        return self.left.gradient(x) + self.right.gradient(x)

    @property
    def support(self):
        return self.left.support.union(self.right.support)


def truncate(f, t1, t2):
    """ Returns the truncation of ``f`` between levels ``t1`` and ``t2`` """
    if t1 < 0:
        raise ValueError("Lower truncation level must be nonnegative, got {}".format(t1))
    if t1 >= t2:
        raise ValueError(
            "Invalid truncation levels t1={}, t2={}. t1 must be below t2".format(t1, t2))
    return Truncation(as_field(f), t1, t2)


def as_field(f, box=None):
    """ Wraps callables into a :class:`Field`, leaving fields untouched """
    if isinstance(f, Field):
        return f
    if not callable(f):
        raise TypeError("Expected a Field or a callable, got {}".format(type(f).__name__))
    if box is None:
        raise ValueError("A box is required to wrap a plain callable")
    if not isinstance(box, BoxDomain):
        box = BoxDomain(*box)
    return CallableField(f, box)
