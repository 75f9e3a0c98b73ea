# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
import warnings
from collections import namedtuple

import numpy as np
from sklearn.base import BaseEstimator

from anisobolev.core.diagnostics import DivergenceWarning
from anisobolev.core.io import EstimatorIO
from anisobolev.core.profile import Curve, MonotoneProfile

NormResult = namedtuple("NormResult", ["value", "reason"])


def as_profile(p):
    """ Decreasing rearrangement of any curve; profiles pass through """
    if isinstance(p, MonotoneProfile):
        return p
    if isinstance(p, Curve):
        return p.rearranged()
    raise TypeError("Expected a Curve or MonotoneProfile, got {}".format(type(p).__name__))


def grid_sup(p, factor):
    """ Supremum of ``factor(t) * p(t)`` over knots, grid and left limits """
    if p.is_empty:
        return 0.0, np.nan
    points = np.union1d(p.t, p.t_grid) if isinstance(p, MonotoneProfile) else p.t
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        scores = np.concatenate((factor(points) * p(points), factor(p.t) * p.values))
    where = np.concatenate((points, p.t))
    scores = np.where(np.isnan(scores), 0.0, scores)
    i = int(np.argmax(scores))
    return float(scores[i]), float(where[i])


class SpaceSpec(BaseEstimator, EstimatorIO):
    """ Base class of the rearrangement-invariant norms of the catalog.

    A norm depends on a function only through its decreasing rearrangement,
    so every space evaluates a :class:`MonotoneProfile`. Non-monotone curves
    are rearranged with respect to Lebesgue measure first.
    """

    kind = None

    def _evaluate(self, p):
        raise NotImplementedError

    def evaluate(self, p):
        """ The norm of ``p`` as a ``NormResult(value, reason)``.

        Divergent norms are returned as ``inf`` with the reason attached.
        """
        p = as_profile(p)
        if p.is_empty:
            return NormResult(0.0, "")
        value = float(self._evaluate(p))
        if np.isnan(value):
            value = np.inf
        if np.isinf(value):
            return NormResult(np.inf, "{}: defining integral diverges".format(self.text))
        return NormResult(value, "")

    def norm(self, p):
        """ The norm of ``p``; divergence warns and returns ``inf`` """
        result = self.evaluate(p)
        if np.isinf(result.value):
            warnings.warn(result.reason, DivergenceWarning)
        return result.value

    def boyd_indices(self):
        """ Closed-form ``(upper, lower)`` Boyd indices, ``None`` when unknown """
        return None

    def contains_constants(self):
        raise NotImplementedError

    def check_hypotheses(self):
        """ ``(True, "")`` when the parameters define an r.i. space """
        return True, ""

    @property
    def text(self):
        raise NotImplementedError

    def __repr__(self):
        return "{}({})".format(self.__class__.__name__, self.text)


def norm(spec, p):
    """ The norm of the profile ``p`` in ``spec`` """
    return spec.norm(p)
