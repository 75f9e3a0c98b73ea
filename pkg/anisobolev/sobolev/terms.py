# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
import warnings
from functools import lru_cache

import numpy as np
import pandas as pd
from sklearn.base import BaseEstimator

from anisobolev.core.diagnostics import SpikeWarning
from anisobolev.core.field import as_field
from anisobolev.core.io import EstimatorIO, ProfileIO
from anisobolev.core.measure import BoxDomain, MonomialWeight
from anisobolev.core.profile import Curve, MonotoneProfile, step_product
from anisobolev.core.rearrangement import Rearrangement


class TildeProfile(ProfileIO):
    """ The rearranged derivative of the gradient mass above the levels of ``f``.

    With ``g_i(s)`` the ``mu``-integral of ``|f_{x_i}|`` over
    ``{|f| > f*(s)}``, ``profile`` is the Lebesgue rearrangement of
    ``g_i'`` on (0, inf).

    Attributes
    ----------
    coordinate: int
    cumulative: Curve
        ``g_i``, piecewise linear and nondecreasing.
    derivative: Curve
        ``g_i'`` as a step curve, in level order.
    profile: MonotoneProfile
        Decreasing rearrangement of ``derivative``.
    total: float
        ``g_i`` at the end of the support.
    spikes: tuple
        ``(t, value)`` of derivative cells standing out from their
        neighbours.
    """

    def __init__(self, coordinate, cumulative, derivative, profile, spikes=()):
        self.coordinate = coordinate
        self.cumulative = cumulative
        self.derivative = derivative
        self.profile = profile
        self.spikes = tuple(spikes)

    @property
    def total(self):
        return float(self.cumulative.values[-1]) if not self.cumulative.is_empty else 0.0

    def to_frame(self, grid=None):
        grid = self.profile.t_grid if grid is None else np.asarray(grid, dtype=float)
        return pd.DataFrame({
            "t": grid,
            "cumulative": self.cumulative(grid),
            "derivative": self.derivative(grid),
            "value": self.profile(grid)})

    def __repr__(self):
        return "TildeProfile(coordinate={}, total={:.6g})".format(self.coordinate, self.total)


def _spikes(knots, values, window=16, factor=10.0):
    """ Cells whose value exceeds ``factor`` times the mean of their neighbours """
    if values.size < 3:
        return ()
    csum = np.concatenate(([0.0], np.cumsum(values)))
    idx = np.arange(values.size)
    lo = np.maximum(idx - window, 0)
    hi = np.minimum(idx + window + 1, values.size)
    local = (csum[hi] - csum[lo] - values) / (hi - lo - 1)
    flagged = (values > factor * local) & (values > 0)
    return tuple((float(knots[i]), float(values[i])) for i in np.flatnonzero(flagged))


class SobolevTerms(BaseEstimator, EstimatorIO):
    """ Gradient quantities of a field in one sorted-cell pass.

    The cells are sorted by ``|f|`` exactly as in :class:`Rearrangement`.
    Cells sharing a value form one level group; the gradient mass of a
    group is spread evenly over its ``mu``-mass, so the tilde cumulative
    reaches ``||f_{x_i}||_{L^1_mu}`` exactly.

    Parameters
    ----------
    weight: MonomialWeight
    resolution: int, optional
        Cells per axis.
    grid_size: int, optional
        Size of the geometric grid of every profile.

    Attributes
    ----------
    rearrangement_: Rearrangement
    profile_: MonotoneProfile
        ``f*``.
    gradient_l1_: ndarray
        ``||f_{x_i}||_{L^1_mu}`` per coordinate.
    gradient_profiles_: list of MonotoneProfile
        ``|f_{x_i}|*`` per coordinate.
    modulus_profile_: MonotoneProfile
        ``|grad f|*`` (Euclidean modulus).
    tilde_: list of TildeProfile
    """

    def __init__(self, weight=None, resolution=None, grid_size=None):
        self.weight = weight
        self.resolution = resolution
        self.grid_size = grid_size

    def fit(self, X, y=None, box=None):
        field = as_field(X, box)
        rearrangement = Rearrangement(self.weight, self.resolution, self.grid_size)
        rearrangement.fit(field, box=box)
        cells = rearrangement.cells_
        gradient = np.abs(cells.sample_gradient(field))
        mass = cells.weighted_mass
        self.rearrangement_ = rearrangement
        self.profile_ = rearrangement.profile_
        self.gradient_l1_ = np.sum(gradient * mass[:, None], axis=0)
        self.gradient_profiles_ = [
            MonotoneProfile.from_steps(mass, gradient[:, i], grid_size=self.grid_size)
            for i in range(gradient.shape[1])]
        self.modulus_profile_ = MonotoneProfile.from_steps(
            mass, np.linalg.norm(gradient, axis=1), grid_size=self.grid_size)
        self.tilde_ = self._tilde(rearrangement, gradient, mass)
        return self

    def _tilde(self, rearrangement, gradient, mass):
        order = rearrangement.order_
        values = rearrangement.values_[order]
        m = mass[order]
        keep = (values > 0) & (m > 0)
        values, m, grad = values[keep], m[keep], gradient[order][keep]
        if not values.size:
            empty = Curve(np.empty(0), np.empty(0))
            return [TildeProfile(i, empty, empty, MonotoneProfile(np.empty(0), np.empty(0)))
                    for i in range(gradient.shape[1])]
        starts = np.flatnonzero(np.concatenate(([True], np.diff(values) != 0)))
        lengths = np.add.reduceat(m, starts)
        knots = np.cumsum(lengths)
        distinct = np.concatenate(([True], np.diff(knots) > 0))
        tilde = []
        for i in range(grad.shape[1]):
            increments = np.add.reduceat(grad[:, i] * m, starts)
            if not np.all(distinct):
                # fold groups lost to rounding into their predecessor
                labels = np.cumsum(distinct) - 1
                increments = np.bincount(labels, weights=increments)
            kn = knots[distinct]
            widths = np.diff(np.concatenate(([0.0], kn)))
            slopes = increments / widths
            running = np.cumsum(increments)
            cumulative = Curve(kn, running, kind="linear", head=(slopes[0], 1.0),
                               tail=(running[-1], 0.0))
            derivative = Curve(kn, slopes, kind="step")
            profile = MonotoneProfile.from_steps(widths, slopes, grid_size=self.grid_size)
            spikes = _spikes(kn, slopes)
            if spikes:
                t, value = spikes[0]
                warnings.warn(
                    "Gradient mass of coordinate {} concentrates in {} level cell(s), "
                    "first at t={:.3g} with density {:.3g}".format(i, len(spikes), t, value),
                    SpikeWarning)
            tilde.append(TildeProfile(i, cumulative, derivative, profile, spikes))
        return tilde

    @property
    def D(self):
        return self.weight.D

    @property
    def theta(self):
        return self.weight.theta

    def domination_gap(self, i):
        """ Largest relative excess of ``int_0^t`` tilde over ``int_0^t |f_{x_i}|*`` """
        tilde = self.tilde_[i].profile
        direct = self.gradient_profiles_[i]
        if tilde.is_empty or direct.is_empty:
            return 0.0
        grid = np.union1d(tilde.t, direct.t)
        excess = tilde.primitive(grid) - direct.primitive(grid)
        return float(max(0.0, np.max(excess)) / max(direct.total(), np.finfo(float).tiny))


@lru_cache(maxsize=32)
def _terms(f, A, resolution, grid_size, bounds):
    box = None if bounds is None else BoxDomain(*bounds)
    return SobolevTerms(MonomialWeight(A), resolution, grid_size).fit(
        as_field(f, box), box=box)


def _key(value):
    if isinstance(value, (list, np.ndarray)):
        return tuple(np.asarray(value).ravel().tolist())
    return value


def _bounds(box):
    """ ``(lower, upper)`` tuples of a BoxDomain or of a pair of sequences """
    if box is None:
        return None
    lo, hi = (box if isinstance(box, BoxDomain) else BoxDomain(*box)).bounds
    return tuple(lo.tolist()), tuple(hi.tolist())


def sobolev_terms(f, w, resolution=None, grid_size=None, box=None):
    """ Fitted :class:`SobolevTerms`, reused across calls on the same field.

    Fields and plain callables are treated as immutable once their terms are
    computed; boxes are compared by their bounds.
    """
    w = w if isinstance(w, MonomialWeight) else MonomialWeight(tuple(w))
    A = tuple(float(a) for a in w.exponents)
    return _terms(f, A, _key(resolution), grid_size, _bounds(box))


def tilde_profiles(f, w, resolution=None, grid_size=None, box=None):
    """ The rearranged tilde derivatives ``(f~_{x_i})*``, one per coordinate """
    return sobolev_terms(f, w, resolution, grid_size, box).tilde_


def gradient_profiles(f, w, resolution=None, grid_size=None, box=None):
    """ The rearrangements ``|f_{x_i}|*``, one per coordinate """
    return sobolev_terms(f, w, resolution, grid_size, box).gradient_profiles_


def multiplicative_rhs(tilde, w, p=1.0):
    """ ``prod_i [(f~_{x_i})*]^{p (A_i + 1) / D}`` on the union of knots.

    Parameters
    ----------
    tilde: list of TildeProfile or MonotoneProfile
    w: MonomialWeight
    p: float
        ``p >= 1``.
    """
    if p < 1:
        raise ValueError("Invalid exponent p={}. Accepted values are p >= 1".format(p))
    w = w if isinstance(w, MonomialWeight) else MonomialWeight(tuple(w))
    profiles = [t.profile if isinstance(t, TildeProfile) else t for t in tilde]
    if len(profiles) != w.n:
        raise ValueError(
            "Expected {} tilde profiles for weight dimension {}, got {}".format(
                w.n, w.n, len(profiles)))
    return step_product(profiles, p * w.theta)
