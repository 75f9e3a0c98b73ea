# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
import warnings

import numpy as np
from scipy.integrate import cumulative_trapezoid
from scipy.ndimage import maximum_filter1d
from sklearn.base import BaseEstimator

from anisobolev import options
from anisobolev.core.diagnostics import ContinuityWarning
from anisobolev.core.field import FieldSum, as_field
from anisobolev.core.io import EstimatorIO
from anisobolev.core.measure import BoxDomain, CellDecomposition, distribution_function
from anisobolev.core.profile import Curve, MonotoneProfile, step_product


class Rearrangement(BaseEstimator, EstimatorIO):
    """ Decreasing rearrangement of a field with respect to a monomial weight.

    Cells of a tensor decomposition of the support box are sorted by the
    absolute value of the field at their centres (descending, ties in cell
    order). The cumulative weighted mass of the sorted cells gives the step
    approximation of ``f*``.

    Parameters
    ----------
    weight: MonomialWeight
        The weight ``x**A`` defining the measure.
    resolution: int, optional
        Cells per axis. Defaults to ``options.RESOLUTION[n]``.
    grid_size: int, optional
        Points of the geometric sampling grid of the profile.

    Attributes
    ----------
    cells_: CellDecomposition
        The quadrature cells.
    values_: ndarray
        Absolute field values at the cell centres, in cell order.
    order_: ndarray
        Cell indices sorted by decreasing ``values_``.
    cumulative_mass_: ndarray
        Running weighted mass of the sorted cells.
    profile_: MonotoneProfile
        The rearrangement ``f*``.
    """

    def __init__(self, weight=None, resolution=None, grid_size=None):
        self.weight = weight
        self.resolution = resolution
        self.grid_size = grid_size

    def fit(self, X, y=None, box=None):
        """ Rearranges the field ``X``.

        Parameters
        ----------
        X: Field or callable
            The function to rearrange.
        y: None
            Ignored.
        box: BoxDomain or (lower, upper), optional
            Quadrature box; defaults to the support of ``X``.
        """
        field = as_field(X, box)
        if box is None:
            box = field.support
        elif not isinstance(box, BoxDomain):
            box = BoxDomain(*box)
        self.cells_ = CellDecomposition(self.weight, box, self.resolution)
        self.values_ = np.abs(self.cells_.sample(field))
        self.order_ = np.argsort(-self.values_, kind="stable")
        mass = self.cells_.weighted_mass[self.order_]
        self.cumulative_mass_ = np.cumsum(mass)
        self.profile_ = MonotoneProfile.from_steps(
            mass, self.values_[self.order_], grid_size=self.grid_size, sort=False)
        return self

    @property
    def mass_(self):
        """ Weighted measure of the support of the field """
        return self.profile_.mass


def rearrange(w, f, box=None, resolution=None, grid_size=None):
    """ Decreasing rearrangement ``f*`` of ``f`` with respect to ``x**A dx`` """
    return Rearrangement(w, resolution, grid_size).fit(f, box=box).profile_


def double_star(p):
    """ Running average ``f**`` of a profile """
    return p.double_star()


def _oscillation_knots(p):
    return np.union1d(p.t, p.t_grid) if not p.is_empty else p.t


def oscillation(p, smooth=False):
    """ Oscillation ``O(f, t) = f**(t) - f*(t)`` as a linear curve.

    With ``smooth=True`` the step profile is first replaced by its
    piecewise-linear surrogate, which is what derivative-based quantities
    are compared against.
    """
    if p.is_empty:
        return Curve(np.empty(0), np.empty(0))
    q = p.smoothed() if smooth else p
    knots = _oscillation_knots(p)
    values = np.maximum(q.primitive(knots) / knots - q(knots), 0.0)
    tail = (q.total(), -1.0) if q.tail[0] == 0 else (0.0, 0.0)
    return Curve(knots, values, kind="linear", head=(0.0, 0.0), tail=tail)


def check_crece(p):
    """ Largest relative decrease of ``t * O(f, t)`` over the knots.

    ``t O(f, t)`` is nondecreasing for every rearrangement, so the result is
    zero up to rounding.
    """
    if p.is_empty:
        return 0.0
    knots = _oscillation_knots(p)
    t_osc = p.primitive(knots) - knots * p(knots)
    scale = np.max(np.abs(t_osc))
    if scale == 0:
        return 0.0
    return float(max(0.0, -np.min(np.diff(t_osc))) / scale)


class SampledDerivative(Curve):
    """ Sampled ``(-f*)'`` on the profile grid.

    Attributes
    ----------
    absolutely_continuous: bool
        False when the profile showed jumps.
    jumps: tuple
        Location and size of the detected jumps.
    """

    def __init__(self, t, values, absolutely_continuous=True, jumps=()):
        super().__init__(t, values, kind="linear", head=(values[0], 0.0) if len(values) else None)
        self.absolutely_continuous = absolutely_continuous
        self.jumps = tuple(jumps)


def _secant_halfwidth(p, grid, steps=8, factor=8.0):
    """ Half-width of the difference window at each grid point.

    The window spans ``factor`` times the widest step among the ``steps``
    neighbours on each side, and never reaches below ``t/2``.
    """
    widths = maximum_filter1d(np.diff(p.t, prepend=0.0), size=2 * steps + 1, mode="nearest")
    k = np.minimum(np.searchsorted(p.t, grid, side="left"), p.t.size - 1)
    return np.minimum(factor * widths[k], grid / 4.0)


def profile_derivative(p):
    """ Sampled ``(-f*)'`` on the geometric grid, clamped to >= 0.

    Differences of the window averages on each side of ``t``, computed from
    the exact primitive. Windows are several steps wide, so the staircase
    of a cell surrogate does not show through.
    """
    if p.is_empty:
        return SampledDerivative(np.empty(0), np.empty(0))
    if p.jumps:
        t, size = p.jumps[0]
        warnings.warn(
            "Profile is not absolutely continuous: {} jump(s), first of size {:.3g} "
            "at t={:.3g}".format(len(p.jumps), size, t), ContinuityWarning)
    grid = p.t_grid
    h = _secant_halfwidth(p, grid)
    F = p.primitive
    left = (F(grid) - F(grid - 2 * h)) / (2 * h)
    right = (F(grid + 2 * h) - F(grid)) / (2 * h)
    values = np.maximum((left - right) / (2 * h), 0.0)
    return SampledDerivative(
        grid, values, absolutely_continuous=not p.jumps, jumps=p.jumps)


def oscillation_from_derivative(p):
    """ ``(1/t) int_0^t s (-f*)'(s) ds`` on the profile grid """
    derivative = profile_derivative(p)
    if derivative.is_empty:
        return Curve(np.empty(0), np.empty(0))
    t, d = derivative.t, derivative.values
    head = 0.5 * d[0] * t[0] ** 2
    values = (head + cumulative_trapezoid(t * d, t, initial=0.0)) / t
    return Curve(t, values, kind="linear", head=(0.0, 0.0))


def relative_sup_error(curve, reference, grid):
    """ ``max|curve - reference| / max|reference|`` on ``grid`` """
    a, b = curve(grid), reference(grid)
    scale = np.max(np.abs(b))
    if scale == 0:
        return float(np.max(np.abs(a)))
    return float(np.max(np.abs(a - b)) / scale)


def check_equimeasurability(w, f, box=None, resolution=None, size=256):
    """ Largest relative gap between ``|{f* > s}|`` and ``mu{|f| > s}`` """
    field = as_field(f, box)
    box = field.support if box is None else box
    p = rearrange(w, field, box, resolution)
    dist = distribution_function(w, field, box, resolution, size=size)
    count = np.sum(p.values[None, :] > dist.s_grid[:, None], axis=1)
    lengths = np.where(count > 0, p.t[np.maximum(count - 1, 0)], 0.0)
    scale = max(dist.masses.max(), np.finfo(float).tiny)
    return float(np.max(np.abs(lengths - dist.masses)) / scale)


def check_subadditivity(w, u, v, box=None, resolution=None):
    """ Largest relative excess of ``(u+v)**`` over ``u** + v**`` on the grid """
    u, v = as_field(u, box), as_field(v, box)
    total = FieldSum(u, v)
    box = total.support if box is None else box
    ps = [rearrange(w, g, box, resolution).double_star() for g in (total, u, v)]
    grid = ps[0].t_grid
    if not grid.size:
        return 0.0
    excess = ps[0](grid) - ps[1](grid) - ps[2](grid)
    scale = max(float(np.max(ps[0](grid))), np.finfo(float).tiny)
    return float(max(0.0, np.max(excess)) / scale)


def hardy_littlewood_gap(w, u, v, box=None, resolution=None):
    """ The pair ``(int |uv| dmu, int u* v* dt)`` over the same cells """
    u, v = as_field(u, box), as_field(v, box)
    box = u.support.union(v.support) if box is None else box
    cells = CellDecomposition(w, box, resolution)
    lhs = float(np.sum(np.abs(cells.sample(u) * cells.sample(v)) * cells.weighted_mass))
    pu = rearrange(w, u, box, resolution)
    pv = rearrange(w, v, box, resolution)
    rhs = step_product([pu, pv], [1.0, 1.0]).integral()
    return lhs, rhs
