# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
import numpy as np

from anisobolev import options
from anisobolev.core.profile import Curve, MonotoneProfile, power_moment


def hardy_p(p):
    """ The Hardy averaging operator ``P f(t) = (1/t) int_0^t f`` """
    if isinstance(p, MonotoneProfile):
        return p.double_star()
    if p.is_empty:
        return p
    knots = np.union1d(p.t, np.geomspace(p.t[0], p.T, options.GRID_SIZE))
    total = p.total()
    tail = (total, -1.0) if np.isfinite(total) and p.tail[0] == 0 else (0.0, 0.0)
    hc, he = p.head
    head = (hc / (he + 1.0), he) if he > -1 else (np.inf, he)
    return Curve(knots, p.primitive(knots) / knots, kind="linear", head=head, tail=tail)


def _upper_integral(p, a, x):
    """ ``int_x^inf s^{a-1} p(s) ds`` """
    t, v = p.t, p.values
    n = t.size
    lo, hi = t[:-1], t[1:]
    if p.kind == "step":
        pieces = v[1:] * power_moment(lo, hi, a - 1.0)
    else:
        slope = np.diff(v) / np.diff(t)
        intercept = v[:-1] - slope * lo
        pieces = intercept * power_moment(lo, hi, a - 1.0) + slope * power_moment(lo, hi, a)
    tc, te = p.tail

    def tail_from(y):
        if tc == 0:
            return np.zeros(np.shape(y))
        return tc * power_moment(y, np.inf, a - 1.0 + te)

    # after[k] integrates from t[k] onwards
    after = np.concatenate((np.cumsum(pieces[::-1])[::-1], [0.0]))
    after = after + tail_from(np.array([p.T]))[0]
    out = np.empty(x.shape)
    k = np.searchsorted(t, x, side="right") - 1
    before, beyond = k < 0, k >= n - 1
    body = ~before & ~beyond
    hc, he = p.head
    out[before] = hc * power_moment(x[before], t[0], a - 1.0 + he) + after[0]
    out[beyond] = tail_from(x[beyond])
    kb = k[body]
    out[body] = _partial(p, a, x[body], kb) + after[kb + 1]
    return out


def _partial(p, a, x, k):
    """ ``int_x^{t[k+1]} s^{a-1} p(s) ds`` with ``t[k] <= x < t[k+1]`` """
    t, v = p.t, p.values
    end = t[k + 1]
    if p.kind == "step":
        return v[k + 1] * power_moment(x, end, a - 1.0)
    slope = (v[k + 1] - v[k]) / (t[k + 1] - t[k])
    intercept = v[k] - slope * t[k]
    return intercept * power_moment(x, end, a - 1.0) + slope * power_moment(x, end, a)


def hardy_q(a, p, grid=None):
    """ The operator ``Q_a f(t) = t^{-a} int_t^inf s^a f(s) ds / s``.

    Parameters
    ----------
    a: float
        ``0 <= a < 1``.
    p: Curve
    grid: array-like, optional
        Sampling points; a geometric grid down to ``T_MIN_RATIO * T`` by
        default.
    """
    if not (0 <= a < 1):
        raise ValueError("Invalid exponent a={}. Accepted values are 0 <= a < 1".format(a))
    if p.is_empty:
        return Curve(np.empty(0), np.empty(0))
    if grid is None:
        grid = np.union1d(p.t, np.geomspace(options.T_MIN_RATIO * p.T, p.T, options.GRID_SIZE))
    grid = np.asarray(grid, dtype=float)
    values = grid ** (-a) * _upper_integral(p, a, grid)
    tc, te = p.tail
    tail = None
    if tc != 0 and a + te < 0:
        tail = (tc / -(a + te), te)
    return Curve(grid, values, kind="linear", head=(values[0], 0.0), tail=tail)
