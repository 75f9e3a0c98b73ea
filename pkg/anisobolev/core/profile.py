# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
import numpy as np
import pandas as pd

from anisobolev import options
from anisobolev.core.io import ProfileIO


def geometric_grid(T, size=None, t_min_ratio=None):
    """ Geometric grid of ``size`` points spanning [t_min_ratio * T, T] """
    size = options.GRID_SIZE if size is None else int(size)
    ratio = options.T_MIN_RATIO if t_min_ratio is None else t_min_ratio
    if T <= 0:
        return np.empty(0)
    if size < 2:
        raise ValueError("Grid size must be at least 2, got {}".format(size))
    return np.geomspace(ratio * T, T, size)


def power_moment(a, b, k):
    """ Elementwise ``int_a^b t**k dt`` allowing ``a == 0`` and ``b == inf``.

    Divergent integrals are returned as ``inf``.
    """
    a, b = np.broadcast_arrays(
        np.atleast_1d(np.asarray(a, dtype=float)),
        np.atleast_1d(np.asarray(b, dtype=float)))
    e = float(k) + 1.0
    out = np.zeros(a.shape)
    inner = (a > 0) & np.isfinite(b) & (b > a)
    ai, bi = a[inner], b[inner]
    if e == 0:
        out[inner] = np.log1p((bi - ai) / ai)
    else:
        out[inner] = ai ** e * np.expm1(e * np.log(bi / ai)) / e
    at_zero = (a <= 0) & (b > 0)
    if e > 0:
        out[at_zero] = np.where(np.isfinite(b[at_zero]), b[at_zero] ** e / e, np.inf)
    else:
        out[at_zero] = np.inf
    at_inf = (a > 0) & ~np.isfinite(b)
    out[at_inf] = -a[at_inf] ** e / e if e < 0 else np.inf
    return out


def _head_integral(coef, exponent, x):
    """ int_0^x coef * s**exponent ds """
    if coef == 0:
        return np.zeros(np.shape(np.atleast_1d(x)))
    return coef * power_moment(0.0, x, exponent)


def _tail_integral(coef, exponent, T, x):
    """ int_T^x coef * s**exponent ds """
    if coef == 0:
        return np.zeros(np.shape(np.atleast_1d(x)))
    return coef * power_moment(T, x, exponent)


class Curve(ProfileIO):
    """ Sampled function on (0, inf) with analytic head and tail.

    A curve is known on increasing positive knots ``t``. Between knots it is
    either piecewise constant (``kind="step"``, the value on
    ``(t[k-1], t[k]]`` is ``values[k]``, right-continuous when evaluated) or
    piecewise linear (``kind="linear"``). On ``(0, t[0]]`` it follows the
    power law ``head[0] * t**head[1]`` and beyond the last knot the power law
    ``tail[0] * t**tail[1]``.

    Parameters
    ----------
    t: array-like
        Strictly increasing positive knots.
    values: array-like
        Values attached to the knots.
    kind: str
        Either "step" or "linear".
    head: tuple
        Coefficient and exponent of the power law on (0, t[0]]. Step curves
        always use ``(values[0], 0)``.
    tail: tuple
        Coefficient and exponent of the power law beyond the last knot.
        ``(0, 0)`` means the curve vanishes there.
    """

    def __init__(self, t, values, kind="linear", head=None, tail=None):
        t = np.array(t, dtype=float).ravel()
        values = np.array(values, dtype=float).ravel()
        if kind not in ("step", "linear"):
            raise ValueError(
                "Invalid curve kind {}. Accepted values are 'step', 'linear'".format(kind))
        if t.shape != values.shape:
            raise ValueError("Knots and values must have the same length")
        if t.size and (t[0] <= 0 or np.any(np.diff(t) <= 0)):
            raise ValueError("Knots must be positive and strictly increasing")
        if t.size and not np.all(np.isfinite(values)):
            raise ValueError("Curve values must be finite")
        self.t = t
        self.values = values
        self.kind = kind
        if kind == "step" or head is None:
            head = (float(values[0]), 0.0) if values.size else (0.0, 0.0)
        self.head = (float(head[0]), float(head[1]))
        self.tail = (0.0, 0.0) if tail is None else (float(tail[0]), float(tail[1]))
        if not t.size:
            self.head, self.tail = (0.0, 0.0), (0.0, 0.0)
        self._knot_primitive = self._primitive_at_knots()
        for array in (self.t, self.values, self._knot_primitive):
            array.setflags(write=False)

    @property
    def T(self):
        """ Last knot; zero for the empty curve """
        return float(self.t[-1]) if self.t.size else 0.0

    @property
    def is_empty(self):
        return self.t.size == 0

    def _primitive_at_knots(self):
        if not self.t.size:
            return np.empty(0)
        t, v = self.t, self.values
        head = float(_head_integral(self.head[0], self.head[1], t[0])[0])
        if self.kind == "step":
            pieces = v[1:] * np.diff(t)
        else:
            pieces = 0.5 * (v[1:] + v[:-1]) * np.diff(t)
        return head + np.concatenate(([0.0], np.cumsum(pieces)))

    def _tail_value(self, x):
        coef, exponent = self.tail
        if coef == 0:
            return np.zeros(np.shape(x))
        return coef * np.asarray(x, dtype=float) ** exponent

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if self.is_empty:
            return np.zeros(x.shape)
        t, v = self.t, self.values
        with np.errstate(divide="ignore", invalid="ignore"):
            if self.kind == "step":
                idx = np.searchsorted(t, x, side="right")
                out = np.where(
                    idx < t.size, v[np.minimum(idx, t.size - 1)], self._tail_value(x))
            else:
                coef, exponent = self.head
                inner = np.interp(x, t, v)
                out = np.where(x < t[0], coef * np.maximum(x, 0) ** exponent, inner)
                out = np.where(x > t[-1], self._tail_value(x), out)
        return out

    def primitive(self, x):
        """ Exact ``int_0^x`` of the curve """
        x = np.asarray(x, dtype=float)
        if self.is_empty:
            return np.zeros(x.shape)
        t, v, F = self.t, self.values, self._knot_primitive
        flat = np.atleast_1d(x).astype(float)
        out = np.empty(flat.shape)
        k = np.searchsorted(t, flat, side="left")
        head = k == 0
        out[head] = _head_integral(self.head[0], self.head[1], flat[head])
        tail = k == t.size
        out[tail] = F[-1] + _tail_integral(
            self.tail[0], self.tail[1], t[-1], flat[tail])
        body = ~head & ~tail
        kb, xb = k[body], flat[body]
        if self.kind == "step":
            out[body] = F[kb - 1] + v[kb] * (xb - t[kb - 1])
        else:
            vx = np.interp(xb, t, v)
            out[body] = F[kb - 1] + 0.5 * (v[kb - 1] + vx) * (xb - t[kb - 1])
        return out.reshape(x.shape)

    def total(self):
        """ ``int_0^inf`` of the curve, ``inf`` when the tail diverges """
        if self.is_empty:
            return 0.0
        coef, exponent = self.tail
        if coef == 0:
            return float(self._knot_primitive[-1])
        return float(self._knot_primitive[-1] + _tail_integral(
            coef, exponent, self.T, np.inf)[0])

    def integral(self, weight=None, k=0.0):
        """ ``int_0^inf g(t) t**k w(t) dt`` computed piecewise.

        Step and linear pieces are integrated exactly against the moments of
        the weight, so the result is exact for power weights.

        Parameters
        ----------
        weight: object with a ``moment(a, b, k)`` method, optional
            Defaults to Lebesgue measure.
        k: float
            Extra power of t.
        """
        if self.is_empty:
            return 0.0
        moment = power_moment if weight is None else weight.moment
        t, v = self.t, self.values
        total = 0.0
        hc, he = self.head
        if hc != 0:
            total += hc * float(moment(0.0, t[0], k + he)[0])
        if t.size > 1:
            a, b = t[:-1], t[1:]
            if self.kind == "step":
                m0 = moment(a, b, k)
                with np.errstate(invalid="ignore"):
                    total += float(np.sum(np.where(v[1:] == 0, 0.0, v[1:] * m0)))
            else:
                slope = np.diff(v) / np.diff(t)
                intercept = v[:-1] - slope * a
                m0, m1 = moment(a, b, k), moment(a, b, k + 1)
                with np.errstate(invalid="ignore"):
                    total += float(np.sum(
                        np.where(intercept == 0, 0.0, intercept * m0)
                        + np.where(slope == 0, 0.0, slope * m1)))
        tc, te = self.tail
        if tc != 0:
            total += tc * float(moment(t[-1], np.inf, k + te)[0])
        if np.isnan(total):
            return np.inf
        return max(total, 0.0) if np.isfinite(total) else np.inf

    def sup(self, k=0.0):
        """ Supremum of ``t**k g(t)`` and the knot where it is attained """
        if self.is_empty:
            return 0.0, np.nan
        t, v = self.t, self.values
        candidates = [(0.0, np.nan)]
        hc, he = self.head
        if hc != 0:
            e = he + k
            if e < 0:
                return np.inf, 0.0
            candidates.append((hc * t[0] ** e, t[0]))
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            if self.kind == "step" and k < 0 and t.size > 1:
                scores = v[1:] * t[:-1] ** k
                where = t[:-1]
            else:
                scores = v * t ** k
                where = t
        i = int(np.argmax(scores))
        candidates.append((float(scores[i]), float(where[i])))
        tc, te = self.tail
        if tc != 0:
            e = te + k
            if e > 0:
                return np.inf, np.inf
            candidates.append((tc * t[-1] ** e, t[-1]))
        return max(candidates, key=lambda c: c[0])

    def power(self, r):
        """ Pointwise ``g**r`` """
        if self.is_empty:
            return self
        head = (self.head[0] ** r, self.head[1] * r)
        tail = (self.tail[0] ** r, self.tail[1] * r) if self.tail[0] else (0.0, 0.0)
        return self._like(self.t, self.values ** r, head=head, tail=tail)

    def scale_by_power(self, a):
        """ Pointwise ``t**a g(t)`` as a linear curve """
        if self.is_empty:
            return self
        curve = self if self.kind == "linear" else self.as_linear()
        head = (curve.head[0], curve.head[1] + a)
        tail = (curve.tail[0], curve.tail[1] + a) if curve.tail[0] else (0.0, 0.0)
        return Curve(curve.t, curve.values * curve.t ** a, "linear", head, tail)

    def as_linear(self):
        if self.kind == "linear" or self.is_empty:
            return self
        return Curve(self.t, self.values, "linear", self.head, self.tail)

    def dilate(self, s):
        """ Dilation ``E_s g(t) = g(t / s)`` """
        if s <= 0:
            raise ValueError("Dilation factor must be positive, got {}".format(s))
        if self.is_empty:
            return self
        head = (self.head[0] * s ** (-self.head[1]), self.head[1])
        tail = (self.tail[0] * s ** (-self.tail[1]), self.tail[1])
        return self._like(self.t * s, self.values, head=head, tail=tail)

    def _like(self, t, values, head=None, tail=None):
        return Curve(t, values, self.kind, head, tail)

    def pieces(self, tail_decades=8, tail_points=None):
        """ Lengths and mean values of the pieces covering (0, t_far).

        The tail is cut into geometric pieces up to ``T * 10**tail_decades``.
        """
        if self.is_empty:
            return np.empty(0), np.empty(0), self.T
        t, v = self.t, self.values
        head_len = t[0]
        head_mean = float(_head_integral(self.head[0], self.head[1], t[0])[0]) / t[0]
        lengths = [np.array([head_len]), np.diff(t)]
        if self.kind == "step":
            means = [np.array([head_mean]), v[1:]]
        else:
            means = [np.array([head_mean]), 0.5 * (v[1:] + v[:-1])]
        t_far = self.T
        if self.tail[0] != 0:
            points = tail_points or max(64, 64 * tail_decades)
            edges = np.geomspace(self.T, self.T * 10.0 ** tail_decades, points + 1)
            masses = _tail_integral(self.tail[0], self.tail[1], self.T, edges)
            lengths.append(np.diff(edges))
            means.append(np.diff(masses) / np.diff(edges))
            t_far = edges[-1]
        return np.concatenate(lengths), np.concatenate(means), t_far

    def rearranged(self, grid_size=None):
        """ Decreasing rearrangement with respect to Lebesgue measure """
        lengths, means, _ = self.pieces()
        tail = self.tail if self.tail[0] != 0 and self.tail[1] < 0 else None
        return MonotoneProfile.from_steps(lengths, means, tail=tail, grid_size=grid_size)

    def to_frame(self, grid=None):
        """ Curve sampled on ``grid`` (its knots by default) as a DataFrame """
        grid = self.t if grid is None else np.asarray(grid, dtype=float)
        return pd.DataFrame({"t": grid, "value": self(grid)})

    def __repr__(self):
        return "{}(kind={!r}, knots={}, T={:.6g})".format(
            self.__class__.__name__, self.kind, self.t.size, self.T)


class MonotoneProfile(Curve):
    """ Nonincreasing nonnegative right-continuous curve.

    Houses decreasing rearrangements ``f*``, running averages ``f**`` and
    rearranged derivative quantities. Values are clamped to be
    nonincreasing and nonnegative on construction.

    Parameters
    ----------
    t, values, kind, head, tail:
        As in :class:`Curve`.
    mass: float, optional
        Measure of the support when built from a compactly supported
        function. Defaults to the last knot.
    grid_size: int, optional
        Size of the geometric sampling grid ``t_grid``.
    jumps: sequence of (t, size)
        Jumps detected when the profile was built.

    Attributes
    ----------
    t_grid: ndarray
        Geometric grid on [T_MIN_RATIO * T, T].
    grid_values: ndarray
        Right-continuous samples of the profile on ``t_grid``.
    """

    def __init__(self, t, values, kind="step", head=None, tail=None,
                 mass=None, grid_size=None, jumps=()):
        values = np.asarray(values, dtype=float).ravel()
        if values.size:
            values = np.maximum(np.minimum.accumulate(values), 0.0)
        super().__init__(t, values, kind=kind, head=head, tail=tail)
        self.mass = self.T if mass is None else float(mass)
        self.grid_size = options.GRID_SIZE if grid_size is None else int(grid_size)
        self.jumps = tuple(jumps)

    @classmethod
    def from_steps(cls, lengths, values, tail=None, grid_size=None, sort=True):
        """ Profile of a function given as pieces of Lebesgue length ``lengths``.

        Pieces are sorted by value (descending, ties kept in input order),
        equal neighbours merged, and zero or empty pieces dropped.
        """
        lengths = np.asarray(lengths, dtype=float).ravel()
        values = np.abs(np.asarray(values, dtype=float).ravel())
        keep = (lengths > 0) & (values > 0)
        lengths, values = lengths[keep], values[keep]
        if sort:
            order = np.argsort(-values, kind="stable")
            lengths, values = lengths[order], values[order]
        if not values.size:
            return cls(np.empty(0), np.empty(0), grid_size=grid_size)
        starts = np.flatnonzero(np.concatenate(([True], np.diff(values) != 0)))
        values = values[starts]
        lengths = np.add.reduceat(lengths, starts)
        knots = np.cumsum(lengths)
        # cumulative sums can repeat a knot when a piece is tiny
        keep = np.concatenate((np.diff(knots) > 0, [True]))
        if not np.all(keep):
            knots, values = _drop_repeated(knots, values)
        jumps = _detect_jumps(knots, values, tail is None)
        return cls(knots, values, kind="step", tail=tail,
                   grid_size=grid_size, jumps=jumps)

    @property
    def t_grid(self):
        return geometric_grid(self.T, self.grid_size)

    @property
    def grid_values(self):
        return self(self.t_grid)

    def _like(self, t, values, head=None, tail=None):
        return MonotoneProfile(t, values, self.kind, head, tail,
                               grid_size=self.grid_size)

    def dilate(self, s):
        profile = super().dilate(s)
        profile.mass = self.mass * s
        return profile

    def rearranged(self, grid_size=None):
        return self

    def smoothed(self):
        """ Piecewise-linear surrogate through the midpoints of the steps """
        if self.kind == "linear" or self.is_empty:
            return self
        t, v = self.t, self.values
        left = np.concatenate(([0.0], t[:-1]))
        mid = 0.5 * (left + t)
        knots = np.append(mid, t[-1])
        vals = np.append(v, v[-1])
        return MonotoneProfile(knots, vals, kind="linear", head=(v[0], 0.0),
                               tail=self.tail, mass=self.mass,
                               grid_size=self.grid_size, jumps=self.jumps)

    def double_star(self):
        """ Running average ``f**(t) = (1/t) int_0^t f*`` """
        if self.is_empty:
            return self
        knots = np.union1d(self.t, self.t_grid)
        tc, te = self.tail
        if tc != 0:
            knots = np.union1d(knots, np.geomspace(self.T, self.T * 1e8, 513))
        values = self.primitive(knots) / knots
        hc, he = self.head
        head = (hc / (he + 1.0), he) if he > -1 else (np.inf, he)
        total = self.total()
        tail = (total, -1.0) if np.isfinite(total) else (0.0, 0.0)
        return MonotoneProfile(knots, values, kind="linear", head=head, tail=tail,
                               mass=self.mass, grid_size=self.grid_size)

    def to_frame(self, grid=None):
        """ Profile sampled on ``t_grid`` as a DataFrame with columns t, value """
        return super().to_frame(self.t_grid if grid is None else grid)


def _drop_repeated(knots, values):
    keep = np.concatenate((np.diff(knots) > 0, [True]))
    # of a repeated knot only the last piece survives
    return knots[keep], values[keep]


def _detect_jumps(knots, values, vanishing_tail, window=16, factor=10.0, floor=1e-3):
    """ Drops of a step profile that stand out from their neighbours """
    if not values.size:
        return ()
    gaps = np.append(values[:-1] - values[1:], values[-1] if vanishing_tail else 0.0)
    csum = np.concatenate(([0.0], np.cumsum(gaps)))
    idx = np.arange(gaps.size)
    lo = np.maximum(idx - window, 0)
    hi = np.minimum(idx + window + 1, gaps.size)
    count = hi - lo - 1
    local = np.where(
        count > 0, (csum[hi] - csum[lo] - gaps) / np.maximum(count, 1), 0.0)
    flagged = (gaps > factor * local) & (gaps > floor * values[0])
    return tuple((float(knots[i]), float(gaps[i])) for i in np.flatnonzero(flagged))


def step_product(profiles, exponents):
    """ Pointwise product ``prod_i profiles[i] ** exponents[i]``.

    Step profiles are multiplied exactly on the union of their knots; any
    linear factor makes the result a linear curve on that union. The result
    is a :class:`MonotoneProfile` when every factor is one, a plain
    :class:`Curve` otherwise.
    """
    profiles = list(profiles)
    exponents = [float(e) for e in exponents]
    if len(profiles) != len(exponents):
        raise ValueError("One exponent is required per profile")
    active = [(p, e) for p, e in zip(profiles, exponents) if e != 0]
    if any(p.is_empty for p, _ in active):
        return MonotoneProfile(np.empty(0), np.empty(0))
    if not active:
        raise ValueError("At least one nonzero exponent is required")
    vanishing = [p for p, _ in active if p.tail[0] == 0]
    T = min(p.T for p in vanishing) if vanishing else max(p.T for p, _ in active)
    knots = np.unique(np.concatenate([p.t[p.t <= T] for p, _ in active] + [[T]]))
    all_step = all(p.kind == "step" for p, _ in active)
    if all_step:
        left = np.concatenate(([0.0], knots[:-1]))
        where = 0.5 * (left + knots)
    else:
        where = knots
    values = np.ones(knots.shape)
    head_c, head_e, tail_c, tail_e = 1.0, 0.0, 1.0, 0.0
    for p, e in active:
        values = values * p(where) ** e
        head_c *= p.head[0] ** e
        head_e += p.head[1] * e
        tail_c *= p.tail[0] ** e
        tail_e += p.tail[1] * e
    tail = (tail_c, tail_e) if not vanishing else None
    if not all(isinstance(p, MonotoneProfile) for p, _ in active):
        if all_step:
            return Curve(knots, values, kind="step", tail=tail)
        return Curve(knots, values, kind="linear", head=(head_c, head_e), tail=tail)
    grid_size = max(p.grid_size for p, _ in active)
    if all_step:
        return MonotoneProfile(knots, values, kind="step", tail=tail, grid_size=grid_size)
    return MonotoneProfile(knots, values, kind="linear", head=(head_c, head_e),
                           tail=tail, grid_size=grid_size)


class DistributionFunction:
    """ Distribution function ``s -> mu{|f| > s}`` sampled on ``s_grid`` """

    def __init__(self, s_grid, masses):
        self.s_grid = np.asarray(s_grid, dtype=float)
        self.masses = np.asarray(masses, dtype=float)
        if self.s_grid.shape != self.masses.shape:
            raise ValueError("s_grid and masses must have the same length")

    def __call__(self, s):
        idx = np.searchsorted(self.s_grid, np.asarray(s, dtype=float), side="right") - 1
        return np.where(idx >= 0, self.masses[np.clip(idx, 0, None)], self.masses[0])

    def to_frame(self):
        return pd.DataFrame({"s": self.s_grid, "mass": self.masses})
