# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
from fractions import Fraction

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils import check_random_state

from anisobolev import options
from anisobolev.core.diagnostics import NonFiniteSampleError
from anisobolev.core.io import EstimatorIO


def _exponents(A):
    A = np.asarray(A, dtype=float).ravel()
    if A.size == 0:
        raise ValueError("At least one monomial exponent is required")
    if not np.all(np.isfinite(A)) or np.any(A < 0):
        raise ValueError(
            "Invalid monomial exponents {}. Accepted values are finite reals "
            ">= 0".format(list(A)))
    return A


def homogeneous_dimension(A):
    """ Homogeneous dimension ``D = n + sum(A)`` of the weight ``x**A`` """
    A = _exponents(A)
    return float(sum(Fraction(a) for a in A) + A.size)


class MonomialWeight(BaseEstimator, EstimatorIO):
    """ The monomial weight ``|x_1|**A_1 ... |x_n|**A_n``.

    Parameters
    ----------
    A: sequence of float
        Nonnegative exponents, one per coordinate.

    Attributes
    ----------
    n: int
        Number of coordinates.
    D: float
        Homogeneous dimension ``n + sum(A)``.
    theta: ndarray
        Scaling fractions ``(A_i + 1) / D``; they sum to one.
    """

    def __init__(self, A=(0.0,)):
        self.A = A
        _exponents(A)

    @property
    def exponents(self):
        return _exponents(self.A)

    @property
    def n(self):
        return self.exponents.size

    @property
    def D(self):
        return homogeneous_dimension(self.A)

    @property
    def theta(self):
        fractions = [Fraction(a) + 1 for a in self.exponents]
        D = sum(fractions)
        return np.array([float(f / D) for f in fractions])

    def __call__(self, x):
        return weight_at(self, x)


def weight_at(w, x):
    """ Evaluates ``prod |x_i|**A_i`` at one point or an (N, n) array of points """
    A = w.exponents if isinstance(w, MonomialWeight) else _exponents(w)
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != A.size:
        raise ValueError(
            "Point dimension {} does not match weight dimension {}".format(
                x.shape[-1], A.size))
    out = np.prod(np.abs(x) ** A, axis=-1)
    return float(out) if out.ndim == 0 else out


class BoxDomain(BaseEstimator, EstimatorIO):
    """ Axis-aligned box ``[lower_1, upper_1] x ... x [lower_n, upper_n]`` """

    def __init__(self, lower=(-1.0,), upper=(1.0,)):
        self.lower = lower
        self.upper = upper
        lo, hi = self.bounds
        if lo.shape != hi.shape:
            raise ValueError("lower and upper must have the same length")
        if not np.all(lo < hi):
            raise ValueError("Invalid box: every lower bound must be below its upper bound")

    @property
    def bounds(self):
        return (np.asarray(self.lower, dtype=float).ravel(),
                np.asarray(self.upper, dtype=float).ravel())

    @property
    def n(self):
        return self.bounds[0].size

    @property
    def volume(self):
        lo, hi = self.bounds
        return float(np.prod(hi - lo))

    def scale(self, factor):
        """ Image of the box under ``x -> x / factor`` (factor > 0, per axis or scalar) """
        lo, hi = self.bounds
        factor = np.broadcast_to(np.asarray(factor, dtype=float), lo.shape)
        if np.any(factor <= 0):
            raise ValueError("Scale factors must be positive")
        return BoxDomain(tuple(lo / factor), tuple(hi / factor))

    def union(self, other):
        lo, hi = self.bounds
        olo, ohi = other.bounds
        return BoxDomain(tuple(np.minimum(lo, olo)), tuple(np.maximum(hi, ohi)))


class CellDecomposition:
    """ Uniform tensor partition of a box into quadrature cells.

    Cells are enumerated in C order over the axes; that order is the
    tie-break of every sort performed on them.

    Parameters
    ----------
    weight: MonomialWeight
    box: BoxDomain
    resolution: int or sequence of int
        Cells per axis.
    """

    def __init__(self, weight, box, resolution=None):
        if weight.n != box.n:
            raise ValueError(
                "Weight dimension {} does not match box dimension {}".format(
                    weight.n, box.n))
        if resolution is None:
            resolution = options.default_resolution(box.n)
        resolution = np.broadcast_to(np.asarray(resolution, dtype=int), (box.n,))
        if np.any(resolution < 1):
            raise ValueError("Resolution must be a positive integer")
        self.weight = weight
        self.box = box
        self.resolution = tuple(int(r) for r in resolution)
        lo, hi = box.bounds
        h = (hi - lo) / resolution
        axes = [lo[i] + (np.arange(r) + 0.5) * h[i] for i, r in enumerate(self.resolution)]
        mesh = np.meshgrid(*axes, indexing="ij")
        self.centers = np.stack([m.ravel() for m in mesh], axis=-1)
        self.cell_volume = float(np.prod(h))
        self.volumes = np.full(self.centers.shape[0], self.cell_volume)
        self.weighted_mass = weight_at(weight, self.centers) * self.cell_volume
        for array in (self.centers, self.volumes, self.weighted_mass):
            array.setflags(write=False)

    def __len__(self):
        return self.centers.shape[0]

    @property
    def total_mass(self):
        return float(np.sum(self.weighted_mass))

    def sample(self, f):
        """ Values of ``f`` at the cell centres; non-finite values raise """
        values = np.asarray(_evaluate(f, self.centers), dtype=float).ravel()
        bad = ~np.isfinite(values)
        if np.any(bad):
            i = int(np.flatnonzero(bad)[0])
            raise NonFiniteSampleError(i, self.centers[i], values[i])
        return values

    def sample_gradient(self, f):
        grad = np.asarray(f.gradient(self.centers), dtype=float)
        bad = ~np.isfinite(grad).all(axis=-1)
        if np.any(bad):
            i = int(np.flatnonzero(bad)[0])
            raise NonFiniteSampleError(i, self.centers[i], grad[i].tolist())
        return grad


def _evaluate(f, points):
    if hasattr(f, "evaluate"):
        return f.evaluate(points)
    return f(points)


def _box_of(f, box):
    if box is not None:
        return box
    support = getattr(f, "support", None)
    if support is None:
        raise ValueError("A box is required for plain callables")
    return support


def integrate(w, f, box=None, resolution=None):
    """ Tensor-midpoint quadrature of ``int f dmu`` over ``box``.

    Parameters
    ----------
    w: MonomialWeight
    f: Field or callable
        Evaluated on (N, n) arrays of points.
    box: BoxDomain, optional
        Defaults to the support of ``f``.
    resolution: int, optional
        Cells per axis, defaults to ``options.RESOLUTION[n]``.
    """
    cells = CellDecomposition(w, _box_of(f, box), resolution)
    return float(np.sum(cells.sample(f) * cells.weighted_mass))


def integrate_monte_carlo(w, f, box=None, n_samples=100000, random_state=None):
    """ Seeded Monte Carlo estimate of ``int f dmu``, a cross-check only """
    box = _box_of(f, box)
    rs = check_random_state(random_state)
    lo, hi = box.bounds
    points = lo + (hi - lo) * rs.random_sample((int(n_samples), box.n))
    values = np.asarray(_evaluate(f, points), dtype=float)
    return float(box.volume * np.mean(values * weight_at(w, points)))


def measure_superlevel(w, f, s, box=None, resolution=None):
    """ Weighted mass of the cells where ``|f| > s`` """
    if s < 0:
        raise ValueError("Level s must be nonnegative, got {}".format(s))
    cells = CellDecomposition(w, _box_of(f, box), resolution)
    values = np.abs(cells.sample(f))
    return float(np.sum(cells.weighted_mass[values > s]))


def distribution_function(w, f, box=None, resolution=None, s_grid=None, size=256):
    """ Distribution function ``s -> mu{|f| > s}`` on ``s_grid``.

    The default grid has ``size`` evenly spaced levels on [0, sup|f|].
    """
    from anisobolev.core.profile import DistributionFunction

    cells = CellDecomposition(w, _box_of(f, box), resolution)
    values = np.abs(cells.sample(f))
    if s_grid is None:
        s_grid = np.linspace(0.0, values.max() if values.size else 0.0, size)
    s_grid = np.asarray(s_grid, dtype=float)
    if np.any(s_grid < 0):
        raise ValueError("Levels must be nonnegative")
    order = np.argsort(values, kind="stable")
    sorted_values = values[order]
    above = np.concatenate((np.cumsum(cells.weighted_mass[order][::-1])[::-1], [0.0]))
    idx = np.searchsorted(sorted_values, s_grid, side="right")
    return DistributionFunction(s_grid, above[idx])
