# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
import numpy as np

from anisobolev.core.measure import BoxDomain
from anisobolev.functions.base import (
    NO_ORACLE, TestFunction, ball_mass, centered, register)


def _bump(u, k):
    """ ``(1 - u^2)_+^k`` and its derivative in ``u`` """
    base = np.clip(1.0 - u ** 2, 0.0, None)
    value = base ** k
    with np.errstate(divide="ignore", invalid="ignore"):
        slope = np.where(base > 0, -2.0 * k * u * base ** (k - 1.0), 0.0)
    return value, slope


@register
class TensorBump(TestFunction):
    """ Product bump ``a * prod (1 - ((x_i - c_i) / r_i)^2)_+^k``.

    Parameters
    ----------
    n: int
    radii: float or sequence of float
        Half-widths per axis; a scalar is broadcast.
    k: float
        Edge exponent. The bump is C1 for ``k >= 2``; smaller values are
        flagged ``lipschitz_only``.
    amplitude: float
    center: sequence of float, optional

    Notes
    -----
    Only the one dimensional Lebesgue case has a closed-form
    rearrangement, ``a (1 - (t / 2r)^2)^k`` on [0, 2r].
    """

    tag = "tensor_bump"
    parameter_box = {
        "radii": (1e-3, 1e3), "k": (1.0, 16.0), "amplitude": (1e-6, 1e6),
        "center": (-1e3, 1e3)}

    def __init__(self, n=1, radii=1.0, k=2.0, amplitude=1.0, center=None):
        self.n = n
        self.radii = radii
        self.k = k
        self.amplitude = amplitude
        self.center = center

    @property
    def lipschitz_only(self):
        return self.k < 2

    @property
    def _radii(self):
        r = np.broadcast_to(np.asarray(self.radii, dtype=float).ravel(), (self.n,))
        if np.any(r <= 0):
            raise ValueError("Bump radii must be positive")
        return r

    def _factors(self, x):
        u = (np.atleast_2d(x) - centered(self.center, self.n)) / self._radii
        return _bump(u, self.k)

    def evaluate(self, x):
        value, _ = self._factors(x)
        return self.amplitude * np.prod(value, axis=-1)

    def gradient(self, x):
        value, slope = self._factors(x)
        out = np.empty(value.shape)
        for i in range(self.n):
            others = np.prod(np.delete(value, i, axis=-1), axis=-1)
            out[:, i] = slope[:, i] / self._radii[i] * others
        return self.amplitude * out

    @property
    def support(self):
        c = centered(self.center, self.n)
        return BoxDomain(tuple(c - self._radii), tuple(c + self._radii))

    def _oracle(self, w):
        if self.n != 1 or np.any(w.exponents != 0):
            return NO_ORACLE
        a, k, width = self.amplitude, self.k, 2.0 * float(self._radii[0])
        return width, lambda t: a * (1.0 - np.clip(t / width, 0.0, 1.0) ** 2) ** k, ()


@register
class RadialPower(TestFunction):
    """ Radial bump ``a * (1 - |x|^2 / R^2)_+^k`` centred at the origin.

    Level sets are balls, so ``f*(t) = a (1 - (t/T)^{2/D})^k`` with ``T``
    the weighted measure of the ball of radius ``R``, for every weight.
    """

    tag = "radial_power"
    parameter_box = {"radius": (1e-3, 1e3), "k": (1.0, 16.0), "amplitude": (1e-6, 1e6)}

    def __init__(self, n=1, radius=1.0, k=2.0, amplitude=1.0):
        self.n = n
        self.radius = radius
        self.k = k
        self.amplitude = amplitude

    @property
    def lipschitz_only(self):
        return self.k < 2

    def evaluate(self, x):
        u = np.linalg.norm(np.atleast_2d(x), axis=-1) / self.radius
        return self.amplitude * _bump(u, self.k)[0]

    def gradient(self, x):
        x = np.atleast_2d(x)
        base = np.clip(1.0 - np.sum(x ** 2, axis=-1) / self.radius ** 2, 0.0, None)
        with np.errstate(divide="ignore", invalid="ignore"):
            scale = np.where(base > 0, base ** (self.k - 1.0), 0.0)
        return (-2.0 * self.amplitude * self.k / self.radius ** 2) * scale[:, None] * x

    @property
    def support(self):
        return BoxDomain((-self.radius,) * self.n, (self.radius,) * self.n)

    def _oracle(self, w):
        D, a, k = w.D, self.amplitude, self.k
        T = ball_mass(w.exponents) * self.radius ** D
        return T, lambda t: a * (1.0 - np.clip(t / T, 0.0, 1.0) ** (2.0 / D)) ** k, ()


@register
class DoubleRevolution(TestFunction):
    """ Function with double revolution symmetry ``u(x, y) = u(|x|, |y|)``.

    ``a * (1 - |x|^2/r1^2)_+^k * (1 - |y|^2/r2^2)_+^k`` where ``x`` holds the
    first ``split`` coordinates and ``y`` the others.

    Parameters
    ----------
    n: int
        At least 2.
    radii: tuple
        ``(r1, r2)``.
    k: float
    amplitude: float
    split: int
        Number of coordinates in the first group, ``1 <= split < n``.
    """

    tag = "double_revolution"
    parameter_box = {"radii": (1e-3, 1e3), "k": (1.0, 16.0), "amplitude": (1e-6, 1e6),
                     "split": (1, 2)}

    def __init__(self, n=2, radii=(1.0, 1.0), k=2.0, amplitude=1.0, split=1):
        self.n = n
        self.radii = radii
        self.k = k
        self.amplitude = amplitude
        self.split = split

    @property
    def lipschitz_only(self):
        return self.k < 2

    def _groups(self):
        split = int(self.split)
        if self.n < 2 or not 1 <= split < self.n:
            raise ValueError(
                "Invalid split {} for n={}. Accepted values are 1 to {}".format(
                    self.split, self.n, self.n - 1))
        r1, r2 = np.broadcast_to(np.asarray(self.radii, dtype=float).ravel(), (2,))
        return split, r1, r2

    def _parts(self, x):
        split, r1, r2 = self._groups()
        x = np.atleast_2d(x)
        parts = []
        for block, r in ((x[:, :split], r1), (x[:, split:], r2)):
            parts.append((block, r, _bump(np.linalg.norm(block, axis=-1) / r, self.k)[0]))
        return parts

    def evaluate(self, x):
        (_, _, left), (_, _, right) = self._parts(x)
        return self.amplitude * left * right

    def gradient(self, x):
        (bx, r1, vx), (by, r2, vy) = self._parts(x)
        k = self.k
        with np.errstate(divide="ignore", invalid="ignore"):
            bx_base = np.clip(1.0 - np.sum(bx ** 2, axis=-1) / r1 ** 2, 0.0, None)
            by_base = np.clip(1.0 - np.sum(by ** 2, axis=-1) / r2 ** 2, 0.0, None)
            sx = np.where(bx_base > 0, bx_base ** (k - 1.0), 0.0)
            sy = np.where(by_base > 0, by_base ** (k - 1.0), 0.0)
        gx = (-2.0 * k / r1 ** 2) * (sx * vy)[:, None] * bx
        gy = (-2.0 * k / r2 ** 2) * (sy * vx)[:, None] * by
        return self.amplitude * np.concatenate((gx, gy), axis=-1)

    @property
    def support(self):
        split, r1, r2 = self._groups()
        radii = np.array([r1] * split + [r2] * (self.n - split))
        return BoxDomain(tuple(-radii), tuple(radii))
