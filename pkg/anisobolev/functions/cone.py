# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
import numpy as np
from scipy.special import beta

from anisobolev.core.measure import BoxDomain
from anisobolev.functions.base import (
    NO_ORACLE, TestFunction, ball_mass, centered, register)


@register
class Cone(TestFunction):
    """ The cone ``amplitude * max(0, 1 - |x - center| / radius)``.

    Lipschitz but not C1. It lies in the closure of the smooth compactly
    supported functions of the weighted Sobolev space, which is where the
    chain of first order inequalities is stated.

    Parameters
    ----------
    n: int
        Dimension.
    radius: float
    amplitude: float
    center: sequence of float, optional
        Origin by default. Off-centre cones only have a closed-form
        rearrangement for the Lebesgue measure.
    """

    tag = "cone"
    lipschitz_only = True
    parameter_box = {
        "radius": (1e-3, 1e3), "amplitude": (1e-6, 1e6), "center": (-1e3, 1e3)}

    def __init__(self, n=1, radius=1.0, amplitude=1.0, center=None):
        self.n = n
        self.radius = radius
        self.amplitude = amplitude
        self.center = center

    def _offset(self, x):
        return np.atleast_2d(x) - centered(self.center, self.n)

    def evaluate(self, x):
        r = np.linalg.norm(self._offset(x), axis=-1)
        return self.amplitude * np.maximum(0.0, 1.0 - r / self.radius)

    def gradient(self, x):
        d = self._offset(x)
        r = np.linalg.norm(d, axis=-1)
        inside = (r < self.radius) & (r > 0)
        safe = np.where(inside, r, 1.0)
        return np.where(inside[:, None], -self.amplitude / self.radius * d / safe[:, None], 0.0)

    @property
    def support(self):
        c = centered(self.center, self.n)
        return BoxDomain(tuple(c - self.radius), tuple(c + self.radius))

    def _oracle(self, w):
        if np.any(centered(self.center, self.n) != 0) and np.any(w.exponents != 0):
            return NO_ORACLE
        D, a = w.D, self.amplitude
        T = ball_mass(w.exponents) * self.radius ** D
        return T, lambda t: a * (1.0 - np.clip(t / T, 0.0, 1.0) ** (1.0 / D)), ()

    def lp_norm(self, w, p):
        """ ``||f||_{L^p_mu} = a (T D B(D, p + 1))^{1/p}`` for the centred cone """
        if self.center is not None and np.any(centered(self.center, self.n) != 0):
            return NO_ORACLE
        D = w.D
        T = ball_mass(w.exponents) * self.radius ** D
        return float(self.amplitude * (T * D * beta(D, p + 1.0)) ** (1.0 / p))
