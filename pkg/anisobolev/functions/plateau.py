# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
import numpy as np

from anisobolev.core.measure import BoxDomain
from anisobolev.functions.base import TestFunction, cube_mass, register


@register
class Plateau(TestFunction):
    """ Flat-topped function ``a * clip((outer - |x|_inf) / (outer - inner), 0, 1)``.

    Equal to ``a`` on the cube of half-width ``inner`` with a linear skirt
    down to zero at half-width ``outer``. Its rearrangement starts with a
    flat step of length ``mu([-inner, inner]^n)``.
    """

    tag = "plateau"
    lipschitz_only = True
    parameter_box = {"inner": (0.0, 1e3), "outer": (1e-3, 1e3), "amplitude": (1e-6, 1e6)}

    def __init__(self, n=1, inner=0.5, outer=1.0, amplitude=1.0):
        self.n = n
        self.inner = inner
        self.outer = outer
        self.amplitude = amplitude

    @property
    def _skirt(self):
        if not 0 <= self.inner < self.outer:
            raise ValueError(
                "Invalid plateau radii inner={}, outer={}. Accepted values are "
                "0 <= inner < outer".format(self.inner, self.outer))
        return self.outer - self.inner

    def evaluate(self, x):
        r = np.max(np.abs(np.atleast_2d(x)), axis=-1)
        return self.amplitude * np.clip((self.outer - r) / self._skirt, 0.0, 1.0)

    def gradient(self, x):
        x = np.atleast_2d(x)
        a = np.abs(x)
        j = np.argmax(a, axis=-1)
        r = a[np.arange(x.shape[0]), j]
        slope = np.where((r > self.inner) & (r < self.outer), -self.amplitude / self._skirt, 0.0)
        out = np.zeros(x.shape)
        out[np.arange(x.shape[0]), j] = slope * np.sign(x[np.arange(x.shape[0]), j])
        return out

    @property
    def support(self):
        return BoxDomain((-self.outer,) * self.n, (self.outer,) * self.n)

    def _oracle(self, w):
        D, a = w.D, self.amplitude
        c = cube_mass(w.exponents)
        skirt = self._skirt
        flat, T = c * self.inner ** D, c * self.outer ** D

        def f_star(t):
            t = np.clip(np.asarray(t, dtype=float), 0.0, T)
            return a * np.clip((self.outer - (t / c) ** (1.0 / D)) / skirt, 0.0, 1.0)

        return T, f_star, (flat,)
