# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
import numpy as np

from anisobolev.core.profile import Curve
from anisobolev.spaces.base import SpaceSpec
from anisobolev.spaces.conditions import check_admissible, check_ggamma_weight
from anisobolev.spaces.lebesgue import check_exponent
from anisobolev.spaces.weights import log_power_exponents, resolve_weight


class Gamma(SpaceSpec):
    """ The space ``Gamma^p(w)``, ``||f|| = (int_0^inf f**(t)^p w(t) dt)^{1/p}`` """

    kind = "Gamma"

    def __init__(self, p=2.0, weight=None):
        self.p = p
        self.weight = weight
        check_exponent(p, upper=False)

    @property
    def weight_(self):
        return resolve_weight(self.weight)

    def _evaluate(self, f):
        return f.double_star().power(self.p).integral(self.weight_) ** (1.0 / self.p)

    def boyd_indices(self):
        exponents = log_power_exponents(self.weight_)
        if exponents is None:
            return None
        index = (exponents[0] + 1.0) / self.p
        return index, index

    def contains_constants(self):
        w = self.weight_
        return bool(w.converges_at_zero(0.0) and w.converges_at_infinity(0.0))

    def check_hypotheses(self):
        if not check_admissible(self.weight_, self.p):
            return False, "weight {} is not admissible for p={:g}".format(
                self.weight_.text, self.p)
        return True, ""

    @property
    def text(self):
        return "gamma:p={:g},w={}".format(self.p, self.weight_.text)


def inner_power_curve(f, p, m):
    """ ``t -> (int_0^t f*^p)^{m/p}`` as a linear curve """
    g = f.power(p)
    knots = np.union1d(f.t, f.t_grid)
    total = g.total()
    if g.tail[0] != 0:
        knots = np.union1d(knots, np.geomspace(f.T, f.T * 1e8, 513))
    r = m / p
    values = g.primitive(knots) ** r
    hc, he = g.head
    head = ((hc / (he + 1.0)) ** r, (he + 1.0) * r) if he > -1 else (np.inf, 0.0)
    tail = (total ** r, 0.0) if np.isfinite(total) else (0.0, 0.0)
    return Curve(knots, values, kind="linear", head=head, tail=tail), np.isfinite(total)


class GGamma(SpaceSpec):
    """ The space ``G Gamma(p, m, w)``.

    ``||f|| = (int_0^inf (int_0^t f*(s)^p ds)^{m/p} w(t) dt)^{1/m}``.
    """

    kind = "GGamma"

    def __init__(self, p=1.0, m=2.0, weight=None):
        self.p = p
        self.m = m
        self.weight = weight
        check_exponent(p, upper=False)
        check_exponent(m, "m", upper=False)

    @property
    def weight_(self):
        return resolve_weight(self.weight)

    def _evaluate(self, f):
        curve, finite = inner_power_curve(f, self.p, self.m)
        if not finite:
            return np.inf
        return curve.integral(self.weight_) ** (1.0 / self.m)

    def boyd_indices(self):
        exponents = log_power_exponents(self.weight_)
        if exponents is None:
            return None
        index = 1.0 / self.p + (exponents[0] + 1.0) / self.m
        return index, index

    def contains_constants(self):
        w, k = self.weight_, self.m / self.p
        return bool(w.converges_at_zero(k) and w.converges_at_infinity(k))

    def check_hypotheses(self):
        if not check_ggamma_weight(self.weight_, self.m, self.p):
            return False, "weight {} fails the min-kernel condition for m/p={:g}".format(
                self.weight_.text, self.m / self.p)
        return True, ""

    @property
    def text(self):
        return "ggamma:p={:g},m={:g},w={}".format(self.p, self.m, self.weight_.text)
