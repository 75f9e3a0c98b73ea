# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
from anisobolev.spaces.base import NormResult, SpaceSpec, as_profile
from anisobolev.spaces.lebesgue import check_exponent


class Convexified(SpaceSpec):
    """ The ``r``-convexification ``X^{(r)}``, ``||f|| = || |f|^r ||_X^{1/r}`` """

    kind = "Convexified"

    def __init__(self, base=None, r=1.0):
        self.base = base
        self.r = r
        check_exponent(r, "r", upper=False)

    def evaluate(self, p):
        result = self.base.evaluate(as_profile(p).power(self.r))
        return NormResult(result.value ** (1.0 / self.r), result.reason)

    def boyd_indices(self):
        indices = self.base.boyd_indices()
        if indices is None:
            return None
        return indices[0] / self.r, indices[1] / self.r

    def contains_constants(self):
        return self.base.contains_constants()

    def check_hypotheses(self):
        return self.base.check_hypotheses()

    @property
    def text(self):
        return "convex({:g}):{}".format(self.r, self.base.text)


class AngleConvexified(SpaceSpec):
    """ The space ``X^<r>`` normed by ``|| ((|f|^r)**)^{1/r} ||_X`` """

    kind = "AngleConvexified"

    def __init__(self, base=None, r=1.0):
        self.base = base
        self.r = r
        check_exponent(r, "r", upper=False)

    def evaluate(self, p):
        g = as_profile(p)
        if g.is_empty:
            return NormResult(0.0, "")
        return self.base.evaluate(g.power(self.r).double_star().power(1.0 / self.r))

    def boyd_indices(self):
        indices = self.base.boyd_indices()
        # the running average is bounded on X^{(1/r)} exactly when r * upper < 1
        if indices is None or self.r * indices[0] >= 1:
            return None
        return indices

    def contains_constants(self):
        return self.base.contains_constants()

    def check_hypotheses(self):
        return self.base.check_hypotheses()

    @property
    def text(self):
        return "angle({:g}):{}".format(self.r, self.base.text)
