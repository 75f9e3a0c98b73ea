# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
import numpy as np

from anisobolev.spaces.base import SpaceSpec


def check_exponent(p, name="p", upper=True):
    if not (p >= 1) or (not upper and np.isinf(p)):
        raise ValueError(
            "Invalid exponent {}={}. Accepted values are {}".format(
                name, p, "1 <= {} <= inf".format(name) if upper else
                "1 <= {} < inf".format(name)))
    return float(p)


class Lp(SpaceSpec):
    """ The Lebesgue space ``L^p``, ``1 <= p <= inf`` """

    kind = "Lp"

    def __init__(self, p=2.0):
        self.p = p
        check_exponent(p)

    def _evaluate(self, f):
        if np.isinf(self.p):
            return f.sup()[0]
        return f.power(self.p).integral() ** (1.0 / self.p)

    def boyd_indices(self):
        return 1.0 / self.p, 1.0 / self.p

    def contains_constants(self):
        return bool(np.isinf(self.p))

    @property
    def text(self):
        return "lp:p={:g}".format(self.p)


class Linf(SpaceSpec):
    kind = "Linf"

    def _evaluate(self, f):
        return f.sup()[0]

    def boyd_indices(self):
        return 0.0, 0.0

    def contains_constants(self):
        return True

    @property
    def text(self):
        return "linf"


class L1plusLinf(SpaceSpec):
    """ ``L^1 + L^inf`` normed by ``int_0^1 f*`` """

    kind = "L1plusLinf"

    def _evaluate(self, f):
        return float(f.primitive(1.0))

    def boyd_indices(self):
        return 1.0, 0.0

    def contains_constants(self):
        return True

    @property
    def text(self):
        return "l1linf"
