# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
import numpy as np

from anisobolev.spaces.base import SpaceSpec, grid_sup
from anisobolev.spaces.conditions import is_bp_weight
from anisobolev.spaces.lebesgue import check_exponent
from anisobolev.spaces.weights import log_power_exponents, log_weight, resolve_weight


class LorentzPQ(SpaceSpec):
    """ The Lorentz space ``L^{p,q}``.

    ``||f|| = ||t^{1/p - 1/q} f*(t)||_{L^q(0, inf)}``, or the same functional
    of ``f**`` when ``form="double_star"``. ``q = inf`` is a supremum.

    Parameters
    ----------
    p: float
        ``1 <= p <= inf``.
    q: float
        ``1 <= q <= inf``; ``p = 1`` forces ``q = 1`` and ``p = inf``
        forces ``q = inf``.
    form: str
        "star" or "double_star".
    """

    kind = "LorentzPQ"

    def __init__(self, p=2.0, q=2.0, form="star"):
        self.p = p
        self.q = q
        self.form = form
        check_exponent(p)
        check_exponent(q, "q")
        if (p == 1 and q != 1) or (np.isinf(p) and not np.isinf(q)):
            raise ValueError(
                "Invalid Lorentz exponents p={}, q={}. Accepted values are "
                "1 < p < inf with 1 <= q <= inf, p = q = 1 or p = q = inf".format(p, q))
        if form not in ("star", "double_star"):
            raise ValueError(
                "Invalid form {}. Accepted values are 'star', 'double_star'".format(form))

    def _profile(self, f):
        return f.double_star() if self.form == "double_star" else f

    def _evaluate(self, f):
        g = self._profile(f)
        if np.isinf(self.q):
            return g.sup(k=1.0 / self.p)[0]
        return g.power(self.q).integral(k=self.q / self.p - 1.0) ** (1.0 / self.q)

    def boyd_indices(self):
        return 1.0 / self.p, 1.0 / self.p

    def contains_constants(self):
        return bool(np.isinf(self.p))

    @property
    def text(self):
        out = "lorentz:p={:g},q={:g}".format(self.p, self.q)
        return out + ",form=double_star" if self.form == "double_star" else out


class LorentzZygmund(SpaceSpec):
    """ Lorentz-Zygmund space ``L^{p,q}(log L)^alpha``.

    ``||f||^q = int_0^inf f*(t)^q t^{q/p - 1} (1 + |ln t|)^alpha dt``; for
    ``q = inf`` the supremum of ``t^{1/p} (1 + |ln t|)^alpha f*(t)``.
    """

    kind = "LorentzZygmund"

    def __init__(self, p=2.0, q=2.0, alpha=0.0):
        self.p = p
        self.q = q
        self.alpha = alpha
        check_exponent(q, "q")
        if not (1 < p < np.inf):
            raise ValueError(
                "Invalid exponent p={}. Accepted values are 1 < p < inf".format(p))

    def _evaluate(self, f):
        p, q, alpha = self.p, self.q, self.alpha
        if np.isinf(q):
            return grid_sup(f, lambda t: t ** (1.0 / p) * (1.0 + np.abs(np.log(t))) ** alpha)[0]
        return f.power(q).integral(log_weight(alpha), k=q / p - 1.0) ** (1.0 / q)

    def boyd_indices(self):
        return 1.0 / self.p, 1.0 / self.p

    def contains_constants(self):
        return False

    @property
    def text(self):
        return "lz:p={:g},q={:g},alpha={:g}".format(self.p, self.q, self.alpha)


class GeneralizedLorentz(SpaceSpec):
    """ The weighted Lorentz space ``Lambda^{p,q}(w)``.

    ``||f||^q = int_0^inf (t^{1/p} f*(t))^q w(t) dt / t``. It is an r.i.
    space when ``w`` is a ``B_p`` weight.

    Parameters
    ----------
    p, q: float
        ``1 <= p, q < inf``.
    weight: WeightFunction or str
    """

    kind = "GeneralizedLorentz"

    def __init__(self, p=2.0, q=2.0, weight=None):
        self.p = p
        self.q = q
        self.weight = weight
        check_exponent(p, upper=False)
        check_exponent(q, "q", upper=False)

    @property
    def weight_(self):
        return resolve_weight(self.weight)

    def _evaluate(self, f):
        q = self.q
        return f.power(q).integral(self.weight_, k=q / self.p - 1.0) ** (1.0 / q)

    def boyd_indices(self):
        exponents = log_power_exponents(self.weight_)
        if exponents is None:
            return None
        index = 1.0 / self.p + exponents[0] / self.q
        return index, index

    def contains_constants(self):
        w, k = self.weight_, self.q / self.p - 1.0
        return bool(w.converges_at_zero(k) and w.converges_at_infinity(k))

    def check_hypotheses(self):
        ok, constant = is_bp_weight(self.weight_, self.p)
        if not ok:
            return False, "weight {} is not a B_{:g} weight".format(self.weight_.text, self.p)
        return True, ""

    @property
    def text(self):
        return "glorentz:p={:g},q={:g},w={}".format(self.p, self.q, self.weight_.text)
