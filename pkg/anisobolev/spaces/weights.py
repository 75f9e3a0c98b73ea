# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
""" Weights on (0, inf) and their moments ``int_a^b t**k w(t) dt``.

Closed-form weights expose exact moments where they exist and otherwise
fall back to Gauss-Legendre quadrature in ``log t`` on bounded pieces and
Gauss-Laguerre quadrature on the pieces reaching 0 or infinity, driven by
the power/log asymptotics of the weight at both ends.
"""
from collections import namedtuple

import numpy as np
from scipy import special
from sklearn.base import BaseEstimator

from anisobolev.core.io import EstimatorIO
from anisobolev.core.profile import power_moment

Asymptotics = namedtuple("Asymptotics", ["e0", "l0", "e_inf", "l_inf", "decay"])
Asymptotics.__doc__ = """ ``w(t) ~ t**e0 (1+|ln t|)**l0`` near 0 and
``t**e_inf (1+|ln t|)**l_inf`` near infinity; ``decay`` marks weights that
vanish or decay exponentially at infinity. """

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)
_LAG_NODES, _LAG_WEIGHTS = np.polynomial.laguerre.laggauss(48)
_PANEL_WIDTH = 0.5


def _pair(a, b):
    a, b = np.broadcast_arrays(
        np.atleast_1d(np.asarray(a, dtype=float)),
        np.atleast_1d(np.asarray(b, dtype=float)))
    return a.astype(float), b.astype(float)


class WeightFunction(BaseEstimator, EstimatorIO):
    """ Base class of positive locally integrable weights on (0, inf) """

    closed_form = True

    def __call__(self, t):
        raise NotImplementedError

    @property
    def text(self):
        raise NotImplementedError

    @property
    def asymptotics(self):
        """ Power/log behaviour at 0 and infinity, ``None`` when unknown """
        return None

    @property
    def support_end(self):
        return np.inf

    def log_weight(self, log_t):
        with np.errstate(divide="ignore"):
            return np.log(self(np.exp(log_t)))

    def converges_at_zero(self, k=0.0):
        """ Whether ``int_0^1 t**k w(t) dt`` is finite, ``None`` if undecidable """
        asym = self.asymptotics
        if asym is None:
            return None
        c = k + 1.0 + asym.e0
        return bool(c > 0 or (c == 0 and asym.l0 < -1))

    def converges_at_infinity(self, k=0.0):
        """ Whether ``int_1^inf t**k w(t) dt`` is finite, ``None`` if undecidable """
        if np.isfinite(self.support_end):
            return True
        asym = self.asymptotics
        if asym is None:
            return None
        if asym.decay:
            return True
        c = k + 1.0 + asym.e_inf
        return bool(c < 0 or (c == 0 and asym.l_inf < -1))

    def primitive(self, t):
        """ ``W(t) = int_0^t w`` """
        t = np.asarray(t, dtype=float)
        return self.moment(np.zeros(t.shape), t, 0.0).reshape(t.shape)

    def moment(self, a, b, k=0.0):
        """ Elementwise ``int_a^b t**k w(t) dt``; divergent pieces give ``inf`` """
        a, b = _pair(a, b)
        b = np.minimum(b, self.support_end)
        out = np.zeros(a.shape)
        live = b > a
        head = live & (a <= 0)
        if np.any(head):
            bh = b[head]
            out[head] = self._head(np.minimum(bh, 1.0), k) + np.where(
                bh > 1, self._from(np.ones(bh.shape), np.maximum(bh, 1.0), k), 0.0)
        body = live & (a > 0)
        if np.any(body):
            out[body] = self._from(a[body], b[body], k)
        return out

    def _from(self, a, b, k):
        """ ``int_a^b`` for ``a > 0``, ``b`` possibly infinite """
        out = np.zeros(a.shape)
        finite = np.isfinite(b)
        if np.any(finite):
            out[finite] = self._finite(a[finite], b[finite], k)
        inf = ~finite
        if np.any(inf):
            ai = a[inf]
            out[inf] = np.where(ai < 1, self._finite(ai, np.ones(ai.shape), k), 0.0) \
                + self._tail(np.maximum(ai, 1.0), k)
        return out

    def _finite(self, a, b, k):
        """ Composite Gauss-Legendre in ``log t``, split at ``t = 1`` """
        below = self._panels(a, np.minimum(b, 1.0), k)
        above = self._panels(np.maximum(a, 1.0), b, k)
        return below + above

    def _panels(self, a, b, k):
        out = np.zeros(a.shape)
        live = b > a
        if not np.any(live):
            return out
        la, lb = np.log(a[live]), np.log(b[live])
        span = lb - la
        m = np.maximum(np.ceil(span / _PANEL_WIDTH), 1).astype(int)
        owner = np.repeat(np.arange(m.size), m)
        j = np.arange(m.sum()) - np.repeat(np.cumsum(m) - m, m)
        h = (span / m)[owner]
        start = la[owner] + j * h
        nodes = start[:, None] + 0.5 * (_GL_NODES + 1.0)[None, :] * h[:, None]
        with np.errstate(over="ignore", invalid="ignore"):
            vals = np.exp(nodes * (k + 1.0) + self.log_weight(nodes))
        panels = (vals @ _GL_WEIGHTS) * 0.5 * h
        out[live] = np.bincount(owner, weights=panels, minlength=m.size)
        return out

    def _head(self, b, k):
        """ ``int_0^b`` for ``0 < b <= 1`` """
        converges = self.converges_at_zero(k)
        if converges is False:
            return np.full(b.shape, np.inf)
        asym = self.asymptotics or Asymptotics(0.0, 0.0, 0.0, 0.0, False)
        c = k + 1.0 + asym.e0
        lb = np.log(b)
        if c == 0:
            # t**k w(t) ~ C t**-1 (1 + |ln t|)**l0 below b
            L = 1.0 + np.abs(lb)
            C = np.exp(self.log_weight(lb) - asym.e0 * lb - asym.l0 * np.log(L))
            return C * L ** (asym.l0 + 1.0) / -(asym.l0 + 1.0)
        u = _LAG_NODES / c
        with np.errstate(over="ignore", invalid="ignore"):
            vals = np.exp(asym.e0 * u[None, :] + self.log_weight(lb[:, None] - u[None, :]))
        return b ** (k + 1.0) / c * (vals @ _LAG_WEIGHTS)

    def _tail(self, a, k):
        """ ``int_a^inf`` for ``a >= 1`` """
        converges = self.converges_at_infinity(k)
        if converges is False:
            return np.full(a.shape, np.inf)
        asym = self.asymptotics or Asymptotics(0.0, 0.0, -np.inf, 0.0, False)
        c = -(k + 1.0 + asym.e_inf)
        la = np.log(a)
        if c == 0:
            L = 1.0 + la
            C = np.exp(self.log_weight(la) - asym.e_inf * la - asym.l_inf * np.log(L))
            return C * L ** (asym.l_inf + 1.0) / -(asym.l_inf + 1.0)
        u = _LAG_NODES / c
        with np.errstate(over="ignore", invalid="ignore"):
            vals = np.exp(-asym.e_inf * u[None, :] + self.log_weight(la[:, None] + u[None, :]))
        return a ** (k + 1.0) / c * (vals @ _LAG_WEIGHTS)


class LogPowerWeight(WeightFunction):
    """ The weight ``t**beta (1 + |ln t|)**alpha``, cut off at ``upper``.

    Power (``alpha=0``), logarithmic (``beta=0``) and constant weights are
    special cases. Moments are exact when ``alpha=0``.

    Parameters
    ----------
    beta: float
        Power exponent.
    alpha: float
        Logarithmic exponent.
    upper: float, optional
        The weight vanishes for ``t >= upper``.
    """

    def __init__(self, beta=0.0, alpha=0.0, upper=None):
        self.beta = beta
        self.alpha = alpha
        self.upper = upper
        if upper is not None and upper <= 0:
            raise ValueError("Weight cutoff must be positive, got {}".format(upper))

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = t ** self.beta * (1.0 + np.abs(np.log(t))) ** self.alpha
        return np.where(t < self.support_end, out, 0.0)

    def log_weight(self, log_t):
        out = self.beta * log_t + self.alpha * np.log1p(np.abs(log_t))
        return np.where(log_t < np.log(self.support_end), out, -np.inf)

    @property
    def support_end(self):
        return np.inf if self.upper is None else float(self.upper)

    @property
    def asymptotics(self):
        return Asymptotics(float(self.beta), float(self.alpha), float(self.beta),
                           float(self.alpha), self.upper is not None)

    def moment(self, a, b, k=0.0):
        if self.alpha == 0:
            a, b = _pair(a, b)
            return power_moment(a, np.minimum(b, self.support_end), k + self.beta)
        return super().moment(a, b, k)

    @property
    def text(self):
        if self.upper is not None:
            return "logpow({:g},{:g},{:g})".format(self.beta, self.alpha, self.upper)
        if self.beta == 0 and self.alpha == 0:
            return "const"
        if self.alpha == 0:
            return "pow({:g})".format(self.beta)
        if self.beta == 0:
            return "log({:g})".format(self.alpha)
        return "logpow({:g},{:g})".format(self.beta, self.alpha)


def constant_weight():
    return LogPowerWeight(0.0, 0.0)


def power_weight(beta):
    return LogPowerWeight(beta, 0.0)


def log_weight(alpha):
    return LogPowerWeight(0.0, alpha)


class ExponentialWeight(WeightFunction):
    """ The weight ``exp(-t)`` """

    def __call__(self, t):
        return np.exp(-np.asarray(t, dtype=float))

    def log_weight(self, log_t):
        return -np.exp(log_t)

    @property
    def asymptotics(self):
        return Asymptotics(0.0, 0.0, -np.inf, 0.0, True)

    def moment(self, a, b, k=0.0):
        a, b = _pair(a, b)
        out = np.zeros(a.shape)
        live = b > a
        s = k + 1.0
        if s > 0:
            lower = special.gammainc(s, b[live]) - special.gammainc(s, a[live])
            upper = special.gammaincc(s, a[live]) - special.gammaincc(s, b[live])
            out[live] = special.gamma(s) * np.where(a[live] < s, lower, upper)
            return out
        out[live & (a <= 0)] = np.inf
        body = live & (a > 0)
        if np.any(body):
            ab, bb = a[body], b[body]
            finite = np.isfinite(bb)
            part = np.zeros(ab.shape)
            part[finite] = self._finite(ab[finite], bb[finite], k)
            ai = ab[~finite]
            part[~finite] = np.exp(-ai) * (
                (ai[:, None] + _LAG_NODES[None, :]) ** k @ _LAG_WEIGHTS)
            out[body] = part
        return out

    @property
    def text(self):
        return "exp"


class PiecewisePowerWeight(WeightFunction):
    """ ``t**below`` on (0, breakpoint) continued by ``c t**above`` beyond it """

    def __init__(self, breakpoint=1.0, below=0.0, above=0.0):
        self.breakpoint = breakpoint
        self.below = below
        self.above = above
        if breakpoint <= 0:
            raise ValueError("Breakpoint must be positive, got {}".format(breakpoint))

    @property
    def _scale(self):
        return self.breakpoint ** (self.below - self.above)

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.where(t < self.breakpoint, t ** self.below,
                            self._scale * t ** self.above)

    @property
    def asymptotics(self):
        return Asymptotics(float(self.below), 0.0, float(self.above), 0.0, False)

    def moment(self, a, b, k=0.0):
        a, b = _pair(a, b)
        bp = self.breakpoint
        lower = power_moment(a, np.minimum(b, bp), k + self.below)
        upper = power_moment(np.maximum(a, bp), b, k + self.above)
        with np.errstate(invalid="ignore"):
            return np.where(a < bp, lower, 0.0) + np.where(b > bp, self._scale * upper, 0.0)

    @property
    def text(self):
        return "piecewise({:g},{:g},{:g})".format(self.breakpoint, self.below, self.above)


class TabulatedWeight(WeightFunction):
    """ Weight given by samples, linear between them.

    Below the first sample the weight is held constant. Beyond the last one
    it follows ``tail = (c, e)``, i.e. ``c t**e``, when given and is held
    constant otherwise; without tail metadata convergence at infinity is
    undecidable.
    """

    closed_form = False

    def __init__(self, t=(1.0, 2.0), values=(1.0, 1.0), tail=None):
        self.t = t
        self.values = values
        self.tail = tail
        knots, vals = self._table
        if knots.size < 2 or np.any(np.diff(knots) <= 0) or knots[0] <= 0:
            raise ValueError("Tabulated weight needs increasing positive abscissae")
        if np.any(vals <= 0):
            raise ValueError("Tabulated weight values must be positive")

    @property
    def _table(self):
        return (np.asarray(self.t, dtype=float).ravel(),
                np.asarray(self.values, dtype=float).ravel())

    def __call__(self, t):
        knots, vals = self._table
        t = np.asarray(t, dtype=float)
        out = np.interp(t, knots, vals)
        if self.tail is not None:
            c, e = self.tail
            with np.errstate(divide="ignore", invalid="ignore"):
                out = np.where(t > knots[-1], c * t ** e, out)
        return out

    @property
    def asymptotics(self):
        if self.tail is None:
            return None
        return Asymptotics(0.0, 0.0, float(self.tail[1]), 0.0, False)

    def moment(self, a, b, k=0.0):
        a, b = _pair(a, b)
        knots, vals = self._table
        t0, tn = knots[0], knots[-1]
        out = vals[0] * np.where(a < t0, power_moment(a, np.minimum(b, t0), k), 0.0)
        lo, hi = np.maximum(a, t0), np.minimum(b, tn)
        mid = hi > lo
        if np.any(mid):
            out[mid] += self._finite(lo[mid], hi[mid], k)
        beyond = b > tn
        if np.any(beyond):
            start = np.maximum(a[beyond], tn)
            if self.tail is None:
                out[beyond] += vals[-1] * power_moment(start, b[beyond], k)
            else:
                c, e = self.tail
                out[beyond] += c * power_moment(start, b[beyond], k + e)
        return out

    @property
    def text(self):
        return "tabulated({})".format(len(self._table[0]))


class PowerTimesWeight(WeightFunction):
    """ The weight ``t**gamma base(t)`` """

    def __init__(self, base=None, gamma=0.0):
        self.base = base
        self.gamma = gamma

    @property
    def closed_form(self):
        return self.base.closed_form

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            return t ** self.gamma * self.base(t)

    def log_weight(self, log_t):
        return self.gamma * log_t + self.base.log_weight(log_t)

    @property
    def support_end(self):
        return self.base.support_end

    @property
    def asymptotics(self):
        asym = self.base.asymptotics
        if asym is None:
            return None
        return asym._replace(e0=asym.e0 + self.gamma, e_inf=asym.e_inf + self.gamma)

    def moment(self, a, b, k=0.0):
        return self.base.moment(a, b, k + self.gamma)

    @property
    def text(self):
        return "pow({:g})*{}".format(self.gamma, self.base.text)


def times_power(w, gamma):
    """ ``t**gamma w(t)``, kept in log-power form whenever possible """
    if gamma == 0:
        return w
    if isinstance(w, LogPowerWeight):
        return LogPowerWeight(w.beta + gamma, w.alpha, w.upper)
    if isinstance(w, PowerTimesWeight):
        return times_power(w.base, w.gamma + gamma)
    return PowerTimesWeight(w, gamma)


class _ConjugateWeight(WeightFunction):
    """ ``v(s)**(-1/(p-1)) s**(-p/(p-1))`` for a general ``v`` """

    def __init__(self, v=None, p=2.0):
        self.v = v
        self.p = p

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        r = 1.0 / (self.p - 1.0)
        with np.errstate(divide="ignore", invalid="ignore"):
            return self.v(t) ** (-r) * t ** (-self.p * r)

    def log_weight(self, log_t):
        r = 1.0 / (self.p - 1.0)
        return -r * self.v.log_weight(log_t) - self.p * r * log_t

    @property
    def asymptotics(self):
        asym = self.v.asymptotics
        if asym is None:
            return None
        r = 1.0 / (self.p - 1.0)
        return Asymptotics(-r * asym.e0 - self.p * r, -r * asym.l0,
                           -r * asym.e_inf - self.p * r, -r * asym.l_inf, False)


def _conjugate(v, p):
    if isinstance(v, PowerTimesWeight):
        v = times_power(v.base, v.gamma)
    if isinstance(v, LogPowerWeight) and v.upper is None:
        r = 1.0 / (p - 1.0)
        return LogPowerWeight(-(v.beta + p) * r, -v.alpha * r)
    return _ConjugateWeight(v, p)


class LemmaWeight(WeightFunction):
    """ The weight ``u = d/dt (1 + K(t))**(1-p)`` on (0, 1] built from ``v``.

    ``K(t) = int_t^1 v(s)**(-1/(p-1)) s**(-p/(p-1)) ds``, so that
    ``u = (p-1) (1+K)**(-p) v**(-1/(p-1)) t**(-p/(p-1))``. Tabulated ``v``
    are differentiated numerically on a geometric grid instead.

    Parameters
    ----------
    v: WeightFunction
    p: float
        Exponent, ``p > 1``.
    """

    def __init__(self, v=None, p=2.0):
        self.v = v
        self.p = p
        if p <= 1:
            raise ValueError("The weight construction requires p > 1, got {}".format(p))

    @property
    def closed_form(self):
        return self.v.closed_form

    @property
    def support_end(self):
        return 1.0

    @property
    def inner(self):
        return _conjugate(self.v, self.p)

    def K(self, t):
        """ ``int_t^1`` of the conjugate weight, ``inf`` where it diverges """
        t = np.asarray(t, dtype=float)
        flat = np.atleast_1d(t)
        return self.inner.moment(flat, np.ones(flat.shape), 0.0).reshape(t.shape)

    @property
    def K0(self):
        return float(self.inner.moment(0.0, 1.0, 0.0)[0])

    def _U(self, t):
        """ ``(1 + K(t))**(1-p)`` """
        with np.errstate(divide="ignore", over="ignore"):
            return (1.0 + self.K(np.minimum(t, 1.0))) ** (1.0 - self.p)

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        if not self.closed_form:
            return self._numeric(t)
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            u = (self.p - 1.0) * (1.0 + self.K(np.minimum(t, 1.0))) ** (-self.p) \
                * self.inner(t)
        return np.where((t > 0) & (t <= 1.0), u, 0.0)

    def _numeric(self, t):
        grid = np.geomspace(1e-8, 1.0, 2049)
        u = np.gradient(self._U(grid), grid)
        return np.where((t > 0) & (t <= 1.0), np.interp(t, grid, u), 0.0)

    def log_weight(self, log_t):
        with np.errstate(divide="ignore"):
            return np.log(self(np.exp(log_t)))

    @property
    def asymptotics(self):
        asym = self.inner.asymptotics
        if asym is None:
            return None
        er, lr, p = asym.e0, asym.l0, self.p
        if er > -1 or (er == -1 and lr < -1):
            e0, l0 = er, lr
        elif er < -1:
            e0, l0 = er - p * (er + 1.0), lr - p * lr
        else:
            e0, l0 = -1.0, lr - p * (lr + 1.0)
        return Asymptotics(e0, l0, 0.0, 0.0, True)

    def primitive(self, t):
        t = np.asarray(t, dtype=float)
        K0 = self.K0
        start = 0.0 if not np.isfinite(K0) else (1.0 + K0) ** (1.0 - self.p)
        with np.errstate(invalid="ignore"):
            return np.where(t > 0, self._U(np.maximum(t, 1e-300)) - start, 0.0)

    def moment(self, a, b, k=0.0):
        if k == 0:
            a, b = _pair(a, b)
            return np.maximum(self.primitive(np.minimum(b, 1.0))
                              - self.primitive(np.minimum(a, 1.0)), 0.0)
        return super().moment(a, b, k)

    def bound(self, t):
        """ ``(int_0^t u)**(1/p) K(t)**((p-1)/p)``, at most one for every t """
        t = np.asarray(t, dtype=float)
        p = self.p
        return self.primitive(t) ** (1.0 / p) * self.K(t) ** ((p - 1.0) / p)

    @property
    def text(self):
        return "lemma({},{:g})".format(self.v.text, self.p)


def weight_u_from_v(v, p):
    """ The weight ``u`` paired with ``v`` and ``p`` by the oscillation lemma """
    if p <= 1:
        raise ValueError("Invalid exponent p={}. Accepted values are p > 1".format(p))
    return LemmaWeight(v, p)


def parse_weight(text):
    """ Builds a weight from its text encoding.

    Accepted forms: ``const``, ``exp``, ``pow(beta)``, ``log(alpha)``,
    ``logpow(beta,alpha)``, ``logpow(beta,alpha,upper)`` and
    ``piecewise(breakpoint,below,above)``.
    """
    text = text.strip().replace(" ", "")
    name, _, rest = text.partition("(")
    args = [float(x) for x in rest.rstrip(")").split(",") if x] if rest else []
    builders = {
        "const": (0, lambda: constant_weight()),
        "exp": (0, lambda: ExponentialWeight()),
        "pow": (1, lambda b: power_weight(b)),
        "log": (1, lambda a: log_weight(a)),
        "logpow": ((2, 3), lambda *x: LogPowerWeight(*x)),
        "piecewise": (3, lambda *x: PiecewisePowerWeight(*x)),
    }
    if name not in builders:
        raise ValueError(
            "Invalid weight {}. Accepted values are {}".format(
                text, ", ".join(sorted(builders))))
    arity, build = builders[name]
    arity = arity if isinstance(arity, tuple) else (arity,)
    if len(args) not in arity:
        raise ValueError("Weight {} expects {} argument(s)".format(name, " or ".join(map(str, arity))))
    return build(*args)


def resolve_weight(w):
    """ Accepts a weight, its text encoding or ``None`` (the constant weight) """
    if w is None:
        return constant_weight()
    if isinstance(w, str):
        return parse_weight(w)
    if isinstance(w, WeightFunction):
        return w
    raise TypeError("Expected a WeightFunction or its text encoding, got {}".format(
        type(w).__name__))


def log_power_exponents(w):
    """ ``(beta, alpha)`` when ``w`` is an uncut log-power weight, else ``None`` """
    if isinstance(w, PowerTimesWeight):
        w = times_power(w.base, w.gamma)
    if isinstance(w, LogPowerWeight) and w.upper is None:
        return float(w.beta), float(w.alpha)
    return None
