# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
""" Case registry, report rows and the two-resolution driver.

Every inequality is registered under a case id with an optional gate,
checked before any sampling, and an evaluator returning both sides on one
fitted :class:`SobolevTerms`. :func:`verify_case` runs the evaluator at the
requested resolution and at twice that resolution and records the relative
change of the ratio.
"""
import warnings
from collections import namedtuple

import numpy as np

from anisobolev import options
from anisobolev.core.diagnostics import HypothesisWarning, StabilityWarning
from anisobolev.core.field import as_field
from anisobolev.core.measure import MonomialWeight
from anisobolev.core.rearrangement import oscillation
from anisobolev.sobolev.terms import sobolev_terms
from anisobolev.spaces.base import SpaceSpec
from anisobolev.spaces.catalog import parse_space
from anisobolev.spaces.lebesgue import L1plusLinf, Linf, Lp
from anisobolev.spaces.weights import WeightFunction, resolve_weight
from anisobolev.utils.utility_functions import relative_change

PASS = "pass"
REFUSED = "refused"
ANOMALY = "anomaly"
UNSTABLE = "unstable"

ANCHORS = {
    "T32.i": "Poincare inequality, L^{D/(D-1)} against the sum of gradient norms",
    "T32.ii": "Poincare inequality in multiplicative form",
    "T32.iii": "Maz'ya-Talenti inequality in multiplicative form, level bands",
    "T32.iv": "Oscillation inequality in multiplicative form, running integrals",
    "T32.v": "L^{D/(D-1),1} norm against the gradient product",
    "T32.identity": "L^{D/(D-1),1} norm as D/(D-1) times the weighted oscillation integral",
    "T32.embedding": "Embedding of L^{D/(D-1),1} into L^{D/(D-1)}",
    "T32.truncation": "Truncation between two levels against the band gradient masses",
    "R99.pointwise": "Pointwise oscillation inequality in multiplicative form",
    "R77.gradient": "Classical oscillation inequality against |grad f|**",
    "R77.chain": "Holder step of the oscillation chain against averaged |f_xi|*",
    "T23.i": "Oscillation norm equivalent to ||t^{-1/D} f**||_X above index 1/D",
    "T23.ii": "L^inf bound by the oscillation norm below index 1/D",
    "T43.Xq": "Oscillation norm in the p_bar-convexification of X",
    "T43.emb1": "Embedding into t^{-1/D} f** in X^(p_bar) above index p_bar/D",
    "T43.emb2": "L^inf bound below index p_bar/D",
    "P44.i": "Lorentz L^{p_bar*,p_bar} bound for p_bar < D",
    "P44.ii": "Logarithmic integral bound for p_bar = D",
    "P44.iii": "L^inf bound for p_bar > D",
    "Trudinger": "Anisotropic Trudinger inequality on the support box",
    "Trudinger.ordering": "Trudinger supremum against the logarithmic integral",
    "T46.angle": "Oscillation norm in the angle space X<p_bar>",
    "T46.i": "Embedding into t^{-1/D} f** in X<p_bar> above index 1/D",
    "T46.ii": "L^inf bound in X<p_bar> below index 1/D",
    "T47.lorentz.main": "Oscillation norm in the weighted Lorentz space",
    "T47.lorentz.i": "Weighted Lorentz Lambda^{p_bar*,q_bar}(w) bound",
    "T47.lorentz.ii": "L^inf bound from weighted Lorentz gradients",
    "T47.lorentz.iii": "Weighted f** integral on (0, 1) in the remaining cases",
    "Gamma.main": "Oscillation norm in Gamma^{p_bar}(w)",
    "Gamma.i": "Gamma^{p_bar}(w) bound of t^{-1/D} f*",
    "Gamma.ii": "L^inf bound from Gamma gradients",
    "Gamma.iii": "Weighted f** integral on (0, 1) in the remaining cases",
    "GGamma.main": "Oscillation norm in G Gamma(p_bar, m, w)",
    "GGamma.i": "G Gamma(p_bar, m, w) bound of t^{-1/D} f*",
    "GGamma.ii": "L^inf bound from G Gamma gradients",
    "GGamma.iii": "Weighted f** integral on (0, 1) in the remaining cases",
}

CASE_IDS = tuple(ANCHORS)

Sides = namedtuple("Sides", ["lhs", "rhs", "worst_t"])

_BOUNDARY_TOL = 1e-12


class CaseRefused(Exception):
    """ Raised by gates and evaluators when a hypothesis fails """


class VerificationReport:
    """ One row of the verifier output.

    Parameters
    ----------
    case_id: str
    lhs, rhs: float
        Both sides at the first resolution.
    worst_t: float
        Point attaining the worst ratio of pointwise and cumulative cases,
        ``nan`` otherwise.
    resolution: tuple
        Resolutions used, the requested one first.
    stability: float
        Relative change of the ratio under resolution doubling.
    status: str
        One of "pass", "refused", "anomaly" or "unstable".
    reason: str
    family: str
    params: dict
    """

    columns = ("case_id", "anchor", "lhs", "rhs", "ratio", "worst_t",
               "resolution", "stability", "status", "reason", "family", "params")

    def __init__(self, case_id, lhs=np.nan, rhs=np.nan, worst_t=np.nan, resolution=(),
                 stability=np.nan, status=PASS, reason="", family="", params=None):
        self.case_id = case_id
        self.lhs = float(lhs)
        self.rhs = float(rhs)
        self.worst_t = float(worst_t)
        self.resolution = tuple(resolution)
        self.stability = float(stability)
        self.status = status
        self.reason = reason
        self.family = family
        self.params = {} if params is None else dict(params)

    @property
    def anchor(self):
        return ANCHORS[self.case_id]

    @property
    def ratio(self):
        return side_ratio(self.lhs, self.rhs)

    @property
    def failed(self):
        return self.status in (ANOMALY, UNSTABLE)

    def as_dict(self):
        return {k: getattr(self, k) for k in self.columns}

    def __repr__(self):
        return "VerificationReport({}, ratio={:.6g}, status={})".format(
            self.case_id, self.ratio, self.status)


def side_ratio(lhs, rhs):
    """ ``lhs / rhs`` with ``0 / 0 = 0`` and ``x / 0 = inf`` """
    if np.isnan(lhs) or np.isnan(rhs):
        return np.nan
    if rhs == 0:
        return 0.0 if lhs == 0 else np.inf
    return lhs / rhs


EVALUATORS = {}


def case(case_id, gate=None):
    """ Registers an evaluator ``(terms, **params) -> Sides`` under ``case_id`` """
    if case_id not in ANCHORS:
        raise ValueError("Invalid case id {}. Accepted values are {}".format(
            case_id, ", ".join(CASE_IDS)))

    def decorator(func):
        EVALUATORS[case_id] = (gate, func)
        return func
    return decorator


def check_case_ids(case_ids):
    unknown = [c for c in case_ids if c not in ANCHORS]
    if unknown:
        raise ValueError("Invalid case id {}. Accepted values are {}".format(
            ", ".join(unknown), ", ".join(CASE_IDS)))
    return list(case_ids)


def _weight(w):
    return w if isinstance(w, MonomialWeight) else MonomialWeight(tuple(w))


def doubled(resolution):
    if np.ndim(resolution) == 0:
        return 2 * int(resolution)
    return tuple(2 * int(r) for r in resolution)


def describe(params):
    """ JSON-friendly text form of a parameter bundle """
    out = {}
    for key, value in sorted(params.items()):
        if isinstance(value, (SpaceSpec, WeightFunction)):
            value = value.text
        elif isinstance(value, (tuple, list, np.ndarray)):
            value = [float(v) for v in np.ravel(value)]
        elif isinstance(value, np.generic):
            value = value.item()
        out[key] = value
    return out


def verify_case(case_id, f, w, resolution=None, grid_size=None, stability=True,
                box=None, **params):
    """ Evaluates one case at ``resolution`` and twice ``resolution``.

    Parameters
    ----------
    case_id: str
        One of ``CASE_IDS``.
    f: Field
    w: MonomialWeight or sequence of exponents
    resolution: int or tuple, optional
        Defaults to ``options.default_resolution(n)``.
    grid_size: int, optional
    stability: bool
        When False only the first resolution is evaluated.
    box: BoxDomain, optional
    params:
        Case parameters: ``p``, ``p_vec``, ``q_vec``, ``m``, ``weight``,
        ``space``. Parameters a case does not use are ignored.

    Returns
    -------
    VerificationReport
    """
    check_case_ids([case_id])
    gate, evaluate = EVALUATORS[case_id]
    w = _weight(w)
    field = as_field(f, box)
    if resolution is None:
        resolution = options.default_resolution(w.n)
    resolutions = [resolution, doubled(resolution)] if stability else [resolution]
    family = getattr(field, "tag", None) or type(field).__name__
    meta = dict(resolution=tuple(resolutions), family=family, params=describe(params))
    sides = []
    try:
        if gate is not None:
            gate(w, **params)
        for r in resolutions:
            terms = sobolev_terms(field, w, r, grid_size, box)
            if terms.profile_.is_empty:
                sides.append(Sides(0.0, 0.0, np.nan))
            else:
                sides.append(Sides(*(float(x) for x in evaluate(terms, **params))))
    except CaseRefused as refusal:
        warnings.warn("{} refused: {}".format(case_id, refusal), HypothesisWarning)
        return VerificationReport(case_id, status=REFUSED, reason=str(refusal), **meta)
    lhs, rhs, worst_t = sides[0]
    ratios = [side_ratio(s.lhs, s.rhs) for s in sides]
    change = relative_change(ratios[0], ratios[1]) if len(ratios) > 1 else np.nan
    report = VerificationReport(case_id, lhs, rhs, worst_t, stability=change, **meta)
    if not (np.isfinite(lhs) and np.isfinite(rhs)):
        report.status = ANOMALY
        report.reason = "non-finite side: lhs={:.6g}, rhs={:.6g}".format(lhs, rhs)
    elif rhs == 0 and lhs > 0:
        report.status = ANOMALY
        report.reason = "right-hand side vanishes while lhs={:.6g}".format(lhs)
    elif change > options.STABILITY_TOL:
        report.status = UNSTABLE
        report.reason = "ratio moved {:.3g} under resolution doubling".format(change)
        warnings.warn("{}: {}".format(case_id, report.reason), StabilityWarning)
    return report


# shared pieces of the evaluators

def worst(lhs, rhs, t):
    """ Sides at the point of largest ratio; ``0/0`` points count as zero """
    lhs, rhs, t = (np.asarray(a, dtype=float) for a in (lhs, rhs, t))
    if not lhs.size:
        return Sides(0.0, 0.0, np.nan)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(rhs > 0, lhs / rhs, np.where(lhs > 0, np.inf, 0.0))
    i = int(np.argmax(ratio))
    return Sides(float(lhs[i]), float(rhs[i]), float(t[i]))


def poincare_exponent(D):
    """ ``D / (D - 1)``, infinite when ``D = 1`` """
    return np.inf if D <= 1 else D / (D - 1.0)


def oscillation_curve(terms, smooth=False):
    """ ``t^{-1/D} O(f, t)`` """
    return oscillation(terms.profile_, smooth=smooth).scale_by_power(-1.0 / terms.D)


def averaged_curve(terms):
    """ ``t^{-1/D} f**(t)`` """
    return terms.profile_.double_star().scale_by_power(-1.0 / terms.D)


def gradient_product(terms, spaces):
    """ ``prod_i ||f_{x_i}||_{spaces[i]}^{(A_i + 1) / D}`` """
    norms = np.array([s.norm(g) for s, g in zip(spaces, terms.gradient_profiles_)])
    return float(np.prod(norms ** terms.theta))


def l1_product(terms):
    return float(np.prod(terms.gradient_l1_ ** terms.theta))


def sup_norm(terms):
    return Linf().norm(terms.profile_)


def additive_term(terms):
    """ ``||f||_{L^1 + L^inf}`` """
    return L1plusLinf().norm(terms.profile_)


def lebesgue_product(terms, p_vec):
    return gradient_product(terms, [Lp(p) for p in p_vec])


def space_param(params, default="lp:p=1"):
    space = params.get("space", None)
    space = default if space is None else space
    return parse_space(space) if isinstance(space, str) else space


def weight_param(params):
    return resolve_weight(params.get("weight", None))


def exponents_param(params, w, key="p_vec", default=None):
    value = params.get(key, None)
    if value is None:
        value = default if default is not None else (1.0,) * w.n
    value = np.broadcast_to(np.asarray(value, dtype=float).ravel(), (w.n,))
    return tuple(float(v) for v in value)


def branch(indices, limit):
    """ "above" when the lower index exceeds ``limit``, "below" when the
    upper one is under it, ``None`` otherwise """
    if indices is None:
        return None
    upper, lower = indices
    if lower > limit + _BOUNDARY_TOL:
        return "above"
    if upper < limit - _BOUNDARY_TOL:
        return "below"
    return None


def require_branch(spec, limit, wanted):
    """ Refuses unless the closed-form indices of ``spec`` select ``wanted``.

    ``wanted`` is "above", "below" or ``None`` for the remaining cases.
    """
    indices = spec.boyd_indices()
    if indices is None:
        raise CaseRefused("Boyd indices of {} have no closed form".format(spec.text))
    got = branch(indices, limit)
    if got == wanted:
        return indices
    upper, lower = indices
    if wanted == "above":
        raise CaseRefused("lower Boyd index {:.6g} of {} is not above {:.6g}".format(
            lower, spec.text, limit))
    if wanted == "below":
        raise CaseRefused("upper Boyd index {:.6g} of {} is not below {:.6g}".format(
            upper, spec.text, limit))
    raise CaseRefused("Boyd indices ({:.6g}, {:.6g}) of {} select branch {}".format(
        upper, lower, spec.text, "i" if got == "above" else "ii"))


def require_hypotheses(*specs):
    for spec in specs:
        ok, reason = spec.check_hypotheses()
        if not ok:
            raise CaseRefused(reason)
