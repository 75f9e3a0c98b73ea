# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
""" Inequalities with different integrability ``p_i`` in each direction.

The exponents enter through their weighted harmonic mean ``p_bar``, with
``1/p_bar = (1/D) sum_i (A_i + 1) / p_i``.
"""
import numpy as np

from anisobolev.core.measure import MonomialWeight
from anisobolev.spaces.base import grid_sup
from anisobolev.spaces.catalog import (
    compare_to_dimension, harmonic_mean_exponent, sobolev_exponent)
from anisobolev.spaces.convexified import AngleConvexified, Convexified
from anisobolev.spaces.lorentz import LorentzPQ
from anisobolev.spaces.weights import LogPowerWeight
from anisobolev.inequalities.base import (
    CaseRefused, Sides, additive_term, averaged_curve, case, exponents_param,
    gradient_product, lebesgue_product, oscillation_curve, require_branch,
    require_hypotheses, space_param, sup_norm, verify_case)


def _p_bar(w, params):
    p_vec = exponents_param(params, w)
    return p_vec, harmonic_mean_exponent(w.exponents, p_vec)


# convexified spaces X^(p)

def _convexified_gate(w, **params):
    require_hypotheses(space_param(params))
    _p_bar(w, params)


def _embedding_gate(wanted):
    def gate(w, **params):
        _convexified_gate(w, **params)
        _, p_bar = _p_bar(w, params)
        require_branch(space_param(params), p_bar / w.D, wanted)
    return gate


def _convexified_product(terms, params):
    X = space_param(params)
    p_vec, _ = _p_bar(terms.weight, params)
    return gradient_product(terms, [Convexified(X, p) for p in p_vec])


@case("T43.Xq", gate=_convexified_gate)
def _convexified_oscillation(terms, **params):
    _, p_bar = _p_bar(terms.weight, params)
    lhs = Convexified(space_param(params), p_bar).norm(oscillation_curve(terms))
    return Sides(lhs, _convexified_product(terms, params), np.nan)


@case("T43.emb1", gate=_embedding_gate("above"))
def _convexified_embedding(terms, **params):
    _, p_bar = _p_bar(terms.weight, params)
    lhs = Convexified(space_param(params), p_bar).norm(averaged_curve(terms))
    return Sides(lhs, _convexified_product(terms, params), np.nan)


@case("T43.emb2", gate=_embedding_gate("below"))
def _convexified_bounded(terms, **params):
    rhs = _convexified_product(terms, params) + additive_term(terms)
    return Sides(sup_norm(terms), rhs, np.nan)


# X = L^1: the Lebesgue routing on p_bar against D

def _routing_gate(wanted):
    def gate(w, **params):
        p_vec = exponents_param(params, w)
        got = compare_to_dimension(w.exponents, p_vec)
        if got != wanted:
            p_bar = harmonic_mean_exponent(w.exponents, p_vec)
            relation = {-1: "<", 0: "=", 1: ">"}
            raise CaseRefused("p_bar = {:.6g} {} D = {:.6g}".format(
                p_bar, relation[got], w.D))
    return gate


def _log_integral(g, D):
    """ ``(int_0^1 (g(t) / (1 + ln(1/t)))^D dt / t)^{1/D}`` """
    weight = LogPowerWeight(beta=-1.0, alpha=-D, upper=1.0)
    return g.power(D).integral(weight) ** (1.0 / D)


@case("P44.i", gate=_routing_gate(-1))
def _sobolev(terms, **params):
    p_vec, p_bar = _p_bar(terms.weight, params)
    target = LorentzPQ(sobolev_exponent(p_bar, terms.D), p_bar)
    return Sides(target.norm(terms.profile_), lebesgue_product(terms, p_vec), np.nan)


@case("P44.ii", gate=_routing_gate(0))
def _critical(terms, **params):
    p_vec = exponents_param(params, terms.weight)
    lhs = _log_integral(terms.profile_.double_star(), terms.D)
    return Sides(lhs, lebesgue_product(terms, p_vec) + additive_term(terms), np.nan)


@case("P44.iii", gate=_routing_gate(1))
def _supercritical(terms, **params):
    p_vec = exponents_param(params, terms.weight)
    return Sides(sup_norm(terms), lebesgue_product(terms, p_vec) + additive_term(terms),
                 np.nan)


def _trudinger_gate(w, **params):
    _routing_gate(0)(w, **params)


def _ordering_gate(w, **params):
    _trudinger_gate(w, **params)
    if w.D <= 1:
        raise CaseRefused("D = 1: the logarithmic integral diverges")


def _trudinger_sup(terms):
    """ ``sup_{t < M} f**(t) / (1 + ln(M/t))^{(D-1)/D}`` with ``M = mu(box)`` """
    D = terms.D
    M = terms.rearrangement_.cells_.total_mass
    g = terms.profile_.double_star().dilate(1.0 / M)

    def factor(tau):
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.where(tau < 1.0, (1.0 + np.log(1.0 / tau)) ** (-(D - 1.0) / D), 0.0)

    value, where = grid_sup(g, factor)
    return value, where * M, g, M


@case("Trudinger", gate=_trudinger_gate)
def _trudinger(terms, **params):
    p_vec = exponents_param(params, terms.weight)
    lhs, where, _, M = _trudinger_sup(terms)
    rhs = lebesgue_product(terms, p_vec) + terms.profile_.total() / M
    return Sides(lhs, rhs, where)


@case("Trudinger.ordering", gate=_ordering_gate)
def _trudinger_ordering(terms, **params):
    lhs, where, g, _ = _trudinger_sup(terms)
    return Sides(lhs, _log_integral(g, terms.D), where)


# angle spaces X<p>

def _angle_gate(w, **params):
    X = space_param(params)
    require_hypotheses(X)
    p_vec, p_bar = _p_bar(w, params)
    for r in (p_bar,) + p_vec:
        if AngleConvexified(X, r).boyd_indices() is None:
            raise CaseRefused(
                "the running average of |f|^{:g} is not bounded on {}^(1/{:g})".format(
                    r, X.text, r))


def _angle_branch_gate(wanted):
    def gate(w, **params):
        _angle_gate(w, **params)
        _, p_bar = _p_bar(w, params)
        require_branch(AngleConvexified(space_param(params), p_bar), 1.0 / w.D, wanted)
    return gate


def _angle_product(terms, params):
    X = space_param(params)
    p_vec, _ = _p_bar(terms.weight, params)
    return gradient_product(terms, [AngleConvexified(X, p) for p in p_vec])


@case("T46.angle", gate=_angle_gate)
def _angle_oscillation(terms, **params):
    _, p_bar = _p_bar(terms.weight, params)
    lhs = AngleConvexified(space_param(params), p_bar).norm(oscillation_curve(terms))
    return Sides(lhs, _angle_product(terms, params), np.nan)


@case("T46.i", gate=_angle_branch_gate("above"))
def _angle_embedding(terms, **params):
    _, p_bar = _p_bar(terms.weight, params)
    lhs = AngleConvexified(space_param(params), p_bar).norm(averaged_curve(terms))
    return Sides(lhs, _angle_product(terms, params), np.nan)


@case("T46.ii", gate=_angle_branch_gate("below"))
def _angle_bounded(terms, **params):
    return Sides(sup_norm(terms), _angle_product(terms, params) + additive_term(terms),
                 np.nan)


def _as_weight(w):
    return w if isinstance(w, MonomialWeight) else MonomialWeight(tuple(w))


def verify_t43(f, spec, p_vec, w, case="Xq", resolution=None, grid_size=None,
               stability=True, box=None):
    """ Convexified oscillation inequality in ``spec^(p_bar)``.

    Parameters
    ----------
    f: Field
    spec: SpaceSpec or str
        The base r.i. space ``X``.
    p_vec: sequence of float
        ``p_i >= 1``, one per coordinate.
    w: MonomialWeight
    case: str
        "Xq", "emb1" or "emb2".
    """
    return verify_case("T43.{}".format(case), f, _as_weight(w), resolution, grid_size,
                       stability, box, space=space_param({"space": spec}), p_vec=p_vec)


def verify_p44(f, p_vec, w, resolution=None, grid_size=None, stability=True, box=None):
    """ The Lebesgue case routed on ``p_bar`` against ``D`` """
    w = _as_weight(w)
    chosen = {-1: "P44.i", 0: "P44.ii", 1: "P44.iii"}[
        compare_to_dimension(w.exponents, p_vec)]
    return verify_case(chosen, f, w, resolution, grid_size, stability, box, p_vec=p_vec)


def verify_trudinger(f, w, p_vec, resolution=None, grid_size=None, stability=True,
                     box=None):
    """ Trudinger inequality on the quadrature box, refused unless ``p_bar = D``.

    Returns
    -------
    tuple of VerificationReport
        Rows ``Trudinger`` and ``Trudinger.ordering``.
    """
    return tuple(verify_case(c, f, _as_weight(w), resolution, grid_size, stability, box,
                             p_vec=p_vec)
                 for c in ("Trudinger", "Trudinger.ordering"))


def verify_t46(f, spec, p_vec, w, case="angle", resolution=None, grid_size=None,
               stability=True, box=None):
    """ Oscillation inequality in the angle space ``spec<p_bar>``.

    ``case`` is "angle", "i" or "ii".
    """
    return verify_case("T46.{}".format(case), f, _as_weight(w), resolution, grid_size,
                       stability, box, space=space_param({"space": spec}), p_vec=p_vec)
