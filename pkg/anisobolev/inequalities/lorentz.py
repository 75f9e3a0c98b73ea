# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
import numpy as np

from anisobolev.core.measure import MonomialWeight
from anisobolev.spaces.catalog import (
    compare_to_dimension, harmonic_mean_exponent, sobolev_exponent)
from anisobolev.spaces.conditions import is_bp_weight
from anisobolev.spaces.lorentz import GeneralizedLorentz
from anisobolev.spaces.weights import LemmaWeight, constant_weight, log_weight, times_power
from anisobolev.inequalities.base import (
    CaseRefused, Sides, additive_term, branch, case, exponents_param, gradient_product,
    oscillation_curve, require_branch, sup_norm, verify_case, weight_param)


def _exponents(w, params):
    p_vec = exponents_param(params, w)
    q_vec = exponents_param(params, w, "q_vec", default=p_vec)
    return (p_vec, q_vec, harmonic_mean_exponent(w.exponents, p_vec),
            harmonic_mean_exponent(w.exponents, q_vec))


def _target(w, params):
    _, _, p_bar, q_bar = _exponents(w, params)
    return GeneralizedLorentz(p_bar, q_bar, weight_param(params))


def _bp_gate(w, **params):
    p_vec, _, _, _ = _exponents(w, params)
    wt = weight_param(params)
    p_min = min(p_vec)
    ok, constant = is_bp_weight(wt, p_min)
    if not ok:
        raise CaseRefused("weight {} is not in B_{:g} (constant {:.3g})".format(
            wt.text, p_min, constant))


def _branch_gate(wanted):
    def gate(w, **params):
        _bp_gate(w, **params)
        require_branch(_target(w, params), 1.0 / w.D, wanted)
        if wanted == "above":
            if compare_to_dimension(w.exponents, exponents_param(params, w)) >= 0:
                raise CaseRefused("p_bar >= D: the Sobolev exponent is undefined")
        if wanted is None:
            _, _, _, q_bar = _exponents(w, params)
            if q_bar <= 1:
                raise CaseRefused("q_bar = {:.6g}: the weight construction needs q_bar > 1"
                                  .format(q_bar))
    return gate


def _lorentz_product(terms, params):
    p_vec, q_vec, _, _ = _exponents(terms.weight, params)
    wt = weight_param(params)
    return gradient_product(terms, [GeneralizedLorentz(p, q, wt) for p, q in zip(p_vec, q_vec)])


@case("T47.lorentz.main", gate=_bp_gate)
def _lorentz_oscillation(terms, **params):
    lhs = _target(terms.weight, params).norm(oscillation_curve(terms))
    return Sides(lhs, _lorentz_product(terms, params), np.nan)


@case("T47.lorentz.i", gate=_branch_gate("above"))
def _lorentz_sobolev(terms, **params):
    _, _, p_bar, q_bar = _exponents(terms.weight, params)
    target = GeneralizedLorentz(sobolev_exponent(p_bar, terms.D), q_bar, weight_param(params))
    return Sides(target.norm(terms.profile_), _lorentz_product(terms, params), np.nan)


@case("T47.lorentz.ii", gate=_branch_gate("below"))
def _lorentz_bounded(terms, **params):
    rhs = _lorentz_product(terms, params) + additive_term(terms)
    return Sides(sup_norm(terms), rhs, np.nan)


@case("T47.lorentz.iii", gate=_branch_gate(None))
def _lorentz_remaining(terms, **params):
    _, _, p_bar, q_bar = _exponents(terms.weight, params)
    v = times_power(weight_param(params), q_bar / p_bar - q_bar / terms.D - 1.0)
    u = LemmaWeight(v, q_bar)
    lhs = terms.profile_.double_star().power(q_bar).integral(u) ** (1.0 / q_bar)
    rhs = _lorentz_product(terms, params) + additive_term(terms)
    return Sides(lhs, rhs, np.nan)


def verify_t47(f, w, p_vec, q_vec=None, weight=None, resolution=None, grid_size=None,
               stability=True, box=None):
    """ Weighted Lorentz inequalities.

    Returns the main oscillation row followed by the branch selected by
    the indices of ``Lambda^{p_bar, q_bar}(weight)``.

    Parameters
    ----------
    f: Field
    w: MonomialWeight
    p_vec, q_vec: sequence of float
        One exponent per coordinate; ``q_vec`` defaults to ``p_vec``.
    weight: WeightFunction or str, optional
        A ``B_p`` weight for ``p = min(p_vec)``; constant by default.

    Returns
    -------
    tuple of VerificationReport
    """
    w = w if isinstance(w, MonomialWeight) else MonomialWeight(tuple(w))
    params = dict(p_vec=p_vec, q_vec=q_vec, weight=weight)
    label = {"above": "i", "below": "ii", None: "iii"}[
        branch(_target(w, params).boyd_indices(), 1.0 / w.D)]
    return tuple(verify_case(c, f, w, resolution, grid_size, stability, box, **params)
                 for c in ("T47.lorentz.main", "T47.lorentz." + label))


def verify_lorentz_corollary(f, w, p_vec, q_vec=None, **kwargs):
    """ The weighted Lorentz inequalities with ``w = 1``, i.e. ``L^{p,q}`` """
    return verify_t47(f, w, p_vec, q_vec, weight=constant_weight(), **kwargs)


def verify_lorentz_zygmund_corollary(f, w, p_vec, q_vec=None, alpha=0.0, **kwargs):
    """ The weighted Lorentz inequalities with ``w = (1 + |ln t|)^alpha`` """
    return verify_t47(f, w, p_vec, q_vec, weight=log_weight(alpha), **kwargs)
