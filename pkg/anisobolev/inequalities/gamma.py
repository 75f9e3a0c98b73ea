# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
""" Inequalities in the ``Gamma^p(w)`` and ``G Gamma(p, m, w)`` spaces.

Both families close the product of gradient norms with the harmonic mean
``p_bar`` itself as the target exponent, not ``p_bar*``. The choice is
recorded with the other open decisions in DESIGN.md.
"""
import numpy as np

from anisobolev.core.measure import MonomialWeight
from anisobolev.spaces.catalog import harmonic_mean_exponent
from anisobolev.spaces.gamma import GGamma, Gamma
from anisobolev.spaces.weights import LemmaWeight, times_power
from anisobolev.inequalities.base import (
    CaseRefused, Sides, additive_term, branch, case, exponents_param, gradient_product,
    oscillation_curve, require_branch, require_hypotheses, sup_norm, verify_case,
    weight_param)


def _gamma_spaces(w, params):
    """ The target space and one space per coordinate """
    wt = weight_param(params)
    p_vec = exponents_param(params, w)
    p_bar = harmonic_mean_exponent(w.exponents, p_vec)
    if "m" in params and params["m"] is not None:
        m = float(params["m"])
        return GGamma(p_bar, m, wt), [GGamma(p, m, wt) for p in p_vec]
    return Gamma(p_bar, wt), [Gamma(p, wt) for p in p_vec]


def _params(kind, params):
    params = dict(params)
    if kind == "Gamma":
        params.pop("m", None)
    else:
        params["m"] = params.get("m", None) or 2.0
    return params


def _gates(kind):
    def main(w, **params):
        target, factors = _gamma_spaces(w, _params(kind, params))
        require_hypotheses(target, *factors)

    def branch_gate(wanted):
        def gate(w, **params):
            params = _params(kind, params)
            main(w, **params)
            target, _ = _gamma_spaces(w, params)
            require_branch(target, 1.0 / w.D, wanted)
            if wanted is None:
                exponent = _lemma_exponent(target)
                if exponent <= 1:
                    raise CaseRefused(
                        "exponent {:.6g}: the weight construction needs an exponent > 1"
                        .format(exponent))
        return gate
    return main, branch_gate


def _lemma_exponent(target):
    return target.m if isinstance(target, GGamma) else target.p


def _register(kind):
    main_gate, branch_gate = _gates(kind)

    @case(kind + ".main", gate=main_gate)
    def _main(terms, **params):
        target, factors = _gamma_spaces(terms.weight, _params(kind, params))
        lhs = target.norm(oscillation_curve(terms))
        return Sides(lhs, gradient_product(terms, factors), np.nan)

    @case(kind + ".i", gate=branch_gate("above"))
    def _embedding(terms, **params):
        target, factors = _gamma_spaces(terms.weight, _params(kind, params))
        lhs = target.norm(terms.profile_.scale_by_power(-1.0 / terms.D))
        return Sides(lhs, gradient_product(terms, factors), np.nan)

    @case(kind + ".ii", gate=branch_gate("below"))
    def _bounded(terms, **params):
        _, factors = _gamma_spaces(terms.weight, _params(kind, params))
        rhs = gradient_product(terms, factors) + additive_term(terms)
        return Sides(sup_norm(terms), rhs, np.nan)

    @case(kind + ".iii", gate=branch_gate(None))
    def _remaining(terms, **params):
        target, factors = _gamma_spaces(terms.weight, _params(kind, params))
        r = _lemma_exponent(target)
        u = LemmaWeight(times_power(target.weight_, -r / terms.D), r)
        lhs = terms.profile_.double_star().power(r).integral(u) ** (1.0 / r)
        rhs = gradient_product(terms, factors) + additive_term(terms)
        return Sides(lhs, rhs, np.nan)


_register("Gamma")
_register("GGamma")


def _verify(kind, f, w, params, resolution, grid_size, stability, box):
    w = w if isinstance(w, MonomialWeight) else MonomialWeight(tuple(w))
    target, _ = _gamma_spaces(w, _params(kind, params))
    label = {"above": "i", "below": "ii", None: "iii"}[
        branch(target.boyd_indices(), 1.0 / w.D)]
    return tuple(verify_case(c, f, w, resolution, grid_size, stability, box, **params)
                 for c in (kind + ".main", "{}.{}".format(kind, label)))


def verify_gamma(f, w, p_vec, weight=None, resolution=None, grid_size=None,
                 stability=True, box=None):
    """ Main row and index-selected branch in ``Gamma^{p_bar}(weight)``.

    Parameters
    ----------
    f: Field
    w: MonomialWeight
    p_vec: sequence of float
    weight: WeightFunction or str, optional
        Admissible for every exponent involved.

    Returns
    -------
    tuple of VerificationReport
    """
    return _verify("Gamma", f, w, dict(p_vec=p_vec, weight=weight),
                   resolution, grid_size, stability, box)


def verify_ggamma(f, w, p_vec, m=2.0, weight=None, resolution=None, grid_size=None,
                  stability=True, box=None):
    """ Main row and index-selected branch in ``G Gamma(p_bar, m, weight)`` """
    return _verify("GGamma", f, w, dict(p_vec=p_vec, m=m, weight=weight),
                   resolution, grid_size, stability, box)
