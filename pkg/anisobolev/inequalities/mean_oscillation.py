# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
import numpy as np

from anisobolev.core.measure import MonomialWeight
from anisobolev.inequalities.base import (
    CaseRefused, Sides, additive_term, averaged_curve, branch, case, oscillation_curve,
    require_branch, require_hypotheses, space_param, sup_norm, verify_case)


def _oscillation_space(w, **params):
    X = space_param(params)
    if X.contains_constants():
        raise CaseRefused("{} contains the constant functions".format(X.text))
    require_hypotheses(X)
    return X


def _above(w, **params):
    require_branch(_oscillation_space(w, **params), 1.0 / w.D, "above")


def _below(w, **params):
    require_branch(_oscillation_space(w, **params), 1.0 / w.D, "below")


@case("T23.i", gate=_above)
def _equivalence(terms, **params):
    X = space_param(params)
    return Sides(X.norm(averaged_curve(terms)), X.norm(oscillation_curve(terms)), np.nan)


@case("T23.ii", gate=_below)
def _bounded(terms, **params):
    X = space_param(params)
    rhs = X.norm(oscillation_curve(terms)) + additive_term(terms)
    return Sides(sup_norm(terms), rhs, np.nan)


def verify_t23(spec, f, w, resolution=None, grid_size=None, stability=True, box=None):
    """ The branch of the oscillation-space theorem selected by the indices of ``spec``.

    Spaces whose upper index is below ``1/D`` get the ``L^inf`` row
    ``T23.ii``; every other space gets ``T23.i``, which is refused when
    its lower index is not above ``1/D``.

    Parameters
    ----------
    spec: SpaceSpec or str
        A space of the catalog that does not contain the constants.
    f: Field
    w: MonomialWeight or sequence of exponents
    """
    w = w if isinstance(w, MonomialWeight) else MonomialWeight(tuple(w))
    X = space_param({"space": spec})
    chosen = "T23.ii" if branch(X.boyd_indices(), 1.0 / w.D) == "below" else "T23.i"
    return verify_case(chosen, f, w, resolution, grid_size, stability, box, space=X)
