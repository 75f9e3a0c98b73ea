# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
""" Text encodings of the catalog and the exponent arithmetic of the theorems.

Space encodings::

    lp:p=2            lorentz:p=2,q=1[,form=double_star]
    lz:p=2,q=1,alpha=1                glorentz:p=2,q=1,w=pow(0.5)
    gamma:p=2,w=exp   ggamma:p=1,m=2,w=exp
    convex(2):lp:p=1  angle(2):lorentz:p=3,q=2
    l1linf            linf

Weight encodings are those of :func:`anisobolev.spaces.weights.parse_weight`.
"""
from fractions import Fraction

import numpy as np

from anisobolev.core.measure import _exponents
from anisobolev.spaces.convexified import AngleConvexified, Convexified
from anisobolev.spaces.gamma import GGamma, Gamma
from anisobolev.spaces.lebesgue import L1plusLinf, Linf, Lp
from anisobolev.spaces.lorentz import GeneralizedLorentz, LorentzPQ, LorentzZygmund

SPACE_KINDS = {
    "lp": (Lp, {"p"}),
    "lorentz": (LorentzPQ, {"p", "q", "form"}),
    "lz": (LorentzZygmund, {"p", "q", "alpha"}),
    "glorentz": (GeneralizedLorentz, {"p", "q", "w"}),
    "gamma": (Gamma, {"p", "w"}),
    "ggamma": (GGamma, {"p", "m", "w"}),
    "l1linf": (L1plusLinf, set()),
    "linf": (Linf, set()),
}


def _split_top(text):
    """ Splits on commas outside parentheses """
    parts, depth, current = [], 0, ""
    for ch in text:
        if ch == "," and depth == 0:
            parts.append(current)
            current = ""
            continue
        depth += (ch == "(") - (ch == ")")
        current += ch
    if current:
        parts.append(current)
    return parts


def _number(value):
    if value.lower() in ("inf", "infinity"):
        return np.inf
    return float(Fraction(value)) if "/" in value else float(value)


def parse_space(text):
    """ Builds a :class:`SpaceSpec` from its canonical text encoding """
    text = text.strip().replace(" ", "")
    for prefix, cls in (("convex(", Convexified), ("angle(", AngleConvexified)):
        if text.startswith(prefix):
            order, _, base = text[len(prefix):].partition("):")
            if not base:
                raise ValueError("Invalid space {}: missing base space".format(text))
            return cls(parse_space(base), _number(order))
    kind, _, rest = text.partition(":")
    if kind not in SPACE_KINDS:
        raise ValueError(
            "Invalid space {}. Accepted values are {}".format(
                text, ", ".join(sorted(SPACE_KINDS) + ["convex(r):<space>", "angle(r):<space>"])))
    cls, allowed = SPACE_KINDS[kind]
    params = {}
    for item in _split_top(rest):
        key, sep, value = item.partition("=")
        if not sep or key not in allowed:
            raise ValueError(
                "Invalid parameter {} for space {}. Accepted values are {}".format(
                    item, kind, ", ".join(sorted(allowed)) or "none"))
        if key == "w":
            params["weight"] = value
        elif key == "form":
            params["form"] = value
        else:
            params[key] = _number(value)
    return cls(**params)


def _p_fractions(A, p_vec):
    A = _exponents(A)
    p_vec = np.asarray(p_vec, dtype=float).ravel()
    if p_vec.size != A.size:
        raise ValueError(
            "One exponent per coordinate is required: got {} for n={}".format(
                p_vec.size, A.size))
    if np.any(~(p_vec >= 1)):
        raise ValueError(
            "Invalid exponents {}. Accepted values are p_i >= 1".format(list(p_vec)))
    D = sum(Fraction(a) for a in A) + A.size
    inverse = sum((Fraction(a) + 1) * (0 if np.isinf(p) else 1 / Fraction(p))
                  for a, p in zip(A, p_vec)) / D
    return inverse, D


def harmonic_mean_exponent(A, p_vec):
    """ ``p_bar`` with ``1/p_bar = (1/D) sum_i (A_i + 1) / p_i`` """
    inverse, _ = _p_fractions(A, p_vec)
    return np.inf if inverse == 0 else float(1 / inverse)


def compare_to_dimension(A, p_vec):
    """ Sign of ``p_bar - D`` computed in exact arithmetic """
    inverse, D = _p_fractions(A, p_vec)
    if inverse == 0:
        return 1
    p_bar = 1 / inverse
    return (p_bar > D) - (p_bar < D)


def sobolev_exponent(p_bar, D):
    """ ``p_bar* = D p_bar / (D - p_bar)`` for ``p_bar < D`` """
    if p_bar >= D:
        raise ValueError(
            "p_bar={} >= D={}: the Sobolev exponent is undefined; use the "
            "p_bar = D or p_bar > D branch".format(p_bar, D))
    return float(Fraction(D) * Fraction(p_bar) / (Fraction(D) - Fraction(p_bar)))
