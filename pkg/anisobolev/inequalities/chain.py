# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
""" The equivalent Poincare, Maz'ya-Talenti and oscillation inequalities.

All right-hand sides are built from the gradient masses of a single
:class:`SobolevTerms` fit, so every row of the chain sees the same cells.
"""
import numpy as np

from anisobolev.core.profile import step_product
from anisobolev.core.rearrangement import oscillation
from anisobolev.sobolev.terms import multiplicative_rhs
from anisobolev.spaces.lebesgue import Lp
from anisobolev.spaces.lorentz import LorentzPQ
from anisobolev.inequalities.base import (
    CaseRefused, Sides, case, l1_product, poincare_exponent, verify_case, worst)

TRUNCATION_LEVELS = (0.0, 0.2, 0.4, 0.6, 0.8, 0.95)
BAND_POINTS = 65
MIN_BAND_CELLS = 8


def _needs_lorentz(w, **params):
    if w.D <= 1:
        raise CaseRefused("D = 1: L^{D/(D-1),1} is not defined")


def _check_p(w, p=1.0, **params):
    if not p >= 1:
        raise ValueError("Invalid exponent p={}. Accepted values are p >= 1".format(p))


@case("T32.i")
def _poincare(terms, **params):
    lhs = Lp(poincare_exponent(terms.D)).norm(terms.profile_)
    return Sides(lhs, float(np.sum(terms.gradient_l1_)), np.nan)


@case("T32.ii")
def _poincare_product(terms, **params):
    lhs = Lp(poincare_exponent(terms.D)).norm(terms.profile_)
    return Sides(lhs, l1_product(terms), np.nan)


def _level_measure(terms, level, strict=True):
    """ ``mu{|f| > level}``, or ``mu{|f| >= level}`` when not strict """
    r = terms.rearrangement_
    values = r.values_[r.order_]
    count = np.searchsorted(-values, -np.asarray(level, dtype=float),
                            side="left" if strict else "right")
    M = r.cumulative_mass_
    return np.where(count > 0, M[np.maximum(count - 1, 0)], 0.0)


def _band_masses(terms, s_a, s_b):
    """ Gradient mass per coordinate between the levels ``f*(s_b)`` and ``f*(s_a)`` """
    return np.array([np.maximum(t.cumulative(s_b) - t.cumulative(s_a), 0.0)
                     for t in terms.tilde_])


@case("T32.iii")
def _talenti(terms, **params):
    profile = terms.profile_
    if profile.jumps:
        t, size = profile.jumps[0]
        raise CaseRefused(
            "f* is not absolutely continuous: {} jump(s), first of size {:.3g} at "
            "t={:.3g}".format(len(profile.jumps), size, t))
    M = terms.rearrangement_.cumulative_mass_
    start = M[min(MIN_BAND_CELLS - 1, M.size - 1)]
    if start >= profile.T:
        return Sides(0.0, 0.0, np.nan)
    s = np.geomspace(start, profile.T, BAND_POINTS)
    s_a, s_b = s[:-1], s[1:]
    cells = np.searchsorted(M, s_b) - np.searchsorted(M, s_a)
    lhs = (profile(s_a) - profile(s_b)) * s_a ** (1.0 - 1.0 / terms.D)
    rhs = np.prod(_band_masses(terms, s_a, s_b) ** terms.theta[:, None], axis=0)
    keep = cells >= MIN_BAND_CELLS
    return worst(lhs[keep], rhs[keep], s_a[keep])


@case("T32.iv", gate=_check_p)
def _oscillation_cumulative(terms, p=1.0, **params):
    profile = terms.profile_
    p = float(p)
    h = oscillation(profile, smooth=True).power(p).scale_by_power(-p / terms.D)
    lhs = h.rearranged(profile.grid_size)
    rhs = multiplicative_rhs(terms.tilde_, terms.weight, p)
    grid = np.union1d(profile.t_grid, np.geomspace(profile.T, 1e3 * profile.T, 64))
    return worst(lhs.primitive(grid), rhs.primitive(grid), grid)


@case("T32.v", gate=_needs_lorentz)
def _lorentz(terms, **params):
    D = terms.D
    lhs = LorentzPQ(D / (D - 1.0), 1.0, form="double_star").norm(terms.profile_)
    return Sides(lhs, l1_product(terms), np.nan)


@case("T32.identity", gate=_needs_lorentz)
def _lorentz_identity(terms, **params):
    D = terms.D
    lhs = LorentzPQ(D / (D - 1.0), 1.0, form="double_star").norm(terms.profile_)
    rhs = D / (D - 1.0) * oscillation(terms.profile_).integral(k=-1.0 / D)
    return Sides(lhs, rhs, np.nan)


@case("T32.embedding", gate=_needs_lorentz)
def _lorentz_embedding(terms, **params):
    D = terms.D
    lhs = Lp(D / (D - 1.0)).norm(terms.profile_)
    rhs = LorentzPQ(D / (D - 1.0), 1.0).norm(terms.profile_)
    return Sides(lhs, rhs, np.nan)


@case("T32.truncation")
def _truncation(terms, **params):
    top = float(terms.profile_.values[0])
    levels = top * np.asarray(TRUNCATION_LEVELS)
    t1, t2 = (a.ravel() for a in np.meshgrid(levels, levels, indexing="ij"))
    pairs = t1 < t2
    t1, t2 = t1[pairs], t2[pairs]
    lhs = (t2 - t1) * _level_measure(terms, t2, strict=False) ** (1.0 - 1.0 / terms.D)
    masses = _band_masses(terms, _level_measure(terms, t2), _level_measure(terms, t1))
    rhs = np.prod(masses ** terms.theta[:, None], axis=0)
    sides = worst(lhs, rhs, t2)
    return Sides(sides.lhs, sides.rhs, np.nan)


def _pointwise_sides(terms):
    """ Knots, ``t^{-1/D} O(f, t-)`` and ``I(t)`` on the knots of ``f*``.

    The oscillation uses the left limit of ``f*`` so that flat groups
    contribute nothing until the level drops.
    """
    profile = terms.profile_
    t = profile.t
    left = np.maximum(profile.primitive(t) / t - profile.values, 0.0)
    lhs = t ** (-1.0 / terms.D) * left
    product = step_product([tl.derivative for tl in terms.tilde_], terms.theta)
    return t, lhs, product.primitive(t) / t


@case("R99.pointwise")
def _pointwise(terms, **params):
    t, lhs, averaged = _pointwise_sides(terms)
    return worst(lhs, averaged, t)


@case("R77.gradient")
def _pointwise_gradient(terms, **params):
    t, lhs, _ = _pointwise_sides(terms)
    return worst(lhs, terms.modulus_profile_.double_star()(t), t)


@case("R77.chain")
def _pointwise_chain(terms, **params):
    t, _, averaged = _pointwise_sides(terms)
    rhs = np.ones(t.shape)
    for g, theta in zip(terms.gradient_profiles_, terms.theta):
        rhs = rhs * (g.primitive(t) / t) ** theta
    return worst(averaged, rhs, t)


def verify_t32(f, w, case="i", p=1.0, resolution=None, grid_size=None, stability=True,
               box=None):
    """ One row of the Poincare/oscillation chain.

    Parameters
    ----------
    f: Field
    w: MonomialWeight
    case: str
        "i", "ii", "iii", "iv", "v", "identity", "embedding" or
        "truncation".
    p: float
        Exponent of the oscillation inequality, used by case "iv".
    """
    case_id = "T32.{}".format(case)
    return verify_case(case_id, f, w, resolution, grid_size, stability, box, p=p)


def verify_pointwise_oscillation(f, w, resolution=None, grid_size=None, stability=True,
                                 box=None):
    """ The pointwise inequality and the two steps of the chain after it.

    Returns
    -------
    tuple of VerificationReport
        Rows ``R99.pointwise``, ``R77.gradient`` and ``R77.chain``.
    """
    return tuple(verify_case(c, f, w, resolution, grid_size, stability, box)
                 for c in ("R99.pointwise", "R77.gradient", "R77.chain"))
