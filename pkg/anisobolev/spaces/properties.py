# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
""" Randomized trials of the structural properties of the catalog """
from collections import namedtuple

import numpy as np
from sklearn.utils import check_random_state

from anisobolev.core.profile import Curve, MonotoneProfile, geometric_grid
from anisobolev.spaces.base import as_profile
from anisobolev.spaces.gamma import Gamma
from anisobolev.spaces.lebesgue import L1plusLinf, Linf, Lp
from anisobolev.spaces.lorentz import GeneralizedLorentz, LorentzPQ
from anisobolev.spaces.weights import resolve_weight

TrialResult = namedtuple("TrialResult", ["trials", "violations", "worst"])

_RTOL = 1e-9


def default_trial_spaces():
    """ Normed members of the catalog whose norms are exact on step functions """
    return [Lp(1.0), Lp(2.0), Lp(3.5), Lp(np.inf), LorentzPQ(2.0, 1.0),
            LorentzPQ(3.0, 2.0), L1plusLinf(), Linf()]


def _random_steps(rs, pieces):
    lengths = rs.uniform(0.05, 1.0, pieces)
    values = rs.exponential(1.0, pieces) + 1e-3
    return lengths, values


def hlp_trials(specs=None, n_trials=100, pieces=20, random_state=None):
    """ Hardy-Littlewood-Polya principle on random majorized pairs.

    ``f`` averages a random step function ``g`` over random blocks, so
    ``int_0^r f* <= int_0^r g*`` for every r; each trial checks
    ``||f|| <= ||g||`` in every space.
    """
    specs = default_trial_spaces() if specs is None else specs
    rs = check_random_state(random_state)
    violations, worst = 0, 0.0
    for _ in range(n_trials):
        lengths, values = _random_steps(rs, pieces)
        cuts = np.sort(rs.choice(np.arange(1, pieces), rs.randint(1, pieces // 2), replace=False))
        starts = np.concatenate(([0], cuts))
        mass = np.add.reduceat(lengths * values, starts)
        span = np.add.reduceat(lengths, starts)
        averaged = np.repeat(mass / span, np.diff(np.append(starts, pieces)))
        g = MonotoneProfile.from_steps(lengths, values)
        f = MonotoneProfile.from_steps(lengths, averaged)
        for spec in specs:
            excess = spec.evaluate(f).value / spec.evaluate(g).value - 1.0
            worst = max(worst, excess)
            violations += excess > _RTOL
    return TrialResult(n_trials, int(violations), float(worst))


def holder_trials(specs=None, n_trials=100, n_factors=3, pieces=16, random_state=None):
    """ ``|| prod |f_i|^theta_i || <= prod ||f_i||^theta_i`` on random tuples.

    The factors are step functions on a common random partition with
    random convex exponents ``theta``.
    """
    specs = default_trial_spaces() if specs is None else specs
    rs = check_random_state(random_state)
    violations, worst = 0, 0.0
    for _ in range(n_trials):
        lengths = rs.uniform(0.05, 1.0, pieces)
        factors = rs.exponential(1.0, (n_factors, pieces)) + 1e-3
        theta = rs.dirichlet(np.ones(n_factors))
        product = np.prod(factors ** theta[:, None], axis=0)
        h = MonotoneProfile.from_steps(lengths, product)
        fs = [MonotoneProfile.from_steps(lengths, v) for v in factors]
        for spec in specs:
            rhs = np.prod([spec.evaluate(f).value ** th for f, th in zip(fs, theta)])
            excess = spec.evaluate(h).value / rhs - 1.0
            worst = max(worst, excess)
            violations += excess > _RTOL
    return TrialResult(n_trials, int(violations), float(worst))


def transfer_lemma_trials(n_trials=100, pieces=24, random_state=None):
    """ ``g <= h**`` and ``int_0^t g <= int_0^t h*`` imply ``int_0^t g* <= 4 int_0^t h*``.

    ``g`` is a random permutation of the steps of ``h*``, inflated by a
    random factor and capped by ``h**``; candidates breaking the cumulative
    hypothesis fall back to the uninflated permutation. The conclusion is
    checked at every knot and on the grid.
    """
    rs = check_random_state(random_state)
    violations, worst = 0, 0.0
    for _ in range(n_trials):
        lengths, values = _random_steps(rs, pieces)
        h = MonotoneProfile.from_steps(lengths, values)
        order = rs.permutation(pieces)
        knots = np.cumsum(lengths[order])
        cap = h.double_star()(knots)
        check = np.union1d(knots, h.t)
        for scale in (rs.uniform(1.0, 3.0), 1.0):
            g = Curve(knots, np.minimum(scale * values[order], cap), kind="step")
            if np.all(g.primitive(check) <= h.primitive(check) * (1 + _RTOL)):
                break
        g_star = g.rearranged()
        grid = np.union1d(check, geometric_grid(h.T, 512))
        lhs = g_star.primitive(grid)
        rhs = 4.0 * h.primitive(grid)
        worst = max(worst, float(np.max(lhs / rhs)))
        violations += bool(np.any(lhs > rhs * (1 + _RTOL)))
    return TrialResult(n_trials, int(violations), float(worst))


def lambda_gamma_equivalence(w, p, probes):
    """ Largest ratio ``||f||_{Gamma^p(w)} / ||f||_{Lambda^p(w)}`` over the probes.

    Finite for ``B_p`` weights; never below one since ``f** >= f*``.
    """
    w = resolve_weight(w)
    lam, gam = GeneralizedLorentz(p, p, w), Gamma(p, w)
    ratios = [gam.evaluate(f).value / lam.evaluate(f).value for f in probes]
    return float(max(ratios))


def lambda_weight_identity_check(w, p, q, probes):
    """ Largest relative deviation between two computations of ``Lambda^{p,q}(w)``.

    The first integrates ``f*^q t^{q/p-1} w`` against the moments of ``w``;
    the second sums ``f*^q`` against increments of ``(p/q) W^{q/p}`` over
    the steps, i.e. evaluates ``Lambda^q(W^{q/p-1} w)``. Linear probes are
    replaced by their step means. The two agree exactly for the constant
    weight and measure the gap between the two conventions otherwise.
    """
    w = resolve_weight(w)
    space = GeneralizedLorentz(p, q, w)
    worst = 0.0
    for probe in probes:
        lengths, means, _ = as_profile(probe).pieces()
        f = MonotoneProfile.from_steps(lengths, means)
        if f.is_empty:
            continue
        direct = space.evaluate(f).value
        edges = np.concatenate(([0.0], f.t))
        W = w.primitive(edges) ** (q / p)
        stieltjes = (p / q * np.sum(f.values ** q * np.diff(W))) ** (1.0 / q)
        worst = max(worst, abs(stieltjes - direct) / direct)
    return float(worst)
