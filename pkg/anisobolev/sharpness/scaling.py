# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
import numpy as np
import pandas as pd
from sklearn.base import BaseEstimator

from anisobolev import options
from anisobolev.core.field import Dilation
from anisobolev.core.io import EstimatorIO
from anisobolev.core.measure import MonomialWeight
from anisobolev.sobolev.terms import sobolev_terms
from anisobolev.spaces.catalog import (
    compare_to_dimension, harmonic_mean_exponent, sobolev_exponent)
from anisobolev.spaces.lebesgue import Lp
from anisobolev.utils.weighted_regression import WeightedRegression


def _as_weight(w):
    return w if isinstance(w, MonomialWeight) else MonomialWeight(tuple(w))


def scaling_slope_oracle(w, p_vec, q, axis=None):
    """ Exact log-log slope of the scaling ratio under ``f -> f(lambda x)``.

    With the isotropic dilation the slope is ``D (1/p_bar* - 1/q)``; when
    only coordinate ``axis`` is dilated ``D`` is replaced by
    ``A_axis + 1``.

    Parameters
    ----------
    w: MonomialWeight
    p_vec: sequence of float
    q: float
        Candidate target exponent.
    axis: int, optional
        Dilated coordinate, every coordinate when omitted.
    """
    w = _as_weight(w)
    p_bar = harmonic_mean_exponent(w.exponents, p_vec)
    gap = 1.0 / p_bar - 1.0 / w.D - 1.0 / float(q)
    factor = w.D if axis is None else w.exponents[axis] + 1.0
    return float(factor * gap)


def _scale_vector(n, lam, axis):
    if axis is None:
        return np.full(n, lam)
    scale = np.ones(n)
    scale[axis] = lam
    return scale


class ScalingExperiment(BaseEstimator, EstimatorIO):
    """ Log-log scaling test of the target exponent of the Sobolev inequality.

    For every dilation ``f_lambda`` the ratio
    ``||f_lambda||_{L^q_mu} / prod_i ||d_i f_lambda||_{L^{p_i}_mu}^{(A_i+1)/D}``
    is sampled and the slope of its logarithm against ``log lambda`` is
    fitted, for the isotropic dilation and for each coordinate alone. A
    candidate is ``invariant`` when every slope is below ``options.SLOPE_TOL``
    in absolute value.

    Parameters
    ----------
    weight: MonomialWeight
    p_vec: sequence of float, optional
        Gradient exponents, all ones by default.
    q_candidates: sequence of float, optional
        Defaults to ``p_bar* * (0.9, 1, 1.1)``.
    scales: sequence of float, optional
        Dilation factors, at least two decades. Defaults to nine factors
        between 0.1 and 10.
    axes: bool
        Also run one sweep per coordinate.
    resolution: int, optional
    grid_size: int, optional

    Attributes
    ----------
    p_bar_: float
    samples_: DataFrame
        ``sweep, lambda, q, log_ratio`` per sample.
    results_: DataFrame
        One row per candidate with the fitted slopes, the oracle slope, the
        exponent implied by the isotropic slope and the verdict. When
        ``p_bar >= D`` nothing is sampled and every candidate, ``inf`` by
        default, is reported as ``skipped``.
    """

    def __init__(self, weight=None, p_vec=None, q_candidates=None, scales=None,
                 axes=True, resolution=None, grid_size=None):
        self.weight = weight
        self.p_vec = p_vec
        self.q_candidates = q_candidates
        self.scales = scales
        self.axes = axes
        self.resolution = resolution
        self.grid_size = grid_size

    def _validate(self):
        w = _as_weight(self.weight)
        p_vec = (1.0,) * w.n if self.p_vec is None else tuple(float(p) for p in self.p_vec)
        scales = (np.geomspace(0.1, 10.0, 9) if self.scales is None
                  else np.asarray(self.scales, dtype=float))
        if np.any(scales <= 0):
            raise ValueError("Dilation factors must be positive")
        if scales.size < 2 or np.log10(scales.max() / scales.min()) < 2 - 1e-9:
            raise ValueError("Dilation factors must span at least two decades")
        return w, p_vec, scales

    def fit(self, X, y=None, box=None):
        """ Runs the sweeps on the field ``X``.

        Parameters
        ----------
        X: Field
        y: Ignored
        box: BoxDomain, optional

        Returns
        -------
        self: object
        """
        w, p_vec, scales = self._validate()
        self.p_bar_ = harmonic_mean_exponent(w.exponents, p_vec)
        subcritical = compare_to_dimension(w.exponents, p_vec) < 0
        if self.q_candidates is not None:
            candidates = [float(q) for q in self.q_candidates]
        elif subcritical:
            star = sobolev_exponent(self.p_bar_, w.D)
            candidates = [star * 0.9, star, star * 1.1]
        else:
            candidates = [np.inf]
        sweeps = [None] + (list(range(w.n)) if self.axes and w.n > 1 else [])
        rows = []
        if subcritical:
            for axis in sweeps:
                for lam in scales:
                    rows.extend(self._sample(X, w, p_vec, candidates, lam, axis, box))
        self.samples_ = pd.DataFrame(rows, columns=["sweep", "lambda", "q", "log_ratio"]).astype(
            {"lambda": float, "q": float, "log_ratio": float})
        if not np.all(np.isfinite(self.samples_["log_ratio"])):
            raise ValueError("Non-finite scaling ratio; the field or a gradient vanishes")
        self.results_ = pd.DataFrame(
            [self._result(w, p_vec, q, sweeps, subcritical) for q in candidates],
            columns=["q", "slope", "axis_slopes", "oracle_slope", "fitted_exponent",
                     "verdict"])
        return self

    def _sample(self, f, w, p_vec, candidates, lam, axis, box):
        field = Dilation(f, _scale_vector(w.n, lam, axis))
        if box is not None:
            box = box.scale(_scale_vector(w.n, lam, axis))
        terms = sobolev_terms(field, w, self.resolution, self.grid_size, box)
        rhs = np.prod([Lp(p).norm(g) ** t for p, g, t
                       in zip(p_vec, terms.gradient_profiles_, w.theta)])
        sweep = "all" if axis is None else "x{}".format(axis + 1)
        return [(sweep, float(lam), q, np.log(Lp(q).norm(terms.profile_) / rhs))
                for q in candidates]

    def _slope(self, q, sweep):
        s = self.samples_[(self.samples_["q"] == q) & (self.samples_["sweep"] == sweep)]
        fit = WeightedRegression(loglog=False).fit(np.log(s["lambda"].values),
                                                   s["log_ratio"].values)
        return float(fit.slope_)

    def _result(self, w, p_vec, q, sweeps, subcritical):
        if not subcritical:
            return dict(q=q, slope=np.nan, axis_slopes=(), oracle_slope=np.nan,
                        fitted_exponent=np.nan, verdict="skipped")
        slope = self._slope(q, "all")
        axis_slopes = tuple(self._slope(q, "x{}".format(a + 1)) for a in sweeps[1:])
        tol = options.SLOPE_TOL
        invariant = abs(slope) < tol and all(abs(s) < tol for s in axis_slopes)
        inverse = 1.0 / q + slope / w.D
        return dict(
            q=q, slope=slope, axis_slopes=axis_slopes,
            oracle_slope=scaling_slope_oracle(w, p_vec, q),
            fitted_exponent=1.0 / inverse if inverse > 0 else np.inf,
            verdict="invariant" if invariant else "not invariant")

    @property
    def fitted_exponent_(self):
        """ Exponent implied by the isotropic slope of the first candidate """
        if self.results_.empty:
            return np.nan
        return float(self.results_["fitted_exponent"].iloc[0])


def scaling_exponent_test(f, w, p_vec=None, q_candidates=None, scales=None, **kwargs):
    """ Scaling verdict per candidate exponent.

    Returns
    -------
    DataFrame
        ``results_`` of a fitted :class:`ScalingExperiment`.
    """
    experiment = ScalingExperiment(
        _as_weight(w), p_vec, q_candidates, scales, **kwargs).fit(f)
    return experiment.results_
