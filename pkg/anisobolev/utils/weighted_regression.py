# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
import numpy as np
from sklearn.base import BaseEstimator


class WeightedRegression(BaseEstimator):
    """ Helper class that fits weighted least-squares lines in closed form.

    Used for the log-log slopes of dilation norms (Boyd indices) and of the
    scaling experiments. Observations with zero weight or non-finite values
    are ignored.

    Parameters
    ----------
    axis: int
        Axis along which observations are stacked.
    thru_orig: bool
        Fit a line through the origin.
    loglog: bool
        Regress ``log y`` on ``log x``.
    """

    def __init__(self, axis=-1, thru_orig=False, loglog=False):
        self.axis = axis
        self.thru_orig = thru_orig
        self.loglog = loglog

    def fit(self, X, y=None, sample_weight=None):
        x = np.asarray(X, dtype=float)
        y = np.asarray(y, dtype=float)
        if self.loglog:
            with np.errstate(divide="ignore", invalid="ignore"):
                x, y = np.log(x), np.log(y)
        w = np.ones(y.shape) if sample_weight is None else np.asarray(sample_weight, dtype=float)
        w = np.where(np.isfinite(x) & np.isfinite(y), w, 0.0)
        self.x_ = np.where(w > 0, x, np.nan)
        self.y_ = np.where(w > 0, y, np.nan)
        self.w_ = w
        if self.thru_orig:
            self._fit_OLS_thru_orig()
        else:
            self._fit_OLS()
        return self

    def _fit_OLS(self):
        """ Weighted slope and intercept along ``axis`` """
        w, x, y, axis = self.w_, self.x_, self.y_, self.axis
        sw = np.nansum(w, axis)
        with np.errstate(divide="ignore", invalid="ignore"):
            mx = np.nansum(w * x, axis) / sw
            my = np.nansum(w * y, axis) / sw
            sxy = np.nansum(w * x * y, axis) - sw * mx * my
            sxx = np.nansum(w * x * x, axis) - sw * mx * mx
            slope = np.where(sxx > 0, sxy / sxx, np.nan)
        intercept = my - slope * mx
        fitted = np.expand_dims(intercept, axis) + np.expand_dims(slope, axis) * x
        self.slope_ = slope
        self.intercept_ = intercept
        self.residual_ = np.nanmax(np.abs(y - fitted), axis)
        return self

    def _fit_OLS_thru_orig(self):
        w, x, y, axis = self.w_, self.x_, self.y_, self.axis
        with np.errstate(divide="ignore", invalid="ignore"):
            d = np.nansum(w * x * x, axis)
            slope = np.where(d > 0, np.nansum(w * x * y, axis) / d, np.nan)
        fitted = np.expand_dims(slope, axis) * x
        self.slope_ = slope
        self.intercept_ = np.zeros(np.shape(slope))
        self.residual_ = np.nanmax(np.abs(y - fitted), axis)
        return self

    def predict(self, X):
        x = np.asarray(X, dtype=float)
        if self.loglog:
            return np.exp(self.intercept_) * x ** self.slope_
        return self.intercept_ + self.slope_ * x
