# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
from collections import namedtuple

import numpy as np

from anisobolev.core.profile import MonotoneProfile
from anisobolev.utils.weighted_regression import WeightedRegression

BoydIndices = namedtuple("BoydIndices", ["upper", "lower", "exact"])


def default_probes():
    """ Compactly supported decreasing profiles used to probe dilations """
    t = np.linspace(0.0, 1.0, 257)[1:]
    return [
        MonotoneProfile.from_steps([1.0], [1.0]),
        MonotoneProfile.from_steps([0.25, 0.5, 1.0], [4.0, 2.0, 1.0]),
        MonotoneProfile(t, 1.0 - t + 1e-12, kind="linear", head=(1.0, 0.0)),
        MonotoneProfile(t, (1.0 - t) ** 2 + 1e-12, kind="linear", head=(1.0, 0.0)),
    ]


def dilation_norm(spec, s, probes=None):
    """ Estimate of ``h_X(s)``: the largest ``||E_s f|| / ||f||`` over the probes """
    if s <= 0:
        raise ValueError("Dilation factor must be positive, got {}".format(s))
    probes = default_probes() if probes is None else list(probes)
    if not probes:
        raise ValueError("At least one probe profile is required")
    ratios = []
    for f in probes:
        base = spec.evaluate(f).value
        if base == 0 or not np.isfinite(base):
            continue
        ratios.append(spec.evaluate(f.dilate(s)).value / base)
    return float(max(ratios)) if ratios else np.nan


def estimate_boyd_indices(spec, probes=None, scales=None):
    """ Log-log slopes of ``h_X(s)`` for large and small ``s``.

    Parameters
    ----------
    spec: SpaceSpec
    probes: list of MonotoneProfile, optional
        At least three profiles; :func:`default_probes` otherwise.
    scales: array-like, optional
        Exponents ``k`` of the dilations ``s = 2^k`` and ``2^-k``,
        ``1, ..., 8`` by default.
    """
    probes = default_probes() if probes is None else list(probes)
    if len(probes) < 3:
        raise ValueError(
            "Boyd index estimation needs at least 3 probes, got {}".format(len(probes)))
    k = np.arange(1, 9) if scales is None else np.asarray(scales, dtype=float)
    up = 2.0 ** k
    down = 2.0 ** -k
    h_up = np.array([dilation_norm(spec, s, probes) for s in up])
    h_down = np.array([dilation_norm(spec, s, probes) for s in down])
    upper = WeightedRegression(loglog=True).fit(up, h_up).slope_
    lower = WeightedRegression(loglog=True).fit(down, h_down).slope_
    return float(upper), float(lower)


def boyd_indices(spec, probes=None):
    """ ``(upper, lower)`` Boyd indices of ``spec``.

    Closed forms are returned when the catalog knows them (``exact=True``);
    otherwise the indices are estimated from dilations of the probes.
    """
    closed = spec.boyd_indices()
    if closed is not None:
        return BoydIndices(float(closed[0]), float(closed[1]), True)
    upper, lower = estimate_boyd_indices(spec, probes)
    return BoydIndices(upper, lower, False)
