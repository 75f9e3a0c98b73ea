# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
""" Tests of the weight classes behind the weighted Lorentz and Gamma spaces """
import warnings

import numpy as np

from anisobolev.core.diagnostics import UndecidableWarning


def _decide(verdict, w, what):
    if verdict is None:
        warnings.warn(
            "Cannot decide {} for weight {} without tail metadata".format(what, w.text),
            UndecidableWarning)
        return False
    return bool(verdict)


def is_bp_weight(w, p, grid=None):
    """ Tests the ``B_p`` condition on a geometric grid.

    ``w`` is a ``B_p`` weight when
    ``t^p int_t^inf w(s) s^{-p} ds <= C int_0^t w`` for every ``t > 0``.

    Parameters
    ----------
    w: WeightFunction
    p: float
        ``p >= 1``.
    grid: array-like, optional
        Evaluation points, ``geomspace(1e-6, 1e6, 241)`` by default.

    Returns
    -------
    tuple
        ``(verdict, worst constant)``; the constant is ``inf`` when the
        upper integral diverges.
    """
    if p < 1:
        raise ValueError("Invalid exponent p={}. Accepted values are p >= 1".format(p))
    if not _decide(w.converges_at_infinity(-p), w, "the B_p tail condition"):
        return False, np.inf
    if not _decide(w.converges_at_zero(0.0), w, "local integrability"):
        return False, np.inf
    asym = w.asymptotics
    if asym is not None and asym.e0 >= p - 1:
        # the ratio grows without bound as t -> 0
        return False, np.inf
    grid = np.geomspace(1e-6, 1e6, 241) if grid is None else np.asarray(grid, dtype=float)
    upper = w.moment(grid, np.full(grid.shape, np.inf), -p)
    W = w.primitive(grid)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(W > 0, grid ** p * upper / W, np.where(upper > 0, np.inf, 0.0))
    constant = float(np.max(ratio))
    return bool(np.isfinite(constant)), constant


def check_admissible(w, p):
    """ ``int_0^t w < inf`` and ``int_t^inf w(s) s^{-p} ds < inf`` for every t """
    return (_decide(w.converges_at_zero(0.0), w, "local integrability")
            and _decide(w.converges_at_infinity(-p), w, "admissibility at infinity"))


def check_ggamma_weight(w, m, p):
    """ ``int_0^inf min(s, t)^{m/p} w(t) dt < inf`` for every ``s > 0`` """
    return (_decide(w.converges_at_zero(m / p), w, "the min-kernel condition at 0")
            and _decide(w.converges_at_infinity(0.0), w, "the min-kernel condition at infinity"))
