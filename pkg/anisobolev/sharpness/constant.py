# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
""" Numerical lower bounds for the constants of the inequalities.

A coarse grid over the family parameters is followed by a Nelder-Mead
refinement of the continuous parameters around the best grid point. The
ratio LHS / RHS found is a lower bound for the best constant of the case.
"""
import warnings

import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from scipy.optimize import minimize
from sklearn.model_selection import ParameterGrid
from sklearn.utils import check_random_state

from anisobolev import options
from anisobolev.core.diagnostics import HypothesisWarning, OptimizerWarning
from anisobolev.core.measure import MonomialWeight
from anisobolev.functions.base import FamilySpec, instantiate
from anisobolev.inequalities.base import REFUSED, check_case_ids, verify_case

DEFAULT_GRIDS = {
    "cone": {"radius": [0.5, 1.0, 2.0]},
    "tensor_bump": {"radii": [0.5, 1.0, 2.0], "k": [2.0, 3.0, 4.0]},
    "radial_power": {"radius": [0.5, 1.0, 2.0], "k": [2.0, 3.0, 4.0]},
    "double_revolution": {"k": [2.0, 3.0, 4.0]},
    "plateau": {"inner": [0.25, 0.5, 0.75]},
}

# parameters that only take integer values
DISCRETE = ("split",)
IMPROVEMENT_RTOL = 1e-9


class ConstantEstimate:
    """ Best ratio found for one case on one family.

    Attributes
    ----------
    case_id: str
    family: str
    best_ratio: float
    best_params: dict
    grid_best: float
        Best ratio of the coarse grid alone.
    improved: bool
        Whether the refinement improved on the grid.
    trace: DataFrame
        Every evaluated parameter set with its ratio, grid first.
    """

    columns = ("case_id", "family", "best_ratio", "grid_best", "improved",
               "trace_length", "best_params")

    def __init__(self, case_id, family, best_ratio, best_params, grid_best, improved,
                 trace):
        self.case_id = case_id
        self.family = family
        self.best_ratio = best_ratio
        self.best_params = best_params
        self.grid_best = grid_best
        self.improved = improved
        self.trace = trace

    @property
    def trace_length(self):
        return len(self.trace)

    def as_dict(self):
        return {c: getattr(self, c) for c in self.columns}

    def __repr__(self):
        return "ConstantEstimate({}, {}, best_ratio={:.6g})".format(
            self.case_id, self.family, self.best_ratio)


def _ratio(case_id, spec, params, w, resolution, grid_size, case_params):
    try:
        f = instantiate(spec, params)
    except ValueError:
        return np.nan
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", HypothesisWarning)
        report = verify_case(case_id, f, w, resolution, grid_size, stability=False,
                             **case_params)
    return np.nan if report.status == REFUSED else report.ratio


def _simplex(x0, rs):
    steps = rs.uniform(0.05, 0.15, size=x0.size)
    simplex = [x0]
    for i, step in enumerate(steps):
        x = x0.copy()
        x[i] = x0[i] * (1.0 + step) if x0[i] != 0 else step
        simplex.append(x)
    return np.array(simplex)


def estimate_best_constant(case_id, family, w, grid=None, budget=None, resolution=None,
                           grid_size=None, random_state=None, n_jobs=None, **case_params):
    """ Largest LHS / RHS ratio of ``case_id`` over a family.

    Parameters
    ----------
    case_id: str
    family: FamilySpec or str
        A tag is turned into a family of the dimension of ``w``.
    w: MonomialWeight
    grid: dict, optional
        ``parameter -> list of values`` of the coarse grid. Defaults to
        ``DEFAULT_GRIDS[tag]``.
    budget: int, optional
        Function evaluations of the refinement, ``options.MAX_EVALUATIONS``
        by default.
    random_state: int or RandomState, optional
        Seeds the initial simplex.
    n_jobs: int, optional
        Workers for the grid, ``options.N_JOBS`` by default.
    case_params:
        Forwarded to :func:`verify_case`.

    Returns
    -------
    ConstantEstimate
    """
    check_case_ids([case_id])
    w = w if isinstance(w, MonomialWeight) else MonomialWeight(tuple(w))
    spec = family if isinstance(family, FamilySpec) else FamilySpec(family, n=w.n)
    spec.family  # raises on unknown tags
    grid = DEFAULT_GRIDS.get(spec.tag, {}) if grid is None else grid
    budget = options.MAX_EVALUATIONS if budget is None else int(budget)
    n_jobs = options.N_JOBS if n_jobs is None else n_jobs
    points = list(ParameterGrid(grid))
    ratios = Parallel(n_jobs=n_jobs)(delayed(_ratio)(
        case_id, spec, item, w, resolution, grid_size, case_params) for item in points)
    trace = [dict(item, ratio=r, stage="grid") for item, r in zip(points, ratios)]
    finite = [i for i, r in enumerate(ratios) if not np.isnan(r)]
    if not finite:
        raise ValueError(
            "Case {} was refused or undefined on every grid point of family {}".format(
                case_id, spec.tag))
    start = max(finite, key=lambda i: ratios[i])
    grid_best, best_params = float(ratios[start]), dict(points[start])
    keys = [k for k, v in grid.items() if len(v) > 1 and k not in DISCRETE]

    if keys and budget > 0:
        def objective(x):
            params = dict(best_params, **dict(zip(keys, (float(v) for v in x))))
            r = _ratio(case_id, spec, params, w, resolution, grid_size, case_params)
            trace.append(dict(params, ratio=r, stage="refine"))
            return np.inf if np.isnan(r) else -r

        x0 = np.array([best_params[k] for k in keys], dtype=float)
        minimize(objective, x0, method="Nelder-Mead", options=dict(
            maxfev=budget, initial_simplex=_simplex(x0, check_random_state(random_state)),
            xatol=1e-4, fatol=1e-8))

    trace = pd.DataFrame(trace)
    best = trace.loc[trace["ratio"].idxmax()]
    best_ratio = float(best["ratio"])
    improved = best_ratio > grid_best * (1.0 + IMPROVEMENT_RTOL)
    if not improved:
        if keys and budget > 0:
            warnings.warn(
                "No improvement over the coarse grid for {} on {}; returning the grid "
                "maximum {:.6g}".format(case_id, spec.tag, grid_best), OptimizerWarning)
    else:
        best_params = {k: best[k] for k in best_params}
    assert best_ratio >= trace["ratio"].max(skipna=True)
    return ConstantEstimate(case_id, spec.tag, best_ratio, best_params, grid_best,
                            improved, trace)
