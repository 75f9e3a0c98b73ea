# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
import warnings

import pandas as pd
from joblib import Parallel, delayed
from sklearn.base import BaseEstimator

from anisobolev import options
from anisobolev.core.diagnostics import AnisobolevWarning
from anisobolev.inequalities.base import VerificationReport, verify_case
from anisobolev.sharpness.constant import estimate_best_constant
from anisobolev.sharpness.scaling import scaling_exponent_test


def case_params(case_id, config):
    """ Parameter sets of ``case_id`` drawn from ``config`` """
    group = case_id.split(".")[0]
    spaces = config.spaces or [None]
    if case_id == "T32.iv":
        return [dict(p=float(p)) for p in config.p]
    if group == "T23":
        return [dict(space=s) for s in spaces]
    if group in ("T43", "T46"):
        return [dict(space=s, p_vec=config.p_vec) for s in spaces]
    if group in ("P44", "Trudinger"):
        return [dict(p_vec=config.p_vec)]
    if group == "T47":
        return [dict(p_vec=config.p_vec, q_vec=config.q_vec, weight=config.weight)]
    if group == "Gamma":
        return [dict(p_vec=config.p_vec, weight=config.weight)]
    if group == "GGamma":
        return [dict(p_vec=config.p_vec, m=config.m, weight=config.weight)]
    return [{}]


def _drop_none(params):
    return {k: v for k, v in params.items() if v is not None}


def _run_single_case(case_id, f, w, config, params):
    return verify_case(case_id, f, w, config.resolution, config.grid_size,
                       **_drop_none(params))


class CaseMatrix(BaseEstimator):
    """ Runs every case of a :class:`RunConfig` on every family member.

    Jobs are the product weights x family members x cases x case
    parameters; they run through joblib and are gathered in submission
    order, so reports do not depend on ``n_jobs``.

    Parameters
    ----------
    config: RunConfig
    n_jobs: int, optional
        Overrides ``config.n_jobs`` and ``options.N_JOBS``.

    Attributes
    ----------
    reports_: list of VerificationReport
    results_: DataFrame
        One row per report.
    """

    def __init__(self, config=None, n_jobs=None):
        self.config = config
        self.n_jobs = n_jobs

    def _jobs(self):
        jobs = []
        for w in self.config.weights_:
            for _, _, f in self.config.instances(w):
                for case_id in self.config.cases:
                    for params in case_params(case_id, self.config):
                        jobs.append((case_id, f, w, params))
        return jobs

    def fit(self, X=None, y=None):
        """ Runs the matrix; ``X`` is ignored """
        if not self.config.cases:
            warnings.warn("No cases requested; the run produces no rows", AnisobolevWarning)
        n_jobs = self.n_jobs
        if n_jobs is None:
            n_jobs = options.N_JOBS if self.config.n_jobs is None else self.config.n_jobs
        self.reports_ = Parallel(n_jobs=n_jobs)(
            delayed(_run_single_case)(case_id, f, w, self.config, params)
            for case_id, f, w, params in self._jobs())
        self.results_ = pd.DataFrame(
            [r.as_dict() for r in self.reports_],
            columns=list(VerificationReport.columns))
        return self

    @property
    def failures_(self):
        """ Reports with status ``anomaly`` or ``unstable`` """
        return [r for r in self.reports_ if r.failed]


def run_sharpness(config):
    """ Scaling tests and best constant estimates for a config.

    The scaling test runs on the first member of every family for every
    weight; the estimates run every case on every family tag.

    Returns
    -------
    scaling: DataFrame
    estimates: list of ConstantEstimate
    """
    frames, estimates = [], []
    for w in config.weights_:
        seen = set()
        for tag, _, f in config.instances(w):
            if tag not in seen:
                seen.add(tag)
                frame = scaling_exponent_test(
                    f, w, config.p_vec, resolution=config.resolution,
                    grid_size=config.grid_size)
                frame.insert(0, "family", tag)
                frame.insert(1, "A", str(tuple(float(a) for a in w.exponents)))
                frames.append(frame)
        for tag in sorted(seen):
            for case_id in config.cases:
                for params in case_params(case_id, config):
                    estimates.append(estimate_best_constant(
                        case_id, tag, w, budget=config.budget, resolution=config.resolution,
                        grid_size=config.grid_size, random_state=config.seed,
                        n_jobs=config.n_jobs, **_drop_none(params)))
    scaling = pd.concat(frames, ignore_index=True) if frames else pd.DataFrame()
    return scaling, estimates
