# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
import json
import os
import re

from sklearn.base import BaseEstimator
from sklearn.model_selection import ParameterGrid

try:
    import tomllib
except ImportError:  # Python < 3.11
    import tomli as tomllib

from anisobolev import options
from anisobolev.core.diagnostics import ConfigError
from anisobolev.core.io import EstimatorIO
from anisobolev.core.measure import MonomialWeight
from anisobolev.functions.base import FAMILIES, FamilySpec, instantiate
from anisobolev.inequalities.base import check_case_ids
from anisobolev.spaces.catalog import parse_space
from anisobolev.spaces.weights import parse_weight


class RunConfig(BaseEstimator, EstimatorIO):
    """ Everything a run of the case x family matrix needs.

    Parameters
    ----------
    A: sequence of float
        Exponents of the monomial weight.
    weights: list of sequence of float, optional
        Several weights to sweep; ``[A]`` by default.
    resolution: int, optional
    grid_size: int, optional
    cases: list of str
    families: list of dict, optional
        ``{"tag": ..., "params": {...}}``. A list value is a list of
        alternatives to sweep, so a vector parameter is written as a list
        of lists. Defaults to the cone with its default parameters.
    spaces: list of str, optional
        Text encodings of the spaces for the r.i. space cases.
    p: list of float
        Exponents of the cumulative oscillation case.
    p_vec, q_vec: sequence of float, optional
    m: float, optional
    weight: str, optional
        Text encoding of the weight of the weighted Lorentz and Gamma cases.
    seed: int
    output_dir: str, optional
        Defaults to ``options.OUTPUT_DIR``.
    n_jobs: int, optional
    budget: int, optional
        Evaluations of the best constant refinement.
    """

    def __init__(self, A=(0.0,), weights=None, resolution=None, grid_size=None, cases=(),
                 families=None, spaces=None, p=(1.0,), p_vec=None, q_vec=None, m=None,
                 weight=None, seed=0, output_dir=None, n_jobs=None, budget=None):
        self.A = A
        self.weights = weights
        self.resolution = resolution
        self.grid_size = grid_size
        self.cases = cases
        self.families = families
        self.spaces = spaces
        self.p = p
        self.p_vec = p_vec
        self.q_vec = q_vec
        self.m = m
        self.weight = weight
        self.seed = seed
        self.output_dir = output_dir
        self.n_jobs = n_jobs
        self.budget = budget

    @classmethod
    def keys(cls):
        return tuple(cls._get_param_names())

    @property
    def weights_(self):
        return [MonomialWeight(tuple(float(a) for a in A))
                for A in (self.weights or [self.A])]

    @property
    def families_(self):
        return list(self.families or [{"tag": "cone"}])

    @property
    def output_dir_(self):
        return options.OUTPUT_DIR if self.output_dir is None else self.output_dir

    def instances(self, w):
        """ ``(tag, params, field)`` for every family member of dimension ``w.n`` """
        out = []
        for item in self.families_:
            spec = FamilySpec(item["tag"], n=w.n)
            grid = {k: v if isinstance(v, list) else [v]
                    for k, v in (item.get("params") or {}).items()}
            for params in ParameterGrid(grid):
                out.append((spec.tag, params, instantiate(spec, params)))
        return out

    def validate(self):
        """ Checks every name against the accepted values; returns self """
        check_case_ids(list(self.cases))
        for A in self.weights or [self.A]:
            MonomialWeight(tuple(A))
        for item in self.families_:
            if not isinstance(item, dict) or "tag" not in item:
                raise ValueError("Invalid family {}: expected a table with a tag".format(item))
            unknown = set(item) - {"tag", "params"}
            if unknown:
                raise ValueError("Invalid family key {}. Accepted values are params, tag".format(
                    ", ".join(sorted(unknown))))
            if item["tag"] not in FAMILIES:
                raise ValueError("Invalid family {}. Accepted values are {}".format(
                    item["tag"], ", ".join(sorted(FAMILIES))))
        for text in self.spaces or []:
            parse_space(text)
        if self.weight is not None:
            parse_weight(self.weight)
        for value in self.p:
            if not value >= 1:
                raise ValueError("Invalid exponent p={}. Accepted values are p >= 1".format(value))
        return self

    @classmethod
    def from_dict(cls, data, path=None, text=None):
        """ Validated config from a mapping; errors carry ``path`` and the line """
        if not isinstance(data, dict):
            raise ConfigError("expected a table of settings", path)
        unknown = [k for k in data if k not in cls.keys()]
        if unknown:
            raise ConfigError(
                "Invalid key {}. Accepted values are {}".format(
                    unknown[0], ", ".join(cls.keys())),
                path, _line_of(text, unknown[0]))
        config = cls(**data)
        try:
            return config.validate()
        except ValueError as e:
            raise ConfigError(str(e), path, _line_of(text, _offending(str(e))))

    @classmethod
    def from_file(cls, path):
        """ Reads a ``.json`` or ``.toml`` file """
        path = os.fspath(path)
        ext = os.path.splitext(path)[1].lower()
        if ext not in (".json", ".toml"):
            raise ConfigError(
                "Invalid config format {}. Accepted values are .json, .toml".format(ext), path)
        try:
            with open(path, "r", encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            raise ConfigError("cannot read config: {}".format(e.strerror), path)
        if ext == ".json":
            try:
                data = json.loads(text)
            except json.JSONDecodeError as e:
                raise ConfigError(e.msg, path, e.lineno)
        else:
            try:
                data = tomllib.loads(text)
            except tomllib.TOMLDecodeError as e:
                found = re.search(r"line (\d+)", str(e))
                raise ConfigError(str(e), path, int(found.group(1)) if found else None)
        return cls.from_dict(data, path, text)


def _offending(message):
    """ First token after "Invalid ..." in a validation message """
    found = re.search(r"Invalid (?:[a-z ]+ )?(\S+?)[.:]?\s", message + " ")
    return found.group(1) if found else None


def _line_of(text, token):
    """ 1-based line of the first occurrence of ``token`` in ``text`` """
    if text is None or not token:
        return None
    for number, line in enumerate(text.splitlines(), 1):
        if token in line:
            return number
    return None
