# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
""" Command line interface.

Subcommands::

    anisobolev verify --config run.toml
    anisobolev verify --case T32.iv --p 2 --A 2
    anisobolev sweep --family cone --param radius=0.5,1,2 --case T32.i,T32.ii
    anisobolev sharpness --A 2 --case T32.i --budget 50
    anisobolev rearrange --family cone --A 2
    anisobolev spaces --space lorentz:p=2,q=1 --family plateau

Exit status is 0 when every row passed or was refused, 1 when a row is
anomalous or unstable (or a scaling verdict contradicts its oracle) and 2
on invalid input, unwritable output or an unexpected failure.
"""
import argparse
import os
import sys
import warnings

from anisobolev import options
from anisobolev.core.diagnostics import ConfigError
from anisobolev.core.rearrangement import rearrange
from anisobolev.spaces.catalog import parse_space
from anisobolev.utils.utility_functions import format_float
from anisobolev.workflow.config import RunConfig
from anisobolev.workflow.reports import write_constants, write_reports, write_scaling
from anisobolev.workflow.runner import CaseMatrix, run_sharpness


def _floats(text):
    return tuple(float(v) for v in text.split(",") if v.strip())


def _param(text):
    key, sep, values = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError("expected KEY=V1[,V2...], got {}".format(text))
    values = list(_floats(values))
    return key.strip(), values if len(values) > 1 else values[0]


def _common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="Run configuration (.json or .toml).")
    common.add_argument("--out", help="Output directory (default $ANISOBOLEV_OUTPUT_DIR "
                                      "or ./reports).")
    common.add_argument("--resolution", type=int, help="Cells per axis.")
    common.add_argument("--grid", type=int, dest="grid_size", help="t-grid size.")
    common.add_argument("--seed", type=int)
    common.add_argument("--case", help="Comma separated case ids.")
    common.add_argument("--family", help="Family tag.")
    common.add_argument("--param", type=_param, action="append", default=[],
                        metavar="KEY=V1[,V2...]", help="Family parameter values.")
    common.add_argument("--space", action="append", help="Space text encoding; repeatable.")
    common.add_argument("--A", type=_floats, help="Weight exponents, e.g. 2 or 1,1.")
    common.add_argument("--p", type=float, action="append",
                        help="Exponent of the cumulative oscillation case; repeatable.")
    common.add_argument("--p-vec", type=_floats, dest="p_vec")
    common.add_argument("--q-vec", type=_floats, dest="q_vec")
    common.add_argument("--m", type=float)
    common.add_argument("--weight", help="Weight text encoding, e.g. log(1).")
    common.add_argument("--budget", type=int, help="Refinement evaluations.")
    common.add_argument("--n-jobs", type=int, dest="n_jobs")
    return common


def build_parser():
    parser = argparse.ArgumentParser(
        prog="anisobolev",
        description="Rearrangement inequalities for monomial weights, checked numerically.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_parser()
    sub.add_parser("verify", parents=[common], help="Run the case x family matrix.")
    sub.add_parser("sweep", parents=[common], help="Run the matrix over parameter grids.")
    sub.add_parser("sharpness", parents=[common],
                   help="Scaling tests and best constant estimates.")
    sub.add_parser("rearrange", parents=[common], help="Write the rearrangement of one instance.")
    sub.add_parser("spaces", parents=[common], help="Evaluate one norm on one instance.")
    return parser


def load_config(args):
    """ The config file, if any, with the command line flags on top """
    config = RunConfig.from_file(args.config) if args.config else RunConfig()
    overrides = {}
    for key in ("resolution", "grid_size", "seed", "p_vec", "q_vec", "m", "weight",
                "budget", "n_jobs"):
        if getattr(args, key) is not None:
            overrides[key] = getattr(args, key)
    if args.A is not None:
        overrides.update(A=args.A, weights=None)
    if args.case is not None:
        overrides["cases"] = [c.strip() for c in args.case.split(",") if c.strip()]
    if args.space:
        overrides["spaces"] = list(args.space)
    if args.p:
        overrides["p"] = list(args.p)
    if args.out is not None:
        overrides["output_dir"] = args.out
    params = dict(args.param)
    if args.family is not None:
        overrides["families"] = [{"tag": args.family, "params": params}]
    elif params:
        overrides["families"] = [dict(item, params=dict(item.get("params") or {}, **params))
                                 for item in config.families_]
    return config.set_params(**overrides).validate()


def _summary(reports):
    for r in reports:
        print("{}\t{}\t{}\tratio={}".format(r.case_id, r.family, r.status,
                                           format_float(r.ratio, 6)))


def _verify(args, config):
    matrix = CaseMatrix(config).fit()
    paths = write_reports(matrix.reports_, config.output_dir_,
                          "sweep" if args.command == "sweep" else "reports")
    _summary(matrix.reports_)
    print("wrote {}".format(", ".join(paths)))
    failures = matrix.failures_
    if failures:
        print("{} failing row(s): {}".format(
            len(failures), ", ".join(r.case_id for r in failures)), file=sys.stderr)
        return 1
    return 0


def _contradicts_oracle(row):
    if row["verdict"] == "skipped":
        return False
    expected = abs(row["oracle_slope"]) < options.SLOPE_TOL
    return expected != (row["verdict"] == "invariant")


def _sharpness(args, config):
    scaling, estimates = run_sharpness(config)
    paths = [write_scaling(scaling, config.output_dir_)]
    if estimates:
        paths.extend(write_constants(estimates, config.output_dir_))
    for e in estimates:
        print("{}\t{}\tbest_ratio={}".format(e.case_id, e.family,
                                             format_float(e.best_ratio, 6)))
    print("wrote {}".format(", ".join(paths)))
    bad = [row for _, row in scaling.iterrows() if _contradicts_oracle(row)]
    if bad:
        print("scaling verdict contradicts the exact slope for q = {}".format(
            ", ".join(format_float(row["q"], 6) for row in bad)), file=sys.stderr)
        return 1
    return 0


def _first_instance(config):
    w = config.weights_[0]
    tag, _, f = config.instances(w)[0]
    return tag, w, f


def _rearrange(args, config):
    tag, w, f = _first_instance(config)
    profile = rearrange(w, f, resolution=config.resolution, grid_size=config.grid_size)
    os.makedirs(config.output_dir_, exist_ok=True)
    path = os.path.join(config.output_dir_, "rearrangement_{}.csv".format(tag))
    profile.to_csv(path)
    print("wrote {}".format(path))
    return 0


def _spaces(args, config):
    if not config.spaces:
        raise ConfigError("the spaces command needs --space")
    _, w, f = _first_instance(config)
    profile = rearrange(w, f, resolution=config.resolution, grid_size=config.grid_size)
    for text in config.spaces:
        spec = parse_space(text)
        print("{}\t{}".format(spec.text, format_float(spec.norm(profile))))
    return 0


COMMANDS = {"verify": _verify, "sweep": _verify, "sharpness": _sharpness,
            "rearrange": _rearrange, "spaces": _spaces}


def main(argv=None):
    args = build_parser().parse_args(argv)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            status = COMMANDS[args.command](args, load_config(args))
        except OSError as e:
            print("error: cannot write {}: {}".format(e.filename, e.strerror), file=sys.stderr)
            status = 2
        except ValueError as e:
            print("error: {}".format(e), file=sys.stderr)
            status = 2
        except Exception as e:
            print("error: {}: {}".format(type(e).__name__, e), file=sys.stderr)
            status = 2
    for w in caught:
        print("warning: {}: {}".format(w.category.__name__, w.message), file=sys.stderr)
    return status
