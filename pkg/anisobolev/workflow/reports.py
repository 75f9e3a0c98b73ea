# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
""" CSV and JSON writers for verification reports and constant estimates.

Floats are written with ``options.FLOAT_DIGITS`` significant digits,
infinities as ``inf`` and missing values as an empty CSV field or a JSON
null, so identical runs produce byte-identical files.
"""
import json
import math
import os

import numpy as np
import pandas as pd

from anisobolev.inequalities.base import VerificationReport
from anisobolev.sharpness.constant import ConstantEstimate
from anisobolev.utils.utility_functions import format_float, round_float

FLOAT_COLUMNS = ("lhs", "rhs", "ratio", "worst_t", "stability", "best_ratio", "grid_best")


def _csv_value(key, value):
    if key in FLOAT_COLUMNS:
        return format_float(value)
    if key == "resolution":
        return "/".join(str(r) for r in value)
    if isinstance(value, dict):
        return json.dumps(_json_value(value), sort_keys=True)
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    return value


def _json_value(value):
    if isinstance(value, dict):
        return {str(k): _json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_json_value(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return round_float(value)
    return value


def report_frame(rows, columns):
    """ Text-formatted table of ``rows`` (mappings) in ``columns`` order """
    return pd.DataFrame([{c: _csv_value(c, row[c]) for c in columns} for row in rows],
                        columns=list(columns))


def write_table(rows, columns, out_dir, stem):
    """ Writes ``<stem>.csv`` and ``<stem>.json`` into ``out_dir``.

    Returns
    -------
    tuple of str
        The CSV and JSON paths.
    """
    os.makedirs(out_dir, exist_ok=True)
    csv_path = os.path.join(out_dir, stem + ".csv")
    json_path = os.path.join(out_dir, stem + ".json")
    report_frame(rows, columns).to_csv(csv_path, index=False, lineterminator="\n")
    payload = [{c: _json_value(row[c]) for c in columns} for row in rows]
    with open(json_path, "w", encoding="utf-8", newline="\n") as f:
        json.dump(payload, f, indent=2, sort_keys=True)
        f.write("\n")
    return csv_path, json_path


def write_reports(reports, out_dir, stem="reports"):
    """ Verification reports as CSV and JSON """
    return write_table([r.as_dict() for r in reports], VerificationReport.columns,
                       out_dir, stem)


def write_constants(estimates, out_dir, stem="constants"):
    return write_table([e.as_dict() for e in estimates], ConstantEstimate.columns,
                       out_dir, stem)


def write_scaling(frame, out_dir, stem="scaling"):
    """ Scaling results as CSV, slopes formatted like the report floats """
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, stem + ".csv")
    frame = frame.copy()
    for column in ("q", "slope", "oracle_slope", "fitted_exponent"):
        if column in frame:
            frame[column] = frame[column].map(format_float)
    if "axis_slopes" in frame:
        frame["axis_slopes"] = frame["axis_slopes"].map(
            lambda s: " ".join(format_float(v) for v in s))
    frame.to_csv(path, index=False, lineterminator="\n")
    return path
