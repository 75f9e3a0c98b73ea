# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
import json
import math

import dill
import numpy as np


def read_pickle(path):
    with open(path, "rb") as pkl:
        return dill.load(pkl)


def _restore(value):
    if isinstance(value, str) and value.startswith("{") and '"__class__"' in value:
        return read_json(value)
    if isinstance(value, list):
        return tuple(_restore(v) for v in value)
    return value


def read_json(json_str):
    """ Rebuilds an estimator from ``to_json`` output, nested ones included """
    import anisobolev as ab

    json_dict = json.loads(json_str)
    if type(json_dict) is list:
        return [read_json(json.dumps(item)) for item in json_dict]
    cls = json_dict["__class__"]
    if cls not in ab.__dict__:
        raise ValueError("Unknown class {} in json".format(cls))
    params = {k: _restore(v) for k, v in json_dict["params"].items()}
    return ab.__dict__[cls]().set_params(**params)


def format_float(value, digits=None):
    """ Text form of a float with ``digits`` significant digits.

    Infinities are written ``inf``/``-inf`` and missing values as an empty
    string.
    """
    from anisobolev import options

    digits = options.FLOAT_DIGITS if digits is None else digits
    if value is None:
        return ""
    value = float(value)
    if math.isnan(value):
        return ""
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return "{:.{}g}".format(value, digits)


def round_float(value, digits=None):
    """ ``value`` rounded to ``digits`` significant digits, ``None`` for nan """
    text = format_float(value, digits)
    if text == "":
        return None
    return float(text)


def relative_change(a, b):
    """ ``|b - a| / |a|``; zero when both vanish and inf when only ``a`` does """
    a, b = float(a), float(b)
    if not (np.isfinite(a) and np.isfinite(b)):
        return 0.0 if a == b else np.inf
    if a == 0:
        return 0.0 if b == 0 else np.inf
    return abs(b - a) / abs(a)
