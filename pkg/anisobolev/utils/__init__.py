""" utils should store all utility functions and classes, i.e. things that
    are used by various modules in the package.
"""
from anisobolev.utils.weighted_regression import (
    WeightedRegression,
)  # noqa (API import)

from anisobolev.utils.utility_functions import (  # noqa (API import)
    read_pickle,
    read_json,
    format_float,
    round_float,
    relative_change,
)
