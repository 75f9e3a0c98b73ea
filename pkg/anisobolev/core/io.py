# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
import json

import dill
import numpy as np
from sklearn.base import BaseEstimator


def _jsonable(value):
    if isinstance(value, BaseEstimator) and hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


class ProfileIO:
    """ Persistence of profiles and other sampled curves """

    def to_pickle(self, path, protocol=None):
        """ Pickles the curve with dill """
        with open(path, "wb") as pkl:
            dill.dump(self, pkl, protocol=protocol)

    def to_csv(self, path, **kwargs):
        """ Writes ``to_frame()`` as CSV with the package float format """
        from anisobolev import options

        kwargs.setdefault("float_format", "%.{}g".format(options.FLOAT_DIGITS))
        self.to_frame().to_csv(path, index=False, **kwargs)


class EstimatorIO:
    """ Class intended to allow persistence of estimator objects """

    def to_pickle(self, path, protocol=None):
        """ Serializes estimator object to pickle.

        Parameters
        ----------
        path : str
            File path and name of pickle object.
        protocol :
            The pickle protocol to use.
        """
        with open(path, "wb") as pkl:
            dill.dump(self, pkl, protocol=protocol)

    def to_json(self):
        """ Serializes estimator object to json format

        Returns
        -------
            string representation of object in json format
        """
        params = self.get_params(deep=False)
        params = {k: _jsonable(v) for k, v in params.items()}
        return json.dumps({"params": params, "__class__": self.__class__.__name__})
