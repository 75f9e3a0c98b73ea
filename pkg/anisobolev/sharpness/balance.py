# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
from collections import namedtuple

import numpy as np

from anisobolev.core.field import Dilation
from anisobolev.core.measure import MonomialWeight
from anisobolev.sobolev.terms import sobolev_terms

Balance = namedtuple("Balance", ["scales", "norms_before", "norms_after", "spread"])


def lambda_balance(f, w, resolution=None, grid_size=None, box=None):
    """ Per-axis dilation equalizing the ``L^1_mu`` norms of the partial derivatives.

    The factors are ``lambda_i = prod_{j != i} ||f_{x_j}||_{L^1_mu}``, so
    every ``||d_i f(lambda x)||_{L^1_mu}`` equals the same product after
    rescaling. In dimension one the empty product gives ``lambda = 1``.

    Parameters
    ----------
    f: Field
    w: MonomialWeight
    resolution, grid_size: int, optional
    box: BoxDomain, optional

    Returns
    -------
    Balance
        ``scales``, the gradient norms before and after rescaling and
        ``spread = (max - min) / mean`` of the rescaled norms.
    """
    w = w if isinstance(w, MonomialWeight) else MonomialWeight(tuple(w))
    before = sobolev_terms(f, w, resolution, grid_size, box).gradient_l1_
    degenerate = np.flatnonzero(~(before > 0))
    if degenerate.size:
        raise ValueError(
            "Degenerate direction: ||f_x{}||_L1 = 0, no balancing dilation "
            "exists".format(int(degenerate[0]) + 1))
    scales = np.array([np.prod(np.delete(before, i)) for i in range(w.n)])
    field = Dilation(f, scales)
    if box is not None:
        box = box.scale(scales)
    after = sobolev_terms(field, w, resolution, grid_size, box).gradient_l1_
    spread = float((after.max() - after.min()) / after.mean())
    return Balance(scales, before.copy(), after.copy(), spread)
