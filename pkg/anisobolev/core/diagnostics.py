# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
""" Warning categories and exceptions raised by the package.

Numerical trouble that does not invalidate a result is reported through
``warnings.warn`` with one of the categories below so callers can filter
or escalate it with the standard warnings machinery.
"""


class AnisobolevWarning(UserWarning):
    pass


class DivergenceWarning(AnisobolevWarning):
    """ A norm or weight integral evaluated to +inf """


class ContinuityWarning(AnisobolevWarning):
    """ A profile has a jump, so it is not absolutely continuous """


class SpikeWarning(AnisobolevWarning):
    """ A jump of a cumulative profile was lumped into a single t-cell """


class HypothesisWarning(AnisobolevWarning):
    """ A theorem case was refused because a hypothesis failed """


class UndecidableWarning(AnisobolevWarning):
    """ A weight test cannot be decided from the available data """


class StabilityWarning(AnisobolevWarning):
    """ A ratio moved more than the tolerance under grid doubling """


class OptimizerWarning(AnisobolevWarning):
    """ The simplex refinement did not improve on the coarse grid maximum """


class NonFiniteSampleError(ValueError):
    def __init__(self, index, center, value):
        self.index = index
        self.center = center
        self.value = value
        super().__init__(
            "Non-finite sample {} at cell {} (center {})".format(
                value, index, list(center)))


class ConfigError(ValueError):
    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = "{}".format(path)
            if line is not None:
                where = "{}:{}".format(where, line)
            where = where + ": "
        super().__init__(where + message)
