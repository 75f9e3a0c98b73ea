import os


class Options:
    GRID_SIZE = 4096
    T_MIN_RATIO = 1e-6
    RESOLUTION = {1: 10000, 2: 256, 3: 48}
    STABILITY_TOL = 0.05
    SLOPE_TOL = 0.02
    MAX_EVALUATIONS = 200
    N_JOBS = None
    FLOAT_DIGITS = 12
    OUTPUT_DIR = os.environ.get("ANISOBOLEV_OUTPUT_DIR", "reports")

    @classmethod
    def get_option(cls, option=None):
        return getattr(cls, option)

    @classmethod
    def set_option(cls, option, value):
        if not hasattr(cls, option):
            raise ValueError(
                "Invalid option {}. Accepted values are {}".format(
                    option, ", ".join(cls.describe_option())))
        setattr(cls, option, value)

    def reset_option(self):
        self.set_option('GRID_SIZE', 4096)
        self.set_option('T_MIN_RATIO', 1e-6)
        self.set_option('RESOLUTION', {1: 10000, 2: 256, 3: 48})
        self.set_option('STABILITY_TOL', 0.05)
        self.set_option('SLOPE_TOL', 0.02)
        self.set_option('MAX_EVALUATIONS', 200)
        self.set_option('N_JOBS', None)
        self.set_option('FLOAT_DIGITS', 12)
        self.set_option(
            'OUTPUT_DIR', os.environ.get("ANISOBOLEV_OUTPUT_DIR", "reports"))

    @classmethod
    def describe_option(cls):
        return [k for k in vars(cls) if k.isupper()]

    @classmethod
    def default_resolution(cls, n):
        """ Cells per axis used when a caller does not pass a resolution """
        try:
            return cls.RESOLUTION[n]
        except KeyError:
            raise ValueError(
                "Unsupported dimension {}. Accepted values are {}".format(
                    n, sorted(cls.RESOLUTION)))


options = Options()


from anisobolev.utils import *  # noqa (API Import)
from anisobolev.core import *  # noqa (API Import)
from anisobolev.spaces import *  # noqa (API Import)
from anisobolev.functions import *  # noqa (API Import)
from anisobolev.sobolev import *  # noqa (API Import)
from anisobolev.inequalities import *  # noqa (API Import)
from anisobolev.sharpness import *  # noqa (API Import)
from anisobolev.workflow import *  # noqa (API Import)

__version__ = "0.1.0"
