from anisobolev.functions.base import (  # noqa (API import)
    NO_ORACLE,
    FAMILIES,
    TestFunction,
    FamilySpec,
    instantiate,
    oracle_profile,
    ball_mass,
    cube_mass,
)
from anisobolev.functions.cone import Cone  # noqa (API import)
from anisobolev.functions.bump import (  # noqa (API import)
    TensorBump,
    RadialPower,
    DoubleRevolution,
)
from anisobolev.functions.plateau import Plateau  # noqa (API import)
