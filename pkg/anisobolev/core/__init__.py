from anisobolev.core.diagnostics import (  # noqa (API import)
    AnisobolevWarning,
    DivergenceWarning,
    ContinuityWarning,
    SpikeWarning,
    HypothesisWarning,
    UndecidableWarning,
    StabilityWarning,
    OptimizerWarning,
    NonFiniteSampleError,
    ConfigError,
)
from anisobolev.core.measure import (  # noqa (API import)
    MonomialWeight,
    BoxDomain,
    CellDecomposition,
    homogeneous_dimension,
    weight_at,
    integrate,
    integrate_monte_carlo,
    measure_superlevel,
    distribution_function,
)
from anisobolev.core.field import (  # noqa (API import)
    Field,
    CallableField,
    Dilation,
    Truncation,
    FieldSum,
    truncate,
    as_field,
)
from anisobolev.core.profile import (  # noqa (API import)
    Curve,
    MonotoneProfile,
    DistributionFunction,
    geometric_grid,
    power_moment,
    step_product,
)
from anisobolev.core.rearrangement import (  # noqa (API import)
    Rearrangement,
    SampledDerivative,
    rearrange,
    double_star,
    oscillation,
    check_crece,
    profile_derivative,
    oscillation_from_derivative,
    relative_sup_error,
    check_equimeasurability,
    check_subadditivity,
    hardy_littlewood_gap,
)
