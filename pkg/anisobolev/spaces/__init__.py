from anisobolev.spaces.weights import (  # noqa (API import)
    Asymptotics,
    WeightFunction,
    LogPowerWeight,
    ExponentialWeight,
    PiecewisePowerWeight,
    TabulatedWeight,
    PowerTimesWeight,
    LemmaWeight,
    constant_weight,
    power_weight,
    log_weight,
    times_power,
    weight_u_from_v,
    parse_weight,
    resolve_weight,
)
from anisobolev.spaces.conditions import (  # noqa (API import)
    is_bp_weight,
    check_admissible,
    check_ggamma_weight,
)
from anisobolev.spaces.base import SpaceSpec, NormResult, norm, as_profile  # noqa (API import)
from anisobolev.spaces.lebesgue import Lp, Linf, L1plusLinf  # noqa (API import)
from anisobolev.spaces.lorentz import (  # noqa (API import)
    LorentzPQ,
    LorentzZygmund,
    GeneralizedLorentz,
)
from anisobolev.spaces.gamma import Gamma, GGamma  # noqa (API import)
from anisobolev.spaces.convexified import Convexified, AngleConvexified  # noqa (API import)
from anisobolev.spaces.hardy import hardy_p, hardy_q  # noqa (API import)
from anisobolev.spaces.boyd import (  # noqa (API import)
    BoydIndices,
    default_probes,
    dilation_norm,
    estimate_boyd_indices,
    boyd_indices,
)
from anisobolev.spaces.catalog import (  # noqa (API import)
    parse_space,
    harmonic_mean_exponent,
    compare_to_dimension,
    sobolev_exponent,
)
from anisobolev.spaces.properties import (  # noqa (API import)
    TrialResult,
    default_trial_spaces,
    hlp_trials,
    holder_trials,
    transfer_lemma_trials,
    lambda_gamma_equivalence,
    lambda_weight_identity_check,
)
