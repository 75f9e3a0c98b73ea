from anisobolev.sharpness.scaling import (  # noqa (API import)
    ScalingExperiment,
    scaling_exponent_test,
    scaling_slope_oracle,
)
from anisobolev.sharpness.balance import Balance, lambda_balance  # noqa (API import)
from anisobolev.sharpness.constant import (  # noqa (API import)
    ConstantEstimate,
    estimate_best_constant,
)
