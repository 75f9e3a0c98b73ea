from anisobolev.inequalities.base import (  # noqa (API import)
    PASS,
    REFUSED,
    ANOMALY,
    UNSTABLE,
    ANCHORS,
    CASE_IDS,
    VerificationReport,
    verify_case,
    check_case_ids,
)
from anisobolev.inequalities.chain import (  # noqa (API import)
    verify_t32,
    verify_pointwise_oscillation,
)
from anisobolev.inequalities.mean_oscillation import verify_t23  # noqa (API import)
from anisobolev.inequalities.convexified import (  # noqa (API import)
    verify_t43,
    verify_p44,
    verify_trudinger,
    verify_t46,
)
from anisobolev.inequalities.lorentz import (  # noqa (API import)
    verify_t47,
    verify_lorentz_corollary,
    verify_lorentz_zygmund_corollary,
)
from anisobolev.inequalities.gamma import verify_gamma, verify_ggamma  # noqa (API import)
