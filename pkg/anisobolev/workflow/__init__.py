from anisobolev.workflow.config import RunConfig  # noqa (API import)
from anisobolev.workflow.runner import (  # noqa (API import)
    CaseMatrix,
    case_params,
    run_sharpness,
)
from anisobolev.workflow.reports import (  # noqa (API import)
    write_table,
    write_reports,
    write_constants,
    write_scaling,
)
