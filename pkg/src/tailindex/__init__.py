"""Fast heavy-tail analysis: Pareto tail-index estimators, samplers and diagnostics."""
from .core import (
    ConfidenceInterval,
    DegenerateSample,
    EstimateResult,
    InvalidInput,
    RankedSample,
    TailIndexError,
    Unsupported,
    as_sample,
    quantile,
    rank,
)
from .diagnostics import GofResult, QqData, pareto_gof_test, pareto_qq_data
from .estimators import (
    HillSpec,
    MleOptions,
    alpha_geometric_percentile,
    alpha_hills,
    alpha_ls,
    alpha_mle,
    alpha_modified_percentile,
    alpha_moment,
    alpha_percentile,
    alpha_wls,
    error_pct,
    generate_all_estimates,
)
from .gpd import GpdParams, ParetoParams, gpd_pdf, gpd_to_pareto, pareto_pdf, pareto_to_gpd
from .sampling import (
    generate_gpd,
    generate_pareto,
    generate_stable_symmetric,
    generate_student_t,
    make_rng,
)

__version__ = "0.1.0"
