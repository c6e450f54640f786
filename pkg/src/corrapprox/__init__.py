"""Low-rank approximation and biplot geometry for correlation matrices."""
from .biplot import BiplotScene, CalibratedAxis, build_scene, calibrate_axis, map_observations, mds_scene, scale_scores_chisq
from .compare import ComparisonTable, MethodSpec, run_compare, run_method
from .correlogram import AngleFit, correlogram_fit, correlogram_gradient, correlogram_loss
from .errors import (
    ConvergenceError,
    CorrApproxError,
    DegenerateError,
    RankError,
    SymmetrizationError,
    ValidationError,
)
from .fileio import heart, read_corr_csv, read_data_csv, write_fitted_csv, write_report_json
from .linalg import CorrMatrix, EigenDecomposition, correlation_from_data, double_center, eigen_symmetric, svd_thin
from .methods import (
    FactorSolution,
    LowRankFit,
    MdsFit,
    mds_fit,
    pca_adjusted_fit,
    pca_cosine_matrix,
    pca_fit,
    pfa_fit,
    wals_adjusted_fit,
    wals_fit,
)
from .metrics import (
    FitReport,
    gof_corr_squared_eigs,
    gof_data_eigs,
    gof_data_regression,
    rmse_offdiag,
    rmse_per_variable,
    rmse_with_diag,
)
from .svg import render_svg

__version__ = "0.1.0"

__all__ = [
    "AngleFit",
    "BiplotScene",
    "CalibratedAxis",
    "ComparisonTable",
    "ConvergenceError",
    "CorrApproxError",
    "CorrMatrix",
    "DegenerateError",
    "EigenDecomposition",
    "FactorSolution",
    "FitReport",
    "LowRankFit",
    "MdsFit",
    "MethodSpec",
    "RankError",
    "SymmetrizationError",
    "ValidationError",
    "build_scene",
    "calibrate_axis",
    "correlation_from_data",
    "correlogram_fit",
    "correlogram_gradient",
    "correlogram_loss",
    "double_center",
    "eigen_symmetric",
    "gof_corr_squared_eigs",
    "gof_data_eigs",
    "gof_data_regression",
    "heart",
    "map_observations",
    "mds_fit",
    "mds_scene",
    "pca_adjusted_fit",
    "pca_cosine_matrix",
    "pca_fit",
    "pfa_fit",
    "read_corr_csv",
    "read_data_csv",
    "render_svg",
    "rmse_offdiag",
    "rmse_per_variable",
    "rmse_with_diag",
    "run_compare",
    "run_method",
    "scale_scores_chisq",
    "svd_thin",
    "wals_adjusted_fit",
    "wals_fit",
    "write_fitted_csv",
    "write_report_json",
]
