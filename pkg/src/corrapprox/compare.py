"""Run several approximation methods on one matrix and tabulate their fit."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .correlogram import correlogram_fit
from .errors import CorrApproxError, ValidationError
from .linalg import CorrMatrix
from .methods import (
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
    fit_report,
    gof_corr_squared_eigs,
    gof_data_eigs,
    gof_data_regression,
)

METHODS = ("pca", "pca-cos", "crg", "mds", "pfa", "wals", "wals-adj", "pca-adj")
DEFAULT_METHODS = ("pca", "pca-cos", "crg", "mds", "pfa", "wals", "wals-adj")
ADJUSTED = {"pca": "pca-adj", "wals": "wals-adj"}


@dataclass(frozen=True)
class MethodSpec:
    method: str
    rank: int = 2
    restarts: int = 20
    seed: int = 42

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValidationError(f"unknown method {self.method!r}; choose from {', '.join(METHODS)}")
        if int(self.rank) < 1:
            raise ValidationError(f"rank must be >= 1, got {self.rank}")


@dataclass
class MethodResult:
    spec: MethodSpec
    fit: object
    fitted: np.ndarray
    labels: tuple
    report: FitReport

    @property
    def G(self) -> Optional[np.ndarray]:
        if hasattr(self.fit, "G"):
            return self.fit.G
        if hasattr(self.fit, "L"):
            return self.fit.L
        return None


def run_method(R: CorrMatrix, spec: MethodSpec, Xs=None) -> MethodResult:
    """Fit one method and compute its report.

    ``Xs`` (standardized data) enables the regression goodness-of-fit of the
    data matrix for methods with biplot vectors.
    """
    m, k = spec.method, spec.rank
    gof_data = gof_corr = None
    delta, iterations, converged = 0.0, 0, True
    if m == "crg":
        if k != 2:
            raise ValidationError("the correlogram is two-dimensional; use rank 2")
        fit = correlogram_fit(R, spec.restarts, spec.seed)
        fitted, iterations, converged = fit.fitted, fit.iterations, fit.converged
    elif m == "mds":
        fit = mds_fit(R, k)
        fitted = fit.fitted_correlations
    elif m == "pfa":
        fit = pfa_fit(R, k)
        fitted, iterations = fit.fitted, fit.iterations
    else:
        fit = {
            "pca": pca_fit,
            "pca-cos": pca_fit,
            "pca-adj": pca_adjusted_fit,
            "wals": wals_fit,
            "wals-adj": wals_adjusted_fit,
        }[m](R, k)
        fitted = pca_cosine_matrix(fit) if m == "pca-cos" else fit.fitted
        delta, iterations, converged = fit.delta, fit.iterations, fit.converged
        if m in ("pca", "pca-cos"):
            gof_data, gof_corr = gof_data_eigs(R, k), gof_corr_squared_eigs(R, k)
    result = MethodResult(spec, fit, fitted, R.labels, None)
    if Xs is not None and result.G is not None:
        gof_data = gof_data_regression(Xs, result.G)
    result.report = fit_report(R, fitted, m, k, delta, gof_data=gof_data, gof_corr=gof_corr,
                               iterations=iterations, converged=converged)
    return result


@dataclass
class ComparisonRow:
    method: str
    rmse_offdiag: Optional[float]
    rmse_withdiag: Optional[float]
    delta: Optional[float]
    iterations: Optional[int]
    converged: Optional[bool]
    error: Optional[str] = None

    def to_dict(self) -> dict:
        d = {
            "method": self.method,
            "rmse_offdiag": self.rmse_offdiag,
            "rmse_withdiag": self.rmse_withdiag,
            "delta": self.delta,
            "iterations": self.iterations,
            "converged": self.converged,
        }
        if self.error is not None:
            d["error"] = self.error
        return d


@dataclass
class ComparisonTable:
    rows: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"rows": [r.to_dict() for r in self.rows]}

    @classmethod
    def from_dict(cls, d: dict) -> "ComparisonTable":
        return cls([ComparisonRow(**{"error": None, **r}) for r in d["rows"]])

    def row(self, method: str) -> ComparisonRow:
        for r in self.rows:
            if r.method == method:
                return r
        raise KeyError(method)

    def format(self) -> str:
        lines = [f"{'method':<10}{'rmse_off':>10}{'rmse_all':>10}{'delta':>10}{'iter':>7}  converged"]
        for r in self.rows:
            if r.error is not None:
                lines.append(f"{r.method:<10}  failed: {r.error}")
                continue
            lines.append(
                f"{r.method:<10}{r.rmse_offdiag:>10.4f}{r.rmse_withdiag:>10.4f}"
                f"{r.delta:>10.4f}{r.iterations:>7d}  {'yes' if r.converged else 'no'}"
            )
        return "\n".join(lines)


def _row(R, spec) -> ComparisonRow:
    try:
        rep = run_method(R, spec).report
    except CorrApproxError as exc:
        return ComparisonRow(spec.method, None, None, None, None, None, f"{type(exc).__name__}: {exc}")
    return ComparisonRow(spec.method, rep.rmse_offdiag, rep.rmse_withdiag, float(rep.delta),
                         int(rep.iterations), bool(rep.converged))


def run_compare(R: CorrMatrix, specs: Sequence[MethodSpec], workers: int = 1) -> ComparisonTable:
    """One row per spec, in the given order; failures become error rows."""
    specs = list(specs)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda s: _row(R, s), specs))
    else:
        rows = [_row(R, s) for s in specs]
    return ComparisonTable(rows)
