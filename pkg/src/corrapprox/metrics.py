"""Goodness-of-fit measures for approximations of a correlation matrix.

RMSE conventions
----------------
``rmse_offdiag`` averages over the ``p (p - 1) / 2`` distinct off-diagonal
entries. ``rmse_with_diag`` averages the squared error over all ``p * p``
entries, which is the figure published for the PCA columns of the results
tables (0.1808 for the Heart data).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import RankError, ValidationError
from .linalg import CorrMatrix, as_matrix, eigen_symmetric


def _pair(R, fitted):
    A = R.values if isinstance(R, CorrMatrix) else as_matrix(R)
    F = as_matrix(fitted, "fitted matrix")
    if A.shape != F.shape:
        raise ValidationError(f"dimension mismatch: {A.shape} vs {F.shape}")
    return A, F


def rmse_offdiag(R, fitted) -> float:
    A, F = _pair(R, fitted)
    p = A.shape[0]
    if p < 2:
        return 0.0
    iu = np.triu_indices(p, 1)
    return float(np.sqrt(np.mean((A[iu] - F[iu]) ** 2)))


def rmse_with_diag(R, fitted) -> float:
    A, F = _pair(R, fitted)
    return float(np.sqrt(np.mean((A - F) ** 2)))


def rmse_per_variable(R, fitted, include_diag: bool) -> np.ndarray:
    """RMSE of each row of the residual matrix.

    With ``include_diag`` the row mean runs over all ``p`` entries, otherwise
    over the ``p - 1`` correlations with the other variables.
    """
    A, F = _pair(R, fitted)
    p = A.shape[0]
    E2 = (A - F) ** 2
    if include_diag:
        return np.sqrt(E2.mean(axis=1))
    if p < 2:
        return np.zeros(p)
    E2 = E2 * (1.0 - np.eye(p))
    return np.sqrt(E2.sum(axis=1) / (p - 1))


def _eigs(R, k):
    A = R.values if isinstance(R, CorrMatrix) else CorrMatrix(R).values
    p = A.shape[0]
    if not 1 <= k <= p:
        raise RankError(f"rank must be in [1, {p}], got {k}")
    return eigen_symmetric(A).eigenvalues, p


def gof_corr_squared_eigs(R, k: int = 2) -> float:
    """Share of the sum of squared eigenvalues carried by the first ``k``."""
    lam, _ = _eigs(R, k)
    sq = lam ** 2
    return float(sq[:k].sum() / sq.sum())


def gof_data_eigs(R, k: int = 2) -> float:
    """Share of total variance (``p``) carried by the first ``k`` eigenvalues."""
    lam, p = _eigs(R, k)
    return float(lam[:k].sum() / p)


def eigenvalue_shares(R, k: int = 2):
    """Per-axis contributions ``(lambda_i / p, lambda_i^2 / sum lambda^2)``."""
    lam, p = _eigs(R, k)
    return lam[:k] / p, lam[:k] ** 2 / np.sum(lam ** 2)


def regression_scores(Xs, G) -> np.ndarray:
    """Least-squares scores ``F = Xs G (G'G)^{-1}`` of observations on fixed vectors."""
    Xs = as_matrix(Xs, "data matrix")
    G = as_matrix(G, "G")
    if Xs.shape[1] != G.shape[0]:
        raise ValidationError(f"data has {Xs.shape[1]} columns but G has {G.shape[0]} rows")
    GtG = G.T @ G
    lam = np.linalg.eigvalsh(GtG)
    if lam[0] <= 1e-12 * max(lam[-1], 1e-300):
        raise RankError("G is rank deficient")
    return np.linalg.solve(GtG, G.T @ Xs.T).T


def gof_data_regression(Xs, G) -> float:
    """Fraction of ``||Xs||^2`` reproduced by ``F G'`` with regression scores ``F``."""
    Xs = as_matrix(Xs, "data matrix")
    F = regression_scores(Xs, G)
    resid = Xs - F @ np.asarray(G, dtype=float).T
    return float(1.0 - np.sum(resid ** 2) / np.sum(Xs ** 2))


# diagonal convention per method: only methods that fit the diagonal include it
INCLUDE_DIAG = {"pca": True, "pca-adjusted": True, "pca-adj": True}


@dataclass
class FitReport:
    method: str
    rank: int
    labels: tuple
    rmse_offdiag: float
    rmse_withdiag: float
    rmse_per_variable: np.ndarray
    delta: float = 0.0
    gof_data: Optional[float] = None
    gof_corr: Optional[float] = None
    iterations: int = 0
    converged: bool = True

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "rank": int(self.rank),
            "delta": float(self.delta),
            "rmse_offdiag": float(self.rmse_offdiag),
            "rmse_withdiag": float(self.rmse_withdiag),
            "per_variable": [
                {"label": lab, "rmse": float(v)} for lab, v in zip(self.labels, self.rmse_per_variable)
            ],
            "gof_data": None if self.gof_data is None else float(self.gof_data),
            "gof_corr": None if self.gof_corr is None else float(self.gof_corr),
            "iterations": int(self.iterations),
            "converged": bool(self.converged),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FitReport":
        per = d.get("per_variable", [])
        return cls(
            method=d["method"],
            rank=d["rank"],
            labels=tuple(x["label"] for x in per),
            rmse_offdiag=d["rmse_offdiag"],
            rmse_withdiag=d["rmse_withdiag"],
            rmse_per_variable=np.array([x["rmse"] for x in per], dtype=float),
            delta=d.get("delta", 0.0),
            gof_data=d.get("gof_data"),
            gof_corr=d.get("gof_corr"),
            iterations=d.get("iterations", 0),
            converged=d.get("converged", True),
        )


def fit_report(R: CorrMatrix, fitted, method: str, rank: int = 2, delta: float = 0.0,
               include_diag: Optional[bool] = None, gof_data=None, gof_corr=None,
               iterations: int = 0, converged: bool = True) -> FitReport:
    if include_diag is None:
        include_diag = INCLUDE_DIAG.get(method, False)
    return FitReport(
        method=method,
        rank=rank,
        labels=R.labels,
        rmse_offdiag=rmse_offdiag(R, fitted),
        rmse_withdiag=rmse_with_diag(R, fitted),
        rmse_per_variable=rmse_per_variable(R, fitted, include_diag),
        delta=delta,
        gof_data=gof_data,
        gof_corr=gof_corr,
        iterations=iterations,
        converged=converged,
    )
