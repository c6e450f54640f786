"""Low-rank approximations of a correlation matrix.

Scalar-product methods (PCA, PCA with additive adjustment, principal factor
analysis, weighted alternating least squares with and without adjustment)
return coordinates ``G`` such that the fitted matrix is ``delta * J + G G'``.
Multidimensional scaling works with distances instead and returns an
:class:`MdsFit`. The correlogram lives in :mod:`corrapprox.correlogram`.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import (
    ConvergenceError,
    DegenerateError,
    RankError,
    SymmetrizationError,
    ValidationError,
)
from .linalg import CorrMatrix, check_symmetric, double_center, eigen_symmetric

POSITIVE_EIG_TOL = 1e-12

WALS_TOL = 1e-12
WALS_MAX_ITER = 20000
# absolute loss below which an alternating fit counts as exact
LOSS_FLOOR = 1e-28

PFA_TOL = 1e-9
PFA_MAX_ITER = 1000


@dataclass(frozen=True)
class LowRankFit:
    method: str
    G: np.ndarray
    delta: float
    fitted: np.ndarray
    labels: tuple
    iterations: int = 0
    final_loss: float = 0.0
    converged: bool = True
    loss_history: tuple = field(default=(), repr=False)

    @property
    def rank(self) -> int:
        return self.G.shape[1]


@dataclass(frozen=True)
class FactorSolution:
    """Principal factor solution.

    ``L`` is the loading matrix from the last spectral step. ``communalities``
    are the converged (clipped to ``[0, 1]``) fixed-point values, so in a
    Heywood case the squared row length of ``L`` can overshoot 1 slightly
    while the reported communality stays at 1.
    """

    L: np.ndarray
    psi: np.ndarray
    communalities: np.ndarray
    labels: tuple
    iterations: int
    clipped: bool = False
    final_loss: float = 0.0

    @property
    def fitted(self) -> np.ndarray:
        return self.L @ self.L.T

    def as_fit(self) -> LowRankFit:
        return LowRankFit("pfa", self.L, 0.0, self.fitted, self.labels, self.iterations,
                          self.final_loss, True)


@dataclass(frozen=True)
class MdsFit:
    coords: np.ndarray
    fitted_distances: np.ndarray
    fitted_correlations: np.ndarray
    eigenvalues: np.ndarray
    labels: tuple
    clipped: bool = False

    @property
    def fitted(self) -> np.ndarray:
        return self.fitted_correlations

    @property
    def rank(self) -> int:
        return self.coords.shape[1]


def _values(R):
    if isinstance(R, CorrMatrix):
        return R.values, R.labels
    R = CorrMatrix(R)
    return R.values, R.labels


def _top_k(M: np.ndarray, k: int):
    lam, V = eigen_symmetric(M)
    return lam[:k], V[:, :k], lam


def _check_rank(k: int, lo: int, hi: int, what: str):
    if not isinstance(k, (int, np.integer)) or k < lo or k > hi:
        raise RankError(f"{what}: rank must be in [{lo}, {hi}], got {k!r}")


def pca_fit(R, k: int = 2) -> LowRankFit:
    """Truncated spectral decomposition: ``G = V_k D_k^{1/2}``."""
    A, labels = _values(R)
    p = A.shape[0]
    _check_rank(k, 1, p, "pca")
    lam, V, full = _top_k(A, k)
    positive = int(np.sum(full > POSITIVE_EIG_TOL))
    if k > positive:
        raise RankError(f"pca: rank {k} exceeds the {positive} positive eigenvalues")
    G = V * np.sqrt(lam)
    F = G @ G.T
    return LowRankFit("pca", G, 0.0, F, labels, 0, float(np.sum((A - F) ** 2)), True)


def pca_cosine_matrix(fit: LowRankFit) -> np.ndarray:
    """Cosines of the angles between the rows of ``fit.G``."""
    norms = np.linalg.norm(fit.G, axis=1)
    bad = norms <= 1e-12
    if bad.any():
        i = int(np.argmax(bad))
        name = fit.labels[i] if fit.labels else str(i)
        raise DegenerateError(f"variable {name} has a zero-length vector")
    C = np.clip((fit.G @ fit.G.T) / np.outer(norms, norms), -1.0, 1.0)
    np.fill_diagonal(C, 1.0)
    return C


def pca_adjusted_fit(R, k: int = 2, tol: float = WALS_TOL, max_iter: int = WALS_MAX_ITER) -> LowRankFit:
    """Minimize ``||R - delta J - G G'||_F`` by alternating delta and G.

    The delta step is the mean of ``R - G G'``; the G step is the top-k
    spectral truncation of ``R - delta J``.
    """
    A, labels = _values(R)
    p = A.shape[0]
    _check_rank(k, 1, p, "pca-adjusted")
    J = np.ones((p, p))

    def g_step(delta):
        lam, V, _ = _top_k(A - delta * J, k)
        if lam[-1] <= POSITIVE_EIG_TOL:
            raise RankError(
                f"pca-adjusted: rank {k} exceeds the positive spectrum of R - delta J (delta={delta:.6g})"
            )
        return V * np.sqrt(lam)

    delta = 0.0
    G = g_step(delta)
    loss = float(np.sum((A - G @ G.T) ** 2))
    history = [loss]
    converged = False
    it = 0
    for it in range(1, max_iter + 1):
        delta = float(np.mean(A - G @ G.T))
        G = g_step(delta)
        new = float(np.sum((A - delta - G @ G.T) ** 2))
        history.append(new)
        done = loss - new <= tol * loss or new < LOSS_FLOOR
        loss = new
        if done:
            converged = True
            break
    F = delta * J + G @ G.T
    return LowRankFit("pca-adjusted", G, delta, F, labels, it, loss, converged, tuple(history))


def mds_fit(R, k: int = 2) -> MdsFit:
    """Classical scaling of the distances ``sqrt(2 (1 - r))``.

    Coordinates come from the double-centered correlation matrix; fitted
    correlations are back-transformed with ``1 - d^2 / 2``.
    """
    A, labels = _values(R)
    p = A.shape[0]
    _check_rank(k, 1, p - 1, "mds")
    lam, V, full = _top_k(double_center(A), k)
    clipped = bool(np.any(lam < 0))
    if clipped:
        warnings.warn("mds: negative eigenvalues of the double-centered matrix clipped to 0")
    X = V * np.sqrt(np.clip(lam, 0.0, None))
    diff = X[:, None, :] - X[None, :, :]
    D2 = np.sum(diff * diff, axis=-1)
    D = np.sqrt(D2)
    C = 1.0 - D2 / 2.0
    np.fill_diagonal(C, 1.0)
    return MdsFit(X, D, C, full, labels, clipped)


def _smc(A: np.ndarray) -> np.ndarray:
    lam, V = eigen_symmetric(A)
    if lam[-1] > POSITIVE_EIG_TOL * max(lam[0], 1.0):
        inv_diag = np.sum(V * V / lam, axis=1)
        return 1.0 - 1.0 / inv_diag
    off = np.abs(A - np.diag(np.diag(A)))
    return off.max(axis=1)


def pfa_fit(R, k: int = 2, tol: float = PFA_TOL, max_iter: int = PFA_MAX_ITER) -> FactorSolution:
    """Principal factor analysis by iterated eigendecomposition of the reduced matrix.

    Starts from squared multiple correlations (largest absolute correlation
    when R is singular). Communalities are clipped to [0, 1] every step.
    """
    A, labels = _values(R)
    p = A.shape[0]
    _check_rank(k, 1, p - 1, "pfa")
    h = np.clip(_smc(A), 0.0, 1.0)
    clipped = False
    for it in range(1, max_iter + 1):
        Rr = A.copy()
        np.fill_diagonal(Rr, h)
        lam, V, _ = _top_k(Rr, k)
        L = V * np.sqrt(np.clip(lam, 0.0, None))
        raw = np.sum(L * L, axis=1)
        h_new = np.clip(raw, 0.0, 1.0)
        clipped = clipped or bool(np.any(h_new != raw))
        change = np.max(np.abs(h_new - h))
        h = h_new
        if change < tol:
            loss = _weighted_loss(A, off_diagonal_weights(p), L @ L.T)
            return FactorSolution(L, 1.0 - h, h, labels, it, clipped, loss)
    raise ConvergenceError(
        f"pfa did not converge in {max_iter} iterations",
        last=FactorSolution(L, 1.0 - h, h, labels, max_iter, clipped),
    )


def off_diagonal_weights(p: int) -> np.ndarray:
    return np.ones((p, p)) - np.eye(p)


def _row_solve(Y: np.ndarray, W: np.ndarray, X: np.ndarray, what: str) -> np.ndarray:
    """Rows of the weighted least-squares solution of ``Y ~ A X'``, one row of A at a time."""
    # normal matrices for all rows at once: N_i = X' diag(W_i) X
    N = np.einsum("ij,jk,jl->ikl", W, X, X)
    rhs = np.einsum("ij,ij,jk->ik", W, Y, X)
    try:
        return np.linalg.solve(N, rhs[..., None])[..., 0]
    except np.linalg.LinAlgError:
        for i in range(len(N)):
            if abs(np.linalg.det(N[i])) < 1e-300 or not np.all(np.isfinite(N[i])):
                raise DegenerateError(f"wals: singular normal matrix for {what} row {i}") from None
        raise DegenerateError(f"wals: singular normal matrix in {what} update") from None


def _weighted_loss(A: np.ndarray, W: np.ndarray, fitted: np.ndarray) -> float:
    return float(np.sum(W * (A - fitted) ** 2))


def _wals(A, labels, k, W, adjust, tol, max_iter, init):
    p = A.shape[0]
    if init is None:
        init = pca_fit(CorrMatrix(A, labels), k).G
    a = np.array(init, dtype=float)
    b = a.copy()
    Wsum = W.sum()
    delta = 0.0
    loss = _weighted_loss(A, W, a @ b.T)
    history = [loss]
    converged = False
    it = 0
    for it in range(1, max_iter + 1):
        if adjust:
            delta = float(np.sum(W * (A - a @ b.T)) / Wsum)
        Y = A - delta
        a = _row_solve(Y, W, b, "A")
        b = _row_solve(Y.T, W.T, a, "B")
        new = _weighted_loss(A, W, delta + a @ b.T)
        history.append(new)
        done = loss - new <= tol * loss or new < LOSS_FLOOR
        loss = new
        if done:
            converged = True
            break

    S = (a @ b.T + b @ a.T) / 2.0
    lam, V, _ = _top_k(S, k)
    if np.any(lam < -1e-12 * max(abs(lam[0]), 1.0)):
        raise SymmetrizationError(
            f"wals: retained eigenvalue {lam.min():.6g} of the symmetrized product is negative"
        )
    G = V * np.sqrt(np.clip(lam, 0.0, None))
    F = delta * np.ones((p, p)) + G @ G.T
    method = "wals-adjusted" if adjust else "wals"
    return LowRankFit(method, G, delta, F, labels, it, _weighted_loss(A, W, F), converged, tuple(history))


def _check_weights(W, p):
    W = check_symmetric(W, name="weights")
    if W.shape != (p, p):
        raise ValidationError(f"weights must be {p}x{p}, got {W.shape}")
    if np.any(W < 0):
        raise ValidationError("weights must be non-negative")
    zero = ~np.any(W > 0, axis=1)
    if zero.any():
        raise DegenerateError(f"wals: all weights in row {int(np.argmax(zero))} are zero")
    return W


def wals_fit(R, k: int = 2, weights=None, tol: float = WALS_TOL,
             max_iter: int = WALS_MAX_ITER, init: Optional[np.ndarray] = None) -> LowRankFit:
    """Weighted alternating least squares fit of a correlation matrix.

    Rows of ``A`` and ``B`` in ``R ~ A B'`` are updated by weighted regressions
    in turn, starting from ``A = B = pca_fit(R, k).G``. The default weights
    ``J - I`` ignore the diagonal. On exit the product is symmetrized through
    the top-k eigenpairs of ``(AB' + BA') / 2``.
    """
    A, labels = _values(R)
    p = A.shape[0]
    _check_rank(k, 1, p - 1, "wals")
    W = off_diagonal_weights(p) if weights is None else _check_weights(weights, p)
    return _wals(A, labels, k, W, False, tol, max_iter, init)


def wals_adjusted_fit(R, k: int = 2, tol: float = WALS_TOL, max_iter: int = WALS_MAX_ITER,
                      init: Optional[np.ndarray] = None) -> LowRankFit:
    """WALS with an additive constant: fits ``R ~ delta J + A B'`` off the diagonal.

    Each sweep sets ``delta`` to the mean off-diagonal residual, then updates
    ``A`` and ``B``.
    """
    A, labels = _values(R)
    p = A.shape[0]
    _check_rank(k, 1, p - 1, "wals-adjusted")
    return _wals(A, labels, k, off_diagonal_weights(p), True, tol, max_iter, init)
