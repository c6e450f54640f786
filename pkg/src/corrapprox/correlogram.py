"""Correlogram: variables as unit vectors whose angle cosines fit the correlations."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import CorrMatrix, eigen_symmetric
from .methods import _values

TWO_PI = 2.0 * np.pi

LOCAL_TOL = 1e-12
LOCAL_MAX_ITER = 5000
ARMIJO = 1e-4
MIN_STEP = 1e-20


@dataclass(frozen=True)
class AngleFit:
    theta: np.ndarray
    loss: float
    restarts_used: int
    labels: tuple
    best_restart: int = 0
    iterations: int = 0
    converged: bool = True

    @property
    def fitted(self) -> np.ndarray:
        return cosine_matrix(self.theta)

    @property
    def vectors(self) -> np.ndarray:
        return np.column_stack([np.cos(self.theta), np.sin(self.theta)])


def cosine_matrix(theta) -> np.ndarray:
    theta = np.asarray(theta, dtype=float)
    C = np.cos(theta[:, None] - theta[None, :])
    np.fill_diagonal(C, 1.0)
    return C


def correlogram_loss(theta, R) -> float:
    """Squared Frobenius distance between R and the cosine matrix of ``theta``."""
    A = R.values if isinstance(R, CorrMatrix) else np.asarray(R, dtype=float)
    return float(np.sum((A - cosine_matrix(theta)) ** 2))


def correlogram_gradient(theta, R) -> np.ndarray:
    """Analytic gradient of :func:`correlogram_loss`.

    Component 0 is computed like the others but the optimizer keeps
    ``theta[0]`` fixed.
    """
    A = R.values if isinstance(R, CorrMatrix) else np.asarray(R, dtype=float)
    theta = np.asarray(theta, dtype=float)
    D = theta[:, None] - theta[None, :]
    return np.sum(4.0 * (np.cos(D) - A) * (-np.sin(D)), axis=1)


def _normalize(theta: np.ndarray) -> np.ndarray:
    t = np.mod(theta - theta[0], TWO_PI)
    t[t >= TWO_PI] = 0.0
    t[0] = 0.0
    return t


def _descend(theta: np.ndarray, A: np.ndarray, tol: float, max_iter: int):
    """Gradient descent with halving backtracking; theta[0] stays put."""
    f = correlogram_loss(theta, A)
    for it in range(1, max_iter + 1):
        g = correlogram_gradient(theta, A)
        g[0] = 0.0
        gg = float(g @ g)
        if gg == 0.0:
            return theta, f, it, True
        step = 1.0
        while True:
            cand = theta - step * g
            fc = correlogram_loss(cand, A)
            if fc <= f - ARMIJO * step * gg:
                break
            step *= 0.5
            if step < MIN_STEP:
                return theta, f, it, True
        decrease = f - fc
        theta, f = cand, fc
        if decrease < tol:
            return theta, f, it, True
    return theta, f, max_iter, False


def initial_angles(A: np.ndarray) -> np.ndarray:
    """Angles of the rank-two principal vectors, first variable rotated to 0."""
    lam, V = eigen_symmetric(A)
    G = V[:, :2] * np.sqrt(np.clip(lam[:2], 0.0, None))
    theta = np.arctan2(G[:, 1], G[:, 0])
    return theta - theta[0]


def correlogram_fit(R, restarts: int = 20, seed: int = 42,
                    tol: float = LOCAL_TOL, max_iter: int = LOCAL_MAX_ITER) -> AngleFit:
    """Multistart minimization of the correlogram loss.

    Restart 0 starts from the principal-component angles; the others draw
    angles uniformly on ``[0, 2 pi)`` from ``numpy.random.default_rng(seed)``.
    The best local optimum wins, ties going to the earliest restart.
    """
    A, labels = _values(R)
    p = A.shape[0]
    if p < 2:
        from .errors import ValidationError

        raise ValidationError("correlogram needs at least 2 variables")
    restarts = max(int(restarts), 1)
    rng = np.random.default_rng(seed)
    best = None
    for r in range(restarts):
        if r == 0:
            start = initial_angles(A)
        else:
            start = np.concatenate([[0.0], rng.uniform(0.0, TWO_PI, p - 1)])
        theta, f, it, ok = _descend(start, A, tol, max_iter)
        if best is None or f < best[1]:
            best = (theta, f, it, ok, r)
    theta, f, it, ok, r = best
    theta = _normalize(theta)
    return AngleFit(theta, correlogram_loss(theta, A), restarts, labels, r, it, ok)
