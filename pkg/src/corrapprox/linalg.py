"""Dense symmetric linear algebra used by every fitting method.

The eigensolver is a cyclic Jacobi implementation; the thin SVD is built on
top of it through the Gram matrix. Matrices are plain ``numpy`` arrays; the
only dedicated container is :class:`CorrMatrix`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import ConvergenceError, ValidationError

SYMMETRY_TOL = 1e-12
JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100


def as_matrix(M, name: str = "matrix") -> np.ndarray:
    """Return ``M`` as a finite 2-D float array or raise ValidationError."""
    A = np.array(M, dtype=float)
    if A.ndim != 2 or A.shape[0] < 1 or A.shape[1] < 1:
        raise ValidationError(f"{name} must be a non-empty 2-D array, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        i, j = np.argwhere(~np.isfinite(A))[0]
        raise ValidationError(f"{name} has a non-finite entry at ({i}, {j})")
    return A


def check_symmetric(M, tol: float = SYMMETRY_TOL, name: str = "matrix") -> np.ndarray:
    A = as_matrix(M, name)
    if A.shape[0] != A.shape[1]:
        raise ValidationError(f"{name} must be square, got shape {A.shape}")
    diff = np.abs(A - A.T)
    if diff.size and diff.max() > tol:
        i, j = np.unravel_index(np.argmax(diff), diff.shape)
        i, j = min(i, j), max(i, j)
        raise ValidationError(
            f"{name} is not symmetric: entries ({i}, {j}) and ({j}, {i}) differ by {diff[i, j]:.3g}"
        )
    return A


@dataclass(frozen=True)
class CorrMatrix:
    """Validated correlation matrix with variable labels.

    Construction checks symmetry (within ``1e-12``), a unit diagonal (within
    ``1e-8``) and the ``[-1, 1]`` range, then stores an exactly symmetric copy
    with an exact unit diagonal.
    """

    values: np.ndarray
    labels: tuple = field(default=())

    def __post_init__(self):
        A = check_symmetric(self.values, name="correlation matrix")
        p = A.shape[0]
        labels = tuple(str(x) for x in self.labels) if len(self.labels) else tuple(
            f"V{i + 1}" for i in range(p)
        )
        if len(labels) != p:
            raise ValidationError(f"expected {p} labels, got {len(labels)}")
        if len(set(labels)) != p:
            raise ValidationError("variable labels must be unique")
        dev = np.abs(np.diag(A) - 1.0)
        if dev.max() > 1e-8:
            i = int(np.argmax(dev))
            raise ValidationError(f"diagonal entry ({i}, {i}) = {A[i, i]!r} is not 1")
        over = np.abs(A) > 1.0 + 1e-12
        if over.any():
            i, j = np.argwhere(over)[0]
            raise ValidationError(f"entry ({i}, {j}) = {A[i, j]!r} is outside [-1, 1]")
        A = np.clip((A + A.T) / 2.0, -1.0, 1.0)
        np.fill_diagonal(A, 1.0)
        A.setflags(write=False)
        object.__setattr__(self, "values", A)
        object.__setattr__(self, "labels", labels)

    @property
    def p(self) -> int:
        return self.values.shape[0]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    def __getitem__(self, key):
        i, j = key
        if isinstance(i, str):
            i = self.index(i)
        if isinstance(j, str):
            j = self.index(j)
        return self.values[i, j]

    def permuted(self, order: Sequence[int]) -> "CorrMatrix":
        order = list(order)
        return CorrMatrix(self.values[np.ix_(order, order)], tuple(self.labels[i] for i in order))


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues in descending order and matching orthonormal columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int = 0

    def __iter__(self):
        yield self.eigenvalues
        yield self.eigenvectors


def _fix_signs(V: np.ndarray) -> np.ndarray:
    # largest-magnitude component positive; argmax picks the lowest index on ties
    idx = np.argmax(np.abs(V), axis=0)
    signs = np.sign(V[idx, np.arange(V.shape[1])])
    signs[signs == 0] = 1.0
    return V * signs


def eigen_symmetric(M) -> EigenDecomposition:
    """Eigendecomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Converges when the off-diagonal Frobenius norm drops below ``1e-14`` times
    the Frobenius norm of ``M``. Raises :class:`ConvergenceError` after 100
    sweeps.
    """
    A = check_symmetric(M)
    A = (A + A.T) / 2.0
    p = A.shape[0]
    V = np.eye(p)
    total = np.linalg.norm(A)
    threshold = JACOBI_TOL * total

    def off_norm(X):
        return np.sqrt(2.0 * np.sum(np.triu(X, 1) ** 2))

    sweeps = 0
    while off_norm(A) > threshold:
        if sweeps >= JACOBI_MAX_SWEEPS:
            raise ConvergenceError(
                f"Jacobi eigensolver did not converge in {JACOBI_MAX_SWEEPS} sweeps", last=A
            )
        sweeps += 1
        for i in range(p - 1):
            for j in range(i + 1, p):
                aij = A[i, j]
                if aij == 0.0:
                    continue
                aii, ajj = A[i, i], A[j, j]
                theta = (ajj - aii) / (2.0 * aij)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rot = np.array([[c, s], [-s, c]])
                idx = [i, j]
                A[:, idx] = A[:, idx] @ rot
                A[idx, :] = A[:, idx].T
                A[i, i] = aii - t * aij
                A[j, j] = ajj + t * aij
                A[i, j] = A[j, i] = 0.0
                V[:, idx] = V[:, idx] @ rot

    w = np.diag(A).copy()
    order = np.argsort(-w, kind="stable")
    return EigenDecomposition(w[order], _fix_signs(V[:, order]), sweeps)


def svd_thin(X):
    """Thin SVD ``X = U diag(S) V'`` via the eigendecomposition of the Gram matrix.

    Returns ``(U, S, V)`` with ``S`` non-increasing. Columns of ``U`` belonging
    to zero singular values are zero.
    """
    X = as_matrix(X)
    n, m = X.shape
    if n < m:
        V, S, U = svd_thin(X.T)
        return U, S, V
    lam, V = eigen_symmetric(X.T @ X)
    S = np.sqrt(np.clip(lam, 0.0, None))
    U = np.zeros((n, m))
    cutoff = max(n, m) * np.finfo(float).eps * (S[0] if S.size else 0.0)
    nz = S > cutoff
    U[:, nz] = (X @ V[:, nz]) / S[nz]
    S = np.where(nz, S, 0.0)
    return U, S, V


def standardize(X) -> np.ndarray:
    """Center columns and scale them to unit standard deviation (divisor n)."""
    X = as_matrix(X, "data matrix")
    n = X.shape[0]
    if n < 2:
        raise ValidationError(f"need at least 2 observations, got {n}")
    Xc = X - X.mean(axis=0)
    sd = np.sqrt(np.mean(Xc * Xc, axis=0))
    scale = np.maximum(np.abs(X).max(axis=0), 1.0)
    const = sd <= 1e-14 * scale
    if const.any():
        raise ValidationError(f"column {int(np.argmax(const))} is constant")
    return Xc / sd


def correlation_from_data(X, labels: Optional[Sequence[str]] = None) -> CorrMatrix:
    """Correlation matrix ``Xs'Xs / n`` of the standardized data."""
    Xs = standardize(X)
    n, p = Xs.shape
    if p < 2:
        raise ValidationError(f"need at least 2 variables for a correlation matrix, got {p}")
    R = Xs.T @ Xs / n
    R = np.clip((R + R.T) / 2.0, -1.0, 1.0)
    np.fill_diagonal(R, 1.0)
    return CorrMatrix(R, tuple(labels) if labels is not None else ())


def centering_matrix(p: int) -> np.ndarray:
    return np.eye(p) - np.full((p, p), 1.0 / p)


def double_center(R) -> np.ndarray:
    """Subtract row and column means and add back the grand mean."""
    A = R.values if isinstance(R, CorrMatrix) else check_symmetric(R)
    out = A - A.mean(axis=0, keepdims=True) - A.mean(axis=1, keepdims=True) + A.mean()
    return (out + out.T) / 2.0
