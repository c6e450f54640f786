import numpy as np
import pytest

from corrapprox import CorrMatrix, heart


def random_corr(rng, p, n=None):
    """Correlation matrix of random correlated data (always PSD, unit diagonal)."""
    n = n or max(p + 3, 3 * p)
    X = rng.normal(size=(n, p)) @ rng.normal(size=(p, p))
    Xc = X - X.mean(0)
    Xs = Xc / np.sqrt((Xc ** 2).mean(0))
    R = Xs.T @ Xs / n
    R = (R + R.T) / 2
    np.fill_diagonal(R, 1.0)
    return CorrMatrix(np.clip(R, -1, 1))


@pytest.fixture
def R_heart():
    return heart()


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
