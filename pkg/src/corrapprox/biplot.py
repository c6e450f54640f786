"""Plot geometry for correlation biplots, correlograms and MDS maps.

Nothing here draws; :mod:`corrapprox.svg` turns a :class:`BiplotScene` into
an image.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .correlogram import AngleFit
from .errors import DegenerateError, RankError, ValidationError
from .methods import FactorSolution, LowRankFit, MdsFit
from .metrics import regression_scores

DEFAULT_TICKS = tuple(np.round(np.arange(-1.0, 1.0001, 0.2), 10))


@dataclass(frozen=True)
class CalibratedAxis:
    variable: str
    direction: np.ndarray
    ticks: tuple
    offset: float = 0.0

    def display_ticks(self):
        """Tick points shifted perpendicular to the axis by ``offset``."""
        normal = np.array([-self.direction[1], self.direction[0]])
        return [(mu, pt + self.offset * normal) for mu, pt in self.ticks]


@dataclass(frozen=True)
class BiplotScene:
    labels: tuple
    variable_vectors: np.ndarray
    kind: str = "biplot"
    observation_scores: Optional[np.ndarray] = None
    observation_labels: tuple = ()
    delta: float = 0.0
    unit_circle: bool = True
    calibrated_axes: tuple = ()
    dotted_pairs: tuple = ()
    score_scale: float = 1.0
    title: str = ""


def calibrate_axis(g, delta: float = 0.0, values: Sequence[float] = DEFAULT_TICKS,
                   variable: str = "", offset: float = 0.0) -> CalibratedAxis:
    """Ticks along ``g`` such that a point projecting on tick ``mu`` reads ``mu``.

    The tick for ``mu`` sits at ``g (mu - delta) / ||g||^2``, so the origin
    carries the value ``delta``.
    """
    g = np.asarray(g, dtype=float)
    nn = float(g @ g)
    if np.sqrt(nn) <= 1e-12:
        raise DegenerateError(f"cannot calibrate a zero-length vector {variable!r}")
    ticks = tuple((float(mu), g * (mu - delta) / nn) for mu in values)
    return CalibratedAxis(variable, g / np.sqrt(nn), ticks, offset)


def map_observations(Xs, G) -> np.ndarray:
    """Regression scores of standardized observations on biplot vectors."""
    return regression_scores(Xs, G)


def chisq2_quantile(confidence: float) -> float:
    return -2.0 * np.log1p(-confidence)


def scale_scores_chisq(F, confidence: float = 0.95) -> np.ndarray:
    """Scale scores by ``1 / sqrt(chi2_2(confidence))``.

    With this scaling the unit circle is the ``confidence`` contour of a
    bivariate standard normal.
    """
    if not 0.0 < confidence < 1.0:
        raise ValidationError(f"confidence must lie in (0, 1), got {confidence}")
    return np.asarray(F, dtype=float) / np.sqrt(chisq2_quantile(confidence))


def mds_scene(fit: MdsFit, threshold: float = np.sqrt(2.0)) -> BiplotScene:
    if fit.rank != 2:
        raise RankError(f"MDS scene needs a 2-D configuration, got rank {fit.rank}")
    D = fit.fitted_distances
    p = D.shape[0]
    pairs = tuple((i, j) for i in range(p) for j in range(i + 1, p) if D[i, j] > threshold)
    return BiplotScene(fit.labels, fit.coords.copy(), kind="mds", unit_circle=False,
                       dotted_pairs=pairs)


def build_scene(fit, scores=None, *, calibrate: Sequence[str] = (), ticks=DEFAULT_TICKS,
                axis_offset: float = 0.0, confidence: Optional[float] = None,
                observation_labels: Sequence[str] = (), title: str = "") -> BiplotScene:
    """Assemble a 2-D scene from any fit.

    Correlogram angles become unit vectors, MDS fits are delegated to
    :func:`mds_scene`, scalar-product fits use the rows of ``G``. When
    ``confidence`` is given the scores are chi-square scaled.
    """
    if isinstance(fit, MdsFit):
        scene = mds_scene(fit)
        return BiplotScene(**{**scene.__dict__, "title": title})
    if isinstance(fit, AngleFit):
        V, delta, kind = fit.vectors, 0.0, "correlogram"
    elif isinstance(fit, (LowRankFit, FactorSolution)):
        G = fit.G if isinstance(fit, LowRankFit) else fit.L
        if G.shape[1] != 2:
            raise RankError(f"biplot scene needs rank 2, got {G.shape[1]}")
        V, delta, kind = G.copy(), float(getattr(fit, "delta", 0.0)), "biplot"
    else:
        raise TypeError(f"unsupported fit type {type(fit).__name__}")

    scale = 1.0
    if scores is not None:
        scores = np.asarray(scores, dtype=float)
        if confidence is not None:
            scale = 1.0 / np.sqrt(chisq2_quantile(confidence))
            scores = scores * scale
    axes = []
    for name in calibrate:
        i = fit.labels.index(name)
        axes.append(calibrate_axis(V[i], delta, ticks, name, axis_offset))
    return BiplotScene(
        labels=tuple(fit.labels),
        variable_vectors=V,
        kind=kind,
        observation_scores=scores,
        observation_labels=tuple(observation_labels),
        delta=delta,
        unit_circle=True,
        calibrated_axes=tuple(axes),
        score_scale=scale,
        title=title,
    )
