"""Standalone SVG rendering of a :class:`~corrapprox.biplot.BiplotScene`.

Geometry is drawn in data units inside a y-flipped group, so coordinates in
the file can be read back directly. Numbers are printed with a fixed number
of decimals, which makes the output byte-identical for identical scenes.
"""
from __future__ import annotations

from xml.sax.saxutils import escape, quoteattr

import numpy as np

from .biplot import BiplotScene

SIZE_PX = 600
PAD = 0.10
DECIMALS = 6


def _n(x: float) -> str:
    s = f"{float(x):.{DECIMALS}f}"
    return "0." + "0" * DECIMALS if s == "-0." + "0" * DECIMALS else s


def _extent(scene: BiplotScene) -> float:
    pts = [np.zeros((1, 2)), np.asarray(scene.variable_vectors)]
    if scene.observation_scores is not None and len(scene.observation_scores):
        pts.append(np.asarray(scene.observation_scores)[:, :2])
    for ax in scene.calibrated_axes:
        pts.append(np.array([pt for _, pt in ax.display_ticks()]))
    ext = float(np.max(np.abs(np.vstack(pts))))
    if scene.unit_circle:
        ext = max(ext, 1.0)
    return ext if ext > 0 else 1.0


def scene_to_svg(scene: BiplotScene) -> str:
    half = _extent(scene) * (1.0 + PAD)
    font = half * 0.04
    tiny = half * 0.008
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE_PX}" height="{SIZE_PX}" '
        f'viewBox="{_n(-half)} {_n(-half)} {_n(2 * half)} {_n(2 * half)}">',
    ]
    if scene.title:
        out.append(f"<title>{escape(scene.title)}</title>")
    out.append(
        '<defs><marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="6" '
        'markerHeight="6" orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>'
    )
    out.append(
        '<g transform="scale(1,-1)" fill="none" stroke="black" stroke-width="1" '
        'vector-effect="non-scaling-stroke">'
    )
    out.append(f'<line class="axis" x1="{_n(-half)}" y1="0.000000" x2="{_n(half)}" y2="0.000000" '
               'stroke="gray" vector-effect="non-scaling-stroke"/>')
    out.append(f'<line class="axis" x1="0.000000" y1="{_n(-half)}" x2="0.000000" y2="{_n(half)}" '
               'stroke="gray" vector-effect="non-scaling-stroke"/>')
    if scene.unit_circle:
        out.append('<circle class="unit-circle" cx="0.000000" cy="0.000000" r="1.000000" '
                   'stroke="gray" vector-effect="non-scaling-stroke"/>')

    V = np.asarray(scene.variable_vectors, dtype=float)
    labels = scene.labels
    for i, j in scene.dotted_pairs:
        out.append(
            f'<line class="dotted" data-pair={quoteattr(labels[i] + "," + labels[j])} '
            f'x1="{_n(V[i, 0])}" y1="{_n(V[i, 1])}" x2="{_n(V[j, 0])}" y2="{_n(V[j, 1])}" '
            'stroke-dasharray="4 4" vector-effect="non-scaling-stroke"/>'
        )

    texts = []
    for ax in scene.calibrated_axes:
        ticks = ax.display_ticks()
        (_, a), (_, b) = ticks[0], ticks[-1]
        out.append(
            f'<line class="calibrated-axis" data-variable={quoteattr(ax.variable)} '
            f'x1="{_n(a[0])}" y1="{_n(a[1])}" x2="{_n(b[0])}" y2="{_n(b[1])}" '
            'stroke="steelblue" vector-effect="non-scaling-stroke"/>'
        )
        normal = np.array([-ax.direction[1], ax.direction[0]])
        for mu, pt in ticks:
            s, e = pt - tiny * normal, pt + tiny * normal
            out.append(
                f'<line class="tick" data-value="{_n(mu)}" x1="{_n(s[0])}" y1="{_n(s[1])}" '
                f'x2="{_n(e[0])}" y2="{_n(e[1])}" stroke="steelblue" vector-effect="non-scaling-stroke"/>'
            )
            lp = pt + 3 * tiny * normal
            texts.append(f'<text class="tick-label" x="{_n(lp[0])}" y="{_n(-lp[1])}" '
                         f'font-size="{_n(font * 0.6)}" fill="steelblue">{mu:.1f}</text>')
        origin = ax.offset * normal
        out.append(f'<circle class="origin-projection" cx="{_n(origin[0])}" cy="{_n(origin[1])}" '
                   f'r="{_n(tiny)}" fill="red" stroke="red"/>')

    for lab, (x, y) in zip(labels, V[:, :2]):
        if scene.kind == "mds":
            out.append(f'<circle class="variable-point" data-label={quoteattr(lab)} cx="{_n(x)}" '
                       f'cy="{_n(y)}" r="{_n(tiny)}" fill="black"/>')
        else:
            out.append(f'<line class="variable" data-label={quoteattr(lab)} x1="0.000000" y1="0.000000" '
                       f'x2="{_n(x)}" y2="{_n(y)}" marker-end="url(#arrow)" vector-effect="non-scaling-stroke"/>')
        texts.append(f'<text class="label" x="{_n(x * 1.05)}" y="{_n(-y * 1.05)}" '
                     f'font-size="{_n(font)}">{escape(lab)}</text>')

    if scene.observation_scores is not None:
        for x, y in np.asarray(scene.observation_scores)[:, :2]:
            out.append(f'<circle class="observation" cx="{_n(x)}" cy="{_n(y)}" r="{_n(tiny * 0.6)}" '
                       'fill="gray" stroke="none"/>')
    out.append("</g>")
    out.extend(texts)
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(scene: BiplotScene, path) -> None:
    from .fileio import _write_text

    _write_text(path, scene_to_svg(scene))
