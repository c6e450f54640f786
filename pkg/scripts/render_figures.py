"""Render one SVG per method for the Heart data into an output directory.

    python3 scripts/render_figures.py [--out figures]
"""
import argparse
from pathlib import Path

from corrapprox import build_scene, heart, render_svg
from corrapprox.compare import METHODS, MethodSpec, run_method


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="figures")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    R = heart()
    for m in METHODS:
        if m == "pca-cos":
            continue  # same vectors as pca
        res = run_method(R, MethodSpec(m))
        calibrate = ["SI"] if m in ("pca-adj", "wals-adj") else []
        scene = build_scene(res.fit, calibrate=calibrate, axis_offset=0.15 if calibrate else 0.0,
                            title=f"{m} (RMSE {res.report.rmse_offdiag:.4f})")
        path = out / f"heart_{m}.svg"
        render_svg(scene, path)
        print(path)


if __name__ == "__main__":
    main()
