"""Regenerate tests/golden/*.svg. Review the diff before committing."""
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

from golden_scenes import scenes  # noqa: E402

from corrapprox.svg import render_svg  # noqa: E402


def main():
    out = ROOT / "tests" / "golden"
    out.mkdir(exist_ok=True)
    for name, scene in scenes().items():
        render_svg(scene, out / f"{name}.svg")
        print(out / f"{name}.svg")


if __name__ == "__main__":
    main()
