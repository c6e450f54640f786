"""Command-line interface: ``corrapprox fit | compare | dataset``.

Exit status is 0 on success, 1 on invalid input or usage, 2 when a fit fails
to converge (outputs are still written when possible).
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .biplot import build_scene, map_observations
from .compare import ADJUSTED, DEFAULT_METHODS, METHODS, MethodSpec, run_compare, run_method
from .errors import ConvergenceError, CorrApproxError, SymmetrizationError
from .fileio import (
    DATASETS,
    matrix_csv_text,
    read_corr_csv,
    read_data_csv,
    write_corr_csv,
    write_fitted_csv,
    write_report_json,
)
from .linalg import standardize
from .svg import render_svg


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="corrapprox", description="Low-rank approximation and biplots of correlation matrices.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    f = sub.add_parser("fit", help="fit one method")
    f.add_argument("--method", required=True, choices=METHODS)
    f.add_argument("--rank", type=int, default=2)
    f.add_argument("--adjust", action="store_true", help="use the additive adjustment (pca, wals)")
    f.add_argument("--restarts", type=int, default=20)
    f.add_argument("--seed", type=int, default=42)
    f.add_argument("--input", required=True, help="correlation matrix CSV, or a bundled dataset name")
    f.add_argument("--data", help="raw data CSV (n x p) for observation scores")
    f.add_argument("--out-fitted")
    f.add_argument("--hybrid", action="store_true", help="sample correlations above the diagonal")
    f.add_argument("--out-report")
    f.add_argument("--out-svg")
    f.add_argument("--calibrate", action="append", default=[], metavar="VAR")
    f.add_argument("--axis-offset", type=float, default=0.0)
    f.add_argument("--confidence", type=float, default=0.95)

    c = sub.add_parser("compare", help="fit several methods and tabulate RMSE")
    c.add_argument("--input", required=True)
    c.add_argument("--methods", default=",".join(DEFAULT_METHODS))
    c.add_argument("--rank", type=int, default=2)
    c.add_argument("--restarts", type=int, default=20)
    c.add_argument("--seed", type=int, default=42)
    c.add_argument("--workers", type=int, default=1)
    c.add_argument("--out-report")

    d = sub.add_parser("dataset", help="write a bundled correlation matrix")
    d.add_argument("name", choices=sorted(DATASETS))
    d.add_argument("--out", help="output CSV (standard output when omitted)")
    return ap


def _load(source: str):
    if not Path(source).exists() and source in DATASETS:
        return DATASETS[source]()
    return read_corr_csv(source)


def _fit(args) -> int:
    R = _load(args.input)
    method = ADJUSTED.get(args.method, args.method) if args.adjust else args.method
    spec = MethodSpec(method, args.rank, args.restarts, args.seed)
    Xs = None
    if args.data:
        X, _ = read_data_csv(args.data)
        Xs = standardize(X)
    res = run_method(R, spec, Xs)
    rep = res.report
    print(f"method        {rep.method}")
    print(f"rank          {rep.rank}")
    print(f"delta         {rep.delta:.6f}")
    print(f"rmse_offdiag  {rep.rmse_offdiag:.6f}")
    print(f"rmse_withdiag {rep.rmse_withdiag:.6f}")
    for name in ("gof_data", "gof_corr"):
        if getattr(rep, name) is not None:
            print(f"{name:<13} {getattr(rep, name):.6f}")
    print(f"iterations    {rep.iterations}  converged={rep.converged}")

    if args.out_fitted:
        write_fitted_csv(res.fitted, args.out_fitted, sample=R if args.hybrid else None, labels=R.labels)
    if args.out_report:
        write_report_json(rep, args.out_report)
    if args.out_svg:
        scores = None
        if Xs is not None and res.G is not None:
            scores = map_observations(Xs, res.G[:, :2])
        fit = res.fit
        scene = build_scene(fit, scores, calibrate=args.calibrate, axis_offset=args.axis_offset,
                            confidence=args.confidence if scores is not None else None,
                            title=f"{rep.method} (RMSE {rep.rmse_offdiag:.4f})")
        render_svg(scene, args.out_svg)
    if not rep.converged:
        print(f"corrapprox: {rep.method} did not converge", file=sys.stderr)
        return 2
    return 0


def _compare(args) -> int:
    R = _load(args.input)
    names = [m.strip() for m in args.methods.split(",") if m.strip()]
    specs = [MethodSpec(m, args.rank, args.restarts, args.seed) for m in names]
    table = run_compare(R, specs, workers=args.workers)
    print(table.format())
    if args.out_report:
        write_report_json(table, args.out_report)
    for r in table.rows:
        if r.error is not None:
            print(f"corrapprox: {r.method}: {r.error}", file=sys.stderr)
    return 0


def _dataset(args) -> int:
    R = DATASETS[args.name]()
    if args.out:
        write_corr_csv(R, args.out)
    else:
        sys.stdout.write(matrix_csv_text(R.values, R.labels))
    return 0


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = {"fit": _fit, "compare": _compare, "dataset": _dataset}[args.command]
    try:
        return handler(args)
    except (ConvergenceError, SymmetrizationError) as exc:
        print(f"corrapprox: {exc}", file=sys.stderr)
        return 2
    except CorrApproxError as exc:
        print(f"corrapprox: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
