"""CSV and JSON readers/writers, plus the bundled Heart attack correlation matrix."""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import numpy as np

from .errors import CorrApproxError, ValidationError
from .linalg import CorrMatrix

HEART_LABELS = ("CI", "SI", "VP", "Pulse", "logPR", "DBP", "PA")
HEART_VALUES = (
    (1.000, 0.887, -0.282, -0.112, -0.839, -0.361, -0.269),
    (0.887, 1.000, -0.201, -0.503, -0.833, -0.483, -0.405),
    (-0.282, -0.201, 1.000, -0.085, 0.318, 0.285, 0.244),
    (-0.112, -0.503, -0.085, 1.000, 0.287, 0.399, 0.370),
    (-0.839, -0.833, 0.318, 0.287, 1.000, 0.761, 0.716),
    (-0.361, -0.483, 0.285, 0.399, 0.761, 1.000, 0.928),
    (-0.269, -0.405, 0.244, 0.370, 0.716, 0.928, 1.000),
)


def heart() -> CorrMatrix:
    """Correlation matrix of the Heart attack data (101 patients, 7 variables)."""
    return CorrMatrix(np.array(HEART_VALUES), HEART_LABELS)


DATASETS = {"heart": heart}


class IOFailure(CorrApproxError, OSError):
    pass


def _is_number(s: str) -> bool:
    try:
        float(s)
    except ValueError:
        return False
    return True


def _read_rows(path):
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            rows = [r for r in csv.reader(fh) if any(c.strip() for c in r)]
    except OSError as exc:
        raise IOFailure(f"cannot read {path}: {exc}") from exc
    if not rows:
        raise ValidationError(f"{path}: empty file")
    return [[c.strip() for c in r] for r in rows]


def _parse_cell(cell: str, row: int, col: int, path) -> float:
    try:
        v = float(cell)
    except ValueError:
        raise ValidationError(f"{path}: non-numeric cell {cell!r} at row {row}, column {col}") from None
    if not np.isfinite(v):
        raise ValidationError(f"{path}: non-finite cell {cell!r} at row {row}, column {col}")
    return v


def _parse_square(path):
    """Header labels and the square numeric block of a matrix CSV."""
    rows = _read_rows(path)
    header, body = rows[0], rows[1:]
    has_labels = bool(body) and not _is_number(body[0][0])
    if has_labels:
        row_labels = [r[0] for r in body]
        body = [r[1:] for r in body]
        if len(header) == len(body) + 1:
            header = header[1:]
    p = len(header)
    if len(body) != p:
        raise ValidationError(f"{path}: header has {p} labels but there are {len(body)} data rows")
    values = np.empty((p, p))
    for i, r in enumerate(body):
        if len(r) != p:
            raise ValidationError(f"{path}: row {i + 1} has {len(r)} fields, expected {p}")
        for j, c in enumerate(r):
            values[i, j] = _parse_cell(c, i + 1, j + 1, path)
    if has_labels and row_labels != header:
        raise ValidationError(f"{path}: row labels {row_labels} do not match header {header}")
    return tuple(header), values


def read_corr_csv(path) -> CorrMatrix:
    """Read a correlation matrix CSV.

    Small asymmetries (up to ``1e-8``) are averaged away; anything larger, a
    diagonal off 1 by more than ``1e-8`` or an entry beyond ``1 + 1e-12`` in
    absolute value is rejected.
    """
    labels, A = _parse_square(path)
    p = len(labels)
    for i in range(p):
        for j in range(p):
            if abs(A[i, j]) > 1.0 + 1e-12:
                raise ValidationError(f"{path}: entry {A[i, j]!r} at row {i + 1}, column {j + 1} is outside [-1, 1]")
    asym = np.abs(A - A.T)
    if asym.max(initial=0.0) > 1e-8:
        i, j = np.unravel_index(np.argmax(asym), asym.shape)
        raise ValidationError(f"{path}: asymmetric entries at ({i + 1}, {j + 1}) and ({j + 1}, {i + 1})")
    return CorrMatrix((A + A.T) / 2.0, labels)


def _fmt(x: float) -> str:
    return repr(float(x))


def write_corr_csv(R: CorrMatrix, path) -> None:
    write_matrix_csv(R.values, R.labels, path)


def matrix_csv_text(values, labels) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + list(labels))
    for lab, row in zip(labels, np.asarray(values)):
        w.writerow([lab] + [_fmt(v) for v in row])
    return buf.getvalue()


def write_matrix_csv(values, labels, path) -> None:
    _write_text(path, matrix_csv_text(values, labels))


def read_matrix_csv(path):
    """Labels and values of a labelled square matrix, without correlation checks."""
    return _parse_square(path)


def read_data_csv(path):
    """Read an ``n x p`` numeric data table with a header row.

    Returns ``(values, labels)``.
    """
    rows = _read_rows(path)
    header, body = rows[0], rows[1:]
    p = len(header)
    if len(body) < 2:
        raise ValidationError(f"{path}: need at least 2 observations, got {len(body)}")
    X = np.empty((len(body), p))
    for i, r in enumerate(body):
        if len(r) != p:
            raise ValidationError(f"{path}: row {i + 1} has {len(r)} fields, expected {p}")
        for j, c in enumerate(r):
            X[i, j] = _parse_cell(c, i + 1, j + 1, path)
    return X, tuple(header)


def write_data_csv(X, labels, path) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list(labels))
    for row in np.asarray(X):
        w.writerow([_fmt(v) for v in row])
    _write_text(path, buf.getvalue())


def hybrid_matrix(fitted, sample) -> np.ndarray:
    """Sample values above the diagonal, fitted values on and below it."""
    fitted = np.asarray(fitted, dtype=float)
    S = sample.values if isinstance(sample, CorrMatrix) else np.asarray(sample, dtype=float)
    out = np.tril(fitted)
    iu = np.triu_indices(len(fitted), 1)
    out[iu] = S[iu]
    return out


def write_fitted_csv(fit, path, sample=None, labels=None) -> None:
    """Write a fitted matrix with labels at full precision.

    ``fit`` is any object with ``fitted`` and ``labels`` attributes, or a bare
    array together with ``labels``. Passing ``sample`` writes the hybrid
    layout with the sample correlations above the diagonal.
    """
    if isinstance(fit, np.ndarray):
        F = fit
    else:
        F = np.asarray(fit.fitted)
        labels = fit.labels if labels is None else labels
    if labels is None:
        raise ValidationError("labels are required for a bare fitted matrix")
    if sample is not None:
        F = hybrid_matrix(F, sample)
    write_matrix_csv(F, labels, path)


def _write_text(path, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise IOFailure(f"cannot write {path}: {exc}") from exc


def write_report_json(report, path) -> None:
    """Serialize a FitReport or ComparisonTable as indented UTF-8 JSON."""
    text = json.dumps(report.to_dict(), indent=2, ensure_ascii=False, allow_nan=False) + "\n"
    _write_text(path, text)


def read_report_json(path):
    """Inverse of :func:`write_report_json`."""
    from .compare import ComparisonTable
    from .metrics import FitReport

    try:
        d = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise IOFailure(f"cannot read {path}: {exc}") from exc
    if "rows" in d:
        return ComparisonTable.from_dict(d)
    return FitReport.from_dict(d)
