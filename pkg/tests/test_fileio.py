import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corrapprox import (
    ValidationError,
    correlation_from_data,
    heart,
    read_corr_csv,
    read_data_csv,
    wals_adjusted_fit,
    write_fitted_csv,
    write_report_json,
)
from corrapprox.compare import ComparisonTable, MethodSpec, run_compare
from corrapprox.fileio import (
    IOFailure,
    hybrid_matrix,
    read_matrix_csv,
    read_report_json,
    write_corr_csv,
    write_data_csv,
)
from corrapprox.metrics import fit_report

from conftest import random_corr


def test_heart_fixture():
    R = heart()
    assert R.labels == ("CI", "SI", "VP", "Pulse", "logPR", "DBP", "PA")
    assert R["CI", "SI"] == 0.887
    assert R["DBP", "PA"] == 0.928


def test_heart_csv_round_trip(tmp_path):
    path = tmp_path / "heart.csv"
    write_corr_csv(heart(), path)
    R = read_corr_csv(path)
    np.testing.assert_array_equal(R.values, heart().values)
    assert R.labels == heart().labels


def test_two_by_two_identity(tmp_path):
    path = tmp_path / "i2.csv"
    path.write_text("a,b\n1,0\n0,1\n")
    np.testing.assert_array_equal(read_corr_csv(path).values, np.eye(2))


def test_label_column_detected(tmp_path):
    path = tmp_path / "lab.csv"
    path.write_text(",x,y\nx,1,0.25\ny,0.25,1\n")
    R = read_corr_csv(path)
    assert R.labels == ("x", "y") and R["x", "y"] == 0.25


def test_range_error_names_cell(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("a,b\n1,1.5\n1.5,1\n")
    with pytest.raises(ValidationError, match="row 1, column 2"):
        read_corr_csv(path)


def test_non_numeric_cell(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("a,b\n1,x\n0,1\n")
    with pytest.raises(ValidationError, match="row 1, column 2"):
        read_corr_csv(path)


def test_asymmetry(tmp_path):
    small = tmp_path / "small.csv"
    small.write_text("a,b\n1,0.3\n0.300000001,1\n")
    assert read_corr_csv(small)["a", "b"] == pytest.approx(0.3000000005, abs=1e-15)
    big = tmp_path / "big.csv"
    big.write_text("a,b\n1,0.3\n0.31,1\n")
    with pytest.raises(ValidationError, match="asymmetric"):
        read_corr_csv(big)


def test_bad_diagonal(tmp_path):
    path = tmp_path / "d.csv"
    path.write_text("a,b\n0.99,0\n0,1\n")
    with pytest.raises(ValidationError):
        read_corr_csv(path)


def test_missing_file(tmp_path):
    with pytest.raises(IOFailure):
        read_corr_csv(tmp_path / "nope.csv")


@settings(max_examples=30, deadline=None)
@given(p=st.integers(2, 8), seed=st.integers(0, 2**32 - 1))
def test_corr_round_trip_exact(tmp_path_factory, p, seed):
    R = random_corr(np.random.default_rng(seed), p)
    path = tmp_path_factory.mktemp("rt") / "r.csv"
    write_corr_csv(R, path)
    np.testing.assert_array_equal(read_corr_csv(path).values, R.values)


def test_data_round_trip(tmp_path, rng):
    X = rng.normal(size=(101, 7))
    labels = tuple(f"x{i}" for i in range(7))
    path = tmp_path / "data.csv"
    write_data_csv(X, labels, path)
    Y, lab = read_data_csv(path)
    np.testing.assert_array_equal(Y, X)
    assert lab == labels
    R = correlation_from_data(Y, lab)
    np.testing.assert_allclose(R.values, np.corrcoef(X, rowvar=False), atol=1e-12)


def test_data_single_column_rejected_for_correlation(tmp_path, rng):
    path = tmp_path / "one.csv"
    write_data_csv(rng.normal(size=(10, 1)), ("x",), path)
    X, labels = read_data_csv(path)
    with pytest.raises(ValidationError):
        correlation_from_data(X, labels)


def test_data_ragged(tmp_path):
    path = tmp_path / "r.csv"
    path.write_text("a,b\n1,2\n3\n4,5\n")
    with pytest.raises(ValidationError, match="row 2"):
        read_data_csv(path)


def test_hybrid_layout_heart(tmp_path, R_heart):
    fit = wals_adjusted_fit(R_heart, 2)
    path = tmp_path / "hyb.csv"
    write_fitted_csv(fit, path, sample=R_heart)
    labels, M = read_matrix_csv(path)
    assert labels == R_heart.labels
    assert M[0, 1] == 0.887
    assert M[1, 0] == pytest.approx(0.889, abs=5e-3)
    np.testing.assert_array_equal(np.tril(M), np.tril(fit.fitted))


def test_hybrid_of_sample_is_symmetric(R_heart):
    H = hybrid_matrix(R_heart.values, R_heart)
    np.testing.assert_array_equal(H, H.T)


def test_fitted_round_trip(tmp_path, R_heart):
    fit = wals_adjusted_fit(R_heart, 2)
    path = tmp_path / "f.csv"
    write_fitted_csv(fit, path)
    labels, M = read_matrix_csv(path)
    np.testing.assert_array_equal(M, fit.fitted)


def test_report_json_round_trip(tmp_path, R_heart):
    fit = wals_adjusted_fit(R_heart, 2)
    rep = fit_report(R_heart, fit.fitted, "wals-adj", 2, fit.delta, iterations=fit.iterations)
    path = tmp_path / "rep.json"
    write_report_json(rep, path)
    assert read_report_json(path).to_dict() == rep.to_dict()
    assert json.loads(path.read_text())["rmse_offdiag"] == pytest.approx(0.0662, abs=5e-4)


def test_comparison_json_round_trip(tmp_path, R_heart):
    table = run_compare(R_heart, [MethodSpec("pca"), MethodSpec("wals-adj")])
    path = tmp_path / "cmp.json"
    write_report_json(table, path)
    back = read_report_json(path)
    assert isinstance(back, ComparisonTable)
    assert back.to_dict() == table.to_dict()
    assert back.row("wals-adj").rmse_offdiag == pytest.approx(0.0662, abs=5e-4)


def test_empty_table_json(tmp_path):
    path = tmp_path / "e.json"
    write_report_json(ComparisonTable([]), path)
    assert json.loads(path.read_text()) == {"rows": []}


def test_write_failure_names_path(tmp_path):
    target = tmp_path / "missing" / "x.json"
    with pytest.raises(IOFailure, match="missing"):
        write_report_json(ComparisonTable([]), target)
