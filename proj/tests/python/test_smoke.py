import json
import math
import os
import subprocess

import pytest

cvtele = pytest.importorskip("cvtele")


def test_fidelity_paths_agree():
    for path in ("closed", "engine", "oracle"):
        assert cvtele.fidelity(1, 1, 0.5, path) == pytest.approx(0.84375, abs=1e-8)
    assert cvtele.fidelity(0, 2, 0.5) == pytest.approx(0.421875, abs=1e-12)


def test_special_functions():
    assert cvtele.jacobi_p(2, 1, 0, 1.0) == pytest.approx(3.0)
    assert cvtele.laguerre_assoc(1, 2, 0.5) == pytest.approx(2.5)
    assert cvtele.h_entropy(1.5) == pytest.approx(2 * math.log(2))


def test_state_properties():
    assert cvtele.normalization(0, 0, 0.7) == pytest.approx(1.0)
    a, b, c = cvtele.covariance_matrix(1, 1, 0.5)
    assert (a, b, c) == pytest.approx((1.7, 1.7, 1.6), abs=1e-12)
    am, bm, cm = cvtele.covariance_matrix_oracle(1, 1, 0.5)
    assert (am, bm, cm) == pytest.approx((a, b, c), abs=1e-8)


def test_non_gaussianity():
    assert cvtele.non_gaussianity(0, 0, 0.6) == pytest.approx(0.0, abs=1e-12)
    assert cvtele.non_gaussianity(1, 1, 0.5) == pytest.approx(0.5411303345, abs=1e-8)
    assert cvtele.non_gaussianity(0, 2, 0.4) == pytest.approx(
        3 * math.log(3) - 2 * math.log(2), abs=1e-8
    )


def test_chi_and_mu_independence():
    assert cvtele.chi12(1, 1, 0.5, 0j, 0j) == pytest.approx(1.0)
    f0 = cvtele.fidelity_oracle(1, 1, 0.5, mu=0j)
    f1 = cvtele.fidelity_oracle(1, 1, 0.5, mu=0.6 - 0.3j)
    assert f0 == pytest.approx(f1, abs=1e-8)


def test_closed_form_report_and_table():
    rep = cvtele.fidelity_closed_report(3, 3, 0.5)
    assert rep["formula_id"] == "m3-corrected"
    assert rep["printed_formula_deviation"] is not None
    table = json.loads(cvtele.coefficient_table_json())
    assert table["version"] == 1


def test_errors():
    with pytest.raises(ValueError):
        cvtele.fidelity(1, 1, 1.5)
    with pytest.raises(ValueError):
        cvtele.fidelity(1, 0, 0.0)


def test_cli_roundtrip():
    cli = os.environ.get("CVTELE_CLI")
    if not cli:
        pytest.skip("CVTELE_CLI not set")
    out = subprocess.run(
        [cli, "fidelity", "--m", "1", "--n", "1", "--lam", "0.5"],
        capture_output=True,
        text=True,
        check=True,
    )
    rec = json.loads(out.stdout)
    assert rec["fidelity"] == pytest.approx(0.84375)
