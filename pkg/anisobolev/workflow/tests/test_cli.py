import json

import numpy as np
import pandas as pd
import pytest
import anisobolev as ab
from anisobolev.workflow.cli import main


def test_matrix_on_cone(tmp_path):
    config = ab.RunConfig(A=(2.0,), cases=["T32.i", "T32.ii", "T32.v", "T32.identity"],
                          resolution=2000, output_dir=str(tmp_path))
    matrix = ab.CaseMatrix(config).fit()
    assert len(matrix.reports_) == 4
    assert not matrix.failures_
    assert list(matrix.results_.columns) == list(ab.VerificationReport.columns)


def test_empty_case_list():
    with pytest.warns(ab.AnisobolevWarning, match="No cases"):
        matrix = ab.CaseMatrix(ab.RunConfig(A=(2.0,))).fit()
    assert matrix.results_.empty


def test_verify_writes_reports(tmp_path, capsys):
    status = main(["verify", "--A", "2", "--case", "T32.i,T32.ii", "--resolution", "1000",
                   "--out", str(tmp_path)])
    assert status == 0
    frame = pd.read_csv(tmp_path / "reports.csv")
    assert list(frame.columns[:8]) == [
        "case_id", "anchor", "lhs", "rhs", "ratio", "worst_t", "resolution", "stability"]
    assert list(frame["resolution"]) == ["1000/2000"] * 2
    rows = json.loads((tmp_path / "reports.json").read_text())
    assert [r["case_id"] for r in rows] == ["T32.i", "T32.ii"]
    assert "T32.i\tcone\tpass" in capsys.readouterr().out


def test_reports_are_deterministic(tmp_path):
    args = ["verify", "--A", "2", "--case", "T32.ii,T32.iv", "--p", "2", "--resolution",
            "500"]
    for name in ("first", "second"):
        assert main(args + ["--out", str(tmp_path / name)]) == 0
    for stem in ("reports.csv", "reports.json"):
        first = (tmp_path / "first" / stem).read_bytes()
        assert first == (tmp_path / "second" / stem).read_bytes()


def test_single_row_for_cumulative_case(tmp_path):
    assert main(["verify", "--A", "2", "--case", "T32.iv", "--p", "2", "--resolution",
                 "1000", "--out", str(tmp_path)]) == 0
    rows = json.loads((tmp_path / "reports.json").read_text())
    assert len(rows) == 1
    assert rows[0]["params"] == {"p": 2.0}
    assert rows[0]["worst_t"] is not None


def test_unknown_case_exit_status(tmp_path, capsys):
    status = main(["verify", "--case", "T32.vi", "--out", str(tmp_path)])
    assert status == 2
    err = capsys.readouterr().err
    assert "Accepted values" in err and "T32.identity" in err


def test_warnings_go_to_stderr(tmp_path, capsys):
    status = main(["verify", "--A", "0", "--case", "T32.v", "--resolution", "200",
                   "--out", str(tmp_path)])
    assert status == 0
    assert "warning: HypothesisWarning:" in capsys.readouterr().err


def test_sweep(tmp_path):
    status = main(["sweep", "--family", "cone", "--param", "radius=0.5,1,2", "--A", "2",
                   "--case", "T32.ii", "--resolution", "500", "--out", str(tmp_path)])
    assert status == 0
    frame = pd.read_csv(tmp_path / "sweep.csv")
    assert len(frame) == 3
    assert np.allclose(frame["ratio"], frame["ratio"].iloc[0], rtol=1e-9)


def test_rearrange_command(tmp_path):
    assert main(["rearrange", "--family", "cone", "--A", "2", "--out", str(tmp_path)]) == 0
    frame = pd.read_csv(tmp_path / "rearrangement_cone.csv")
    frame = frame[frame["t"] <= 0.6]
    exact = 1 - (1.5 * frame["t"]) ** (1 / 3)
    assert np.max(np.abs(frame["value"] - exact)) < 2e-3


def test_spaces_command(capsys):
    assert main(["spaces", "--family", "cone", "--A", "0", "--space", "lp:p=1",
                 "--resolution", "2000"]) == 0
    text, value = capsys.readouterr().out.strip().split("\t")
    assert text == "lp:p=1"
    assert float(value) == pytest.approx(1.0, rel=1e-3)


def test_sharpness_command(tmp_path):
    status = main(["sharpness", "--A", "2", "--case", "T32.ii", "--budget", "3",
                   "--resolution", "500", "--out", str(tmp_path)])
    assert status == 0
    scaling = pd.read_csv(tmp_path / "scaling.csv")
    assert list(scaling["verdict"]) == ["not invariant", "invariant", "not invariant"]
    constants = json.loads((tmp_path / "constants.json").read_text())
    assert constants[0]["case_id"] == "T32.ii"


def test_sharpness_at_critical_exponent(tmp_path):
    status = main(["sharpness", "--A", "0", "--p-vec", "1", "--resolution", "500",
                   "--out", str(tmp_path)])
    assert status == 0
    scaling = pd.read_csv(tmp_path / "scaling.csv")
    assert list(scaling["verdict"]) == ["skipped"]


def test_unexpected_failure_exit_code(tmp_path, monkeypatch, capsys):
    import anisobolev.workflow.cli as cli

    def broken(config):
        raise TypeError("broken run")

    monkeypatch.setattr(cli, "run_sharpness", broken)
    assert main(["sharpness", "--A", "2", "--out", str(tmp_path)]) == 2
    assert "TypeError: broken run" in capsys.readouterr().err


def test_float_format(tmp_path):
    row = ab.VerificationReport("T32.i", lhs=1 / 3, rhs=0.0, resolution=(10, 20))
    csv_path, json_path = ab.write_reports([row], str(tmp_path))
    frame = pd.read_csv(csv_path, dtype=str, keep_default_na=False)
    assert frame["lhs"].iloc[0] == "0.333333333333"
    assert frame["ratio"].iloc[0] == "inf"
    assert frame["worst_t"].iloc[0] == ""
    assert json.loads(open(json_path).read())[0]["ratio"] == "inf"
