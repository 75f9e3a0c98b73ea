import pytest
import anisobolev as ab


def test_toml_config(tmp_path):
    path = tmp_path / "run.toml"
    path.write_text(
        'A = [2.0]\n'
        'cases = ["T32.i", "T32.ii"]\n'
        'resolution = 500\n'
        '[[families]]\n'
        'tag = "cone"\n'
        'params = {radius = [0.5, 1.0]}\n')
    config = ab.RunConfig.from_file(path)
    assert config.cases == ["T32.i", "T32.ii"]
    assert config.weights_[0].D == 3
    assert len(config.instances(config.weights_[0])) == 2


def test_json_config(tmp_path):
    path = tmp_path / "run.json"
    path.write_text('{"A": [1, 1], "cases": ["P44.i"], "p_vec": [1, 1]}')
    config = ab.RunConfig.from_file(path)
    assert config.p_vec == [1, 1]
    assert config.output_dir_ == ab.options.OUTPUT_DIR


def test_unknown_key_reports_line(tmp_path):
    path = tmp_path / "run.toml"
    path.write_text('A = [2.0]\ncolour = "blue"\n')
    with pytest.raises(ab.ConfigError) as e:
        ab.RunConfig.from_file(path)
    assert e.value.line == 2
    assert str(path) in str(e.value)
    assert "Accepted values" in str(e.value)


def test_unknown_case_reports_line(tmp_path):
    path = tmp_path / "run.toml"
    path.write_text('A = [2.0]\n\ncases = ["T32.vi"]\n')
    with pytest.raises(ab.ConfigError, match="Accepted values") as e:
        ab.RunConfig.from_file(path)
    assert e.value.line == 3


def test_malformed_json(tmp_path):
    path = tmp_path / "run.json"
    path.write_text('{\n  "A": [2.0],\n  "cases": [\n}\n')
    with pytest.raises(ab.ConfigError) as e:
        ab.RunConfig.from_file(path)
    assert e.value.line == 4


def test_unsupported_format(tmp_path):
    with pytest.raises(ab.ConfigError, match=".toml"):
        ab.RunConfig.from_file(tmp_path / "run.yaml")


@pytest.mark.parametrize("data", [
    {"families": [{"tag": "sphere"}]},
    {"spaces": ["lorentz:p=2,r=1"]},
    {"weight": "cosine"},
    {"p": [0.5]}])
def test_invalid_values(data):
    with pytest.raises(ab.ConfigError):
        ab.RunConfig.from_dict(data)


def test_case_params():
    config = ab.RunConfig(p=[1.0, 2.0], spaces=["lp:p=1", "lp:p=4"], m=3.0)
    assert ab.case_params("T32.iv", config) == [{"p": 1.0}, {"p": 2.0}]
    assert [d["space"] for d in ab.case_params("T23.i", config)] == ["lp:p=1", "lp:p=4"]
    assert ab.case_params("GGamma.main", config)[0]["m"] == 3.0
    assert ab.case_params("R99.pointwise", config) == [{}]
