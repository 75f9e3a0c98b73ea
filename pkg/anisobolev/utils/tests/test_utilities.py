import numpy as np
import pytest
import anisobolev as ab


@pytest.mark.parametrize("value, expected", [
    (1 / 3, "0.333333333333"), (np.inf, "inf"), (-np.inf, "-inf"), (np.nan, ""),
    (None, ""), (2.0, "2")])
def test_format_float(value, expected):
    assert ab.format_float(value) == expected


def test_round_float():
    assert ab.round_float(1 / 3, 3) == 0.333
    assert ab.round_float(np.nan) is None


@pytest.mark.parametrize("a, b, expected", [
    (2.0, 3.0, 0.5), (0.0, 0.0, 0.0), (0.0, 1.0, np.inf), (np.inf, np.inf, 0.0)])
def test_relative_change(a, b, expected):
    assert ab.relative_change(a, b) == expected


def test_weight_to_json_round_trip():
    w = ab.read_json(ab.MonomialWeight((1.0, 2.0)).to_json())
    assert isinstance(w, ab.MonomialWeight)
    assert w.D == 5.0


def test_unknown_class_in_json():
    with pytest.raises(ValueError, match="Unknown class"):
        ab.read_json('{"__class__": "Sphere", "params": {}}')
