import numpy as np
import pytest
import anisobolev as ab


@pytest.fixture
def steps():
    return ab.MonotoneProfile.from_steps([1.0, 1.0, 2.0], [1.0, 3.0, 1.0])


def test_from_steps_merges(steps):
    assert np.allclose(steps.t, [1.0, 4.0])
    assert np.allclose(steps.values, [3.0, 1.0])
    assert steps.mass == 4.0


def test_from_steps_drops_zeros():
    p = ab.MonotoneProfile.from_steps([1.0, 0.0, 2.0], [0.0, 5.0, 2.0])
    assert np.allclose(p.t, [2.0])
    assert ab.MonotoneProfile.from_steps([1.0], [0.0]).is_empty


def test_step_evaluation(steps):
    assert np.allclose(steps(np.array([0.5, 1.0, 1.5, 5.0])), [3.0, 1.0, 1.0, 0.0])


def test_primitive(steps):
    assert steps.primitive(np.array([1.5]))[0] == pytest.approx(3.5)
    assert steps.total() == pytest.approx(6.0)
    assert steps.integral() == pytest.approx(6.0)
    assert steps.power(2).total() == pytest.approx(12.0)


def test_double_star(steps):
    g = steps.double_star()
    assert g(np.array([0.5]))[0] == pytest.approx(3.0)
    assert g(np.array([2.0]))[0] == pytest.approx(2.0, rel=1e-4)
    assert g(np.array([8.0]))[0] == pytest.approx(0.75)
    grid = steps.t_grid
    assert np.all(g(grid) >= steps(grid) - 1e-12)


def test_dilate(steps):
    d = steps.dilate(2.0)
    assert d(np.array([3.0]))[0] == steps(np.array([1.5]))[0]
    assert d.mass == 8.0
    with pytest.raises(ValueError):
        steps.dilate(-1.0)


@pytest.mark.parametrize("a, b, k, expected", [
    (0.0, 1.0, -0.5, 2.0), (1.0, np.inf, -2.0, 1.0), (0.0, 1.0, -1.0, np.inf),
    (1.0, np.e, -1.0, 1.0)])
def test_power_moment(a, b, k, expected):
    assert ab.power_moment(a, b, k)[0] == pytest.approx(expected)


def test_step_product():
    p1 = ab.MonotoneProfile.from_steps([1.0, 1.0], [2.0, 1.0])
    p2 = ab.MonotoneProfile.from_steps([2.0], [3.0])
    product = ab.step_product([p1, p2], [1.0, 1.0])
    assert np.allclose(product.values, [6.0, 3.0])
    assert product.integral() == pytest.approx(9.0)
    with pytest.raises(ValueError):
        ab.step_product([p1, p2], [1.0])


def test_invalid_knots():
    with pytest.raises(ValueError, match="strictly increasing"):
        ab.Curve([1.0, 1.0], [2.0, 1.0])
    with pytest.raises(ValueError, match="Accepted values"):
        ab.Curve([1.0], [1.0], kind="spline")


def test_power_law_tail():
    c = ab.Curve([1.0], [1.0], kind="linear", tail=(1.0, -2.0))
    assert c.total() == pytest.approx(2.0)
    assert c.sup(k=1.0)[0] == pytest.approx(1.0)
    assert c.scale_by_power(3.0).sup()[0] == np.inf


def test_to_csv(steps, tmp_path):
    path = tmp_path / "profile.csv"
    steps.to_csv(path)
    text = path.read_text().splitlines()
    assert text[0] == "t,value"
    assert len(text) == steps.grid_size + 1


def test_pickle(steps, tmp_path):
    path = str(tmp_path / "profile.pkl")
    steps.to_pickle(path)
    restored = ab.read_pickle(path)
    assert np.array_equal(restored.t, steps.t)
    assert restored.mass == steps.mass


def test_zero_head_and_tail():
    curve = ab.Curve([1.0, 2.0], [0.0, 2.0], kind="linear", head=(0.0, 0.0), tail=(0.0, -2.0))
    assert curve.total() == pytest.approx(1.0)
    assert np.allclose(curve.primitive(np.array([0.5, 1.5, 3.0])), [0.0, 0.25, 1.0])
    lengths, means, t_far = curve.pieces()
    assert means[0] == 0.0 and t_far == 2.0


def test_repeated_knot_keeps_last_piece():
    # 1 + 1e-17 rounds back to the previous knot
    p = ab.MonotoneProfile.from_steps([1.0, 1e-17, 1.0], [3.0, 2.0, 1.0])
    assert np.allclose(p.t, [1.0, 2.0])
    assert np.allclose(p.values, [2.0, 1.0])
