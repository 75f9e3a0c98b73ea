import numpy as np
import pytest
import anisobolev as ab


def test_line():
    x = np.linspace(0.0, 1.0, 11)
    model = ab.WeightedRegression().fit(x, 2.0 - 3.0 * x)
    assert model.slope_ == pytest.approx(-3.0)
    assert model.intercept_ == pytest.approx(2.0)
    assert model.residual_ < 1e-12


def test_loglog():
    x = np.geomspace(0.1, 10.0, 9)
    model = ab.WeightedRegression(loglog=True).fit(x, 5.0 * x ** 1.5)
    assert model.slope_ == pytest.approx(1.5)
    assert model.predict(np.array([4.0]))[0] == pytest.approx(40.0)


def test_non_finite_observations_are_ignored():
    x = np.array([1.0, 2.0, 3.0, 4.0])
    y = np.array([2.0, 4.0, np.nan, 8.0])
    assert ab.WeightedRegression().fit(x, y).slope_ == pytest.approx(2.0)


def test_through_origin():
    x = np.array([1.0, 2.0, 3.0])
    model = ab.WeightedRegression(thru_orig=True).fit(x, 4.0 * x)
    assert model.slope_ == pytest.approx(4.0)
    assert model.intercept_ == 0.0


def test_along_axis():
    x = np.tile(np.arange(5.0), (2, 1))
    y = np.vstack((x[0], -2.0 * x[1]))
    assert np.allclose(ab.WeightedRegression(axis=1).fit(x, y).slope_, [1.0, -2.0])
