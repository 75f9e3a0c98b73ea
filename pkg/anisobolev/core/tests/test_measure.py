import numpy as np
import pytest
import anisobolev as ab


def test_homogeneous_dimension():
    w = ab.MonomialWeight((1.0, 2.0))
    assert w.D == 5.0
    assert np.allclose(w.theta, [0.4, 0.6])
    assert w.theta.sum() == pytest.approx(1.0)


@pytest.mark.parametrize("A", [(-1.0,), (np.inf,), ()])
def test_invalid_exponents(A):
    with pytest.raises(ValueError):
        ab.MonomialWeight(A)


def test_integrate_cone(quadratic, cone):
    # int x^2 (1 - |x|) dx over [-1, 1]
    assert ab.integrate(quadratic, cone) == pytest.approx(1 / 6, rel=1e-6)
    assert ab.integrate(quadratic, cone) == pytest.approx(cone.lp_norm(quadratic, 1.0), rel=1e-6)


def test_monte_carlo_cross_check(quadratic, cone):
    first = ab.integrate_monte_carlo(quadratic, cone, n_samples=200000, random_state=0)
    second = ab.integrate_monte_carlo(quadratic, cone, n_samples=200000, random_state=0)
    assert first == second
    assert first == pytest.approx(1 / 6, rel=2e-2)


def test_measure_superlevel(quadratic, cone):
    assert ab.measure_superlevel(quadratic, cone, 0.5) == pytest.approx(1 / 12, rel=1e-6)
    with pytest.raises(ValueError):
        ab.measure_superlevel(quadratic, cone, -1.0)


def test_distribution_function(quadratic, cone):
    dist = ab.distribution_function(quadratic, cone, size=64)
    assert dist.masses[0] == pytest.approx(2 / 3, rel=1e-6)
    assert dist.masses[-1] == 0.0
    assert np.all(np.diff(dist.masses) <= 0)
    assert list(dist.to_frame().columns) == ["s", "mass"]


def test_box_scale():
    box = ab.BoxDomain((-1.0, 0.0), (1.0, 4.0)).scale((2.0, 4.0))
    lo, hi = box.bounds
    assert np.allclose(lo, [-0.5, 0.0])
    assert np.allclose(hi, [0.5, 1.0])
    assert box.volume == pytest.approx(1.0)
    with pytest.raises(ValueError):
        box.scale(0.0)


def test_degenerate_box():
    with pytest.raises(ValueError, match="lower bound"):
        ab.BoxDomain((0.0,), (0.0,))


def test_dimension_mismatch(lebesgue):
    with pytest.raises(ValueError, match="does not match"):
        ab.CellDecomposition(lebesgue, ab.BoxDomain((0.0, 0.0), (1.0, 1.0)), 4)


def test_non_finite_sample(lebesgue):
    f = ab.CallableField(lambda x: np.where(x[:, 0] > 0, np.inf, 0.0),
                         ab.BoxDomain((-1.0,), (1.0,)))
    with pytest.raises(ab.NonFiniteSampleError):
        ab.integrate(lebesgue, f, resolution=10)


def test_weight_to_json():
    assert '"A": [2.0]' in ab.MonomialWeight((2.0,)).to_json()
