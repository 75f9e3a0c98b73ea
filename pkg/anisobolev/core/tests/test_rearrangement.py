import numpy as np
import pytest
import anisobolev as ab


@pytest.fixture
def fitted(lebesgue, cone):
    return ab.Rearrangement(lebesgue, resolution=2000).fit(cone)


def test_rearrangement_attributes(fitted):
    assert len(fitted.order_) == 2000
    assert np.all(np.diff(fitted.values_[fitted.order_]) <= 0)
    assert fitted.cumulative_mass_[-1] == pytest.approx(2.0)
    assert fitted.mass_ == pytest.approx(2.0)


def test_lebesgue_cone(fitted):
    p = fitted.profile_
    assert ab.relative_sup_error(p, lambda t: 1 - t / 2, p.t_grid) < 1e-3


def test_double_star_dominates(fitted):
    p = fitted.profile_
    grid = p.t_grid
    assert np.all(ab.double_star(p)(grid) >= p(grid) - 1e-12)


def test_crece(fitted):
    assert ab.check_crece(fitted.profile_) <= 1e-10
    assert ab.check_crece(ab.MonotoneProfile([], [])) == 0.0


def test_oscillation(fitted):
    # f** - f* = t / 4 for the cone
    t = np.array([0.5, 1.0, 1.5])
    assert np.allclose(ab.oscillation(fitted.profile_)(t), t / 4, atol=2e-3)
    assert np.allclose(ab.oscillation_from_derivative(fitted.profile_)(t), t / 4, atol=1e-2)


def test_profile_derivative(fitted):
    d = ab.profile_derivative(fitted.profile_)
    assert d.absolutely_continuous
    assert np.all(d.values >= 0)
    assert d(np.array([1.0]))[0] == pytest.approx(0.5, rel=1e-2)
    # the exact slope is 1/2 across the interior
    t = np.array([0.05, 0.3, 0.7, 1.0, 1.3, 1.9])
    assert np.allclose(d(t), 0.5, rtol=1e-2)


def test_profile_derivative_weighted(quadratic, cone):
    # f* = 1 - (3t/2)**(1/3) under x**2 dx
    p = ab.rearrange(quadratic, cone, resolution=4000)
    t = np.array([0.01, 0.1, 0.3])
    exact = (1.5 ** (1 / 3) / 3) * t ** (-2 / 3)
    assert np.allclose(ab.profile_derivative(p)(t), exact, rtol=2e-2)


def test_equimeasurability(quadratic, cone):
    assert ab.check_equimeasurability(quadratic, cone, resolution=2000) < 1e-2


def test_subadditivity(lebesgue, cone):
    shifted = ab.Cone(n=1, center=(0.5,))
    assert ab.check_subadditivity(lebesgue, cone, shifted, resolution=2000) < 1e-3


def test_hardy_littlewood(quadratic, cone):
    shifted = ab.Cone(n=1, radius=0.5, center=(0.25,))
    lhs, rhs = ab.hardy_littlewood_gap(quadratic, cone, shifted, resolution=2000)
    assert 0 < lhs <= rhs * (1 + 1e-9)


def test_truncation(lebesgue, cone):
    p = ab.rearrange(lebesgue, ab.truncate(cone, 0.2, 0.6), resolution=2000)
    assert p.values[0] == pytest.approx(0.4)
    # |{f > 0.2}| = 1.6
    assert p.T == pytest.approx(1.6, rel=1e-3)
    with pytest.raises(ValueError):
        ab.truncate(cone, 0.5, 0.5)


def test_plain_callable_needs_box(lebesgue):
    with pytest.raises(ValueError, match="box"):
        ab.rearrange(lebesgue, lambda x: x[:, 0])
    p = ab.rearrange(lebesgue, lambda x: np.abs(x[:, 0]), box=((-1.0,), (1.0,)),
                     resolution=1000)
    assert p.mass == pytest.approx(2.0)


def test_weighted_cone_closed_forms(quadratic, cone):
    # f* = 1 - u and f** = 1 - 3u/4 with u = (3t/2)**(1/3) on (0, 2/3]
    p = ab.rearrange(quadratic, cone, resolution=4000)
    t = np.array([0.01, 0.1, 0.3, 0.6])
    u = (1.5 * t) ** (1 / 3)
    assert np.allclose(p.double_star()(t), 1 - 0.75 * u, atol=2e-3)
    assert np.allclose(ab.oscillation(p)(t), u / 4, atol=2e-3)
    assert ab.oscillation(p)(np.array([2 / 3]))[0] == pytest.approx(0.25, abs=2e-3)


def test_public_names_are_not_shadowed():
    from anisobolev.core import rearrangement

    assert ab.oscillation is rearrangement.oscillation
    assert ab.double_star is rearrangement.double_star
    assert ab.verify_t23.__module__ == "anisobolev.inequalities.mean_oscillation"
