import numpy as np
import pytest
import anisobolev as ab


def test_cone_gradient_mass(cone, quadratic):
    terms = ab.SobolevTerms(quadratic).fit(cone)
    assert terms.gradient_l1_[0] == pytest.approx(2 / 3, rel=1e-6)
    tilde = terms.tilde_[0]
    assert tilde.total == pytest.approx(terms.gradient_l1_[0], rel=1e-9)
    assert np.allclose(tilde.profile.values, 1.0)
    assert tilde.profile.total() == pytest.approx(2 / 3, rel=1e-6)


def test_cumulative_nondecreasing(cone, quadratic):
    tilde = ab.tilde_profiles(cone, quadratic)[0]
    assert np.all(np.diff(tilde.cumulative.values) >= 0)
    assert tilde.cumulative(np.array([10.0]))[0] == pytest.approx(tilde.total)


def test_gradient_mass_identity(family):
    terms = ab.sobolev_terms(family, (1.0, 0.0))
    totals = [t.total for t in terms.tilde_]
    assert np.allclose(totals, terms.gradient_l1_, rtol=1e-9)
    for t in terms.tilde_:
        assert t.profile.total() == pytest.approx(t.total, rel=1e-9)


def test_tilde_dominated_by_gradient_rearrangement(family):
    terms = ab.sobolev_terms(family, (1.0, 0.0))
    assert max(terms.domination_gap(i) for i in range(2)) < 1e-9


def test_exponents_sum_to_one():
    w = ab.MonomialWeight((1.0, 2.5, 0.0))
    assert sum(w.theta) == pytest.approx(1.0, abs=1e-15)


def test_multiplicative_rhs_single_factor(cone, quadratic):
    tilde = ab.tilde_profiles(cone, quadratic)
    rhs = ab.multiplicative_rhs(tilde, quadratic, p=1.0)
    assert rhs.integral() == pytest.approx(2 / 3, rel=1e-6)
    squared = ab.multiplicative_rhs(tilde, quadratic, p=2.0)
    grid = tilde[0].profile.t_grid
    assert np.allclose(squared(grid), tilde[0].profile(grid) ** 2)


def test_multiplicative_rhs_equal_factors(cone, quadratic):
    profile = ab.tilde_profiles(cone, quadratic)[0].profile
    w = ab.MonomialWeight((1.0, 0.0))
    rhs = ab.multiplicative_rhs([profile, profile], w, p=2.0)
    grid = profile.t_grid
    assert np.allclose(rhs(grid), profile(grid) ** 2)


def test_multiplicative_rhs_rejects_small_p(cone, quadratic):
    tilde = ab.tilde_profiles(cone, quadratic)
    with pytest.raises(ValueError):
        ab.multiplicative_rhs(tilde, quadratic, p=0.5)
    with pytest.raises(ValueError):
        ab.multiplicative_rhs(tilde, (0.0, 0.0))


def test_terms_are_cached(cone):
    assert ab.sobolev_terms(cone, (2.0,)) is ab.sobolev_terms(cone, ab.MonomialWeight((2.0,)))


def test_terms_cached_by_box_bounds(cone):
    first = ab.sobolev_terms(cone, (2.0,), resolution=500, box=([-1.0], [1.0]))
    second = ab.sobolev_terms(cone, (2.0,), resolution=500, box=ab.BoxDomain((-1.0,), (1.0,)))
    assert first is second


def test_plain_callable_terms_cached():
    def f(x):
        return np.maximum(1 - np.abs(x[:, 0]), 0.0)

    box = ([-1.0], [1.0])
    terms = ab.sobolev_terms(f, (0.0,), resolution=500, box=box)
    assert ab.sobolev_terms(f, (0.0,), resolution=500, box=box) is terms
    assert terms.profile_.mass == pytest.approx(2.0)
    with pytest.raises(ValueError, match="box"):
        ab.sobolev_terms(f, (0.0,), resolution=500)


def test_zero_field(quadratic):
    f = ab.CallableField(lambda x: np.zeros(len(x)), ab.BoxDomain((-1.0,), (1.0,)),
                         lambda x: np.zeros(x.shape))
    terms = ab.SobolevTerms(quadratic, resolution=100).fit(f)
    assert terms.tilde_[0].total == 0.0
    assert terms.profile_.is_empty


def test_tilde_frame(cone, quadratic):
    frame = ab.tilde_profiles(cone, quadratic)[0].to_frame()
    assert list(frame.columns) == ["t", "cumulative", "derivative", "value"]
