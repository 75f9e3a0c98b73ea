import numpy as np
import pytest
import anisobolev as ab


@pytest.fixture
def step():
    """ 3 on (0, 4] """
    return ab.MonotoneProfile.from_steps([4.0], [3.0])


@pytest.mark.parametrize("text, expected", [
    ("lp:p=2", 6.0), ("lp:p=inf", 3.0), ("linf", 3.0), ("l1linf", 3.0),
    ("lorentz:p=2,q=1", 12.0), ("lorentz:p=2,q=inf", 6.0),
    ("lorentz:p=2,q=inf,form=double_star", 6.0), ("lz:p=2,q=1,alpha=0", 12.0),
    ("glorentz:p=2,q=1,w=const", 12.0), ("gamma:p=2,w=const", np.sqrt(72.0)),
    ("convex(2):lp:p=1", 6.0)])
def test_step_norms(step, text, expected):
    # ||a 1_(0,c]||_{p,q} = a (p/q)^(1/q) c^(1/p)
    assert ab.parse_space(text).norm(step) == pytest.approx(expected, rel=1e-9)


def test_cone_lp_norm(quadratic, cone):
    p = ab.rearrange(quadratic, cone)
    assert ab.Lp(3.0).norm(p) == pytest.approx(cone.lp_norm(quadratic, 3.0), rel=1e-3)


def test_empty_profile():
    assert ab.Lp(2.0).norm(ab.MonotoneProfile([], [])) == 0.0


def test_divergent_norm_warns(step):
    with pytest.warns(ab.DivergenceWarning, match="diverges"):
        assert ab.parse_space("gamma:p=1,w=const").norm(step) == np.inf


def test_non_monotone_curve_is_rearranged():
    curve = ab.Curve([1.0, 2.0], [1.0, 3.0], kind="step")
    assert ab.Lp(1.0).norm(curve) == pytest.approx(4.0)


@pytest.mark.parametrize("text, expected", [
    ("lorentz:p=2,q=1", "lorentz:p=2,q=1"),
    ("convex(2):lp:p=1", "convex(2):lp:p=1"),
    ("angle(2):lorentz:p=3,q=2", "angle(2):lorentz:p=3,q=2"),
    ("ggamma:p=1,m=2,w=exp", "ggamma:p=1,m=2,w=exp")])
def test_text_encoding(text, expected):
    assert ab.parse_space(text).text == expected


@pytest.mark.parametrize("text, message", [
    ("sobolev:p=2", "Accepted values"), ("lp:q=2", "Invalid parameter"),
    ("convex(2)", "missing base"), ("lp:p=0.5", "Accepted values"),
    ("lorentz:p=1,q=2", "Accepted values"), ("lz:p=1,q=1", "Accepted values")])
def test_invalid_space(text, message):
    with pytest.raises(ValueError, match=message):
        ab.parse_space(text)


def test_exponent_arithmetic():
    assert ab.harmonic_mean_exponent((0.0, 0.0), (1.0, 2.0)) == pytest.approx(4 / 3)
    assert ab.harmonic_mean_exponent((0.0,), (np.inf,)) == np.inf
    assert ab.compare_to_dimension((0.0, 0.0), (2.0, 2.0)) == 0
    assert ab.compare_to_dimension((2.0,), (1.0,)) == -1
    assert ab.sobolev_exponent(1.5, 3.0) == pytest.approx(3.0)
    with pytest.raises(ValueError, match="undefined"):
        ab.sobolev_exponent(3.0, 3.0)
    with pytest.raises(ValueError, match="One exponent per coordinate"):
        ab.harmonic_mean_exponent((0.0, 0.0), (2.0,))


def test_hypotheses():
    assert ab.parse_space("glorentz:p=3,q=1,w=const").check_hypotheses() == (True, "")
    ok, reason = ab.parse_space("glorentz:p=3,q=1,w=pow(2)").check_hypotheses()
    assert not ok and "B_3" in reason
    assert not ab.parse_space("gamma:p=2,w=pow(-2)").check_hypotheses()[0]
    assert ab.parse_space("ggamma:p=1,m=2,w=pow(-1.5)").check_hypotheses()[0]
