import numpy as np
import pytest
import anisobolev as ab


@pytest.mark.parametrize("p", [2.0, 3.0, 5.0])
def test_constant_weight_is_bp(p):
    ok, constant = ab.is_bp_weight(ab.constant_weight(), p)
    assert ok
    assert constant == pytest.approx(1 / (p - 1), rel=1e-6)


def test_critical_power_is_not_bp():
    ok, constant = ab.is_bp_weight(ab.power_weight(2.0), 3.0)
    assert not ok
    assert constant == np.inf


def test_bp_needs_p_at_least_one():
    with pytest.raises(ValueError):
        ab.is_bp_weight(ab.constant_weight(), 0.5)


def test_undecidable_weight_warns():
    w = ab.TabulatedWeight((1.0, 2.0), (1.0, 1.0))
    with pytest.warns(ab.UndecidableWarning, match="tail metadata"):
        assert not ab.check_admissible(w, 2.0)


def test_admissible_weights():
    assert ab.check_admissible(ab.parse_weight("exp"), 2.0)
    assert not ab.check_admissible(ab.power_weight(-2.0), 2.0)
    assert ab.check_ggamma_weight(ab.power_weight(-1.5), 2.0, 1.0)
    assert not ab.check_ggamma_weight(ab.constant_weight(), 2.0, 1.0)


def test_lemma_weight_for_inverse_power():
    # v = 1/t gives K(t) = ln(1/t)
    p = 3.0
    u = ab.weight_u_from_v(ab.parse_weight("pow(-1)"), p)
    t = np.array([1e-4, 0.01, 0.5, 1.0])
    expected = (p - 1) * (1 + np.log(1 / t)) ** (-p) / t
    assert np.allclose(u(t), expected, rtol=1e-9)
    assert u(np.array([2.0]))[0] == 0.0
    assert np.allclose(u.K(t), np.log(1 / t), atol=1e-12)
    assert np.all(u.bound(np.geomspace(1e-8, 1.0, 50)) <= 1.0 + 1e-12)


def test_lemma_weight_needs_p_above_one():
    with pytest.raises(ValueError, match="p > 1"):
        ab.weight_u_from_v(ab.constant_weight(), 1.0)


def test_exponential_moment():
    w = ab.parse_weight("exp")
    assert w.moment(0.0, np.inf, 1.0)[0] == pytest.approx(1.0)
    assert w.primitive(np.array([1.0]))[0] == pytest.approx(1 - np.exp(-1))


def test_power_moment_of_log_power():
    w = ab.parse_weight("pow(0.5)")
    assert w.moment(0.0, 4.0, 0.0)[0] == pytest.approx(16 / 3)
    assert ab.times_power(w, 0.5).beta == 1.0


@pytest.mark.parametrize("text", ["cosine", "pow", "pow(1,2)", "piecewise(1)"])
def test_invalid_weight(text):
    with pytest.raises(ValueError):
        ab.parse_weight(text)


def test_resolve_weight():
    assert ab.resolve_weight(None).text == ab.constant_weight().text
    with pytest.raises(TypeError):
        ab.resolve_weight(2.0)
