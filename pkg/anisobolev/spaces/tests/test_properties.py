import numpy as np
import pytest
import anisobolev as ab


@pytest.fixture
def step():
    return ab.MonotoneProfile.from_steps([4.0], [3.0])


def test_closed_form_boyd_indices():
    assert ab.boyd_indices(ab.Lp(2.0)) == (0.5, 0.5, True)
    upper, lower, exact = ab.boyd_indices(ab.parse_space("gamma:p=2,w=pow(0.5)"))
    assert (upper, lower, exact) == (0.75, 0.75, True)
    assert ab.boyd_indices(ab.L1plusLinf()) == (1.0, 0.0, True)


@pytest.mark.parametrize("text", ["lp:p=2", "lorentz:p=2,q=1", "lp:p=4"])
def test_estimated_boyd_indices(text):
    spec = ab.parse_space(text)
    upper, lower = ab.estimate_boyd_indices(spec)
    assert upper == pytest.approx(1 / spec.p, rel=1e-6)
    assert lower == pytest.approx(1 / spec.p, rel=1e-6)


def test_boyd_estimation_needs_probes():
    with pytest.raises(ValueError, match="at least 3"):
        ab.estimate_boyd_indices(ab.Lp(2.0), probes=ab.default_probes()[:2])
    with pytest.raises(ValueError, match="positive"):
        ab.dilation_norm(ab.Lp(2.0), 0.0)


def test_hardy_p_is_double_star(step):
    g = ab.hardy_p(step)
    assert g(np.array([8.0]))[0] == pytest.approx(1.5)


def test_hardy_q(step):
    # t^-1/2 int_t^4 3 s^-1/2 ds
    g = ab.hardy_q(0.5, step, grid=[1.0, 2.0])
    assert np.allclose(g(np.array([1.0, 2.0])), [6.0, 6.0 * (np.sqrt(2) - 1)])
    with pytest.raises(ValueError, match="0 <= a < 1"):
        ab.hardy_q(1.0, step)


def test_hlp_trials():
    result = ab.hlp_trials(n_trials=200, random_state=0)
    assert result.trials == 200
    assert result.violations == 0


def test_holder_trials():
    assert ab.holder_trials(n_trials=200, random_state=0).violations == 0


def test_transfer_lemma_trials():
    result = ab.transfer_lemma_trials(n_trials=200, random_state=0)
    assert result.violations == 0
    assert result.worst <= 4.0


def test_trials_are_seeded():
    assert ab.hlp_trials(n_trials=20, random_state=3) == ab.hlp_trials(n_trials=20, random_state=3)


def test_lambda_gamma_equivalence():
    ratio = ab.lambda_gamma_equivalence("const", 2.0, ab.default_probes())
    assert np.sqrt(2.0) - 1e-9 <= ratio <= 2.0


def test_lambda_weight_identity_for_constant_weight():
    assert ab.lambda_weight_identity_check("const", 2.0, 1.0, ab.default_probes()) < 1e-9
