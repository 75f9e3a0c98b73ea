import numpy as np
import pytest
import anisobolev as ab


def test_only_sobolev_exponent_is_invariant(cone, quadratic):
    results = ab.scaling_exponent_test(cone, quadratic, (1.0,), resolution=2000)
    assert list(results["q"]) == pytest.approx([1.35, 1.5, 1.65])
    assert list(results["verdict"]) == ["not invariant", "invariant", "not invariant"]
    assert abs(results["slope"].iloc[1]) < ab.options.SLOPE_TOL
    assert (results["slope"].abs().iloc[[0, 2]] > 0.05).all()


def test_slopes_match_oracle(cone, quadratic):
    results = ab.scaling_exponent_test(cone, quadratic, (1.0,), q_candidates=[1.5, 2.0],
                                       resolution=2000)
    assert np.allclose(results["slope"], results["oracle_slope"], atol=0.01)
    assert results["oracle_slope"].iloc[1] == pytest.approx(-3 * (1 / 2 - 2 / 3))


def test_fitted_exponent(cone, quadratic):
    experiment = ab.ScalingExperiment(quadratic, (1.0,), [2.0], resolution=2000).fit(cone)
    assert experiment.fitted_exponent_ == pytest.approx(1.5, rel=1e-3)
    assert len(experiment.samples_) == 9


def test_critical_exponent_skipped(cone, lebesgue):
    experiment = ab.ScalingExperiment(lebesgue, (1.0,), resolution=500).fit(cone)
    assert experiment.samples_.empty
    assert experiment.samples_["log_ratio"].dtype == float
    assert list(experiment.results_["verdict"]) == ["skipped"]
    assert np.isinf(experiment.results_["q"].iloc[0])
    assert np.isnan(experiment.fitted_exponent_)
    results = ab.scaling_exponent_test(cone, lebesgue, (1.0,), [1.5, 2.0], resolution=500)
    assert list(results["verdict"]) == ["skipped", "skipped"]


def test_classical_scaling():
    results = ab.scaling_exponent_test(ab.Cone(n=2), (0.0, 0.0), (1.0, 1.0), [2.0],
                                       resolution=32)
    assert results["verdict"].iloc[0] == "invariant"


def test_axis_sweeps():
    f, w = ab.Cone(n=2), ab.MonomialWeight((1.0, 0.0))
    experiment = ab.ScalingExperiment(w, (1.0, 1.0), resolution=48).fit(f)
    assert set(experiment.samples_["sweep"]) == {"all", "x1", "x2"}
    middle = experiment.results_.iloc[1]
    assert middle["verdict"] == "invariant"
    assert len(middle["axis_slopes"]) == 2
    oracle = ab.scaling_slope_oracle(w, (1.0, 1.0), 2.0, axis=0)
    assert oracle == pytest.approx(2 * (1 / 1.5 - 1 / 2))


def test_scales_must_span_two_decades(cone, quadratic):
    with pytest.raises(ValueError):
        ab.ScalingExperiment(quadratic, scales=[1.0, 2.0, 4.0]).fit(cone)


def test_symmetric_balance():
    balance = ab.lambda_balance(ab.Cone(n=2), (1.0, 1.0), resolution=64)
    assert balance.scales[0] == pytest.approx(balance.scales[1], rel=1e-9)


def test_stretched_bump_balance():
    f = ab.TensorBump(n=2, radii=(2.0, 1.0))
    balance = ab.lambda_balance(f, (0.0, 0.0), resolution=64)
    assert balance.norms_before[1] == pytest.approx(2 * balance.norms_before[0], rel=1e-9)
    assert balance.scales[0] == pytest.approx(2 * balance.scales[1], rel=1e-9)
    assert balance.spread < 0.01


def test_balance_in_dimension_one(cone, quadratic):
    balance = ab.lambda_balance(cone, quadratic, resolution=500)
    assert list(balance.scales) == [1.0]
    assert balance.spread == 0


def test_degenerate_direction():
    f = ab.CallableField(
        lambda x: np.maximum(0.0, 1 - x[:, 0] ** 2),
        ab.BoxDomain((-1.0, -1.0), (1.0, 1.0)),
        lambda x: np.stack([-2 * x[:, 0] * (np.abs(x[:, 0]) < 1), 0 * x[:, 1]], axis=-1))
    with pytest.raises(ValueError, match="Degenerate"):
        ab.lambda_balance(f, (0.0, 0.0), resolution=16)
