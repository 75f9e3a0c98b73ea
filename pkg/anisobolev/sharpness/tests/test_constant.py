import pytest
import anisobolev as ab


def test_estimate_is_stable_across_budgets(cone, lebesgue):
    estimates = []
    for budget in (5, 20):
        with pytest.warns(ab.OptimizerWarning):
            estimates.append(ab.estimate_best_constant(
                "T32.i", "cone", lebesgue, budget=budget, resolution=2000, random_state=0))
    small, large = estimates
    assert small.best_ratio == pytest.approx(0.5, rel=1e-3)
    assert round(small.best_ratio, 3) == round(large.best_ratio, 3)
    assert not large.improved
    assert large.trace_length <= 3 + 20 + 4


def test_estimate_is_homogeneous(quadratic):
    ratios = [ab.estimate_best_constant(
        "T32.ii", "cone", quadratic, grid={"radius": [0.5, 1.0], "amplitude": [a]},
        budget=0, resolution=2000).best_ratio for a in (1.0, 2.0)]
    assert ratios[0] == pytest.approx(ratios[1], rel=1e-9)


def test_best_ratio_bounds_trace():
    w = ab.MonomialWeight((1.0, 0.0))
    estimate = ab.estimate_best_constant(
        "T32.ii", "tensor_bump", w, grid={"radii": [0.5, 1.0], "k": [2.0]}, budget=8,
        resolution=24, random_state=1)
    assert estimate.best_ratio >= estimate.trace["ratio"].max()
    assert estimate.best_ratio >= estimate.grid_best
    assert set(estimate.trace["stage"]) <= {"grid", "refine"}
    assert list(estimate.as_dict()) == list(ab.ConstantEstimate.columns)


def test_refused_everywhere(cone, lebesgue):
    with pytest.raises(ValueError, match="refused"):
        ab.estimate_best_constant("T32.v", "cone", lebesgue, budget=0, resolution=200)


def test_unknown_family(quadratic):
    with pytest.raises(ValueError, match="Accepted values"):
        ab.estimate_best_constant("T32.i", "sphere", quadratic)
