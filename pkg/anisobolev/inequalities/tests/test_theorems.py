import numpy as np
import pytest
import anisobolev as ab


def test_t23_equivalence_branch(cone, quadratic):
    report = ab.verify_t23("lp:p=1", cone, quadratic, resolution=2000)
    assert report.case_id == "T23.i"
    assert report.status == ab.PASS
    assert report.ratio >= 1 - 1e-9


def test_t23_bounded_branch(cone, quadratic):
    report = ab.verify_t23(ab.Lp(4.0), cone, quadratic, resolution=2000)
    assert report.case_id == "T23.ii"
    assert np.isfinite(report.ratio)
    assert report.lhs == pytest.approx(1.0, rel=1e-2)


def test_t23_boundary_refused(cone, quadratic):
    with pytest.warns(ab.HypothesisWarning):
        report = ab.verify_t23("lp:p=3", cone, quadratic, resolution=200)
    assert report.status == ab.REFUSED
    assert "not above" in report.reason


def test_t23_constants_refused(cone, quadratic):
    with pytest.warns(ab.HypothesisWarning):
        report = ab.verify_t23("linf", cone, quadratic, resolution=200)
    assert report.status == ab.REFUSED
    assert "constant" in report.reason


def test_t43_l1_recovers_chain(cone, quadratic):
    main = ab.verify_t43(cone, "lp:p=1", (1.0,), quadratic, resolution=2000)
    assert main.rhs == pytest.approx(2 / 3, rel=1e-4)
    assert main.status == ab.PASS
    assert ab.verify_t43(cone, "lp:p=1", (1.0,), quadratic, "emb1",
                         resolution=2000).status == ab.PASS
    with pytest.warns(ab.HypothesisWarning):
        refused = ab.verify_t43(cone, "lp:p=1", (1.0,), quadratic, "emb2", resolution=200)
    assert refused.status == ab.REFUSED


@pytest.mark.parametrize("A, p_vec, case_id", [
    ((1.0, 1.0), (1.0, 1.0), "P44.i"),
    ((2.0,), (3.0,), "P44.ii"),
    ((0.0,), (2.0,), "P44.iii")])
def test_p44_routing(A, p_vec, case_id):
    f = ab.Cone(n=len(A))
    report = ab.verify_p44(f, p_vec, A, resolution=16 if len(A) == 2 else 500,
                           stability=False)
    assert report.case_id == case_id
    assert np.isfinite(report.ratio)


def test_p44_supercritical_cone(cone, lebesgue):
    report = ab.verify_p44(cone, (2.0,), lebesgue, resolution=2000)
    assert report.lhs == pytest.approx(1.0, rel=1e-3)
    assert report.rhs == pytest.approx(np.sqrt(2.0) + 0.75, rel=1e-3)


def test_trudinger(cone, quadratic):
    main, ordering = ab.verify_trudinger(cone, quadratic, (3.0,), resolution=2000)
    assert main.case_id == "Trudinger"
    assert np.isfinite(main.ratio) and main.ratio > 0
    assert 0 < main.worst_t <= 2 / 3
    assert np.isfinite(ordering.ratio)


def test_trudinger_refused_off_critical(cone, quadratic):
    with pytest.warns(ab.HypothesisWarning):
        main, ordering = ab.verify_trudinger(cone, quadratic, (1.0,), resolution=200)
    assert main.status == ordering.status == ab.REFUSED
    assert "D = " in main.reason


def test_t46_angle_space(cone, lebesgue):
    angle = ab.verify_t46(cone, "lp:p=3", (1.0,), lebesgue, resolution=2000)
    assert angle.status == ab.PASS
    bounded = ab.verify_t46(cone, "lp:p=3", (1.0,), lebesgue, "ii", resolution=2000)
    assert np.isfinite(bounded.ratio)


def test_t46_unbounded_average_refused(cone, lebesgue):
    with pytest.warns(ab.HypothesisWarning):
        report = ab.verify_t46(cone, "lp:p=1", (1.0,), lebesgue, resolution=200)
    assert report.status == ab.REFUSED


def test_t47_remaining_case(cone, quadratic):
    main, remaining = ab.verify_lorentz_corollary(cone, quadratic, (3.0,), resolution=2000)
    assert main.case_id == "T47.lorentz.main"
    assert remaining.case_id == "T47.lorentz.iii"
    assert np.isfinite(main.ratio) and np.isfinite(remaining.ratio)
    assert remaining.status != ab.REFUSED


def test_t47_sobolev_branch(cone, quadratic):
    rows = ab.verify_t47(cone, quadratic, (2.0,), (2.0,), "log(1)", resolution=2000)
    assert [r.case_id for r in rows] == ["T47.lorentz.main", "T47.lorentz.i"]
    assert all(np.isfinite(r.ratio) for r in rows)


def test_t47_zygmund_corollary(cone, quadratic):
    rows = ab.verify_lorentz_zygmund_corollary(cone, quadratic, (2.0,), alpha=1.0,
                                               resolution=500, stability=False)
    assert rows[0].params["weight"] == ab.log_weight(1.0).text


def test_t47_requires_bp_weight(cone, quadratic):
    with pytest.warns(ab.HypothesisWarning):
        rows = ab.verify_lorentz_corollary(cone, quadratic, (1.0,), resolution=200)
    assert all(r.status == ab.REFUSED for r in rows)
    assert "B_1" in rows[0].reason


def test_gamma_branch_i(cone, quadratic):
    main, branch = ab.verify_gamma(cone, quadratic, (2.0,), resolution=2000)
    assert (main.case_id, branch.case_id) == ("Gamma.main", "Gamma.i")
    assert main.status == ab.PASS
    assert np.isfinite(branch.ratio)


def test_gamma_inadmissible_weight(cone, quadratic):
    with pytest.warns(ab.HypothesisWarning):
        main, _ = ab.verify_gamma(cone, quadratic, (1.0,), resolution=200)
    assert main.status == ab.REFUSED
    assert "admissible" in main.reason


def test_ggamma_branch_ii(cone, quadratic):
    main, branch = ab.verify_ggamma(cone, quadratic, (2.0,), m=2.0, weight="pow(-1.5)",
                                    resolution=2000)
    assert (main.case_id, branch.case_id) == ("GGamma.main", "GGamma.ii")
    assert np.isfinite(main.ratio) and np.isfinite(branch.ratio)
    assert branch.lhs == pytest.approx(1.0, rel=1e-2)


def test_t43_bounded_branch(cone, quadratic):
    # the index 1/4 of L^4 sits below p_bar / D = 1/3
    main = ab.verify_t43(cone, "lp:p=4", (1.0,), quadratic, resolution=2000)
    assert main.case_id == "T43.Xq"
    assert np.isfinite(main.ratio) and main.ratio > 0
    bounded = ab.verify_t43(cone, "lp:p=4", (1.0,), quadratic, "emb2", resolution=2000)
    assert bounded.case_id == "T43.emb2"
    assert bounded.status == ab.PASS
    assert bounded.lhs == pytest.approx(1.0, rel=1e-2)
    with pytest.warns(ab.HypothesisWarning):
        refused = ab.verify_t43(cone, "lp:p=4", (1.0,), quadratic, "emb1", resolution=200)
    assert refused.status == ab.REFUSED
    assert "not above" in refused.reason


def test_trudinger_ordering(cone, quadratic):
    _, ordering = ab.verify_trudinger(cone, quadratic, (3.0,), resolution=2000)
    assert ordering.case_id == "Trudinger.ordering"
    assert ordering.status == ab.PASS
    # a decreasing f** gives at most (D-1)**(1/D)
    assert 0 < ordering.ratio <= 2 ** (1 / 3) * 1.01


def test_t46_embedding_branch(cone, quadratic):
    # the index 1/2 of L^2 sits above 1/D = 1/3
    embedding = ab.verify_t46(cone, "lp:p=2", (1.0,), quadratic, "i", resolution=2000)
    assert embedding.case_id == "T46.i"
    assert embedding.status == ab.PASS
    assert np.isfinite(embedding.ratio) and embedding.ratio > 0
    with pytest.warns(ab.HypothesisWarning):
        refused = ab.verify_t46(cone, "lp:p=2", (1.0,), quadratic, "ii", resolution=200)
    assert refused.status == ab.REFUSED
    assert "not below" in refused.reason


def test_t46_bounded_branch(cone, lebesgue):
    bounded = ab.verify_t46(cone, "lp:p=3", (1.0,), lebesgue, "ii", resolution=2000)
    assert bounded.case_id == "T46.ii"
    assert bounded.status == ab.PASS
    assert bounded.lhs == pytest.approx(1.0, rel=1e-2)


def test_gamma_remaining_case(cone, quadratic):
    # (beta + 1) / p_bar = 1/D with p_bar = 2 and beta = -1/3
    main, remaining = ab.verify_gamma(cone, quadratic, (2.0,), ab.power_weight(-1 / 3),
                                      resolution=2000)
    assert (main.case_id, remaining.case_id) == ("Gamma.main", "Gamma.iii")
    assert remaining.status == ab.PASS
    assert np.isfinite(remaining.ratio) and remaining.lhs > 0


def test_ggamma_remaining_case(cone, quadratic):
    # 1/p_bar + (beta + 1)/m = 1/D with p_bar = 3/2, m = 2 and beta = -5/3
    main, remaining = ab.verify_ggamma(cone, quadratic, (1.5,), m=2.0,
                                       weight=ab.power_weight(-5 / 3), resolution=2000)
    assert (main.case_id, remaining.case_id) == ("GGamma.main", "GGamma.iii")
    assert remaining.status == ab.PASS
    assert np.isfinite(remaining.ratio) and remaining.lhs > 0
