import numpy as np
import pytest
import anisobolev as ab


def test_poincare_cone(cone, quadratic):
    report = ab.verify_t32(cone, quadratic, "i")
    assert report.lhs == pytest.approx((32 / 315) ** (2 / 3), rel=1e-3)
    assert report.rhs == pytest.approx(2 / 3, rel=1e-4)
    assert report.ratio == pytest.approx(0.3266, rel=1e-3)
    assert report.status == ab.PASS
    assert report.stability < ab.options.STABILITY_TOL


def test_single_factor_product_is_sum(cone, quadratic):
    first = ab.verify_t32(cone, quadratic, "i", resolution=2000, stability=False)
    second = ab.verify_t32(cone, quadratic, "ii", resolution=2000, stability=False)
    assert second.lhs == first.lhs
    assert second.rhs == pytest.approx(first.rhs, rel=1e-12)


def test_zero_field_passes(quadratic):
    f = ab.CallableField(lambda x: np.zeros(len(x)), ab.BoxDomain((-1.0,), (1.0,)),
                         lambda x: np.zeros(x.shape))
    for case in ("i", "ii", "iii", "iv", "v"):
        report = ab.verify_t32(f, quadratic, case, resolution=100)
        assert (report.lhs, report.rhs, report.status) == (0.0, 0.0, ab.PASS)


def test_lorentz_identity(cone, quadratic):
    report = ab.verify_t32(cone, quadratic, "identity")
    assert report.ratio == pytest.approx(1.0, rel=1e-2)


def test_lorentz_embedding(cone, quadratic):
    report = ab.verify_t32(cone, quadratic, "embedding", resolution=2000)
    assert 0 < report.ratio <= 2 / 3 + 1e-9
    # L^{3/2} against L^{3/2,1} of 1 - (3t/2)**(1/3)
    exact = ab.verify_t32(cone, quadratic, "embedding")
    assert exact.lhs == pytest.approx((32 / 315) ** (2 / 3), rel=2e-3)
    assert exact.rhs == pytest.approx(1.5 ** (1 / 3) / 3, rel=2e-3)
    assert exact.status == ab.PASS


def test_lorentz_dominates_lebesgue(cone, quadratic):
    lebesgue = ab.verify_t32(cone, quadratic, "ii", resolution=2000, stability=False)
    lorentz = ab.verify_t32(cone, quadratic, "v", resolution=2000, stability=False)
    assert lorentz.lhs >= lebesgue.lhs
    assert lorentz.rhs == pytest.approx(lebesgue.rhs)


def test_lorentz_refused_in_dimension_one(cone, lebesgue):
    with pytest.warns(ab.HypothesisWarning):
        report = ab.verify_t32(cone, lebesgue, "v", resolution=200)
    assert report.status == ab.REFUSED
    assert "D = 1" in report.reason


def test_poincare_dimension_one_uses_sup(cone, lebesgue):
    report = ab.verify_t32(cone, lebesgue, "i", resolution=2000)
    assert report.lhs == pytest.approx(1.0, rel=1e-3)
    assert report.rhs == pytest.approx(2.0, rel=1e-6)


def test_talenti_bands(cone, quadratic):
    report = ab.verify_t32(cone, quadratic, "iii")
    assert 0.1 < report.ratio < 0.6
    assert report.worst_t > 0
    assert report.status != ab.ANOMALY


@pytest.mark.parametrize("p", [1.0, 2.0])
def test_oscillation_cumulative(cone, quadratic, p):
    report = ab.verify_t32(cone, quadratic, "iv", p=p)
    assert np.isfinite(report.ratio)
    assert report.ratio > 0
    assert not np.isnan(report.worst_t)
    assert report.params == {"p": p}


def test_oscillation_rejects_small_p(cone, quadratic):
    with pytest.raises(ValueError):
        ab.verify_t32(cone, quadratic, "iv", p=0.5)


def test_truncation(cone, quadratic):
    report = ab.verify_t32(cone, quadratic, "truncation", resolution=2000)
    assert np.isfinite(report.ratio)
    assert report.status != ab.ANOMALY


def test_truncation_lebesgue_cone(cone, lebesgue):
    # t2 - t1 against the band mass 2 (t2 - t1) for every pair of levels
    report = ab.verify_t32(cone, lebesgue, "truncation", resolution=2000)
    assert report.ratio == pytest.approx(0.5, rel=2e-2)
    assert report.status == ab.PASS


def test_chain_on_family(family):
    w = ab.MonomialWeight((1.0, 0.0))
    for case in ("i", "ii", "v", "identity"):
        report = ab.verify_t32(family, w, case, resolution=48)
        assert np.isfinite(report.ratio)
        assert report.status != ab.ANOMALY


def test_ratio_is_homogeneous(quadratic):
    small = ab.verify_t32(ab.Cone(n=1), quadratic, "ii", resolution=2000, stability=False)
    large = ab.verify_t32(ab.Cone(n=1, amplitude=2.0), quadratic, "ii", resolution=2000,
                          stability=False)
    assert large.ratio == pytest.approx(small.ratio, rel=1e-9)


def test_pointwise_rows(cone, quadratic):
    rows = ab.verify_pointwise_oscillation(cone, quadratic, resolution=2000)
    assert [r.case_id for r in rows] == ["R99.pointwise", "R77.gradient", "R77.chain"]
    assert all(np.isfinite(r.ratio) for r in rows)
    assert rows[2].ratio <= 1 + 1e-9


def test_pointwise_plateau():
    f, w = ab.Plateau(n=2), ab.MonomialWeight((0.0, 0.0))
    rows = ab.verify_pointwise_oscillation(f, w, resolution=64, stability=False)
    assert all(r.status == ab.PASS for r in rows)
    assert rows[2].ratio <= 1 + 1e-9


def test_report_row(cone, quadratic):
    report = ab.verify_t32(cone, quadratic, "ii", resolution=500)
    row = report.as_dict()
    assert list(row) == list(ab.VerificationReport.columns)
    assert row["anchor"] == ab.ANCHORS["T32.ii"]
    assert row["resolution"] == (500, 1000)
    assert row["family"] == "cone"


def test_unknown_case(cone, quadratic):
    with pytest.raises(ValueError, match="Accepted values"):
        ab.verify_case("T32.vi", cone, quadratic)


def test_every_case_is_registered():
    from anisobolev.inequalities.base import EVALUATORS

    assert set(EVALUATORS) == set(ab.CASE_IDS)
