import math

import pytest

import apollonius as ap


def test_power_and_radical_axis():
    g = ap.Circle((0, 0), 2)
    assert ap.power(g, (3, 0)) == 5.0
    axis = ap.radical_axis(ap.Circle((0, 0), 2), ap.Circle((6, 0), 1))
    assert tuple(axis.normal) == pytest.approx((1.0, 0.0))
    assert axis.offset == pytest.approx(3.25)


def test_generalized_locus_ratio_two():
    locus = ap.generalized_locus(ap.Circle((0, 0), 1), ap.Circle((3, 0), 1), 2)
    assert locus.kind == "circle"
    c = locus.geometry
    assert tuple(c.center) == pytest.approx((6.0, 0.0))
    assert c.radius == pytest.approx(math.sqrt(19))


def test_thresholds_and_classify():
    c1, c2 = ap.Circle((0, 0), 1), ap.Circle((4, 0), 1)
    kind, k_minus, k_plus = ap.k_thresholds(c1, c2)
    assert kind == "two"
    assert k_minus * k_plus == pytest.approx(1.0)
    assert ap.classify(c1, c2, -1) == "empty"
    assert ap.classify(c1, c2, ap.PowerRatio(1, 1)) == "line"


def test_classic_and_lemoine():
    locus = ap.classic_apollonius((0, 3), (0, 0), (4, 0))
    assert tuple(locus.geometry.center) == pytest.approx((-2.25, 0.0))
    data = ap.lemoine_data((0, 3), (0, 0), (4, 0))
    assert tuple(data["o"]) == pytest.approx((2.0, 1.5))


def test_triple_operations():
    radii_123 = (ap.Circle((0, 0), 1), ap.Circle((5, 0), 2), ap.Circle((1, 4), 3))
    assert ap.menelaus_product(*radii_123) == pytest.approx(23 / 16, abs=1e-12)
    assert not ap.collinearity_predicate(*radii_123)
    equal = (ap.Circle((0, 0), 2), ap.Circle((5, 0), 2), ap.Circle((1, 4), 2))
    axes, o = ap.k_radical_axes(*equal)
    assert tuple(o) == pytest.approx((2.5, 1.5))
    assert ap.circumcenter_power(*equal, 1) == pytest.approx(4.5)


def test_errors_carry_codes():
    with pytest.raises(ap.GeometryError) as err:
        ap.circumcircle((0, 0), (1, 1), (2, 2))
    assert err.value.code == "collinear input"
    with pytest.raises(ap.SceneError) as err:
        ap.run_scene("circle G1 0 0 1\ncircle G1 1 0 1\n")
    assert err.value.line == 2


def test_scene_and_oracle():
    report, svg = ap.run_scene("circle G1 0 0 1\ncircle G2 3 0 1\nquery locus G1 G2 2\n", svg=True)
    assert report == "locus: circle center=(6.000000000, 0.000000000) r=4.358898944\n"
    assert svg.count("<circle") == 3
    hits = ap.grid_scan(ap.Circle((0, 0), 1), ap.Circle((3, 0), 1), 2, -12, 12, -12, 12, 0.1)
    fitted, rms = ap.fit_circle(hits)
    assert tuple(fitted.center) == pytest.approx((6.0, 0.0), abs=1e-4)


def test_selftest_passes():
    ok, text = ap.selftest(0)
    assert ok
    assert text == ap.selftest(0)[1]
