import math

import pytest

import ecdsystems as e

LAM = [0.8, 1.2, 1.3, 1.9]
MU = [0.5, 0.7, 1.5, 2.5]


def comps(alpha, beta, lambdas):
    return [(alpha, beta, lam) for lam in lambdas]


def test_params_validation():
    p = e.Params(0.7, 2.0, 0.8)
    assert (p.alpha, p.beta, p.lambda_) == (0.7, 2.0, 0.8)
    assert "Params" in repr(p)
    with pytest.raises(Exception):
        e.Params(-1.0, 2.0, 0.8)


def test_distribution_functions():
    p = e.Params(1.0, 1.0, 1.0)
    # closed form at the unit point: 1 - exp(1 - e)
    assert e.cdf(p, 1.0) == pytest.approx(-math.expm1(1.0 - math.e), rel=1e-12)
    assert e.cdf(p, 1.0) + e.sf(p, 1.0) == pytest.approx(1.0, abs=1e-12)
    assert math.exp(e.log_cdf(p, 1.0)) == pytest.approx(e.cdf(p, 1.0), rel=1e-12)
    assert math.exp(e.log_sf(p, 1.0)) == pytest.approx(e.sf(p, 1.0), rel=1e-12)
    assert e.hazard(p, 1.0) == pytest.approx(math.e, rel=1e-10)
    assert e.pdf(p, 1.0) == pytest.approx(e.hazard(p, 1.0) * e.sf(p, 1.0), rel=1e-10)


def test_quantile_roundtrip():
    p = e.Params(0.7, 2.0, 0.8)
    for u in (1e-6, 0.25, 0.5, 0.9, 1 - 1e-6):
        assert e.cdf(p, e.quantile(p, u)) == pytest.approx(u, abs=1e-10)


def test_system_sf_is_the_component_product():
    cs = comps(0.7, 2.0, LAM)
    x = 0.4
    manual = math.prod(e.sf(e.Params(*c), x) for c in cs)
    assert e.system_sf(cs, "series", x) == pytest.approx(manual, rel=1e-12)
    assert e.system_sf(cs, "series", x) == pytest.approx(0.2082, abs=5e-4)

    manual_cdf = math.prod(e.cdf(e.Params(*c), x) for c in cs)
    assert e.system_cdf(cs, "parallel", x) == pytest.approx(manual_cdf, rel=1e-12)


def test_order_check_direction():
    v = e.order_check(comps(0.7, 2.0, LAM), comps(0.7, 2.0, MU), "series", "st",
                      0.05, 2.0, 200)
    assert v["relation"] == "st"
    assert v["direction"] == "A_le_B"
    assert not v["degenerate_equal"]
    assert v["point_witnesses"] == []

    hr = e.order_check(comps(0.7, 2.0, LAM), comps(0.7, 2.0, MU), "series", "hr",
                       0.05, 2.0, 200)
    assert hr["direction"] == "Neither"
    assert len(hr["triple_witnesses"]) > 0
    x1, x2, x3 = hr["triple_witnesses"][0]["x"]
    assert x1 < x2 < x3


def test_sample_system_determinism():
    cs = comps(0.7, 2.0, LAM)
    a = e.sample_system(cs, "series", 1000, 7)
    b = e.sample_system(cs, "series", 1000, 7)
    assert a == b
    assert a != e.sample_system(cs, "series", 1000, 8)
    assert all(x > 0 for x in a)


def test_majorizes():
    assert e.majorizes(LAM, MU)
    assert not e.majorizes(MU, LAM)
    assert e.majorizes(MU, MU)
    assert not e.majorizes([1.0, 2.0], [1.0, 2.5])  # unequal totals
