import json
import math

import pytest

import vlcrange


def test_default_bound_at_reference_point():
    p = vlcrange.SystemParameters()
    g = vlcrange.Geometry(2.0, 0.0)
    assert vlcrange.crlb_sqrt_legacy(p, g) == pytest.approx(0.2894580536511364577, rel=1e-12)
    assert vlcrange.crlb_sqrt(p, g) == pytest.approx(0.2895448587917327879, rel=1e-12)
    b = vlcrange.bound(p, g)
    assert b["crlb_sqrt"] ** 2 * b["fisher"] == pytest.approx(1.0, rel=1e-12)
    assert b["noise"]["var_floor"] == pytest.approx(1.358286900565235e-13, rel=1e-12)


def test_parameters_round_trip_and_overrides():
    p = vlcrange.SystemParameters({"P_t_W": "2.5", "B_MHz": "50"})
    assert p.P_t == 2.5
    assert p.get("B_MHz") == 5e7
    assert vlcrange.SystemParameters.from_json(p.to_json()) == p
    with pytest.raises(ValueError):
        vlcrange.SystemParameters({"S_cm2": "0"})
    with pytest.raises(ValueError):
        vlcrange.SystemParameters.from_json('{"colour": 1}')


def test_zero_power_gives_infinite_bound():
    p = vlcrange.SystemParameters({"P_t_W": "0"})
    assert math.isinf(vlcrange.crlb_sqrt(p, vlcrange.Geometry(2.0, 1.0)))


def test_m_opt_and_approximation():
    p = vlcrange.SystemParameters()
    g = vlcrange.Geometry(2.0, 1.0)
    m_opt, value, at_boundary = vlcrange.find_m_opt(p, g)
    assert m_opt == pytest.approx(15.9839, abs=1e-3)
    assert not at_boundary
    assert vlcrange.m_opt_approximation(g.angle) == pytest.approx(15.9813, abs=1e-3)
    with pytest.raises(ValueError):
        vlcrange.find_m_opt(p, vlcrange.Geometry(2.0, 0.0))


def test_monte_carlo_is_deterministic():
    p = vlcrange.SystemParameters({"P_t_W": "100"})
    g = vlcrange.Geometry(2.0, 1.0)
    a = vlcrange.monte_carlo(p, g, trials=500, seed=4, threads=1)
    b = vlcrange.monte_carlo(p, g, trials=500, seed=4, threads=2)
    assert a == b
    assert 0.8 < a["efficiency"] < 1.1


def test_sweep_and_cli():
    doc = json.loads(vlcrange.sweep_json(vlcrange.SystemParameters(), "fig3"))
    assert len(doc["values"]) == 121
    code, out, err = vlcrange.run_cli(["bound", "--h", "2", "--ell", "1"])
    assert code == 0
    assert json.loads(out)["bound"]["crlb_sqrt"] > 0
    code, _, err = vlcrange.run_cli(["bound", "--h", "oops"])
    assert code == 1 and err
