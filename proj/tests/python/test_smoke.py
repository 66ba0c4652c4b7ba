import math

import lcbv


def test_constants_map():
    abar, bbar, cbar = lcbv.constants_map(2.0, -4.0, 8.0)
    assert abar == 3.0
    assert bbar == -18.0
    assert cbar == 18.0


def test_critical_bulk():
    a_c, s_plus = lcbv.critical_bulk(-0.64e6, 0.35e6)
    assert abs(s_plus - (2 * 0.64e6) / (3 * 0.35e6)) < 1e-9
    assert abs(lcbv.bulk_sigma(s_plus, a_c, -0.64e6, 0.35e6)) < 1e-3 * a_c


def test_decompose_round_trip():
    q = lcbv.make_uniaxial(1.3, [0.0, 0.0, 1.0])
    d = lcbv.decompose(q)
    assert abs(d["s1"] - 1.3) < 1e-12
    assert abs(d["s2"]) < 1e-12
    assert abs(abs(d["n1"][2]) - 1.0) < 1e-12


def test_hedgehog():
    h = lcbv.hedgehog(2.0, 3)
    assert abs(h["energy_formula"] - 6 * math.pi) < 1e-12
    assert h["energy_formula"] < h["sobolev_energy"]


def test_cuboid():
    k_star = math.pi**2 / 4
    assert lcbv.cuboid_minimizer(2 * k_star, 1.0, 0.5, 0.5)["branch"] == "smooth"
    assert lcbv.cuboid_minimizer(k_star / 2, 1.0, 0.5, 0.5)["branch"] == "jump"


def test_cholesteric():
    p = lcbv.cholesteric_profile(0.0, steps=256)
    assert abs(p["D"] - math.pi**2 / 4) < 1e-10
    assert abs(p["theta"][-1] - math.pi / 2) < 1e-8


def test_mm1d():
    r = lcbv.modica_mortola_1d(0.05, 513)
    c = 2 * math.sqrt(2.0 / 3.0) / 6.0
    assert r["energy"] >= c - 1e-6
    assert r["energy"] < 1.5 * c


def test_comb_defect():
    r = lcbv.comb_defect(32, 2)
    assert r["orientable"]
    assert r["jump_facets"] == 0
    assert not lcbv.comb_defect(32, 1)["orientable"]
