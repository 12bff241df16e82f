"""Smoke tests for the python bindings."""
import math
from fractions import Fraction

import pytest

import wheelzeta as wz


def test_version():
    assert wz.__version__ == "0.1.0"


def test_catalan_and_binomial():
    assert wz.catalan(10) == 16796
    assert wz.binomial(20, 10) == 184756
    assert wz.factorial(8) == 40320


def test_pattern_and_reflect():
    assert not wz.contains_forbidden_pattern([1, 2, 3])
    assert wz.contains_forbidden_pattern([2, 3, 1])
    assert wz.reflect([4, 2, 1, 3, 5]) == [2, 4, 5, 3, 1]
    assert sum(1 for s in wz.permutations(4)
               if not wz.contains_forbidden_pattern(s)) == 14


def test_sector_evaluation():
    e = wz.n_sigma([2, 3, 1, 4])
    assert e["n_sigma"] == 4
    assert e["slopes"] == [2, -2, 0, 2]
    assert e["divisors"][-1] == 2
    assert wz.n_sigma([4, 2, 1, 3, 5])["n_sigma"] == 12


def test_class_table():
    t = wz.class_table(5)
    assert t["catalan"] == 42
    assert t["sum_check"]
    rows = {r["n_s"]: (r["size"], r["N"], r["avoiders"]) for r in t["rows"]}
    assert rows[1] == (16, 16, 16)
    assert rows[12] == (12, 1, 1)
    assert wz.closed_form_N(5, 8) == 4
    assert wz.closed_form_N(6, 16) is None
    assert wz.min_fraction(6) == (36, 72)


def test_s1_and_representative():
    assert len(wz.s1_generate(6)) == 32
    assert wz.min_class_representative(6) == [2, 4, 6, 1, 3, 5]


def test_residue():
    r = wz.wheel_residue(3)
    assert r["coefficient"] == Fraction(12)
    assert r["pi_power"] == 6
    assert r["zeta_argument"] == 3
    assert math.isclose(r["numeric"], 12 * math.pi**6 * wz.zeta_odd(3),
                        rel_tol=1e-12)
    with pytest.raises(ValueError):
        wz.wheel_residue(2)


def test_special_functions():
    assert math.isclose(wz.gegenbauer(2, 1.0, 1.0), 3.0)
    assert math.isclose(wz.polylog(1, 0.5), math.log(2), rel_tol=1e-12)
    assert math.isclose(wz.zeta_odd(3), 1.2020569031595943, rel_tol=1e-12)


def test_oracles():
    assert math.isclose(wz.quad_sector_integral([2, 1, 3], 1e-9),
                        wz.zeta_odd(5), rel_tol=1e-7)
    a = wz.mc_full_residue(100000, 42)
    b = wz.mc_full_residue(100000, 42)
    assert a["value"] == b["value"]
    assert math.isclose(wz.pl_series_residue(2, 10000),
                        12 * math.pi**6 * wz.zeta_odd(3), rel_tol=1e-6)
    assert math.isclose(wz.broadhurst_coeff(2, 1, 1.0), 0.5)
    assert math.isclose(wz.radial_kernel([1.0, 1.0], 1), 8.0)


def test_eir():
    s = wz.sextuplet(1, 1, 2)
    assert s["casimirs"] == [8, 0, 0]
    assert s["chi_zero"]["d"] == Fraction(0)
    assert s["intertwiner_orders"] == [1, 2, 2]
    assert wz.casimirs(1, 2, 3) == (20, 0, 0)
    assert wz.twist("2", "1/2", "1/2") == Fraction(1)
    d = wz.dual("1", "0", "0")
    assert d["d"] == Fraction(3)
    with pytest.raises(ValueError):
        wz.sextuplet(0, 0, 1)


def test_verify_fast():
    checks = wz.verify(L_max=4, level="fast")
    assert checks and all(c["pass"] for c in checks)
