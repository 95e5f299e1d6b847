from fractions import Fraction

import pytest

import hbmodel


def test_fixtures_validate():
    assert len(hbmodel.fixture_names()) == 6
    for name in hbmodel.fixture_names():
        checks = hbmodel.validate(hbmodel.fixture(name))
        assert all(c["passed"] for c in checks if c["name"] in ("d^2 = 0", "d_G^2 = 0"))


def test_broken_fixture_is_rejected():
    with pytest.raises(hbmodel.HbmError) as info:
        hbmodel.validate(hbmodel.fixture("broken-cartan"))
    assert info.value.kind == "InvalidComplex"
    assert "dmu" in str(info.value)


def test_poly_rot_workbench():
    wb = hbmodel.Workbench(hbmodel.fixture("poly-rot-2"), cap=10)
    assert wb.dhb_is_zero
    assert wb.extend("omega") == "omega + t⊗mu"
    minimal, cartan = wb.cohomology()
    assert minimal == cartan
    assert minimal[:4] == [1, 0, 3, 0]
    product = wb.product("omega", "omega")
    assert product["value"] == "2*t⊗mu_omega"
    assert product["weight_zero_matches"]
    assert all(c["passed"] for c in wb.identities(samples=5))


def test_free_rotation_and_su2():
    wb = hbmodel.Workbench(hbmodel.fixture("free-rotation"))
    assert wb.dhb()["dtheta"] == "-t⊗1"
    su2 = hbmodel.Workbench(hbmodel.fixture("su2-free"))
    assert su2.cohomology()[0] == [1] + [0] * 10
    with pytest.raises(hbmodel.HbmError) as info:
        su2.product("1", "1")
    assert info.value.kind == "NotAbelian"


def test_round_trip():
    for name, datum in hbmodel.variants()[:5]:
        assert hbmodel.parse_datum(datum.serialize()) == datum


def test_fixed_point_calculus():
    assert hbmodel.coefficients([-4, -1, 5]) == [0, 21, 20]
    assert hbmodel.relation(["-4", "-1", "5"]) == "w^3 = 21*w*t^2 + 20*t^3"
    assert hbmodel.moment_powers([-4, -1, 5], 2) == [1, 0, Fraction(7, 2)]
    assert hbmodel.volume([-4, -1, 5], [3, -2, 6]) == 9
    with pytest.raises(hbmodel.HbmError) as info:
        hbmodel.volume([-4, -1, 5], [4, -2, 6])
    assert info.value.kind == "InconsistentFixedPointData"
    r = hbmodel.cp2_weighted(1, 3, Fraction(3))
    assert r["area"] == 9 and r["passed"]
    assert r["coefficients"] == [0, 21, 20]


def test_cli_entry_point():
    code, out, _ = hbmodel.run_cli(["cpn-cp2", "--a", "1", "--b", "3", "--s", "3"])
    assert code == 0
    assert "relation: w^3 = 21*w*t^2 + 20*t^3" in out
