from fractions import Fraction

import pytest

import ec_riordan as ecr

E1 = ecr.Curve(-1, -2, -1)


def test_curve_basics():
    assert E1.discriminant == -116
    assert isinstance(E1.a, Fraction)
    assert ecr.Curve("1/2", 0, Fraction(-3, 4)).a == Fraction(1, 2)
    assert ecr.discriminant(0, 0, 0) == -27


def test_singular_curve_raises():
    with pytest.raises(ecr.EcrError) as info:
        ecr.Curve(1, -2, -1)
    assert info.value.code == "SingularCurve"
    assert isinstance(info.value, ValueError)


def test_floats_are_refused():
    with pytest.raises(TypeError):
        ecr.Curve(1.0, 0, 0)


def test_series():
    g = ecr.derive_g(E1, 13)
    assert g == [1, -1, 3, -8, 22, -59, 155, -396, 978, -2310, 5122, -10260, 16752]
    assert ecr.closed_form_g(E1, 13) == g
    assert ecr.derive_gamma(E1, 6) == [1, 1, 3, 6, 14, 33]
    assert ecr.binomial_transform(g, 2)[:6] == [1, 1, 3, 6, 14, 33]
    assert ecr.u_n(E1, 5) == -59
    assert ecr.revert([0, 1, -1, 0, 0, 0]) == [0, 1, 1, 2, 5, 14]


def test_hankel_and_somos():
    h = ecr.hankel_transform(ecr.derive_g(E1, 24), 11)
    assert h == [1, 2, 1, -7, -16, -57, -113, 670, 3983, 23647, 140576]
    assert ecr.somos_params(E1) == (1, -2)
    assert ecr.somos_verify(h, 1, -2)["pass"]
    assert ecr.eds(E1, 6) == [0, 1, -1, 2, -1, -7, 16]


def test_points_and_jfraction():
    pts, torsion = ecr.point_multiples(E1, 5)
    assert torsion is None
    assert pts[4] == (Fraction(16, 49), Fraction(-169, 343))
    b, lam = ecr.jfrac_from_points(E1, 0, 6)
    assert lam[0] == 2
    assert ecr.jfrac_eval(b, lam, 12) == ecr.derive_g(E1, 12)
    _, torsion = ecr.point_multiples(ecr.Curve(-1, 0, -1), 10)
    assert torsion == 3


def test_paths():
    steps, override = ecr.stepset_for_g(E1)
    assert override == -1
    rows = ecr.dp_count(steps, 6, override)
    assert rows[5] == [-59, 69, -43, 18, -5, 1]
    assert ecr.brute_force_count(steps, 5, 1, override) == 69
    g = ecr.derive_g(E1, 8)
    assert ecr.riordan_rows(g, [0] + g[:-1], 6) == rows


def test_pseudo_involution_and_fixtures():
    gam = ecr.derive_gamma(ecr.Curve(-1, 0, -1), 14)
    assert ecr.pseudo_involution_check(gam, 12)
    assert ecr.oeis_fixture("A023431")[:11] == gam[:11]
    assert ecr.oeis_fixture("A999999") is None


def test_full_verify():
    report = ecr.full_verify(E1, 16)
    assert report["pass"] is True
    assert {c["name"] for c in report["checks"]} >= {"somos_hankel", "eds_hankel_alignment"}
