from fractions import Fraction

import pytest

from jetvir.exactpoly import Poly, format_poly, parse_poly


def test_parse_basic():
    p = parse_poly("2 * x0^2 x1 - 1/3 * x1^3 + 4", 2)
    assert p.coeff((2, 1)) == 2
    assert p.coeff((0, 3)) == Fraction(-1, 3)
    assert p.coeff((0, 0)) == 4


def test_parse_single_variable_stem():
    z = parse_poly("z^-2 + 3 * z", 1, varname="z")
    assert z.coeff((-2,)) == 1
    assert z.coeff((1,)) == 3


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_poly("x5", 2)
    with pytest.raises(ValueError):
        parse_poly("y0", 2)


def test_format_round_trip():
    p = parse_poly("2 * x0^2 x1 - 1/3 * x1^3 + 4 - x0", 2)
    assert parse_poly(format_poly(p), 2) == p
    assert format_poly(Poly.zero(3)) == "0"


def test_arithmetic_ring_laws():
    f = parse_poly("x0^2 + x0 x1 - 2", 2)
    g = parse_poly("x0 + 3 x1", 2)
    h = parse_poly("1/2 * x1^2 - x0", 2)
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert f - f == Poly.zero(2)
    assert (f * g).eval([1, 2]) == f.eval([1, 2]) * g.eval([1, 2])


def test_derivative_and_taylor():
    f = parse_poly("x0^3 x1 + 2 x1^2", 2)
    assert f.deriv(0) == parse_poly("3 x0^2 x1", 2)
    assert f.deriv_multi((3, 1)) == Poly.constant(2, 6)
    assert f.taylor_coeff((3, 1)) == 6
    assert f.taylor_coeff((0, 2)) == 4


def test_laurent_derivative():
    z = parse_poly("z^-2", 1, "z")
    assert z.deriv(0) == parse_poly("-2 z^-3", 1, "z")


def test_truncate():
    f = parse_poly("x0^3 + x0 x1 + 1", 2)
    assert f.truncate(2) == parse_poly("x0 x1 + 1", 2)
    with pytest.raises(ValueError):
        parse_poly("z^-1", 1, "z").truncate(2)


def test_composition():
    h = parse_poly("x0^2", 1)
    traj = [parse_poly("z + z^2", 1, "z")]
    assert h.compose_univariate(traj) == parse_poly("z^2 + 2 z^3 + z^4", 1, "z")


def test_composition_negative_power_needs_monomial():
    lz = parse_poly("x0^-1", 1)
    assert lz.compose_univariate([parse_poly("2 z", 1, "z")]) == \
        parse_poly("1/2 * z^-1", 1, "z")
    with pytest.raises(ValueError):
        lz.compose_univariate([parse_poly("z + 1", 1, "z")])


def test_degree_cap(monkeypatch):
    monkeypatch.setenv("JETVIR_MAX_DEGREE", "8")
    f = parse_poly("x0^5", 1)
    with pytest.raises(OverflowError):
        _ = f * f
    monkeypatch.setenv("JETVIR_MAX_DEGREE", "not-a-number")
    with pytest.raises(ValueError):
        _ = f * f
