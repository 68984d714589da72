from fractions import Fraction

import pytest

from jetvir.charges import (
    ChargeSet,
    GlRepTraces,
    GRepTraces,
    Statistics,
    closed_form,
    from_sl_gl1,
    kac_moody_level,
)


def test_closed_form_scalar_point():
    gl = from_sl_gl1(0, 0, 1, 1)
    gr = GRepTraces(1, 1, 0, 0, Statistics.BOSE)
    cs = closed_form(1, 0, 0, gl, gr)
    assert (cs.c1, cs.c2, cs.c3, cs.c4) == (1, 0, 1, 4)
    assert (cs.c5, cs.c6, cs.c7, cs.c8) == (-1, 0, 0, 0)


def test_closed_form_fermionic_flip():
    gl = from_sl_gl1(0, 0, 1, 1)
    gr = GRepTraces(1, 1, 0, 0, Statistics.FERMI)
    cs = closed_form(1, 0, 0, gl, gr)
    assert (cs.c1, cs.c2, cs.c3, cs.c4, cs.c5) == (1, 0, 1, 0, 1)


def test_lambda_half_kills_weighted_charges():
    gl = from_sl_gl1(2, 1, 3, 2)
    gr = GRepTraces(2, 1, 5, 1)
    cs = closed_form(2, 2, Fraction(1, 2), gl, gr)
    assert cs.c3 == 1
    assert cs.c6 == 0


def test_from_sl_gl1():
    gl = from_sl_gl1(0, 0, 1, 3)
    assert (gl.k0, gl.k1, gl.k2) == (0, 0, 0)
    gl = from_sl_gl1(1, 0, 1, 4)
    assert (gl.k0, gl.k1, gl.k2) == (1, 0, 1)
    gl = from_sl_gl1(Fraction(1, 2), 3, 2, 2)
    assert gl.k0 == 1
    assert gl.k1 == 3
    assert gl.k2 == Fraction(1, 2) * Fraction(1, 2) * 2 - Fraction(3, 2)


def test_kac_moody_level():
    assert kac_moody_level(0, 1, Statistics.BOSE) == -1
    assert kac_moody_level(3, 2, Statistics.FERMI) == 8
    assert kac_moody_level(5, 0, Statistics.BOSE) == 0


def test_level_is_d1_charge():
    for p in range(5):
        for stats in Statistics:
            gl = from_sl_gl1(0, 0, 1, 1)
            gr = GRepTraces(1, Fraction(7, 3), 0, 0, stats)
            assert closed_form(1, p, 0, gl, gr).c5 == \
                kac_moody_level(p, Fraction(7, 3), stats)


def test_linearity_in_internal_dimension():
    gl = from_sl_gl1(1, 2, 2, 2)
    vals = {}
    for dm in (1, 2, 4):
        gr = GRepTraces(dm, 1, 1, 1)
        cs = closed_form(2, 1, 0, gl, gr)
        vals[dm] = (cs.c1 - 1, cs.c2)
    assert vals[2] == (2 * vals[1][0], 2 * vals[1][1])
    assert vals[4] == (4 * vals[1][0], 4 * vals[1][1])


def test_integrality_on_integer_inputs():
    for d in (1, 2, 3):
        for p in (0, 1, 2):
            gl = from_sl_gl1(2, 3 * d, 2, d)  # y_rho multiple of d keeps k2 integral
            gr = GRepTraces(2, 3, 1, 5)
            cs = closed_form(d, p, 1, gl, gr)
            for value in cs.charges().values():
                assert value.denominator == 1


def test_json_round_trip():
    gl = from_sl_gl1(Fraction(-1, 2), 1, 2, 2)
    gr = GRepTraces(3, Fraction(2, 7), 1, Fraction(-5, 3), Statistics.FERMI)
    cs = closed_form(2, 3, Fraction(1, 2), gl, gr)
    text = cs.to_json()
    assert ChargeSet.from_json(text) == cs
    import json
    payload = json.loads(text)
    for value in payload["charges"].values():
        num, den = value.split("/")
        int(num), int(den)  # exact rational strings, never floats


def test_validation():
    with pytest.raises(ValueError):
        GlRepTraces(0, 0, 0, 0)
    with pytest.raises(ValueError):
        GRepTraces(0, 0, 0, 0)
    with pytest.raises(ValueError):
        closed_form(0, 0, 0, from_sl_gl1(0, 0, 1, 1), GRepTraces(1, 0, 0, 0))
