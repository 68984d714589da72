import random
from fractions import Fraction

from jetvir.deltacalc import (
    DerivSpec,
    SmearMode,
    delta_pair_closed,
    delta_pair_integral,
    shift_to_zero,
    smear,
)
from jetvir.exactpoly import Poly, parse_poly
from jetvir.multiindex import enumerate_indices

PLAIN = (SmearMode.PLAIN, SmearMode.PLAIN)
SHIFT_PLAIN = (SmearMode.SHIFTED, SmearMode.PLAIN)
SHIFT_SHIFT = (SmearMode.SHIFTED, SmearMode.SHIFTED)


def _rand_poly(d, deg, rng):
    terms = {}
    for e in enumerate_indices(d, deg):
        if rng.random() < 0.6:
            terms[e] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return Poly(d, terms)


def test_smear_examples():
    assert smear(parse_poly("x0^3", 1), DerivSpec.none(), 1, 2).is_zero()
    assert smear(parse_poly("x0^2", 1), DerivSpec.on_x(0), 1, 2) == \
        parse_poly("2 x0", 1)
    assert smear(parse_poly("x0", 1), DerivSpec.on_y(0), 1, 0) == \
        Poly.constant(1, -1)


def test_smear_plain_is_idempotent():
    rng = random.Random(1)
    for d in (1, 2):
        for p in (0, 1, 3):
            f = _rand_poly(d, p + 3, rng)
            once = smear(f, DerivSpec.none(), d, p)
            assert smear(once, DerivSpec.none(), d, p) == once


def test_pair_integral_examples():
    one = Poly.constant(1, 1)
    x = parse_poly("x0", 1)
    assert delta_pair_integral(one, one, DerivSpec.none(), DerivSpec.none(),
                               PLAIN, 1, 2) == 3
    assert delta_pair_integral(x, one, DerivSpec.on_x(0), DerivSpec.none(),
                               SHIFT_PLAIN, 1, 2) == 3
    assert delta_pair_integral(x, x, DerivSpec.on_x(0), DerivSpec.on_y(0),
                               SHIFT_SHIFT, 1, 1) == 1


def test_pair_closed_examples():
    assert delta_pair_closed("i", Poly.constant(2, 2), Poly.constant(2, 3),
                             None, None, 2, 1) == 18
    assert delta_pair_closed("ii", parse_poly("x0", 2), Poly.constant(2, 1),
                             0, None, 2, 2) == 4
    assert delta_pair_closed("iii", parse_poly("x1", 2), parse_poly("x0", 2),
                             0, 1, 2, 2) == 5


def test_oracle_matches_closed_forms():
    rng = random.Random(42)
    for d in (1, 2, 3):
        for p in (0, 2, 4):
            for _ in range(3):
                f = _rand_poly(d, p + 2, rng)
                g = _rand_poly(d, p + 2, rng)
                assert delta_pair_integral(
                    f, g, DerivSpec.none(), DerivSpec.none(), PLAIN, d, p
                ) == delta_pair_closed("i", f, g, None, None, d, p)
                for mu in range(d):
                    assert delta_pair_integral(
                        f, g, DerivSpec.on_x(mu), DerivSpec.none(),
                        SHIFT_PLAIN, d, p
                    ) == delta_pair_closed("ii", f, g, mu, None, d, p)
                    for nu in range(d):
                        assert delta_pair_integral(
                            f, g, DerivSpec.on_x(mu), DerivSpec.on_y(nu),
                            SHIFT_SHIFT, d, p
                        ) == delta_pair_closed("iii", f, g, mu, nu, d, p)


def test_kernel_asymmetry():
    # Swapping the derivative decoration between the two kernel factors
    # changes the value: the kernel is not symmetric in its arguments.
    f = Poly.constant(1, 1)
    g = parse_poly("x0", 1)
    a = delta_pair_integral(f, g, DerivSpec.on_x(0), DerivSpec.none(),
                            PLAIN, 1, 2)
    b = delta_pair_integral(f, g, DerivSpec.none(), DerivSpec.on_x(0),
                            PLAIN, 1, 2)
    assert a == 3 and b == -3


def test_shifted_slot_kills_constant():
    one = Poly.constant(1, 1)
    g = parse_poly("1 + x0", 1)
    assert delta_pair_integral(one, g, DerivSpec.on_x(0), DerivSpec.none(),
                               SHIFT_PLAIN, 1, 3) == 0
    assert delta_pair_closed("ii", one, g, 0, None, 1, 3) == 0


def test_shift_to_zero():
    f = parse_poly("3 + x0", 1)
    assert shift_to_zero(f) == parse_poly("x0", 1)
