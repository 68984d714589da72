import math

import pytest

from jetvir.multiindex import (
    add,
    binomial,
    enumerate_indices,
    factorial,
    lattice_size,
    norm,
    sub,
    unit,
)


def test_add():
    assert add((1, 0), (0, 2)) == (1, 2)
    assert add((0, 0), (3, 1)) == (3, 1)
    assert add((2, 1), (1, 1)) == (3, 2)
    assert norm(add((2, 1), (1, 1))) == norm((2, 1)) + norm((1, 1))


def test_add_dimension_mismatch():
    with pytest.raises(ValueError):
        add((1, 0), (1, 0, 0))


def test_sub():
    assert sub((3, 2), (1, 2)) == (2, 0)
    with pytest.raises(ValueError):
        sub((1, 0), (0, 2))


def test_factorial():
    assert factorial((0, 0)) == 1
    assert factorial((3, 2)) == 12
    assert factorial((1, 1, 1)) == 1


def test_binomial():
    assert binomial((2, 1), (1, 1)) == 2
    assert binomial((4, 3), (4, 3)) == 1
    assert binomial((1, 0), (0, 2)) == 0  # zero-extension
    assert binomial((5,), (2,)) == 10


def test_enumerate_order_and_size():
    assert enumerate_indices(2, 2) == (
        (0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)
    )
    for d in range(1, 5):
        for p in range(0, 6):
            seq = enumerate_indices(d, p)
            assert len(seq) == lattice_size(d, p) == math.comb(d + p, d)
            assert len(set(seq)) == len(seq)
            grades = [norm(m) for m in seq]
            assert grades == sorted(grades)


def test_enumerate_bad_inputs():
    with pytest.raises(ValueError):
        enumerate_indices(0, 2)
    with pytest.raises(ValueError):
        enumerate_indices(2, -1)


def test_unit():
    assert unit(3, 1) == (0, 1, 0)
    with pytest.raises(ValueError):
        unit(2, 2)
