"""Multi-index arithmetic and enumeration over the jet lattice {m : |m| <= p}.

A multi-index is a plain tuple of d non-negative integers.  It labels both
monomials x^m and partial derivatives d_m.  All operations are pure and use
Python's arbitrary-precision integers.
"""

from __future__ import annotations

import math
from typing import Iterator, Sequence, Tuple

MultiIndex = Tuple[int, ...]


def _check_index(m: Sequence[int]) -> MultiIndex:
    t = tuple(m)
    if any(not isinstance(c, int) or c < 0 for c in t):
        raise ValueError(f"multi-index components must be non-negative integers: {t}")
    return t


def _check_same_dim(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")


def norm(m: Sequence[int]) -> int:
    """Total degree |m|."""
    return sum(m)


def add(a: Sequence[int], b: Sequence[int]) -> MultiIndex:
    """Componentwise sum of two multi-indices of equal dimension."""
    _check_same_dim(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> MultiIndex:
    """Componentwise difference a - b; defined only when b <= a componentwise."""
    _check_same_dim(a, b)
    if any(y > x for x, y in zip(a, b)):
        raise ValueError(f"subtraction undefined: {tuple(b)} not <= {tuple(a)}")
    return tuple(x - y for x, y in zip(a, b))


def factorial(m: Sequence[int]) -> int:
    """m! = m0! * m1! * ... (empty product is 1)."""
    out = 1
    for c in m:
        out *= math.factorial(c)
    return out


def binomial(m: Sequence[int], n: Sequence[int]) -> int:
    """Componentwise product of scalar binomials binom(m_i, n_i).

    Zero-extended: returns 0 whenever any component of n exceeds the
    corresponding component of m (or is negative), so that expressions like
    binom(d+p, d+2) vanish gracefully for small p.
    """
    _check_same_dim(m, n)
    out = 1
    for mi, ni in zip(m, n):
        if ni < 0 or ni > mi:
            return 0
        out *= math.comb(mi, ni)
    return out


def unit(d: int, mu: int) -> MultiIndex:
    """The unit multi-index with a single 1 in direction mu."""
    if not 0 <= mu < d:
        raise ValueError(f"direction {mu} out of range for dimension {d}")
    return tuple(1 if i == mu else 0 for i in range(d))


def _compositions(total: int, parts: int) -> Iterator[MultiIndex]:
    """All ways to write `total` as an ordered sum of `parts` non-negative
    integers, first component decreasing (reverse-lexicographic order)."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_indices(d: int, p: int) -> Tuple[MultiIndex, ...]:
    """All multi-indices m with |m| <= p in graded order (by total degree,
    then first component decreasing).  Length is binom(d+p, d)."""
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if p < 0:
        raise ValueError(f"jet order must be >= 0, got {p}")
    out = []
    for t in range(p + 1):
        out.extend(_compositions(t, d))
    return tuple(out)


def lattice_size(d: int, p: int) -> int:
    """Number of multi-indices with |m| <= p, i.e. binom(d+p, d)."""
    return math.comb(d + p, d)
