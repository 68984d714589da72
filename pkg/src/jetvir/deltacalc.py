"""The order-p jet delta kernel and its bilinear pair integrals.

The kernel in variables (x, y) is the finite sum

    K_p(x, y) = sum_{|m| <= p} ((-1)^{|m|} / m!) x^m d_m delta(y),

which reproduces the p-jet of a smearing function: integrating f(y) against
K_p(x, y) yields the degree-p Taylor truncation f(x)|_p.  The kernel is
asymmetric: K_p(y, x) is a different distribution.

Two layers are provided:

* ``smear``: single-kernel integrals, optionally with one derivative on the
  x or y argument.
* ``delta_pair_integral``: the bilinear integral of f(x) g(y) against a
  product [D1 K_p(x,y)] [D2 K_p(y,x)], evaluated by a fully symbolic oracle
  that expands both kernels, applies the derivative decorations termwise and
  pairs d_w delta against polynomials via
  integral P(u) d_w delta(u) du = (-1)^{|w|} d_w P(0).
* ``delta_pair_closed``: the three closed forms the pair integral reduces
  to; the oracle never consults them, so oracle-vs-closed comparison is an
  independent test.

Distributions never exist as runtime values; only the pairing rule is
implemented.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .exactpoly import Poly
from .jetsums import SumKind, sum_closed
from .multiindex import (
    MultiIndex,
    add as mi_add,
    enumerate_indices,
    factorial,
    norm,
    unit,
)


class Which(enum.Enum):
    NONE = "none"
    ON_X = "on_x"
    ON_Y = "on_y"


@dataclass(frozen=True)
class DerivSpec:
    """A derivative decoration on one kernel factor: none, or d/dx_mu,
    or d/dy_mu — x and y are the literal integration variables, regardless
    of the kernel's argument order."""
    which: Which = Which.NONE
    direction: int = 0

    @classmethod
    def none(cls) -> "DerivSpec":
        return cls(Which.NONE, 0)

    @classmethod
    def on_x(cls, mu: int) -> "DerivSpec":
        return cls(Which.ON_X, mu)

    @classmethod
    def on_y(cls, mu: int) -> "DerivSpec":
        return cls(Which.ON_Y, mu)


class SmearMode(enum.Enum):
    PLAIN = "plain"
    SHIFTED = "shifted"


def _check_deriv(deriv: DerivSpec, d: int) -> None:
    if deriv.which is not Which.NONE and not 0 <= deriv.direction < d:
        raise ValueError(f"derivative direction {deriv.direction} out of range for d={d}")


def shift_to_zero(f: Poly) -> Poly:
    """f minus its value at the origin (the shifted smearing function)."""
    return f - Poly.constant(f.dim, f.constant_term())


def smear(f: Poly, deriv: DerivSpec, d: int, p: int) -> Poly:
    """Integrate f(y) against [D K_p(x, y)] dy; returns a polynomial in x.

    plain -> f|_p;  d/dx_mu -> (d_mu f)|_p;  d/dy_mu -> -(d_mu f)|_p.
    """
    if f.dim != d:
        raise ValueError(f"smearing function has dimension {f.dim}, expected {d}")
    _check_deriv(deriv, d)
    if deriv.which is Which.NONE:
        return f.truncate(p)
    g = f.deriv(deriv.direction).truncate(p)
    return g if deriv.which is Which.ON_X else -g


# A kernel term: (rational coefficient, monomial exponent in the kernel's
# polynomial variable, derivative word on the delta of the other variable).
_KernelTerm = Tuple[Fraction, MultiIndex, MultiIndex]


def _kernel_terms(d: int, p: int, deriv: DerivSpec, poly_is_x: bool) -> List[_KernelTerm]:
    """Expand one decorated kernel factor termwise.

    ``poly_is_x`` selects the argument order: True for K_p(x, y) (monomials
    in x, delta in y), False for K_p(y, x).  The decoration either
    differentiates the monomial (when it targets the polynomial variable) or
    appends to the delta's derivative word (when it targets the delta
    variable).
    """
    _check_deriv(deriv, d)
    hits_poly = (deriv.which is Which.ON_X) == poly_is_x and deriv.which is not Which.NONE
    hits_delta = deriv.which is not Which.NONE and not hits_poly
    out: List[_KernelTerm] = []
    for m in enumerate_indices(d, p):
        coeff = Fraction((-1) ** norm(m), factorial(m))
        expo = m
        word = m
        if hits_poly:
            mu = deriv.direction
            if m[mu] == 0:
                continue
            coeff *= m[mu]
            expo = m[:mu] + (m[mu] - 1,) + m[mu + 1:]
        elif hits_delta:
            word = mi_add(m, unit(d, deriv.direction))
        out.append((coeff, expo, word))
    return out


def _pair_against_delta(f: Poly, expo: MultiIndex, word: MultiIndex) -> Fraction:
    """integral f(u) u^expo d_word delta(u) du = (-1)^{|word|} d_word [f u^expo](0).

    Since d_word[f u^expo](0) = word! * coeff_{word-expo}(f), no polynomial
    product is needed."""
    diff = tuple(w - e for w, e in zip(word, expo))
    if any(c < 0 for c in diff):
        return Fraction(0)
    c = f.coeff(diff)
    if c == 0:
        return Fraction(0)
    return Fraction((-1) ** norm(word)) * factorial(word) * c


def delta_pair_integral(
    f: Poly,
    g: Poly,
    d1: DerivSpec,
    d2: DerivSpec,
    modes: Tuple[SmearMode, SmearMode],
    d: int,
    p: int,
) -> Fraction:
    """Symbolic oracle for  iint f(x) g(y) [D1 K_p(x,y)] [D2 K_p(y,x)] dx dy.

    D1 decorates the first factor, D2 the second; both DerivSpecs refer to
    the literal variables x and y.  ``modes = (mode_f, mode_g)`` selects
    plain or shifted smearing per slot; shifted slots are shifted here.
    """
    if f.dim != d or g.dim != d:
        raise ValueError("smearing functions must have dimension d")
    ff = shift_to_zero(f) if modes[0] is SmearMode.SHIFTED else f
    gg = shift_to_zero(g) if modes[1] is SmearMode.SHIFTED else g
    terms1 = _kernel_terms(d, p, d1, poly_is_x=True)
    terms2 = _kernel_terms(d, p, d2, poly_is_x=False)
    total = Fraction(0)
    for c1, e1, w1 in terms1:
        for c2, e2, w2 in terms2:
            # x-integral pairs f x^{e1} against d_{w2} delta(x);
            # y-integral pairs g y^{e2} against d_{w1} delta(y).
            ix = _pair_against_delta(ff, e1, w2)
            if ix == 0:
                continue
            iy = _pair_against_delta(gg, e2, w1)
            if iy == 0:
                continue
            total += c1 * c2 * ix * iy
    return total


def delta_pair_closed(
    case: str,
    f: Poly,
    g: Poly,
    mu: Optional[int],
    nu: Optional[int],
    d: int,
    p: int,
) -> Fraction:
    """The closed forms of the three pair integrals:

    case "i"   (no derivatives, plain/plain):
        A_{d,p} f(0) g(0)
    case "ii"  (d/dx_mu on the first factor, f shifted):
        B_{d,p} d_mu f(0) g(0)
    case "iii" (d/dx_mu on factor one, d/dy_nu on factor two, both shifted):
        E_{d,p} d_nu f(0) d_mu g(0) + D_{d,p} d_mu f(0) d_nu g(0),
    where the covariant combination is valid for mu = nu as well (it reduces
    to (E + D) d_mu f(0) d_mu g(0), the single-direction square sum).

    Shifting is enforced internally for cases ii and iii; the derivative at
    the origin is unchanged by it, which is exactly why the closed forms
    hold only for shifted slots.
    """
    if f.dim != d or g.dim != d:
        raise ValueError("smearing functions must have dimension d")
    import math

    if case == "i":
        return sum_closed(SumKind.A, d, p) * f.constant_term() * g.constant_term()
    if case == "ii":
        if mu is None or not 0 <= mu < d:
            raise ValueError("case ii needs a direction mu")
        ff = shift_to_zero(f)
        return (
            sum_closed(SumKind.B, d, p, mu)
            * ff.deriv(mu).constant_term()
            * g.constant_term()
        )
    if case == "iii":
        if mu is None or nu is None or not (0 <= mu < d and 0 <= nu < d):
            raise ValueError("case iii needs directions mu and nu")
        ff = shift_to_zero(f)
        gg = shift_to_zero(g)
        e_sum = math.comb(d + p + 1, d + 2)
        d_sum = math.comb(d + p, d + 2)
        return (
            e_sum * ff.deriv(nu).constant_term() * gg.deriv(mu).constant_term()
            + d_sum * ff.deriv(mu).constant_term() * gg.deriv(nu).constant_term()
        )
    raise ValueError(f"unknown case {case!r}; expected 'i', 'ii' or 'iii'")
