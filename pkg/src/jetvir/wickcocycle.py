"""Double Wick contractions of normal-ordered jet bilinears.

All generators of interest are normal-ordered bilinears in a momentum-type
field pi(x, z) and a position-type field phi(x, z) over the jet lattice:

    current:            J_X(z) = int :pi X^a(x + q(z)) M^a phi:
    vector field:       L_xi(z) = xi(q) p-sector
                                 + int :pi xi_0^mu d_mu phi:
                                 + int :pi d_nu xi^mu T^nu_mu phi:
    reparametrization:  T(z) = q-sector + (l-1) int :pi phi-dot:
                                        + l int :pi-dot phi:

The engine contracts two such bilinears pairwise using the free-field
propagator table (in which every contraction is a power of 1/(z-w) times a
jet delta kernel, possibly decorated by one spatial derivative), evaluates
the resulting bilinear delta-pair integrals with the exact symbolic oracle
of ``deltacalc``, multiplies by the trace of the matrix insertions
(expressed through the trace parameters of ``charges``), and accumulates an
exact pole expansion in (z - w).

The base-point (q, p) sector cannot be contracted field-wise; its two
closed-form contributions — the pole-2 term -d_nu xi^mu(0) d_mu eta^nu(0)
for a pair of vector-field generators and the pole-4 term d for a pair of
reparametrization generators, with the mixed pole-3 divergence term between
them — are added by rule.

Extensions are extracted at base point q = 0: the closed forms are local
polynomial expressions in derivatives of the input functions at q, so
equality at the origin for all polynomial inputs implies equality at all q.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .charges import GlRepTraces, GRepTraces, Statistics
from .deltacalc import DerivSpec, SmearMode, delta_pair_integral, shift_to_zero
from .exactpoly import Poly


class FieldKind(enum.Enum):
    PI = "pi"
    PHI = "phi"


@dataclass(frozen=True)
class FieldFactor:
    kind: FieldKind
    z_dots: int = 0
    spatial_deriv: Optional[int] = None  # direction; phi-kind only

    def __post_init__(self):
        if self.z_dots not in (0, 1):
            raise ValueError("at most one z-derivative per factor")
        if self.spatial_deriv is not None and self.kind is not FieldKind.PHI:
            raise ValueError("spatial derivatives are carried by phi factors only")


# Matrix insertions: ("I",) identity, ("T", nu, mu) gl generator acting on
# the rho factor, ("M", a) internal generator acting on the M factor.
Insertion = Tuple


@dataclass(frozen=True)
class Term:
    prefactor: Fraction
    coeff: Poly
    mode: SmearMode
    left: FieldFactor   # pi-kind
    insertion: Insertion
    right: FieldFactor  # phi-kind

    def __post_init__(self):
        if self.left.kind is not FieldKind.PI or self.right.kind is not FieldKind.PHI:
            raise ValueError("a term is one pi-kind factor times one phi-kind factor")


@dataclass(frozen=True)
class NormalBilinear:
    d: int
    p: int
    terms: Tuple[Term, ...]
    # base-point sector tag: None, ("L", xi components), or ("T",)
    q_sector: Optional[Tuple] = None


@dataclass
class PoleExpansion:
    """Map pole order -> exact rational coefficient of (z - w)^(-order)."""
    coefficients: Dict[int, Fraction] = field(default_factory=dict)

    def add(self, order: int, value: Fraction) -> None:
        if value == 0:
            return
        cur = self.coefficients.get(order, Fraction(0)) + value
        if cur == 0:
            self.coefficients.pop(order, None)
        else:
            self.coefficients[order] = cur

    def at(self, order: int) -> Fraction:
        return self.coefficients.get(order, Fraction(0))


# -- propagator table ----------------------------------------------------------

def propagator(a: FieldFactor, b: FieldFactor, statistics: Statistics
               ) -> Tuple[Fraction, int, str, DerivSpec]:
    """Contraction of factor ``a`` at (x, z) with factor ``b`` at (y, w).

    Returns (sign, pole_order, orientation, delta_decoration) where
    orientation "xy" means the kernel K_p(x, y) (monomials in the pi-side's
    monomial variable is x; concretely, the phi factor sits at x) and
    the decoration carries the phi factor's spatial derivative in its own
    variable.  The base contraction is phi(x,z) pi(y,w) ~ K_p(x,y)/(z-w);
    z- and w-derivatives generate the dotted rows, and exchanging the factor
    order costs the statistics sign and flips the kernel orientation.
    """
    if a.kind is b.kind:
        raise ValueError("contraction needs one pi-kind and one phi-kind factor")
    eps = statistics.sign
    if a.kind is FieldKind.PHI:
        phi = a
        orientation = "xy"
        base = Fraction(1)      # phi(x,z) pi(y,w) ~ +K_p(x,y)/(z-w)
    else:
        phi = b
        orientation = "yx"
        base = Fraction(-eps)   # pi(x,z) phi(y,w) ~ -eps K_p(y,x)/(z-w)
    # d_z^r d_w^s (z-w)^(-1) = (-1)^r (r+s)! (z-w)^(-(1+r+s)); the factor at
    # z is ``a``, so its dots carry the minus sign.
    total_dots = a.z_dots + b.z_dots
    sign = base * Fraction((-1) ** a.z_dots) * (2 if total_dots == 2 else 1)
    order = 1 + total_dots
    if phi.spatial_deriv is None:
        deco = DerivSpec.none()
    elif phi is a:
        deco = DerivSpec.on_x(phi.spatial_deriv)
    else:
        deco = DerivSpec.on_y(phi.spatial_deriv)
    return sign, order, orientation, deco


# -- traces --------------------------------------------------------------------

def trace_pair(ins_a: Insertion, ins_b: Insertion, glrep: GlRepTraces,
               grep: GRepTraces) -> Fraction:
    """Trace over the combined rho (x) M space of the product of two
    insertions, expressed through the trace parameters."""
    def split(ins):
        if ins[0] == "I":
            return None, None
        if ins[0] == "T":
            return ("T", ins[1], ins[2]), None
        if ins[0] == "M":
            return None, ins[1]
        raise ValueError(f"unknown insertion {ins!r}")

    ta, ma = split(ins_a)
    tb, mb = split(ins_b)
    # rho-factor trace
    if ta is None and tb is None:
        tr_rho = Fraction(glrep.delta_rho)
    elif ta is not None and tb is None:
        tr_rho = glrep.k0 if ta[1] == ta[2] else Fraction(0)
    elif ta is None and tb is not None:
        tr_rho = glrep.k0 if tb[1] == tb[2] else Fraction(0)
    else:
        # tr T^a_b T^c_d = k1 d^{a,d} d^{c,b} + k2 d^{a,b} d^{c,d}
        _, a_up, b_lo = ta
        _, c_up, d_lo = tb
        tr_rho = Fraction(0)
        if a_up == d_lo and c_up == b_lo:
            tr_rho += glrep.k1
        if a_up == b_lo and c_up == d_lo:
            tr_rho += glrep.k2
    if tr_rho == 0:
        return Fraction(0)
    # M-factor trace
    if ma is None and mb is None:
        tr_m = Fraction(grep.delta_m)
    elif ma is not None and mb is None:
        tr_m = grep.z_m if ma == 0 else Fraction(0)
    elif ma is None and mb is not None:
        tr_m = grep.z_m if mb == 0 else Fraction(0)
    else:
        tr_m = Fraction(0)
        if ma == mb:
            tr_m += grep.y_m
        if ma == 0 and mb == 0:
            tr_m += grep.w_m
    return tr_rho * tr_m


# -- base-point sector rules ----------------------------------------------------

def _divergence_at_zero(xi: Sequence[Poly]) -> Fraction:
    return sum((xi[mu].deriv(mu).constant_term() for mu in range(len(xi))),
               Fraction(0))


def _q_sector(a: NormalBilinear, b: NormalBilinear, pe: PoleExpansion) -> None:
    """Closed-form contributions of the base-point (q, p) contractions."""
    ta = a.q_sector
    tb = b.q_sector
    if ta is None or tb is None:
        return
    if ta[0] == "L" and tb[0] == "L":
        xi, eta = ta[1], tb[1]
        d = len(xi)
        val = Fraction(0)
        for mu in range(d):
            for nu in range(d):
                val += (xi[mu].deriv(nu).constant_term()
                        * eta[nu].deriv(mu).constant_term())
        pe.add(2, -val)
    elif ta[0] == "T" and tb[0] == "L":
        pe.add(3, _divergence_at_zero(tb[1]))
    elif ta[0] == "L" and tb[0] == "T":
        pe.add(3, -_divergence_at_zero(ta[1]))
    elif ta[0] == "T" and tb[0] == "T":
        pe.add(4, Fraction(a.d))


def double_contraction(a: NormalBilinear, b: NormalBilinear,
                       glrep: GlRepTraces, grep: GRepTraces) -> PoleExpansion:
    """Full double contraction of A(z) with B(w): field sector via the
    propagator table and the exact delta-pair oracle, base-point sector via
    the closed rules.  Returns the exact pole expansion in (z - w)."""
    if (a.d, a.p) != (b.d, b.p):
        raise ValueError("bilinears must share (d, p)")
    d, p = a.d, a.p
    stats = grep.statistics
    pe = PoleExpansion()
    for ta in a.terms:
        for tb in b.terms:
            # contract A's pi (at x) with B's phi (at y) ...
            s1, k1, o1, deco1 = propagator(ta.left, tb.right, stats)
            # ... and A's phi (at x) with B's pi (at y).
            s2, k2, o2, deco2 = propagator(ta.right, tb.left, stats)
            if o1 != "yx" or o2 != "xy":
                raise AssertionError("unexpected kernel orientation")
            integral = delta_pair_integral(
                ta.coeff, tb.coeff, deco2, deco1, (ta.mode, tb.mode), d, p
            )
            if integral == 0:
                continue
            tr = trace_pair(ta.insertion, tb.insertion, glrep, grep)
            if tr == 0:
                continue
            pe.add(k1 + k2, ta.prefactor * tb.prefactor * s1 * s2 * integral * tr)
    _q_sector(a, b, pe)
    if any(order > 4 for order in pe.coefficients):
        raise AssertionError("pole order above 4 should be impossible")
    return pe


# -- generator builders ----------------------------------------------------------

def _plain(kind: FieldKind, dots: int = 0, deriv: Optional[int] = None) -> FieldFactor:
    return FieldFactor(kind, dots, deriv)


def build_current(X: Sequence[Poly], d: int, p: int) -> NormalBilinear:
    """J_X with g-components X^a (a = 0 is the privileged trace direction)."""
    terms = []
    for a_idx, comp in enumerate(X):
        if comp.dim != d:
            raise ValueError("components must be polynomials in d variables")
        if comp.is_zero():
            continue
        terms.append(Term(Fraction(1), comp, SmearMode.PLAIN,
                          _plain(FieldKind.PI), ("M", a_idx), _plain(FieldKind.PHI)))
    return NormalBilinear(d, p, tuple(terms), q_sector=None)


def build_vector_field(xi: Sequence[Poly], d: int, p: int) -> NormalBilinear:
    """L_xi: shifted transport terms pi xi_0^mu d_mu phi, plain frame terms
    pi d_nu xi^mu T^nu_mu phi, plus the base-point tag."""
    if len(xi) != d or any(c.dim != d for c in xi):
        raise ValueError("vector field needs d polynomial components in d variables")
    terms: List[Term] = []
    for mu in range(d):
        if not shift_to_zero(xi[mu]).is_zero():
            terms.append(Term(Fraction(1), xi[mu], SmearMode.SHIFTED,
                              _plain(FieldKind.PI), ("I",),
                              _plain(FieldKind.PHI, deriv=mu)))
        for nu in range(d):
            dxi = xi[mu].deriv(nu)
            if not dxi.is_zero():
                terms.append(Term(Fraction(1), dxi, SmearMode.PLAIN,
                                  _plain(FieldKind.PI), ("T", nu, mu),
                                  _plain(FieldKind.PHI)))
    return NormalBilinear(d, p, tuple(terms), q_sector=("L", tuple(xi)))


def build_reparam(conformal_weight, d: int, p: int) -> NormalBilinear:
    """T(z) of weight lambda: (lambda-1) :pi phi-dot: + lambda :pi-dot phi:,
    plus the base-point tag."""
    lam = Fraction(conformal_weight)
    one = Poly.constant(d, 1)
    terms = []
    if lam != 1:
        terms.append(Term(lam - 1, one, SmearMode.PLAIN,
                          _plain(FieldKind.PI), ("I",),
                          _plain(FieldKind.PHI, dots=1)))
    if lam != 0:
        terms.append(Term(lam, one, SmearMode.PLAIN,
                          _plain(FieldKind.PI, dots=1), ("I",),
                          _plain(FieldKind.PHI)))
    return NormalBilinear(d, p, tuple(terms), q_sector=("T",))


def build_generator(kind: str, data, d: int, p: int) -> NormalBilinear:
    """kind in {"J", "L", "T"}; data is the component list (J, L) or the
    conformal weight (T)."""
    if kind == "J":
        return build_current(data, d, p)
    if kind == "L":
        return build_vector_field(data, d, p)
    if kind == "T":
        return build_reparam(data, d, p)
    raise ValueError(f"unknown generator kind {kind!r}")


# -- charge extraction ------------------------------------------------------------

@dataclass(frozen=True)
class MeasuredCharges:
    """Engine-measured charges.  At d = 1 the two quadratic vector-field
    channels coincide as functionals, so only their sum is measurable there:
    c1 and c2 are None and c1_plus_c2 carries the sum."""
    d: int
    p: int
    conformal_weight: Fraction
    c1: Optional[Fraction]
    c2: Optional[Fraction]
    c1_plus_c2: Fraction
    c3: Fraction
    c4: Fraction
    c5: Fraction
    c6: Fraction
    c7: Fraction
    c8: Fraction


def extract_charges(d: int, p: int, conformal_weight, glrep: GlRepTraces,
                    grep: GRepTraces) -> MeasuredCharges:
    """Measure every charge from double contractions of basis generators.

    Basis choices isolate one tensor channel each:
      c1 (d >= 2): xi = x1 d_0, eta = x0 d_1 gives pole2 = -c1;
      c1 + c2:     xi = eta = x0 d_0 gives pole2 = -(c1 + c2);
      c5:          X = Y along a non-privileged direction, pole2 = c5;
      c5 + c8:     X = Y along the privileged direction 0;
      c7:          L_{x0 d_0}(z) J_{e0}(w), pole2 = c7;
      c3:          T(z) L_{x0 d_0}(w), pole3 = c3;
      c4:          T(z) T(w), pole4 = c4 / 2;
      c6:          T(z) J_{e0}(w), pole3 = c6.
    """
    lam = Fraction(conformal_weight)
    x0 = Poly.variable(d, 0)
    zero = Poly.zero(d)
    one = Poly.constant(d, 1)

    def vec(mu: int, comp: Poly) -> List[Poly]:
        return [comp if i == mu else zero for i in range(d)]

    # vector-field channels
    xi_diag = vec(0, x0)
    l_diag = build_vector_field(xi_diag, d, p)
    pole_diag = double_contraction(l_diag, l_diag, glrep, grep).at(2)
    c1_plus_c2 = -pole_diag
    if d >= 2:
        x1 = Poly.variable(d, 1)
        l_a = build_vector_field(vec(0, x1), d, p)
        l_b = build_vector_field(vec(1, x0), d, p)
        c1 = -double_contraction(l_a, l_b, glrep, grep).at(2)
        c2 = c1_plus_c2 - c1
    else:
        c1 = None
        c2 = None

    # current channels (two internal components: 0 privileged, 1 generic)
    j_generic = build_current([zero, one], d, p)
    c5 = double_contraction(j_generic, j_generic, glrep, grep).at(2)
    j_priv = build_current([one, zero], d, p)
    c8 = double_contraction(j_priv, j_priv, glrep, grep).at(2) - c5

    # mixed channel
    c7 = double_contraction(l_diag, j_priv, glrep, grep).at(2)

    # reparametrization channels
    t_gen = build_reparam(lam, d, p)
    c3 = double_contraction(t_gen, l_diag, glrep, grep).at(3)
    c4 = 2 * double_contraction(t_gen, t_gen, glrep, grep).at(4)
    c6 = double_contraction(t_gen, j_priv, glrep, grep).at(3)

    return MeasuredCharges(d, p, lam, c1, c2, c1_plus_c2, c3, c4, c5, c6, c7, c8)
