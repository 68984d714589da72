"""Finite jet-space realizations of current and vector-field algebras.

A field truncated at jet order p is a finite vector of Taylor coefficients
phi_m (|m| <= p) around a base point q, tensored with a finite matrix
representation space.  Two families of operators act on it:

* ``GaugeJetOperator`` — the current generator for a g-valued function X:
  multiplication by X(x+q) followed by truncation, tensored with the rep
  matrices M^a.  Its blocks are binom(m,n) d_{m-n}X^a(q) M^a.
* ``DiffJetOperator`` — the vector-field generator for xi = xi^mu d_mu:
  a first-order differential operator in the base point q,
  xi^mu(q) d/dq^mu, plus a jet matrix combining Taylor transport by
  xi^mu(x+q) - xi^mu(q) with the frame rotation d_nu xi^mu(x+q) T^nu_mu.

Matrix entries are polynomials in q, so operator equality is polynomial
equality and subsumes every numeric base point.  Bracket closure
([J_X, J_Y] = J_{[X,Y]}, [L_xi, L_eta] = L_{[xi,eta]}) holds exactly at
every truncation order because both transport (by functions with no
constant x-term) and multiplication preserve the ideal of monomials of
degree > p: the jet action is an exact quotient of the untruncated action.

Convention note: complex structure constants i f^{abc} of a compact algebra
are replaced by the real totally antisymmetric constants of the equivalent
real form, so that all arithmetic stays in exact rationals.  Concretely,
[M^a, M^b] = f^{abc} M^c with real f; for the three-dimensional rotation
algebra f^{abc} is the Levi-Civita symbol and (M^a)_{bc} = -eps_{abc}.

The momentum-like translation operator is not a standalone value: its jet
part is exactly the transport term inside ``diff_operator``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .exactpoly import Poly
from .multiindex import (
    MultiIndex,
    binomial,
    enumerate_indices,
    norm,
    sub as mi_sub,
    unit,
)

# -- exact matrices over Poly -------------------------------------------------

Matrix = Tuple[Tuple[Poly, ...], ...]


def mat_zero(n: int, dim: int) -> Matrix:
    z = Poly.zero(dim)
    return tuple(tuple(z for _ in range(n)) for _ in range(n))


def mat_identity(n: int, dim: int) -> Matrix:
    one = Poly.constant(dim, 1)
    z = Poly.zero(dim)
    return tuple(tuple(one if i == j else z for j in range(n)) for i in range(n))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a: Matrix, k: Poly) -> Matrix:
    return tuple(tuple(k * x for x in row) for row in a)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    dim = a[0][0].dim if n else 0
    bt = list(zip(*b))
    out = []
    for row in a:
        nz = [(j, x) for j, x in enumerate(row) if not x.is_zero()]
        orow = []
        for col in bt:
            acc = Poly.zero(dim)
            for j, x in nz:
                y = col[j]
                if not y.is_zero():
                    acc = acc + x * y
            orow.append(acc)
        out.append(tuple(orow))
    return tuple(out)


def mat_commutator(a: Matrix, b: Matrix) -> Matrix:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def mat_equal(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(
        x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb)
    )


def mat_is_zero(a: Matrix) -> bool:
    return all(x.is_zero() for row in a for x in row)


def mat_kron(a: Matrix, b: Matrix) -> Matrix:
    na, nb = len(a), len(b)
    return tuple(
        tuple(a[i][j] * b[k][l] for j in range(na) for l in range(nb))
        for i in range(na)
        for k in range(nb)
    )


def mat_map_entries(a: Matrix, fn) -> Matrix:
    return tuple(tuple(fn(x) for x in row) for row in a)


def numeric_matrix(rows: Sequence[Sequence], dim: int) -> Matrix:
    """Lift a matrix of rationals to a matrix of constant Polys in dim vars."""
    return tuple(
        tuple(Poly.constant(dim, Fraction(v)) for v in row) for row in rows
    )


# -- structure constants and matrix representations ---------------------------

@dataclass(frozen=True)
class StructureConstants:
    """Totally antisymmetric real structure constants f^{abc} of a Lie
    algebra g, with [X, Y]^c = f^{abc} X^a Y^b."""
    dim: int
    f: Tuple[Tuple[Tuple[Fraction, ...], ...], ...]

    def __post_init__(self):
        n = self.dim
        f = self.f
        if len(f) != n or any(len(r) != n or any(len(c) != n for c in r) for r in f):
            raise ValueError("structure constant tensor has wrong shape")
        for a, b, c in itertools.product(range(n), repeat=3):
            if f[a][b][c] != -f[b][a][c] or f[a][b][c] != -f[a][c][b]:
                raise ValueError("structure constants are not totally antisymmetric")
        for a, b, c, d in itertools.product(range(n), repeat=4):
            s = sum(
                f[a][b][e] * f[e][c][d]
                + f[b][c][e] * f[e][a][d]
                + f[c][a][e] * f[e][b][d]
                for e in range(n)
            )
            if s != 0:
                raise ValueError("structure constants violate the Jacobi identity")

    @classmethod
    def abelian(cls, dim: int) -> "StructureConstants":
        z = Fraction(0)
        f = tuple(tuple(tuple(z for _ in range(dim)) for _ in range(dim))
                  for _ in range(dim))
        return cls(dim, f)

    @classmethod
    def epsilon(cls) -> "StructureConstants":
        """f^{abc} = Levi-Civita symbol (three-dimensional rotation algebra)."""
        def eps(a, b, c):
            return Fraction(
                (a - b) * (b - c) * (c - a) // 2 if {a, b, c} == {0, 1, 2} else 0
            )
        f = tuple(
            tuple(tuple(eps(a, b, c) for c in range(3)) for b in range(3))
            for a in range(3)
        )
        return cls(3, f)

    def bracket_components(self, x: Sequence[Poly], y: Sequence[Poly]) -> List[Poly]:
        """Pointwise Lie bracket of g-valued functions:
        [x, y]^c = f^{abc} x^a y^b."""
        dim_vars = x[0].dim
        out = [Poly.zero(dim_vars) for _ in range(self.dim)]
        for a in range(self.dim):
            if x[a].is_zero():
                continue
            for b in range(self.dim):
                if y[b].is_zero():
                    continue
                for c in range(self.dim):
                    coef = self.f[a][b][c]
                    if coef:
                        out[c] = out[c] + (x[a] * y[b]).scale(coef)
        return out


@dataclass(frozen=True)
class MatrixRep:
    """A labelled family of exact square matrices.

    For a g-rep the labels are generator indices a = 0..n-1; for a gl(d)
    rep the labels are pairs (mu, nu) for T^mu_nu.  Entries are rationals.
    """
    size: int
    generators: Tuple[Tuple[object, Tuple[Tuple[Fraction, ...], ...]], ...]

    def matrix(self, label) -> Tuple[Tuple[Fraction, ...], ...]:
        for lab, m in self.generators:
            if lab == label:
                return m
        raise KeyError(f"no generator labelled {label!r}")

    @property
    def labels(self) -> List[object]:
        return [lab for lab, _ in self.generators]

    # -- factories ---------------------------------------------------------

    @classmethod
    def g_abelian(cls, n: int, values: Sequence = None) -> "MatrixRep":
        """One-dimensional rep of an abelian algebra: M^a = (value_a)."""
        vals = [Fraction(1)] * n if values is None else [Fraction(v) for v in values]
        gens = tuple((a, ((vals[a],),)) for a in range(n))
        return cls(1, gens)

    @classmethod
    def g_rotation_adjoint(cls) -> "MatrixRep":
        """Adjoint of the rotation algebra: (M^a)_{bc} = -eps_{abc}, which
        satisfies [M^a, M^b] = eps^{abc} M^c."""
        def eps(a, b, c):
            return (a - b) * (b - c) * (c - a) // 2 if {a, b, c} == {0, 1, 2} else 0
        gens = tuple(
            (a, tuple(tuple(Fraction(-eps(a, b, c)) for c in range(3))
                      for b in range(3)))
            for a in range(3)
        )
        return cls(3, gens)

    @classmethod
    def gl_scalar_weight(cls, d: int, kappa) -> "MatrixRep":
        """One-dimensional weight rep: T^mu_nu = kappa * delta^mu_nu."""
        k = Fraction(kappa)
        gens = tuple(
            ((mu, nu), ((k if mu == nu else Fraction(0),),))
            for mu in range(d) for nu in range(d)
        )
        return cls(1, gens)

    @classmethod
    def gl_vector(cls, d: int) -> "MatrixRep":
        """Defining rep: (T^mu_rho)_{ij} = delta_{i,mu} delta_{j,rho}."""
        gens = tuple(
            ((mu, rho),
             tuple(tuple(Fraction(1 if (i == mu and j == rho) else 0)
                         for j in range(d)) for i in range(d)))
            for mu in range(d) for rho in range(d)
        )
        return cls(d, gens)

    # -- relation checks -----------------------------------------------------

    def check_g_relations(self, sc: StructureConstants) -> bool:
        """[M^a, M^b] = f^{abc} M^c, exactly."""
        mats = {a: numeric_matrix(self.matrix(a), 0) for a in range(sc.dim)}
        for a in range(sc.dim):
            for b in range(sc.dim):
                lhs = mat_commutator(mats[a], mats[b])
                rhs = mat_zero(self.size, 0)
                for c in range(sc.dim):
                    coef = sc.f[a][b][c]
                    if coef:
                        rhs = mat_add(rhs, mat_scale(mats[c], Poly.constant(0, coef)))
                if not mat_equal(lhs, rhs):
                    return False
        return True

    def check_gl_relations(self, d: int) -> bool:
        """[T^mu_rho, T^nu_sigma] = delta^nu_rho T^mu_sigma
        - delta^mu_sigma T^nu_rho, exactly."""
        mats = {lab: numeric_matrix(self.matrix(lab), 0)
                for lab in ((a, b) for a in range(d) for b in range(d))}
        for mu, rho, nu, sigma in itertools.product(range(d), repeat=4):
            lhs = mat_commutator(mats[(mu, rho)], mats[(nu, sigma)])
            rhs = mat_zero(self.size, 0)
            if nu == rho:
                rhs = mat_add(rhs, mats[(mu, sigma)])
            if mu == sigma:
                rhs = mat_sub(rhs, mats[(nu, rho)])
            if not mat_equal(lhs, rhs):
                return False
        return True


# -- jet block builders --------------------------------------------------------

def multiplication_jet_matrix(X: Poly, d: int, p: int) -> Matrix:
    """Jet matrix (entries Poly in q) of "multiply by X(x+q), truncate at p"
    in the Taylor basis x^n/n!: block (m, n) = binom(m, n) d_{m-n}X(q)."""
    if X.dim != d:
        raise ValueError(f"function has dimension {X.dim}, expected {d}")
    lattice = enumerate_indices(d, p)
    rows = []
    for m in lattice:
        row = []
        for n in lattice:
            b = binomial(m, n)
            if b == 0:
                row.append(Poly.zero(d))
            else:
                row.append(X.deriv_multi(mi_sub(m, n)).scale(b))
        rows.append(tuple(row))
    return tuple(rows)


def transport_jet_matrix(xi: Sequence[Poly], d: int, p: int) -> Matrix:
    """Jet matrix of phi -> (xi_0^mu d_mu phi)|_p where
    xi_0^mu(x; q) = xi^mu(x+q) - xi^mu(q) has no constant x-term.

    Acting on the basis element x^n/n!:  d_mu gives x^{n-e_mu}/(n-e_mu)!,
    and multiplying by the Taylor term d_k xi^mu(q) x^k/k! (k != 0) lands on
    binom(m, n-e_mu) x^m/m! with m = n - e_mu + k.  So the (m, n) entry is
    sum_mu binom(m, n-e_mu) d_{m-n+e_mu} xi^mu(q) over directions with
    n_mu > 0 and |m - n + e_mu| >= 1.
    """
    lattice = enumerate_indices(d, p)
    rows = []
    for m in lattice:
        row = []
        for n in lattice:
            entry = Poly.zero(d)
            for mu in range(d):
                if n[mu] == 0:
                    continue
                nprime = mi_sub(n, unit(d, mu))
                b = binomial(m, nprime)
                if b == 0:
                    continue
                k = tuple(mi - ni for mi, ni in zip(m, nprime))
                if any(c < 0 for c in k) or norm(k) == 0:
                    continue
                entry = entry + xi[mu].deriv_multi(k).scale(b)
            row.append(entry)
        rows.append(tuple(row))
    return tuple(rows)


# -- operators -----------------------------------------------------------------

@dataclass(frozen=True)
class GaugeJetOperator:
    d: int
    p: int
    rep_size: int
    matrix: Matrix  # size lattice * rep_size, entries Poly in q

    def __eq__(self, other):
        if not isinstance(other, GaugeJetOperator):
            return NotImplemented
        return (self.d, self.p, self.rep_size) == (other.d, other.p, other.rep_size) \
            and mat_equal(self.matrix, other.matrix)

    def is_zero(self) -> bool:
        return mat_is_zero(self.matrix)


@dataclass(frozen=True)
class DiffJetOperator:
    d: int
    p: int
    rep_size: int
    vector: Tuple[Poly, ...]  # a^mu(q) = xi^mu(q)
    matrix: Matrix            # jet (x) gl-rep block, entries Poly in q

    def __eq__(self, other):
        if not isinstance(other, DiffJetOperator):
            return NotImplemented
        return (self.d, self.p, self.rep_size) == (other.d, other.p, other.rep_size) \
            and self.vector == other.vector and mat_equal(self.matrix, other.matrix)

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.vector) and mat_is_zero(self.matrix)


def _check_components(comps: Sequence[Poly], d: int, count: int, what: str) -> None:
    if len(comps) != count:
        raise ValueError(f"{what} needs {count} components, got {len(comps)}")
    for c in comps:
        if c.dim != d:
            raise ValueError(f"{what} components must be polynomials in {d} variables")
        if c.is_laurent():
            raise ValueError(f"{what} components must have non-negative exponents")


def gauge_operator(X: Sequence[Poly], rep: MatrixRep, d: int, p: int) -> GaugeJetOperator:
    """The jet current generator: blocks binom(m, n) d_{m-n}X^a(q) M^a."""
    n_gen = len(rep.labels)
    _check_components(X, d, n_gen, "g-valued function")
    lattice = enumerate_indices(d, p)
    total = mat_zero(len(lattice) * rep.size, d)
    for a in range(n_gen):
        if X[a].is_zero():
            continue
        jet = multiplication_jet_matrix(X[a], d, p)
        total = mat_add(total, mat_kron(jet, numeric_matrix(rep.matrix(a), d)))
    return GaugeJetOperator(d, p, rep.size, total)


def diff_operator(xi: Sequence[Poly], rep: MatrixRep, d: int, p: int) -> DiffJetOperator:
    """The jet vector-field generator for xi = xi^mu d_mu.

    Vector part: xi^mu(q) acting as a first-order operator in q.
    Matrix part: transport by xi^mu(x+q) - xi^mu(q) plus the frame term
    d_nu xi^mu(x+q) T^nu_mu, both truncated at jet order p.
    """
    _check_components(xi, d, d, "vector field")
    lattice = enumerate_indices(d, p)
    size = len(lattice) * rep.size
    matrix = mat_kron(transport_jet_matrix(xi, d, p), mat_identity(rep.size, d))
    for nu in range(d):
        for mu in range(d):
            dxi = xi[mu].deriv(nu)
            if dxi.is_zero():
                continue
            t_mat = numeric_matrix(rep.matrix((nu, mu)), d)
            if all(v.is_zero() for row in t_mat for v in row):
                continue
            matrix = mat_add(
                matrix,
                mat_kron(multiplication_jet_matrix(dxi, d, p), t_mat),
            )
    vector = tuple(xi)
    return DiffJetOperator(d, p, rep.size, vector, matrix)


def vector_field_bracket(xi: Sequence[Poly], eta: Sequence[Poly]) -> List[Poly]:
    """[xi, eta]^mu = xi^nu d_nu eta^mu - eta^nu d_nu xi^mu."""
    d = len(xi)
    out = []
    for mu in range(d):
        acc = Poly.zero(xi[0].dim)
        for nu in range(d):
            acc = acc + xi[nu] * eta[mu].deriv(nu) - eta[nu] * xi[mu].deriv(nu)
        out.append(acc)
    return out


def bracket_gauge(j1: GaugeJetOperator, j2: GaugeJetOperator) -> GaugeJetOperator:
    if (j1.d, j1.p, j1.rep_size) != (j2.d, j2.p, j2.rep_size):
        raise ValueError("operator shape mismatch")
    return GaugeJetOperator(j1.d, j1.p, j1.rep_size,
                            mat_commutator(j1.matrix, j2.matrix))


def _directional_derivative(a: Sequence[Poly], target: Matrix) -> Matrix:
    """sum_nu a^nu(q) d/dq^nu applied entrywise to a matrix of Polys in q."""
    d = len(a)
    out_rows = []
    for row in target:
        orow = []
        for entry in row:
            acc = Poly.zero(entry.dim)
            for nu in range(d):
                if not a[nu].is_zero():
                    de = entry.deriv(nu)
                    if not de.is_zero():
                        acc = acc + a[nu] * de
            orow.append(acc)
        out_rows.append(tuple(orow))
    return tuple(out_rows)


def bracket_diff(l1: DiffJetOperator, l2: DiffJetOperator) -> DiffJetOperator:
    """Commutator of first-order operators a.d/dq + B(q):

    [a1.d + B1, a2.d + B2]
      = (a1.d a2 - a2.d a1).d + (a1.d B2 - a2.d B1 + [B1, B2]).
    """
    if (l1.d, l1.p, l1.rep_size) != (l2.d, l2.p, l2.rep_size):
        raise ValueError("operator shape mismatch")
    d = l1.d
    vector = []
    for mu in range(d):
        acc = Poly.zero(d)
        for nu in range(d):
            acc = acc + l1.vector[nu] * l2.vector[mu].deriv(nu)
            acc = acc - l2.vector[nu] * l1.vector[mu].deriv(nu)
        vector.append(acc)
    matrix = mat_add(
        mat_sub(
            _directional_derivative(l1.vector, l2.matrix),
            _directional_derivative(l2.vector, l1.matrix),
        ),
        mat_commutator(l1.matrix, l2.matrix),
    )
    return DiffJetOperator(l1.d, l1.p, l1.rep_size, tuple(vector), matrix)


def bracket_mixed(l: DiffJetOperator, j: GaugeJetOperator) -> GaugeJetOperator:
    """Commutator of a vector-field generator with a current generator,
    acting on the combined space (jet) (x) (gl-rep) (x) (g-rep):

    [a.d/dq + B (x) I_M,  J (x nothing on gl slot)]
      = a.d J  +  [B (x) I_M, I_rho (x) J-blocks].

    The result is a pure multiplication-type operator and is returned as a
    GaugeJetOperator on the combined rep space of size rep_size(l) *
    rep_size(j).  The frame term of B drops out exactly (jet multiplication
    matrices commute), leaving transport only, so the bracket equals the
    current generator of the transported function xi^mu d_mu X — not of the
    weight-one combination xi^mu d_mu X + d_mu xi^mu X, which a constant X
    in an abelian algebra immediately rules out (its generator is central
    in the jet matrix algebra, yet the weight-one formula would be nonzero).
    """
    if (l.d, l.p) != (j.d, j.p):
        raise ValueError("operator shape mismatch")
    d = l.d
    lattice_n = len(enumerate_indices(d, l.p))
    # Embed: L acts on jet (x) rho (x) M, J on jet (x) rho (x) M.
    # l.matrix is (jet x rho); j.matrix is (jet x M).
    l_full = mat_kron(l.matrix, mat_identity(j.rep_size, d))
    j_full = _embed_gauge(j, l.rep_size, lattice_n)
    matrix = mat_add(
        _directional_derivative(l.vector, j_full),
        mat_commutator(l_full, j_full),
    )
    return GaugeJetOperator(d, l.p, l.rep_size * j.rep_size, matrix)


def _embed_gauge(j: GaugeJetOperator, rho_size: int, lattice_n: int) -> Matrix:
    """Re-index a (jet x M) gauge matrix onto (jet x rho x M) by inserting
    an identity on the middle (gl-rep) factor."""
    d = j.d
    z = Poly.zero(d)
    size = lattice_n * rho_size * j.rep_size
    rows = []
    for m in range(lattice_n):
        for i in range(rho_size):
            for a in range(j.rep_size):
                row = []
                for n in range(lattice_n):
                    for jj in range(rho_size):
                        for b in range(j.rep_size):
                            if i == jj:
                                row.append(j.matrix[m * j.rep_size + a][n * j.rep_size + b])
                            else:
                                row.append(z)
                rows.append(tuple(row))
    assert len(rows) == size
    return tuple(rows)


def embed_gauge_operator(j: GaugeJetOperator, rho_size: int) -> GaugeJetOperator:
    """The gauge operator acting trivially on an extra gl-rep factor of the
    given size (for comparison against mixed brackets)."""
    lattice_n = len(enumerate_indices(j.d, j.p))
    return GaugeJetOperator(
        j.d, j.p, rho_size * j.rep_size, _embed_gauge(j, rho_size, lattice_n)
    )
