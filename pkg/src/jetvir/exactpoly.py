"""Exact multivariate Laurent polynomials over the rationals.

A ``Poly`` is a sparse map from integer exponent tuples to ``Fraction``
coefficients.  Ordinary polynomials use non-negative exponents; negative
exponents are permitted so that field components along a closed loop
(Laurent series in the loop parameter) can be handled by the same class.
Operations that only make sense for genuine polynomials (truncation,
differentiation at negative powers never occurs in those paths) check
exponent signs where required.

All arithmetic is exact; no floats appear anywhere.
"""

from __future__ import annotations

import os
import re
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .multiindex import MultiIndex, binomial, factorial, sub as mi_sub

_DEFAULT_MAX_DEGREE = 64


def max_degree_cap() -> int:
    """Degree guard for products; configurable via JETVIR_MAX_DEGREE."""
    raw = os.environ.get("JETVIR_MAX_DEGREE")
    if raw is None:
        return _DEFAULT_MAX_DEGREE
    try:
        val = int(raw)
    except ValueError as exc:
        raise ValueError(f"JETVIR_MAX_DEGREE must be an integer, got {raw!r}") from exc
    if val < 1:
        raise ValueError(f"JETVIR_MAX_DEGREE must be positive, got {val}")
    return val


class Poly:
    """Sparse exact polynomial (Laurent allowed) in ``dim`` variables."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: Mapping[Sequence[int], object] | None = None):
        if dim < 0:
            raise ValueError(f"dimension must be >= 0, got {dim}")
        self.dim = dim
        clean: Dict[MultiIndex, Fraction] = {}
        if terms:
            for expo, coeff in terms.items():
                e = tuple(expo)
                if len(e) != dim:
                    raise ValueError(f"exponent {e} has wrong dimension (expected {dim})")
                if any(not isinstance(c, int) for c in e):
                    raise ValueError(f"exponents must be integers: {e}")
                c = Fraction(coeff)
                if c != 0:
                    clean[e] = clean.get(e, Fraction(0)) + c
                    if clean[e] == 0:
                        del clean[e]
        self.terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> "Poly":
        return cls(dim)

    @classmethod
    def constant(cls, dim: int, value) -> "Poly":
        return cls(dim, {(0,) * dim: Fraction(value)})

    @classmethod
    def monomial(cls, expo: Sequence[int], coeff=1) -> "Poly":
        return cls(len(tuple(expo)), {tuple(expo): Fraction(coeff)})

    @classmethod
    def variable(cls, dim: int, i: int) -> "Poly":
        if not 0 <= i < dim:
            raise ValueError(f"variable index {i} out of range for dimension {dim}")
        return cls(dim, {tuple(1 if j == i else 0 for j in range(dim)): Fraction(1)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_laurent(self) -> bool:
        """True if any exponent is negative."""
        return any(c < 0 for e in self.terms for c in e)

    def coeff(self, expo: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(expo), Fraction(0))

    def total_degree(self) -> int:
        """Maximum total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.dim, Fraction(0))

    # -- arithmetic --------------------------------------------------------

    def _require_same_dim(self, other: "Poly") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "Poly") -> "Poly":
        self._require_same_dim(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Poly(self.dim, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._require_same_dim(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) - c
        return Poly(self.dim, out)

    def __neg__(self) -> "Poly":
        return Poly(self.dim, {e: -c for e, c in self.terms.items()})

    def scale(self, k) -> "Poly":
        k = Fraction(k)
        return Poly(self.dim, {e: c * k for e, c in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        self._require_same_dim(other)
        cap = max_degree_cap()
        out: Dict[MultiIndex, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if sum(abs(x) for x in e) > cap:
                    raise OverflowError(
                        f"product exceeds degree cap {cap}; "
                        "raise JETVIR_MAX_DEGREE to allow larger expressions"
                    )
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Poly(self.dim, out)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative powers of a general polynomial are undefined")
        result = Poly.constant(self.dim, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    # -- calculus ----------------------------------------------------------

    def deriv(self, mu: int) -> "Poly":
        """Partial derivative with respect to variable mu (Laurent-aware)."""
        if not 0 <= mu < self.dim:
            raise ValueError(f"direction {mu} out of range for dimension {self.dim}")
        out: Dict[MultiIndex, Fraction] = {}
        for e, c in self.terms.items():
            k = e[mu]
            if k == 0:
                continue
            ne = e[:mu] + (k - 1,) + e[mu + 1:]
            out[ne] = out.get(ne, Fraction(0)) + c * k
        return Poly(self.dim, out)

    def deriv_multi(self, m: Sequence[int]) -> "Poly":
        """Repeated partial derivative d^m."""
        out = self
        for mu, k in enumerate(m):
            for _ in range(k):
                out = out.deriv(mu)
        return out

    def eval(self, point: Sequence) -> Fraction:
        """Evaluate at an exact rational point (no negative exponents at 0)."""
        if len(point) != self.dim:
            raise ValueError(f"point has wrong dimension: {len(point)} vs {self.dim}")
        pt = [Fraction(v) for v in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            val = c
            for x, k in zip(pt, e):
                if k < 0 and x == 0:
                    raise ZeroDivisionError("negative exponent evaluated at zero")
                val *= x ** k
        # accumulate separately to keep the loop simple
            total += val
        return total

    def truncate(self, p: int) -> "Poly":
        """Drop all terms of total degree > p (requires a true polynomial)."""
        if self.is_laurent():
            raise ValueError("truncation is only defined for non-negative exponents")
        return Poly(self.dim, {e: c for e, c in self.terms.items() if sum(e) <= p})

    def taylor_coeff(self, m: Sequence[int]) -> Fraction:
        """d^m at the origin: m! times the coefficient of x^m."""
        return self.coeff(m) * factorial(m)

    def shift(self, q: "Poly | Sequence") -> "Poly":
        """Not supported in general; see ``taylor_shift_coeffs`` for the jet use."""
        raise NotImplementedError

    def compose_univariate(self, substitutions: Sequence["Poly"]) -> "Poly":
        """Substitute variable i -> substitutions[i] (each a Poly in a common
        target space).  Negative exponents require the corresponding
        substitution to be a single monomial, whose inverse is well defined.
        """
        if len(substitutions) != self.dim:
            raise ValueError("need one substitution polynomial per variable")
        if not substitutions:
            raise ValueError("composition needs at least one variable")
        tdim = substitutions[0].dim
        for s in substitutions:
            if s.dim != tdim:
                raise ValueError("substitution polynomials must share a dimension")
        result = Poly.zero(tdim)
        for e, c in self.terms.items():
            term = Poly.constant(tdim, c)
            for i, k in enumerate(e):
                if k >= 0:
                    term = term * (substitutions[i] ** k)
                else:
                    term = term * _monomial_inverse_power(substitutions[i], -k)
            result = result + term
        return result

    # -- formatting ---------------------------------------------------------

    def __repr__(self) -> str:
        return f"Poly(dim={self.dim}, {format_poly(self)!r})"


def _monomial_inverse_power(p: Poly, k: int) -> Poly:
    """(monomial)^(-k); raises if p is not a single monomial."""
    if len(p.terms) != 1:
        raise ValueError(
            "negative exponent composition requires a monomial substitution"
        )
    (e, c), = p.terms.items()
    return Poly(p.dim, {tuple(-k * x for x in e): Fraction(1, 1) / (c ** k)})


def taylor_shift_coeffs(f: Poly, m: MultiIndex, n: MultiIndex) -> Poly:
    """Coefficient polynomial binom(m, n) * d^{m-n} f, viewed as a polynomial
    in the shift point.  Used when re-expanding f(x+q) around q: the x^n/n!
    coefficient block of x^m/m! is binom(m,n) d^{m-n}f evaluated at q."""
    b = binomial(m, n)
    if b == 0:
        return Poly.zero(f.dim)
    return f.deriv_multi(mi_sub(m, n)).scale(b)


# -- parsing -----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<sign>[+-])|(?P<num>\d+(?:/\d+)?)|(?P<var>[A-Za-z_][A-Za-z_0-9]*)"
    r"(?:\^(?P<exp>-?\d+))?|(?P<mul>\*))"
)


def parse_poly(text: str, dim: int, varname: str = "x") -> Poly:
    """Parse expressions like ``2 * x0^2 x1 - 1/3 * x1^3 + 4``.

    Variables are ``x0 ... x{dim-1}`` (configurable stem); for ``dim == 1``
    the bare stem (e.g. ``z``) is also accepted, with negative exponents
    allowed (Laurent).  Coefficients are integers or fractions ``p/q``.
    """
    pos = 0
    n = len(text)
    result = Poly.zero(dim)
    # term state
    sign = 1
    coeff: Fraction | None = None
    expo = [0] * dim
    started = False

    def flush():
        nonlocal sign, coeff, expo, started
        if not started:
            return
        c = coeff if coeff is not None else Fraction(1)
        result_terms[tuple(expo)] = result_terms.get(tuple(expo), Fraction(0)) + sign * c
        sign, coeff, expo, started = 1, None, [0] * dim, False

    result_terms: Dict[MultiIndex, Fraction] = {}
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at: {text[pos:]!r}")
        pos = m.end()
        if m.group("sign"):
            if started:
                flush()
            if m.group("sign") == "-":
                sign = -sign
            started = started or False
            continue
        if m.group("num"):
            num = m.group("num")
            val = Fraction(num) if "/" not in num else Fraction(*map(int, num.split("/")))
            coeff = val if coeff is None else coeff * val
            started = True
            continue
        if m.group("var"):
            name = m.group("var")
            k = int(m.group("exp")) if m.group("exp") else 1
            if name == varname and dim == 1:
                idx = 0
            elif name.startswith(varname) and name[len(varname):].isdigit():
                idx = int(name[len(varname):])
                if idx >= dim:
                    raise ValueError(f"variable {name} out of range for dimension {dim}")
            else:
                raise ValueError(f"unknown variable {name!r}")
            if k < 0 and dim != 1:
                raise ValueError("negative exponents only supported in one variable")
            expo[idx] += k
            started = True
            continue
        # bare '*': separator, nothing to do
    flush()
    if any(sum(abs(c) for c in e) > max_degree_cap() for e in result_terms):
        raise OverflowError("parsed polynomial exceeds the degree cap")
    return Poly(dim, result_terms)


def format_poly(p: Poly, varname: str = "x") -> str:
    """Human-readable exact rendering, inverse-compatible with parse_poly."""
    if not p.terms:
        return "0"
    pieces = []
    for e in sorted(p.terms, key=lambda t: (sum(t), tuple(-c for c in t))):
        c = p.terms[e]
        vars_part = []
        for i, k in enumerate(e):
            if k == 0:
                continue
            name = varname if p.dim == 1 else f"{varname}{i}"
            vars_part.append(name if k == 1 else f"{name}^{k}")
        body = " ".join(vars_part)
        if not body:
            mag = str(abs(c))
        elif abs(c) == 1:
            mag = body
        else:
            mag = f"{abs(c)} * {body}"
        pieces.append(("- " if c < 0 else "+ ") + mag)
    out = " ".join(pieces)
    return out[2:] if out.startswith("+ ") else ("-" + out[2:])
