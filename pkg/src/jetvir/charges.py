"""Closed-form central/abelian charges of the jet realizations.

The charges depend on the spacetime dimension d, the jet order p, the
conformal weight lambda of the reparametrization sector, the field
statistics, and finitely many trace parameters of the two matrix
representations carried by the fields:

    gl(d) rep rho:   tr I = Delta_rho,       tr T^a_b       = k0 d^a_b,
                     tr T^a_b T^c_d = k1 d^a_d d^c_b + k2 d^a_b d^c_d
    internal rep M:  tr I = Delta_M,         tr M^a         = zM d^{a,0},
                     tr M^a M^b = yM d^{ab} + wM d^{a,0} d^{b,0}

(index 0 of the internal algebra is the privileged direction that can have
a nonvanishing trace).  With shorthand binomials

    A = binom(d+p, d),   B = binom(d+p, d+1),
    D = binom(d+p, d+2), E = binom(d+p+1, d+2)

and eps = +1 (bose) / -1 (fermi), the eight charges are

    c1 = 1 + eps DM (E Drho + A k1)
    c2 =     eps DM (D Drho + 2 B k0 + A k2)
    c3 = 1 + eps (2l-1) DM (B Drho + A k0)
    c4 = 2d + 2 eps (6l^2 - 6l + 1) A Drho DM
    c5 =   - eps A yM Drho
    c6 =     eps (2l-1) zM A Drho
    c7 =   - eps zM (B Drho + A k0)
    c8 =   - eps wM A Drho

The cross-multiplicities (Delta_M on c1/c2, Delta_rho on c5) are baked in;
single-sector formulas are recovered by setting the other dimension to 1.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict


class Statistics(enum.Enum):
    BOSE = "bose"
    FERMI = "fermi"

    @property
    def sign(self) -> int:
        return 1 if self is Statistics.BOSE else -1


@dataclass(frozen=True)
class GlRepTraces:
    """Trace parameters of the gl(d) representation rho."""
    delta_rho: int
    k0: Fraction
    k1: Fraction
    k2: Fraction

    def __post_init__(self):
        if self.delta_rho < 1:
            raise ValueError("delta_rho must be a positive integer")
        for name in ("k0", "k1", "k2"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))


def from_sl_gl1(kappa, y_rho, delta_rho: int, d: int) -> GlRepTraces:
    """Trace parameters of an sl(d) (+) gl(1) decomposition: the field has
    density weight kappa and quadratic sl(d) trace y_rho, giving
    k0 = kappa Drho, k1 = y_rho, k2 = kappa^2 Drho - y_rho / d."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    kappa = Fraction(kappa)
    y_rho = Fraction(y_rho)
    return GlRepTraces(
        delta_rho=delta_rho,
        k0=kappa * delta_rho,
        k1=y_rho,
        k2=kappa * kappa * delta_rho - Fraction(y_rho, d),
    )


@dataclass(frozen=True)
class GRepTraces:
    """Trace parameters of the internal representation M, plus the field
    statistics (which enters every double-contraction sign)."""
    delta_m: int
    y_m: Fraction
    z_m: Fraction
    w_m: Fraction
    statistics: Statistics = Statistics.BOSE

    def __post_init__(self):
        if self.delta_m < 1:
            raise ValueError("delta_m must be a positive integer")
        for name in ("y_m", "z_m", "w_m"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))


@dataclass(frozen=True)
class ChargeSet:
    d: int
    p: int
    conformal_weight: Fraction  # lambda of the reparametrization sector
    glrep: GlRepTraces
    grep: GRepTraces
    c1: Fraction
    c2: Fraction
    c3: Fraction
    c4: Fraction
    c5: Fraction
    c6: Fraction
    c7: Fraction
    c8: Fraction

    def charges(self) -> Dict[str, Fraction]:
        return {f"c{i}": getattr(self, f"c{i}") for i in range(1, 9)}

    def to_json(self) -> str:
        def frac(x: Fraction) -> str:
            return f"{x.numerator}/{x.denominator}"

        payload = {
            "inputs": {
                "d": self.d,
                "p": self.p,
                "lambda": frac(self.conformal_weight),
                "delta_rho": self.glrep.delta_rho,
                "k0": frac(self.glrep.k0),
                "k1": frac(self.glrep.k1),
                "k2": frac(self.glrep.k2),
                "delta_m": self.grep.delta_m,
                "y_m": frac(self.grep.y_m),
                "z_m": frac(self.grep.z_m),
                "w_m": frac(self.grep.w_m),
                "statistics": self.grep.statistics.value,
            },
            "charges": {k: frac(v) for k, v in self.charges().items()},
        }
        return json.dumps(payload, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "ChargeSet":
        data = json.loads(text)
        ins = data["inputs"]

        def frac(s: str) -> Fraction:
            num, den = s.split("/")
            return Fraction(int(num), int(den))

        glrep = GlRepTraces(ins["delta_rho"], frac(ins["k0"]),
                            frac(ins["k1"]), frac(ins["k2"]))
        grep = GRepTraces(ins["delta_m"], frac(ins["y_m"]), frac(ins["z_m"]),
                          frac(ins["w_m"]), Statistics(ins["statistics"]))
        ch = {k: frac(v) for k, v in data["charges"].items()}
        return cls(ins["d"], ins["p"], frac(ins["lambda"]), glrep, grep, **ch)


def closed_form(d: int, p: int, conformal_weight, glrep: GlRepTraces,
                grep: GRepTraces) -> ChargeSet:
    """Evaluate the eight charge formulas exactly."""
    if d < 1 or p < 0:
        raise ValueError("need d >= 1 and p >= 0")
    lam = Fraction(conformal_weight)
    eps = grep.statistics.sign
    a = math.comb(d + p, d)
    b = math.comb(d + p, d + 1)
    dd = math.comb(d + p, d + 2)
    e = math.comb(d + p + 1, d + 2)
    drho, dm = glrep.delta_rho, grep.delta_m
    c1 = 1 + eps * dm * (e * drho + a * glrep.k1)
    c2 = eps * dm * (dd * drho + 2 * b * glrep.k0 + a * glrep.k2)
    c3 = 1 + eps * (2 * lam - 1) * dm * (b * drho + a * glrep.k0)
    c4 = 2 * d + 2 * eps * (6 * lam * lam - 6 * lam + 1) * a * drho * dm
    c5 = -eps * a * grep.y_m * drho
    c6 = eps * (2 * lam - 1) * grep.z_m * a * drho
    c7 = -eps * grep.z_m * (b * drho + a * glrep.k0)
    c8 = -eps * grep.w_m * a * drho
    return ChargeSet(d, p, lam, glrep, grep,
                     Fraction(c1), Fraction(c2), Fraction(c3), Fraction(c4),
                     Fraction(c5), Fraction(c6), Fraction(c7), Fraction(c8))


def kac_moody_level(p: int, y_m, statistics: Statistics) -> Fraction:
    """The one-dimensional (d = 1) current-algebra level: -eps (p+1) y_m.
    This is exactly c5 at d = 1 with a one-dimensional gl rep."""
    return Fraction(-statistics.sign * (p + 1)) * Fraction(y_m)
