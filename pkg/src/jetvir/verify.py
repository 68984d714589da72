"""Self-contained verification sweeps over all module pairs.

Five suites, each pitting two independent computations against each other
with exact rational equality:

  1. lattice sums:      closed binomial forms vs brute enumeration;
  2. delta pairs:       symbolic kernel oracle vs the three closed forms;
  3. closures:          operator commutators vs constructed right-hand sides
                        (current, vector-field and mixed transport brackets);
  4. charges:           engine-measured extension coefficients vs the eight
                        closed-form charges, over a full parameter sweep;
  5. cocycles:          antisymmetry of the residue extensions on random
                        Laurent trajectories, plus the monomial-basis
                        reparametrization pattern and the d = 1 level.

``fault=True`` injects a deliberate off-by-one into suite 1 so callers can
confirm the machinery notices a real discrepancy.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List

from . import charges as charges_mod
from . import cocycles as cocycles_mod
from . import deltacalc, jetreps, jetsums, wickcocycle
from .charges import GRepTraces, Statistics, from_sl_gl1
from .exactpoly import Poly
from .multiindex import enumerate_indices


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, witness: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(witness)


@dataclass
class VerifyReport:
    suites: List[SuiteResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites)


def _random_poly(d: int, deg: int, rng: random.Random, density=0.6) -> Poly:
    terms = {}
    for e in enumerate_indices(d, deg):
        if rng.random() < density:
            terms[e] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return Poly(d, terms)


def suite_sums(d_max: int = 4, p_max: int = 8, fault: bool = False) -> SuiteResult:
    res = SuiteResult("lattice-sums")
    report = jetsums.verify_identities(d_max, p_max, fault=fault)
    res.checks = report.checks
    res.failures = list(report.failures)
    return res


def suite_delta(seed: int, d_max: int = 3, p_max: int = 4,
                pairs: int = 20) -> SuiteResult:
    res = SuiteResult("delta-pairs")
    rng = random.Random(seed)
    for d in range(1, d_max + 1):
        for p in range(0, p_max + 1):
            for _ in range(pairs):
                f = _random_poly(d, p + 2, rng)
                g = _random_poly(d, p + 2, rng)
                oracle = deltacalc.delta_pair_integral(
                    f, g, deltacalc.DerivSpec.none(), deltacalc.DerivSpec.none(),
                    (deltacalc.SmearMode.PLAIN, deltacalc.SmearMode.PLAIN), d, p)
                res.record(
                    oracle == deltacalc.delta_pair_closed("i", f, g, None, None, d, p),
                    f"case i at d={d}, p={p}")
                for mu in range(d):
                    oracle = deltacalc.delta_pair_integral(
                        f, g, deltacalc.DerivSpec.on_x(mu), deltacalc.DerivSpec.none(),
                        (deltacalc.SmearMode.SHIFTED, deltacalc.SmearMode.PLAIN), d, p)
                    res.record(
                        oracle == deltacalc.delta_pair_closed("ii", f, g, mu, None, d, p),
                        f"case ii at d={d}, p={p}, mu={mu}")
                    for nu in range(d):
                        oracle = deltacalc.delta_pair_integral(
                            f, g, deltacalc.DerivSpec.on_x(mu),
                            deltacalc.DerivSpec.on_y(nu),
                            (deltacalc.SmearMode.SHIFTED,
                             deltacalc.SmearMode.SHIFTED), d, p)
                        res.record(
                            oracle == deltacalc.delta_pair_closed(
                                "iii", f, g, mu, nu, d, p),
                            f"case iii at d={d}, p={p}, mu={mu}, nu={nu}")
    return res


def suite_closures(seed: int, d_max: int = 2, p_max: int = 3,
                   pairs: int = 10) -> SuiteResult:
    res = SuiteResult("closures")
    rng = random.Random(seed)
    sc_ab = jetreps.StructureConstants.abelian(1)
    rep_ab = jetreps.MatrixRep.g_abelian(1)
    sc_eps = jetreps.StructureConstants.epsilon()
    rep_eps = jetreps.MatrixRep.g_rotation_adjoint()
    for d in range(1, d_max + 1):
        gl_rep = jetreps.MatrixRep.gl_scalar_weight(d, Fraction(1, 2))
        for p in range(0, p_max + 1):
            for _ in range(pairs):
                # current closure, abelian and non-abelian
                for sc, grep in ((sc_ab, rep_ab), (sc_eps, rep_eps)):
                    X = [_random_poly(d, p + 1, rng) for _ in range(sc.dim)]
                    Y = [_random_poly(d, p + 1, rng) for _ in range(sc.dim)]
                    lhs = jetreps.bracket_gauge(
                        jetreps.gauge_operator(X, grep, d, p),
                        jetreps.gauge_operator(Y, grep, d, p))
                    rhs = jetreps.gauge_operator(
                        sc.bracket_components(X, Y), grep, d, p)
                    res.record(lhs == rhs,
                               f"current closure at d={d}, p={p}, dim-g={sc.dim}")
                # vector-field closure
                xi = [_random_poly(d, 4, rng) for _ in range(d)]
                eta = [_random_poly(d, 4, rng) for _ in range(d)]
                lhs = jetreps.bracket_diff(
                    jetreps.diff_operator(xi, gl_rep, d, p),
                    jetreps.diff_operator(eta, gl_rep, d, p))
                rhs = jetreps.diff_operator(
                    jetreps.vector_field_bracket(xi, eta), gl_rep, d, p)
                res.record(lhs == rhs, f"vector-field closure at d={d}, p={p}")
                # mixed bracket: the commutator is the transported current
                X = [_random_poly(d, p + 1, rng)]
                lhs = jetreps.bracket_mixed(
                    jetreps.diff_operator(xi, gl_rep, d, p),
                    jetreps.gauge_operator(X, rep_ab, d, p))
                transported = [sum((xi[mu] * X[0].deriv(mu) for mu in range(d)),
                                   Poly.zero(d))]
                rhs = jetreps.embed_gauge_operator(
                    jetreps.gauge_operator(transported, rep_ab, d, p),
                    gl_rep.size)
                res.record(lhs == rhs, f"mixed transport closure at d={d}, p={p}")
    return res


def suite_charges(d_max: int = 2, p_max: int = 3) -> SuiteResult:
    res = SuiteResult("charges")
    lambdas = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2))
    trace_tuples = (
        (Fraction(0), Fraction(0), 1, dict(delta_m=1, y_m=1, z_m=0, w_m=0)),
        (Fraction(1), Fraction(0), 1, dict(delta_m=2, y_m=2, z_m=1, w_m=3)),
        (Fraction(-1, 2), Fraction(1), 2, dict(delta_m=1, y_m=0, z_m=2, w_m=1)),
    )
    for d in range(1, d_max + 1):
        for p in range(0, p_max + 1):
            for lam in lambdas:
                for stats in (Statistics.BOSE, Statistics.FERMI):
                    for kappa, y_rho, drho, grkw in trace_tuples:
                        gl = from_sl_gl1(kappa, y_rho, drho, d)
                        gr = GRepTraces(statistics=stats, **grkw)
                        closed = charges_mod.closed_form(d, p, lam, gl, gr)
                        meas = wickcocycle.extract_charges(d, p, lam, gl, gr)
                        where = f"d={d}, p={p}, lambda={lam}, {stats.value}, kappa={kappa}"
                        pairs = [
                            ("c1+c2", meas.c1_plus_c2, closed.c1 + closed.c2),
                            ("c3", meas.c3, closed.c3),
                            ("c4", meas.c4, closed.c4),
                            ("c5", meas.c5, closed.c5),
                            ("c6", meas.c6, closed.c6),
                            ("c7", meas.c7, closed.c7),
                            ("c8", meas.c8, closed.c8),
                        ]
                        if d >= 2:
                            pairs += [("c1", meas.c1, closed.c1),
                                      ("c2", meas.c2, closed.c2)]
                        for name, m, c in pairs:
                            res.record(m == c, f"{name} at {where}: {m} != {c}")
    return res


def suite_cocycles(seed: int, triples: int = 20) -> SuiteResult:
    res = SuiteResult("cocycles")
    rng = random.Random(seed)

    def rand_traj(d: int) -> cocycles_mod.Trajectory:
        comps = []
        for _ in range(d):
            terms = {(k,): Fraction(rng.randint(-3, 3))
                     for k in range(-2, 3) if rng.random() < 0.7}
            comps.append(Poly(1, terms) if terms else Poly.monomial((1,)))
        return cocycles_mod.Trajectory(tuple(comps))

    for _ in range(triples):
        for d in (1, 2):
            q = rand_traj(d)
            xi = [_random_poly(d, 2, rng) for _ in range(d)]
            eta = [_random_poly(d, 2, rng) for _ in range(d)]
            r = cocycles_mod.antisymmetry_check(
                "virasoro", xi, eta, q, Fraction(3, 2), Fraction(-1, 3))
            res.record(r.ok, f"vector-field antisymmetry, d={d}: residual {r.value}")
            X = [_random_poly(d, 2, rng) for _ in range(2)]
            Y = [_random_poly(d, 2, rng) for _ in range(2)]
            r = cocycles_mod.antisymmetry_check(
                "affine", X, Y, q, 2, Fraction(1, 5))
            res.record(r.ok, f"current antisymmetry, d={d}: residual {r.value}")
    # d = 1 reductions
    for p in range(0, 7):
        for stats in (Statistics.BOSE, Statistics.FERMI):
            gl = from_sl_gl1(0, 0, 1, 1)
            gr = GRepTraces(1, Fraction(5, 3), 0, 0, stats)
            c5 = charges_mod.closed_form(1, p, 0, gl, gr).c5
            level = charges_mod.kac_moody_level(p, Fraction(5, 3), stats)
            res.record(c5 == level, f"level reduction at p={p}, {stats.value}")
    for m in range(-4, 5):
        f = Poly.monomial((m + 1,))
        g = Poly.monomial((-m + 1,))
        val = cocycles_mod.reparam_reparam_cocycle(f, g, 12)
        res.record(val == m ** 3 - m,
                   f"monomial pattern at m={m}: {val} != {m ** 3 - m}")
    return res


def run_all(d_max: int = 2, p_max: int = 3, seed: int = 0,
            fault: bool = False) -> VerifyReport:
    """Run every suite; sweep-size arguments bound the closure and charge
    suites (the sums and delta suites always cover their full ranges)."""
    report = VerifyReport()
    report.suites.append(suite_sums(fault=fault))
    report.suites.append(suite_delta(seed))
    report.suites.append(suite_closures(seed, d_max=min(d_max, 2), p_max=min(p_max, 3)))
    report.suites.append(suite_charges(d_max=min(d_max, 2), p_max=min(p_max, 3)))
    report.suites.append(suite_cocycles(seed))
    return report
