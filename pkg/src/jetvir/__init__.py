"""jetvir: exact-arithmetic calculus of truncated jets.

The library realizes degree-truncated Taylor jets of free fields, the jet
delta kernel and its smearing calculus, classical jet representations of
current and diffeomorphism algebras, a double-Wick-contraction engine that
measures the eight abelian anomaly charges c1..c8, the closed binomial
formulas for those charges, and residue-form evaluation of the associated
Lie-algebra cocycles along Laurent trajectories.

All arithmetic is exact (integers and `fractions.Fraction`); no floating
point is used anywhere in the core.
"""

__version__ = "0.1.0"

__all__ = [
    "multiindex",
    "exactpoly",
    "jetsums",
    "deltacalc",
    "jetreps",
    "wickcocycle",
    "charges",
    "cocycles",
]
