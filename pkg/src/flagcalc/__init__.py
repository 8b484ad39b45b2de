"""Exact symbolic calculus for Schubert-type polynomial families over
formal group laws: the two-parameter family over Z[b], its Schubert and
Grothendieck specialisations, push-forward classes of words, a degenerate
Hecke-algebra oracle, universal degeneracy-locus polynomials and the flag
quotient ring."""

from .rings import (
    CoefficientRing,
    SparsePoly,
    TruncatedSeries,
    ZZ,
    QQ,
    beta_ring,
    lazard_rational,
    RingMismatchError,
    DivisionError,
)
from .perms import Permutation
from .fgl import FormalGroupLaw, make_additive, make_multiplicative, \
    make_universal_rational
from .divdiff import OperatorContext

__all__ = [
    "CoefficientRing", "SparsePoly", "TruncatedSeries", "ZZ", "QQ",
    "beta_ring", "lazard_rational", "RingMismatchError", "DivisionError",
    "Permutation", "FormalGroupLaw", "make_additive", "make_multiplicative",
    "make_universal_rational", "OperatorContext",
]

__version__ = "0.1.0"
