"""Divided-difference operators: sigma_i, phi_i, their specialisations and
the generalised operators attached to a formal group law.

The x-block denominator (x_i - x_{i+1}) is always split off symbolically
and removed with an exact division, so the only inexact step for a general
law is the final truncation at the context bound D.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fgl import FormalGroupLaw
from .rings import (
    CoefficientRing,
    SparsePoly,
    TruncatedSeries,
    beta_ring,
    divide_by_difference,
    series_reciprocal,
)

__all__ = ["OperatorContext", "braid_check"]


@dataclass(frozen=True)
class OperatorContext:
    """Operators act on polynomials in x_1..x_n over a fixed ring.

    ``fgl`` is only needed for the generalised operators; D bounds the
    truncation they introduce."""

    n: int
    ring: CoefficientRing | None = None
    fgl: FormalGroupLaw | None = None
    D: int | None = None

    def __post_init__(self):
        if self.ring is None:
            object.__setattr__(
                self, "ring",
                self.fgl.ring if self.fgl is not None else beta_ring())
        if self.D is None and self.fgl is not None:
            object.__setattr__(self, "D", self.fgl.D)

    def _check_index(self, i: int):
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"index {i} out of range for n={self.n}")

    # -- elementary operators ------------------------------------------------

    def swap(self, i: int, p: SparsePoly) -> SparsePoly:
        self._check_index(i)
        xi = SparsePoly.var(p.ring, f"x{i}")
        xi1 = SparsePoly.var(p.ring, f"x{i + 1}")
        return p.substitute({f"x{i}": xi1, f"x{i + 1}": xi})

    def _phi_with_beta(self, i: int, p: SparsePoly, beta) -> SparsePoly:
        self._check_index(i)
        one = SparsePoly.const(p.ring, 1)
        if not isinstance(beta, SparsePoly):
            beta = SparsePoly.const(p.ring, beta)
        q = (one + beta * SparsePoly.var(p.ring, f"x{i + 1}")) * p
        numerator = q - self.swap(i, q)
        return divide_by_difference(numerator, f"x{i}", f"x{i + 1}")

    def phi_beta(self, i: int, p: SparsePoly) -> SparsePoly:
        """((1 + b x_{i+1}) p - (1 + b x_i) sigma_i p) / (x_i - x_{i+1})."""
        return self._phi_with_beta(i, p, SparsePoly.var(p.ring, "b"))

    def partial(self, i: int, p: SparsePoly) -> SparsePoly:
        """The classical divided difference (beta = 0)."""
        return self._phi_with_beta(i, p, 0)

    def pi_op(self, i: int, p: SparsePoly) -> SparsePoly:
        """The isobaric divided difference (beta = -1)."""
        return self._phi_with_beta(i, p, -1)

    def phi_param(self, i: int, p: SparsePoly, beta) -> SparsePoly:
        """phi with an explicit parameter (polynomial or constant)."""
        return self._phi_with_beta(i, p, beta)

    # -- generalised operator ------------------------------------------------

    def _denominator_unit(self, i: int) -> SparsePoly:
        """The reciprocal of the unit g with F(x_i, chi(x_{i+1})) =
        (x_i - x_{i+1}) g, truncated at D - 1."""
        fgl = self.fgl
        if fgl is None:
            raise ValueError("context has no formal group law")
        xi = SparsePoly.var(fgl.ring, f"x{i}")
        xi1 = SparsePoly.var(fgl.ring, f"x{i + 1}")
        denom = fgl.sum_series(xi, fgl.inverse_series(xi1))
        g = divide_by_difference(denom, f"x{i}", f"x{i + 1}")
        ginv = series_reciprocal(TruncatedSeries(g, self.D - 1))
        return ginv.body

    def A_op(self, i: int, p: SparsePoly) -> SparsePoly:
        """(1 + sigma_i)(p / F(x_i, chi(x_{i+1}))) modulo degree > D."""
        self._check_index(i)
        ginv = self._denominator_unit(i)
        r = (p * ginv).truncate(self.D + 1)
        numerator = r - self.swap(i, r)
        out = divide_by_difference(numerator, f"x{i}", f"x{i + 1}")
        return out.truncate(self.D)

    # -- words ---------------------------------------------------------------

    def apply(self, i: int, p: SparsePoly, mode: str = "beta") -> SparsePoly:
        if mode == "beta":
            return self.phi_beta(i, p)
        if mode == "partial":
            return self.partial(i, p)
        if mode == "pi":
            return self.pi_op(i, p)
        if mode == "fgl":
            return self.A_op(i, p)
        raise ValueError(f"unknown mode {mode!r}")

    def compose_word(self, word: tuple, p: SparsePoly, mode: str = "beta"
                     ) -> SparsePoly:
        """Apply the operator for i_1 first, then i_2, and so on."""
        for i in word:
            p = self.apply(i, p, mode)
        return p


def braid_check(ctx: OperatorContext, i: int, samples, mode: str = "beta"
                ) -> dict:
    """Compare O_i O_{i+1} O_i with O_{i+1} O_i O_{i+1} on sample inputs.

    Returns {"holds": bool, "witness": poly-or-None, "input": sample-or-None}
    with the difference of the two sides as witness on first failure."""
    ctx._check_index(i + 1)
    for p in samples:
        lhs = ctx.compose_word((i, i + 1, i), p, mode)
        rhs = ctx.compose_word((i + 1, i, i + 1), p, mode)
        diff = lhs - rhs
        if not diff.is_zero():
            return {"holds": False, "witness": diff, "input": p}
    return {"holds": True, "witness": None, "input": None}
