"""Formal group laws: additive, multiplicative and the rational universal law.

A law is a truncated bivariate series F(u, v) = u + v + ... together with
its formal inverse chi(u), satisfying F(u, chi(u)) = 0 modulo degree > D.
The universal law is modelled over Q[m1..mK] through its logarithm
log(t) = t + m1 t^2 + ... + mK t^(K+1); this rational model misses torsion
phenomena but has fully generic low-order coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rings import (
    CoefficientRing,
    SparsePoly,
    TruncatedSeries,
    beta_ring,
    compositional_inverse,
    lazard_rational,
)

__all__ = [
    "FormalGroupLaw",
    "make_additive",
    "make_multiplicative",
    "make_universal_rational",
    "formal_sum",
    "formal_inverse_of",
    "chern_tensor_dual",
]


def _solve_chi(F: TruncatedSeries, ring: CoefficientRing, D: int
               ) -> TruncatedSeries:
    """Order-by-order solution of F(u, chi(u)) = 0.

    Since dF/dv = 1 + (higher), the update chi <- chi - F(u, chi) gains one
    order of accuracy per pass."""
    u = SparsePoly.var(ring, "u")
    chi = TruncatedSeries(-u, D)
    for _ in range(D):
        err = F.substitute_into({"v": chi.body}).body
        if err.is_zero():
            break
        chi = TruncatedSeries(chi.body - err, D)
    return chi


@dataclass(frozen=True)
class FormalGroupLaw:
    ring: CoefficientRing
    F: TruncatedSeries   # in u, v
    chi: TruncatedSeries  # in u
    kind: str            # additive | multiplicative | universal
    D: int

    def sum_series(self, a: SparsePoly, b: SparsePoly) -> SparsePoly:
        """F(a, b) truncated at D; a, b must have zero constant term."""
        for name, p in (("first", a), ("second", b)):
            if not p.constant_term().is_zero():
                raise ValueError(f"{name} argument has a constant term")
        return self.F.substitute_into({"u": a, "v": b}).body

    def inverse_series(self, a: SparsePoly) -> SparsePoly:
        """chi(a) truncated at D; a must have zero constant term."""
        if not a.constant_term().is_zero():
            raise ValueError("argument has a constant term")
        return self.chi.substitute_into({"u": a}).body


def make_additive(D: int, ring: CoefficientRing | None = None
                  ) -> FormalGroupLaw:
    ring = ring or beta_ring()
    u = SparsePoly.var(ring, "u")
    v = SparsePoly.var(ring, "v")
    return FormalGroupLaw(ring, TruncatedSeries(u + v, D),
                          TruncatedSeries(-u, D), "additive", D)


def make_multiplicative(b, D: int, ring: CoefficientRing | None = None
                        ) -> FormalGroupLaw:
    """F(u, v) = u + v - b u v with parameter b (a polynomial or constant)."""
    ring = ring or beta_ring()
    if not isinstance(b, SparsePoly):
        b = SparsePoly.const(ring, b)
    u = SparsePoly.var(ring, "u")
    v = SparsePoly.var(ring, "v")
    F = TruncatedSeries(u + v - b * u * v, D)
    chi = _solve_chi(F, ring, D)
    return FormalGroupLaw(ring, F, chi, "multiplicative", D)


def make_universal_rational(K: int, D: int) -> FormalGroupLaw:
    """The universal law in its rational log model over Q[m1..mK]."""
    if K < D:
        raise ValueError(f"need K >= D log generators (K={K}, D={D})")
    ring = lazard_rational(K)
    t = SparsePoly.var(ring, "t")
    log = t
    for k in range(1, K + 1):
        log = log + SparsePoly.var(ring, f"m{k}") * t ** (k + 1)
    log_s = TruncatedSeries(log, D)
    exp_s = compositional_inverse(log_s, "t")
    u = SparsePoly.var(ring, "u")
    v = SparsePoly.var(ring, "v")
    log_u = log_s.substitute_into({"t": u}).body
    log_v = log_s.substitute_into({"t": v}).body
    F = exp_s.substitute_into({"t": log_u + log_v})
    chi = exp_s.substitute_into({"t": -log_u})
    chi = TruncatedSeries(chi.body, D)
    return FormalGroupLaw(ring, TruncatedSeries(F.body, D), chi,
                          "universal", D)


def formal_sum(fgl: FormalGroupLaw, a: SparsePoly, b: SparsePoly
               ) -> SparsePoly:
    return fgl.sum_series(a, b)


def formal_inverse_of(fgl: FormalGroupLaw, a: SparsePoly) -> SparsePoly:
    return fgl.inverse_series(a)


def chern_tensor_dual(fgl: FormalGroupLaw, x_roots: list, y_roots: list
                      ) -> tuple:
    """Chern polynomial and top Chern class of Hom(E, F) built from roots.

    x_roots are the roots of F, y_roots of E.  Returns
    (prod (1 + F(x_i, chi(y_j)) t), prod F(x_i, chi(y_j))), both truncated
    at D in the root variables; the marker t never counts."""
    ring = fgl.ring
    t = SparsePoly.var(ring, "t")
    one = SparsePoly.const(ring, 1)
    chern = one
    top = one
    for xi in x_roots:
        for yj in y_roots:
            factor = fgl.sum_series(xi, fgl.inverse_series(yj))
            chern = (chern * (one + factor * t)).truncate(
                fgl.D, exclude=("t",))
            top = (top * factor).truncate(fgl.D)
    return chern, top
