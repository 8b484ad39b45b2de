"""The ring of the full flag bundle as a computable quotient:
base[x_1..x_n] / (e_i(x) - c_i).

Reduction uses the closed-form basis G_k = sum_i (-1)^i c_i h_{M-i}(x_1..x_k)
with M = n - k + 1, whose leading monomials x_k^(n-k+1) are pairwise coprime;
by Buchberger's first criterion this is already a Groebner basis, so the
irreducible form is the unique normal form.  Normal-form monomials satisfy
a_k <= n - k.  Variables other than x_1..x_n (the y-roots, generators) are
treated as base-ring constants throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rings import CoefficientRing, SparsePoly

__all__ = ["FlagRingPresentation"]


def _complete_homogeneous(ring, m: int, names: list) -> SparsePoly:
    """h_m(names): sum of all monomials of total degree m."""
    if m == 0:
        return SparsePoly.const(ring, 1)
    polys = [SparsePoly.var(ring, v) for v in names]
    # h_m over k variables via the recursion on the last variable
    table = [SparsePoly.const(ring, 1)] + [SparsePoly.zero(ring)] * m
    for v in polys:
        for d in range(1, m + 1):
            table[d] = table[d] + v * table[d - 1]
    return table[m]


@dataclass(frozen=True)
class FlagRingPresentation:
    n: int
    base_chern: tuple  # c_1..c_n as SparsePoly over ring
    ring: CoefficientRing
    _basis: tuple = field(init=False, repr=False)

    def __post_init__(self):
        if len(self.base_chern) != self.n:
            raise ValueError(f"need n={self.n} base Chern classes")
        basis = []
        for k in range(1, self.n + 1):
            M = self.n - k + 1
            names = [f"x{j}" for j in range(1, k + 1)]
            g = _complete_homogeneous(self.ring, M, names)
            sign = -1
            for i in range(1, M + 1):
                g = g + sign * self.base_chern[i - 1] * \
                    _complete_homogeneous(self.ring, M - i, names)
                sign = -sign
            basis.append((k, M, g))
        object.__setattr__(self, "_basis", tuple(basis))
        object.__setattr__(self, "_nf_cache", {})

    @staticmethod
    def trivial(n: int, ring: CoefficientRing) -> "FlagRingPresentation":
        zeros = tuple(SparsePoly.zero(ring) for _ in range(n))
        return FlagRingPresentation(n, zeros, ring)

    @staticmethod
    def symbolic(n: int, ring: CoefficientRing) -> "FlagRingPresentation":
        cs = tuple(SparsePoly.var(ring, f"c{i}") for i in range(1, n + 1))
        return FlagRingPresentation(n, cs, ring)

    # -- reduction -----------------------------------------------------------

    def _normal_form_of_monomial(self, mono) -> SparsePoly:
        """Memoised normal form of a single monomial.

        Rewrites the highest reducible power x_k^M via x_k^M = G_k - tail
        and recurses on the resulting smaller monomials."""
        cached = self._nf_cache.get(mono)
        if cached is not None:
            return cached
        hit = None
        for k, M, _ in reversed(self._basis):
            name = f"x{k}"
            for v, e in mono:
                if v == name and e >= M:
                    hit = (k, M)
                    break
            if hit:
                break
        if hit is None:
            out = SparsePoly(self.ring, {mono: 1})
        else:
            k, M = hit
            name = f"x{k}"
            rest = tuple((v, e - M if v == name else e)
                         for v, e in mono if v != name or e > M)
            g = self._basis[k - 1][2]
            tail = SparsePoly(self.ring, {((name, M),): 1}) - g
            # x_k^M = tail modulo the ideal
            spread = SparsePoly(self.ring, {rest: 1}) * tail
            out = SparsePoly.zero(self.ring)
            for m2, c2 in spread.terms.items():
                out = out + c2 * self._normal_form_of_monomial(m2)
        self._nf_cache[mono] = out
        return out

    def reduce(self, p: SparsePoly) -> SparsePoly:
        acc: dict = {}
        for mono, c in p.terms.items():
            for m2, c2 in self._normal_form_of_monomial(mono).terms.items():
                acc[m2] = acc.get(m2, 0) + c * c2
        return SparsePoly(p.ring, acc)

    def equal_in_ring(self, p: SparsePoly, q: SparsePoly) -> bool:
        return self.reduce(p - q).is_zero()

    def normal_form_monomials(self) -> list:
        """All x-monomials with a_k <= n - k; there are n! of them."""
        from itertools import product
        out = []
        for exps in product(*[range(self.n - k + 1)
                              for k in range(1, self.n + 1)]):
            mono = tuple((f"x{k}", e)
                         for k, e in enumerate(exps, start=1) if e)
            out.append(mono)
        return out
