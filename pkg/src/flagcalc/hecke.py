"""The degenerate Hecke algebra on generators u_i with u_i^2 = b u_i,
braid and commutation relations, over Z[b][x, y].

Elements are kept in the basis {u_w : w in S_n} at all times; products of
generators are normalised eagerly through the rewriting rule
u_w u_i = u_{w s_i} if the length goes up, b u_w otherwise.  Equality is
then a plain map comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perms import Permutation, all_permutations, identity
from .rings import SparsePoly, beta_ring

__all__ = [
    "HeckeElement",
    "hecke_one",
    "h_factor",
    "oplus",
    "build_H",
    "build_Htilde",
    "build_Hxy",
    "alternative_product",
    "coefficient",
    "verify_identities",
]

_RING = beta_ring()


def oplus(a: SparsePoly, b: SparsePoly) -> SparsePoly:
    """a + b + beta*a*b, the multiplicative formal sum."""
    return a + b + SparsePoly.var(_RING, "b") * a * b


@dataclass(frozen=True)
class HeckeElement:
    n: int
    coeffs: tuple  # tuple of (Permutation, SparsePoly), normalised

    @staticmethod
    def from_dict(n: int, d: dict) -> "HeckeElement":
        items = tuple(sorted(
            ((w, c) for w, c in d.items() if not c.is_zero()),
            key=lambda wc: wc[0].images))
        return HeckeElement(n, items)

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        if self.n != other.n:
            raise ValueError("ranks differ")
        d = self.as_dict()
        for w, c in other.coeffs:
            d[w] = d.get(w, SparsePoly.zero(_RING)) + c
        return HeckeElement.from_dict(self.n, d)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + other.scale(SparsePoly.const(_RING, -1))

    def scale(self, c: SparsePoly) -> "HeckeElement":
        return HeckeElement.from_dict(
            self.n, {w: c * p for w, p in self.coeffs})

    def mul_by_generator(self, i: int) -> "HeckeElement":
        """Right multiplication by u_i via the length-based rewriting rule."""
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"index {i} out of range for n={self.n}")
        b = SparsePoly.var(_RING, "b")
        d: dict = {}
        for w, c in self.coeffs:
            ws = w.right_multiply(i)
            if ws.length() > w.length():
                d[ws] = d.get(ws, SparsePoly.zero(_RING)) + c
            else:
                d[w] = d.get(w, SparsePoly.zero(_RING)) + b * c
        return HeckeElement.from_dict(self.n, d)

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        if self.n != other.n:
            raise ValueError("ranks differ")
        from .perms import lex_smallest_reduced_word
        out: dict = {}
        for w2, c2 in other.coeffs:
            word = lex_smallest_reduced_word(w2)
            term = self.scale(c2)
            for i in word:
                term = term.mul_by_generator(i)
            for w, c in term.coeffs:
                out[w] = out.get(w, SparsePoly.zero(_RING)) + c
        return HeckeElement.from_dict(self.n, out)

    def is_zero(self) -> bool:
        return not self.coeffs


def hecke_one(n: int) -> HeckeElement:
    return HeckeElement.from_dict(
        n, {identity(n): SparsePoly.const(_RING, 1)})


def hecke_generator(n: int, i: int) -> HeckeElement:
    return hecke_one(n).mul_by_generator(i)


def h_factor(n: int, i: int, c: SparsePoly) -> HeckeElement:
    """h_i(c) = 1 + c * u_i."""
    return hecke_one(n) + hecke_generator(n, i).scale(c)


def _alpha(n: int, i: int, x: SparsePoly) -> HeckeElement:
    """h_{n-1}(x) ... h_i(x), descending index order."""
    out = hecke_one(n)
    for j in range(n - 1, i - 1, -1):
        out = out * h_factor(n, j, x)
    return out


def _alpha_tilde(n: int, i: int, y: SparsePoly) -> HeckeElement:
    """h_i(y) ... h_{n-1}(y), ascending index order."""
    out = hecke_one(n)
    for j in range(i, n):
        out = out * h_factor(n, j, y)
    return out


def build_H(n: int) -> HeckeElement:
    """alpha_1(x_1) ... alpha_{n-1}(x_{n-1})."""
    out = hecke_one(n)
    for i in range(1, n):
        out = out * _alpha(n, i, SparsePoly.var(_RING, f"x{i}"))
    return out


def build_Htilde(n: int) -> HeckeElement:
    """alpha~_{n-1}(y_{n-1}) ... alpha~_1(y_1)."""
    out = hecke_one(n)
    for i in range(n - 1, 0, -1):
        out = out * _alpha_tilde(n, i, SparsePoly.var(_RING, f"y{i}"))
    return out


def build_Hxy(n: int) -> HeckeElement:
    return build_Htilde(n) * build_H(n)


def alternative_product(n: int) -> HeckeElement:
    """The double product of h_{i+j-1}(x_i (+) y_j), multiplied from left
    to right with i ascending and j descending from n-i to 1."""
    out = hecke_one(n)
    for i in range(1, n):
        for j in range(n - i, 0, -1):
            c = oplus(SparsePoly.var(_RING, f"x{i}"),
                      SparsePoly.var(_RING, f"y{j}"))
            out = out * h_factor(n, i + j - 1, c)
    return out


def coefficient(e: HeckeElement, w: Permutation) -> SparsePoly:
    for v, c in e.coeffs:
        if v == w:
            return c
    return SparsePoly.zero(_RING)


# -- verification suite -------------------------------------------------------

def _phi_coefficientwise(e: HeckeElement, i: int) -> HeckeElement:
    from .divdiff import OperatorContext
    ctx = OperatorContext(e.n)
    return HeckeElement.from_dict(
        e.n, {w: ctx.phi_beta(i, c) for w, c in e.coeffs})


def verify_identities(n: int) -> list:
    """Check the defining and structural identities of the algebra at
    rank n; returns a list of {"name": ..., "ok": bool} certificates."""
    from .families import beta_poly

    results = []

    def record(name, ok):
        results.append({"name": name, "ok": bool(ok)})

    x = SparsePoly.var(_RING, "x1")
    y = SparsePoly.var(_RING, "y1")

    # defining relations on basis elements
    ok = True
    for w in all_permutations(n):
        e = HeckeElement.from_dict(n, {w: SparsePoly.const(_RING, 1)})
        for i in range(1, n):
            b = SparsePoly.var(_RING, "b")
            lhs = e.mul_by_generator(i).mul_by_generator(i)
            rhs = e.mul_by_generator(i).scale(b)
            ok = ok and lhs == rhs
            for j in range(1, n):
                if abs(i - j) >= 2:
                    ok = ok and (e.mul_by_generator(i).mul_by_generator(j)
                                 == e.mul_by_generator(j).mul_by_generator(i))
            if i + 1 < n:
                lhs = (e.mul_by_generator(i).mul_by_generator(i + 1)
                       .mul_by_generator(i))
                rhs = (e.mul_by_generator(i + 1).mul_by_generator(i)
                       .mul_by_generator(i + 1))
                ok = ok and lhs == rhs
    record("generator relations", ok)

    if n >= 2:
        record("h_i(x) h_i(y) = h_i(x (+) y)",
               h_factor(n, 1, x) * h_factor(n, 1, y)
               == h_factor(n, 1, oplus(x, y)))
    if n >= 3:
        lhs = (h_factor(n, 1, x) * h_factor(n, 2, oplus(x, y))
               * h_factor(n, 1, y))
        rhs = (h_factor(n, 2, y) * h_factor(n, 1, oplus(x, y))
               * h_factor(n, 2, x))
        record("Yang-Baxter for h-factors", lhs == rhs)

    # commutation of the alpha blocks
    ok = True
    for i in range(1, n):
        a_x = _alpha(n, i, x)
        a_y = _alpha(n, i, y)
        at_y = _alpha_tilde(n, i, y)
        ok = ok and a_x * a_y == a_y * a_x
        ok = ok and a_x * at_y == at_y * a_x
    record("alpha commutation", ok)

    # exchange identity for the mixed products
    ok = True
    for i in range(1, n):
        lhs = hecke_one(n)
        for k in range(n - 1, i - 1, -1):
            lhs = lhs * _alpha_tilde(n, k, SparsePoly.var(_RING, f"y{k}"))
        lhs = lhs * _alpha(n, i, x)
        rhs = hecke_one(n)
        for k in range(n - 1, i - 1, -1):
            rhs = rhs * h_factor(
                n, k, oplus(x, SparsePoly.var(_RING, f"y{k}")))
        for k in range(n - 1, i, -1):
            rhs = rhs * _alpha_tilde(
                n, k, SparsePoly.var(_RING, f"y{k - 1}"))
        ok = ok and lhs == rhs
    record("exchange identity", ok)

    record("alternative product equals H(x, y)",
           build_Hxy(n) == alternative_product(n))

    # operator identity: phi_i H = H u_i - b H, coefficient-wise
    H = build_Hxy(n)
    b = SparsePoly.var(_RING, "b")
    ok = True
    for i in range(1, n):
        ok = ok and (_phi_coefficientwise(H, i)
                     == H.mul_by_generator(i) - H.scale(b))
    record("divided-difference identity on H(x, y)", ok)

    ok = True
    for w in all_permutations(n):
        ok = ok and coefficient(H, w) == beta_poly(w)
    record("coefficients reproduce the recursive family", ok)

    return results
