"""The named polynomial families: the two-parameter-set family h_w over
Z[b], its Schubert / Grothendieck specialisations, and the push-forward
classes attached to words over an arbitrary formal group law.
"""

from __future__ import annotations

from .divdiff import OperatorContext
from .fgl import FormalGroupLaw
from .perms import Permutation, apply_word, lex_smallest_reduced_word, longest_element
from .rings import SparsePoly, beta_ring

__all__ = [
    "h_top",
    "beta_poly",
    "beta_poly_via_word",
    "double_schubert",
    "double_grothendieck",
    "bott_samelson_initial",
    "bott_samelson_class",
]

_BETA_CACHE: dict = {}
_BS_CACHE: dict = {}


def h_top(n: int) -> SparsePoly:
    """prod_{i+j <= n} (x_i + y_j + b x_i y_j) over Z[b]."""
    ring = beta_ring()
    b = SparsePoly.var(ring, "b")
    out = SparsePoly.const(ring, 1)
    for i in range(1, n):
        for j in range(1, n - i + 1):
            xi = SparsePoly.var(ring, f"x{i}")
            yj = SparsePoly.var(ring, f"y{j}")
            out = out * (xi + yj + b * xi * yj)
    return out


def beta_poly_via_word(w: Permutation, word: tuple) -> SparsePoly:
    """Evaluate the family member for w along an explicit reduced word of
    w0*w; the result must not depend on the word (braid relations)."""
    n = w.n
    target = longest_element(n).compose(w)
    if apply_word(word, n) != target or len(word) != target.length():
        raise ValueError("word is not a reduced word of w0*w")
    ctx = OperatorContext(n)
    return ctx.compose_word(word, h_top(n), mode="beta")


def beta_poly(w: Permutation) -> SparsePoly:
    """h_w, computed along the lex-smallest reduced word of w0*w."""
    key = w
    if key in _BETA_CACHE:
        return _BETA_CACHE[key]
    n = w.n
    word = lex_smallest_reduced_word(longest_element(n).compose(w))
    out = OperatorContext(n).compose_word(word, h_top(n), mode="beta")
    _BETA_CACHE[key] = out
    return out


def double_schubert(w: Permutation) -> SparsePoly:
    """Specialise b -> 0 and y_j -> -y_j; lands over Z."""
    from .rings import ZZ
    p = beta_poly(w)
    assignment = {"b": 0}
    for j in range(1, w.n + 1):
        assignment[f"y{j}"] = -SparsePoly.var(ZZ, f"y{j}")
    return p.substitute(assignment, ring=ZZ)


def double_grothendieck(w: Permutation) -> SparsePoly:
    """Specialise b -> -1; lands over Z."""
    from .rings import ZZ
    return beta_poly(w).substitute({"b": -1}, ring=ZZ)


def bott_samelson_initial(fgl: FormalGroupLaw, n: int) -> SparsePoly:
    """prod_{k+j <= n} F(x_k, y_j) truncated at D.

    The y_j slots stand for already-inverted first Chern classes of the
    subquotient line bundles; compose with the formal inverse per variable
    when holding un-inverted roots."""
    out = SparsePoly.const(fgl.ring, 1)
    for k in range(1, n):
        for j in range(1, n - k + 1):
            xk = SparsePoly.var(fgl.ring, f"x{k}")
            yj = SparsePoly.var(fgl.ring, f"y{j}")
            out = (out * fgl.sum_series(xk, yj)).truncate(fgl.D)
    return out


def bott_samelson_class(fgl: FormalGroupLaw, word: tuple, n: int
                        ) -> SparsePoly:
    """Apply the word's generalised operators to the initial class.

    Results are word-dependent in general: no deduplication across words
    with equal products."""
    key = (fgl.kind, fgl.ring, n, tuple(word), fgl.D)
    if key in _BS_CACHE:
        return _BS_CACHE[key]
    for i in word:
        if not 1 <= i <= n - 1:
            raise ValueError(f"index {i} out of range for n={n}")
    ctx = OperatorContext(n, fgl=fgl)
    out = ctx.compose_word(tuple(word), bott_samelson_initial(fgl, n),
                           mode="fgl")
    _BS_CACHE[key] = out
    return out
