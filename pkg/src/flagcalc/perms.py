"""Symmetric-group combinatorics: permutations, words, reduced words.

Permutations are value objects in one-line notation (1-based images).
Words are plain tuples of indices in {1, ..., n-1}; many words map to one
permutation and they are never canonicalised.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _it_perms

__all__ = [
    "Permutation",
    "identity",
    "longest_element",
    "transposition",
    "apply_word",
    "is_minimal",
    "all_reduced_words",
    "lex_smallest_reduced_word",
    "all_permutations",
    "nu_triple",
    "rank_function",
]


@dataclass(frozen=True)
class Permutation:
    images: tuple  # (w(1), ..., w(n))

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def length(self) -> int:
        """Number of inversions."""
        im = self.images
        return sum(1 for i in range(len(im)) for j in range(i + 1, len(im))
                   if im[i] > im[j])

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """self o other: i -> self(other(i))."""
        if self.n != other.n:
            raise ValueError("sizes differ")
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def right_multiply(self, i: int) -> "Permutation":
        """self * s_i (swap values in positions i, i+1)."""
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"index {i} out of range for S_{self.n}")
        im = list(self.images)
        im[i - 1], im[i] = im[i], im[i - 1]
        return Permutation(tuple(im))

    def right_descents(self) -> list:
        return [i for i in range(1, self.n)
                if self.images[i - 1] > self.images[i]]

    def embed(self, n: int) -> "Permutation":
        """View inside S_n for n >= self.n, fixing the new points."""
        if n < self.n:
            raise ValueError("cannot shrink")
        return Permutation(self.images + tuple(range(self.n + 1, n + 1)))

    def one_line(self) -> str:
        return " ".join(str(v) for v in self.images)

    @staticmethod
    def from_one_line(text: str) -> "Permutation":
        return Permutation(tuple(int(tok) for tok in text.replace(",", " ").split()))

    def __repr__(self):
        return f"Permutation({self.one_line()})"


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest_element(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def transposition(n: int, i: int) -> Permutation:
    return identity(n).right_multiply(i)


def apply_word(word: tuple, n: int) -> Permutation:
    """Product s_{i_1} ... s_{i_l} in S_n."""
    w = identity(n)
    for i in word:
        w = w.right_multiply(i)
    return w


def is_minimal(word: tuple, n: int) -> bool:
    return len(word) == apply_word(word, n).length()


@lru_cache(maxsize=None)
def all_reduced_words(w: Permutation) -> tuple:
    """All reduced words for w, by descent-driven depth-first search.

    Peeling a right descent i off w leaves w*s_i of length l(w)-1, so every
    reduced word arises as (word of w*s_i) + (i)."""
    if w.length() == 0:
        return ((),)
    words = []
    for i in w.right_descents():
        shorter = w.right_multiply(i)
        words.extend(prefix + (i,) for prefix in all_reduced_words(shorter))
    return tuple(words)


def lex_smallest_reduced_word(w: Permutation) -> tuple:
    word = []
    w = Permutation(w.images)
    # greedy: the lex-smallest word starts with the smallest left descent
    # of w; strip from the left until the identity remains
    while True:
        des = [i for i in range(1, w.n)
               if w.inverse().images[i - 1] > w.inverse().images[i]]
        if not des:
            return tuple(word)
        i = min(des)
        word.append(i)
        w = transposition(w.n, i).compose(w)


def all_permutations(n: int):
    for im in _it_perms(range(1, n + 1)):
        yield Permutation(im)


def nu_triple(t: tuple) -> Permutation:
    """The Grassmannian-type permutation attached to a triple (s, t, u).

    Two-line display: 1..u fixed, positions u+1..t map to s+1..s+t-u and
    positions t+1..s+t-u map to u+1..s.  Requires u <= min(s, t)."""
    s, tt, u = t
    if not (0 <= u <= min(s, tt)):
        raise ValueError(f"triple {t} violates u <= min(s, t)")
    n = s + tt - u
    if n == 0:
        raise ValueError("empty triple")
    images = list(range(1, u + 1))
    images += list(range(s + 1, s + tt - u + 1))
    images += list(range(u + 1, s + 1))
    return Permutation(tuple(images))


def rank_function(w: Permutation):
    """r(i, j) = #{l <= j : w(l) <= i}."""
    def r(i: int, j: int) -> int:
        if not (1 <= i <= w.n and 1 <= j <= w.n):
            raise ValueError(f"({i},{j}) out of range for S_{w.n}")
        return sum(1 for l in range(1, j + 1) if w(l) <= i)
    return r
