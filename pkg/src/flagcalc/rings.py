"""Exact sparse multivariate polynomials and truncated power series.

Coefficients are arbitrary-precision integers or reduced fractions
(``fractions.Fraction``).  A polynomial lives over one of four coefficient
domains:

* ``Integers``       -- plain Z
* ``Rationals``      -- Q
* ``BetaRing``       -- Z[b] with one central generator ``b``
* ``LazardRational`` -- Q[m1, ..., mK]

The generators ``b`` and ``m1..mK`` are stored as ordinary variables inside
the exponent vectors but are *never* counted by truncation: only the
geometric variables (x's, y's, series variables, Chern-class symbols)
contribute to the degree that a ``TruncatedSeries`` bounds.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

__all__ = [
    "CoefficientRing",
    "ZZ",
    "QQ",
    "beta_ring",
    "lazard_rational",
    "RingMismatchError",
    "DivisionError",
    "SparsePoly",
    "variable",
    "const",
    "poly_arith",
    "exact_divide_linear",
    "divide_by_difference",
    "TruncatedSeries",
    "series_reciprocal",
    "compositional_inverse",
]


class RingMismatchError(ValueError):
    """Operands live over different coefficient rings."""


class DivisionError(ArithmeticError):
    """Exact division left a nonzero remainder."""


@dataclass(frozen=True)
class CoefficientRing:
    kind: str  # Integers | Rationals | BetaRing | LazardRational
    K: int = 0  # number of log generators, LazardRational only

    def __post_init__(self):
        if self.kind not in ("Integers", "Rationals", "BetaRing", "LazardRational"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "LazardRational" and self.K < 1:
            raise ValueError("LazardRational needs K >= 1")

    @property
    def rational(self) -> bool:
        return self.kind in ("Rationals", "LazardRational")

    def allows_generator(self, name: str) -> bool:
        if name == "b":
            return self.kind == "BetaRing"
        m = re.fullmatch(r"m(\d+)", name)
        if m:
            return self.kind == "LazardRational" and 1 <= int(m.group(1)) <= self.K

        return True


ZZ = CoefficientRing("Integers")
QQ = CoefficientRing("Rationals")


def beta_ring() -> CoefficientRing:
    return CoefficientRing("BetaRing")


def lazard_rational(K: int) -> CoefficientRing:
    return CoefficientRing("LazardRational", K)


# -- variables ---------------------------------------------------------------

_VAR_RE = re.compile(r"([a-zA-Z]+)(\d*)")

# Ordering of the variable blocks used for the canonical term order:
# x-block < y-block < series/auxiliary block < Chern symbols < generators.
_CATEGORY = {
    "x": 0, "y": 1, "u": 2, "v": 3, "w": 4, "t": 5,
    "c": 6, "d": 7, "b": 8, "m": 9,
}


def _var_key(name: str, _cache: dict = {}) -> tuple:
    key = _cache.get(name)
    if key is None:
        m = _VAR_RE.fullmatch(name)
        if not m:
            raise ValueError(f"bad variable name {name!r}")
        stem, idx = m.group(1), m.group(2)
        cat = _CATEGORY.get(stem, 10)
        key = _cache[name] = (cat, stem, int(idx) if idx else 0)
    return key


def is_coefficient_var(name: str) -> bool:
    """True for the generators (b, m_k) that truncation never counts."""
    return name == "b" or (name.startswith("m") and name[1:].isdigit())


Monomial = tuple  # tuple of (name, exponent) pairs, sorted by _var_key


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    # merge of two sorted exponent vectors
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif _var_key(va) < _var_key(vb):
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _mono_degree(mono: Monomial, exclude: tuple = ()) -> int:
    return sum(e for v, e in mono
               if not is_coefficient_var(v) and v not in exclude)


def _coeff_str(c) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


class SparsePoly:
    """Immutable exact multivariate polynomial over a ``CoefficientRing``."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: CoefficientRing, terms: dict):
        self.ring = ring
        clean = {}
        rational = ring.rational
        for mono, c in terms.items():
            if isinstance(c, Fraction):
                if c.denominator == 1:
                    c = c.numerator
                elif not rational:
                    raise ValueError(
                        f"non-integer coefficient {c} over {ring.kind}")
            else:
                c = int(c)
            if c:
                clean[mono] = c
        self.terms = clean

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(ring: CoefficientRing) -> "SparsePoly":
        return SparsePoly(ring, {})

    @staticmethod
    def const(ring: CoefficientRing, value) -> "SparsePoly":
        return SparsePoly(ring, {(): Fraction(value)})

    @staticmethod
    def var(ring: CoefficientRing, name: str, exp: int = 1) -> "SparsePoly":
        if not ring.allows_generator(name):
            raise RingMismatchError(f"generator {name!r} not in {ring.kind}")
        if exp < 0:
            raise ValueError("negative exponent")
        if exp == 0:
            return SparsePoly.const(ring, 1)
        return SparsePoly(ring, {((name, exp),): 1})

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.const(self.ring, other) if self.ring.rational \
                else SparsePoly(self.ring, {(): other})
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- inspection ----------------------------------------------------------

    def variables(self) -> set:
        return {v for mono in self.terms for v, _ in mono}

    def degree(self, exclude: tuple = ()) -> int:
        """Total degree in the geometric variables (-1 for the zero poly)."""
        if not self.terms:
            return -1
        return max(_mono_degree(m, exclude) for m in self.terms)

    def constant_term(self):
        """Coefficient of the monomial with no geometric variables.

        Returns a SparsePoly (it may still involve b or the m_k)."""
        kept = {m: c for m, c in self.terms.items() if _mono_degree(m) == 0}
        return SparsePoly(self.ring, kept)

    def coeff(self, mono_pairs) -> "int | Fraction":
        mono = tuple(sorted(
            ((v, e) for v, e in mono_pairs if e), key=lambda p: _var_key(p[0])))
        return self.terms.get(mono, 0)

    def homogeneous_part(self, d: int, exclude: tuple = ()) -> "SparsePoly":
        kept = {m: c for m, c in self.terms.items()
                if _mono_degree(m, exclude) == d}
        return SparsePoly(self.ring, kept)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "SparsePoly"):
        if self.ring != other.ring:
            raise RingMismatchError(
                f"{self.ring.kind} vs {other.ring.kind}")

    def _coerce(self, other):
        if isinstance(other, SparsePoly):
            return other
        if isinstance(other, (int, Fraction)):
            return SparsePoly(self.ring, {(): other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = terms.get(mono, 0) + c
        return SparsePoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = terms.get(mono, 0) - c
        return SparsePoly(self.ring, terms)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        self._check(other)
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                terms[m] = terms.get(m, 0) + c1 * c2
        return SparsePoly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = SparsePoly.const(self.ring, 1) if self.ring.rational \
            else SparsePoly(self.ring, {(): 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def truncate(self, bound: int, exclude: tuple = ()) -> "SparsePoly":
        kept = {m: c for m, c in self.terms.items()
                if _mono_degree(m, exclude) <= bound}
        return SparsePoly(self.ring, kept)

    # -- substitution --------------------------------------------------------

    def substitute(self, assignment: dict, ring: CoefficientRing | None = None
                   ) -> "SparsePoly":
        """Evaluate under var -> SparsePoly/number; untouched vars stay."""
        target = ring if ring is not None else self.ring
        images = {}
        for v, val in assignment.items():
            if isinstance(val, SparsePoly):
                if val.ring != target:
                    raise RingMismatchError(
                        f"image of {v} lives over {val.ring.kind}")
                images[v] = val
            else:
                images[v] = SparsePoly(target, {(): Fraction(val)}) \
                    if target.rational else SparsePoly(target, {(): val})
        acc: dict = {}
        # fast path: every image is a monomial (covers variable renames and
        # numeric specialisations), so no polynomial products are needed
        if all(len(img.terms) <= 1 for img in images.values()):
            for mono, c in self.terms.items():
                exps: dict = {}
                dead = False
                for v, e in mono:
                    img = images.get(v)
                    if img is None:
                        exps[v] = exps.get(v, 0) + e
                        continue
                    if not img.terms:
                        dead = True
                        break
                    (im_mono, im_c), = img.terms.items()
                    c = c * im_c ** e
                    for iv, ie in im_mono:
                        exps[iv] = exps.get(iv, 0) + ie * e
                if dead:
                    continue
                m = tuple(sorted(exps.items(), key=lambda p: _var_key(p[0])))
                acc[m] = acc.get(m, 0) + c
            return SparsePoly(target, acc)
        for mono, c in self.terms.items():
            term = SparsePoly(target, {(): c})
            for v, e in mono:
                if v in images:
                    term = term * images[v] ** e
                else:
                    term = term * SparsePoly.var(target, v, e)
            for m2, c2 in term.terms.items():
                acc[m2] = acc.get(m2, 0) + c2
        return SparsePoly(target, acc)

    # -- canonical output ----------------------------------------------------

    def _sorted_terms(self):
        def key(mono):
            deg = sum(e for _, e in mono)
            vec = tuple((_var_key(v), -e) for v, e in mono)
            return (deg, vec)
        return sorted(self.terms.items(), key=lambda mc: key(mc[0]))

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono, c in self._sorted_terms():
            mono_s = " ".join(
                v if e == 1 else f"{v}^{e}" for v, e in mono)
            neg = c < 0
            mag = -c if neg else c
            if not mono_s:
                body = _coeff_str(mag)
            elif mag == 1:
                body = mono_s
            else:
                body = f"{_coeff_str(mag)} {mono_s}"
            if not pieces:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(pieces)

    def to_latex(self) -> str:
        if not self.terms:
            return "0"

        def var_tex(v, e):
            m = _VAR_RE.fullmatch(v)
            stem, idx = m.group(1), m.group(2)
            stem = r"\beta" if stem == "b" else stem
            s = f"{stem}_{{{idx}}}" if idx else stem
            return s if e == 1 else f"{s}^{{{e}}}"

        pieces = []
        for mono, c in self._sorted_terms():
            mono_s = " ".join(var_tex(v, e) for v, e in mono)
            neg = c < 0
            mag = -c if neg else c
            if isinstance(mag, Fraction):
                mag_s = rf"\tfrac{{{mag.numerator}}}{{{mag.denominator}}}"
            else:
                mag_s = str(mag)
            if not mono_s:
                body = mag_s
            elif mag == 1:
                body = mono_s
            else:
                body = f"{mag_s} {mono_s}"
            if not pieces:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(pieces)

    def to_json_obj(self) -> dict:
        vars_ = sorted(self.variables(), key=_var_key)
        terms = []
        for mono, c in self._sorted_terms():
            d = dict(mono)
            terms.append({
                "exponents": [d.get(v, 0) for v in vars_],
                "coeff": _coeff_str(c),
            })
        return {"vars": vars_, "terms": terms}

    def __repr__(self):
        return f"SparsePoly({self.to_text()})"


# -- module-level helpers ----------------------------------------------------

def variable(ring: CoefficientRing, name: str) -> SparsePoly:
    return SparsePoly.var(ring, name)


def const(ring: CoefficientRing, value) -> SparsePoly:
    return SparsePoly.const(ring, value)


def poly_arith(a: SparsePoly, b: SparsePoly, op: str) -> SparsePoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def divide_by_difference(p: SparsePoly, va: str, vb: str) -> SparsePoly:
    """Exact division of p by (va - vb); raises DivisionError otherwise.

    Synthetic division with va as the main variable: writing
    p = sum_a P_a va^a, the quotient satisfies q_{a-1} = P_a + vb*q_a
    read off from the top coefficient downwards."""
    ring = p.ring
    by_exp: dict[int, dict] = {}
    for mono, c in p.terms.items():
        rest = None
        a = 0
        for pos, (v, e) in enumerate(mono):
            if v == va:
                a = e
                rest = mono[:pos] + mono[pos + 1:]
                break
        if rest is None:
            rest = mono
        level = by_exp.get(a)
        if level is None:
            level = by_exp[a] = {}
        level[rest] = level.get(rest, 0) + c
    if not by_exp:
        return SparsePoly.zero(ring)
    top = max(by_exp)
    vb_mono = ((vb, 1),)
    q: list[dict] = [{} for _ in range(top)]
    carry: dict = {}
    for a in range(top, 0, -1):
        level = dict(by_exp.get(a, {}))
        for mono, c in carry.items():
            level[mono] = level.get(mono, 0) + c
        q[a - 1] = level
        carry = {}
        for mono, c in level.items():
            if c:
                carry[_mono_mul(mono, vb_mono)] = c
    remainder = dict(by_exp.get(0, {}))
    for mono, c in carry.items():
        remainder[mono] = remainder.get(mono, 0) + c
    if any(c for c in remainder.values()):
        raise DivisionError(f"not divisible by ({va} - {vb})")
    out: dict = {}
    for a, level in enumerate(q):
        va_mono = ((va, a),) if a else ()
        for mono, c in level.items():
            if c:
                m = _mono_mul(mono, va_mono)
                out[m] = out.get(m, 0) + c
    return SparsePoly(ring, out)


def exact_divide_linear(p: SparsePoly, i: int) -> SparsePoly:
    """Divide p exactly by (x_i - x_{i+1})."""
    return divide_by_difference(p, f"x{i}", f"x{i + 1}")


# -- truncated power series --------------------------------------------------

@dataclass(frozen=True)
class TruncatedSeries:
    """A polynomial representing a power series modulo degree > bound.

    Only geometric variables count towards the bound; the generators b
    and m_k live in degree 0 for truncation purposes."""

    body: SparsePoly
    bound: int
    exclude: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "body",
                           self.body.truncate(self.bound, self.exclude))

    def _check(self, other: "TruncatedSeries"):
        if self.bound != other.bound:
            raise ValueError("truncation bounds differ")

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            other = other.body
        return TruncatedSeries(self.body + other, self.bound, self.exclude)

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            other = other.body
        return TruncatedSeries(self.body - other, self.bound, self.exclude)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            other = other.body
        return TruncatedSeries(self.body * other, self.bound, self.exclude)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.bound == other.bound and self.body == other.body
        return self.body == other

    def substitute_into(self, assignment: dict) -> "TruncatedSeries":
        """Substitute polynomials for variables, re-truncating.

        Every image must have zero constant term, so the composite is a
        well-defined series."""
        for v, img in assignment.items():
            if isinstance(img, SparsePoly) and not img.constant_term().is_zero():
                raise ValueError(f"image of {v} has a constant term")
        ring = self.body.ring
        # evaluate term by term, truncating every intermediate power so the
        # working size stays bounded
        powers: dict = {v: {0: SparsePoly(ring, {(): 1})}
                        for v in assignment}

        def power(v, e):
            cache = powers[v]
            have = max(cache)
            while have < e:
                img = assignment[v]
                if not isinstance(img, SparsePoly):
                    img = SparsePoly(ring, {(): img})
                cache[have + 1] = (cache[have] * img).truncate(
                    self.bound, self.exclude)
                have += 1
            return cache[e]

        acc: dict = {}
        for mono, c in self.body.terms.items():
            term = SparsePoly(ring, {(): c})
            for v, e in mono:
                if v in assignment:
                    term = (term * power(v, e)).truncate(
                        self.bound, self.exclude)
                else:
                    term = term * SparsePoly.var(ring, v, e)
            for m2, c2 in term.terms.items():
                acc[m2] = acc.get(m2, 0) + c2
        return TruncatedSeries(SparsePoly(ring, acc),
                               self.bound, self.exclude)


def series_reciprocal(s: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse modulo degree > bound.

    Requires the degree-0 part to be a unit constant: +-1 over Integers
    and BetaRing, any nonzero rational otherwise."""
    ring = s.body.ring
    c0 = s.body.constant_term()
    c = c0.coeff(())
    if c == 0 or c0 != SparsePoly(ring, {(): c}):
        raise ValueError("constant term is not a unit constant")
    if not ring.rational and c not in (1, -1):
        raise ValueError(f"{c} is not a unit over {ring.kind}")
    cinv = Fraction(1, c) if ring.rational else c  # c = +-1 otherwise
    # s = c(1 - r) with r of positive degree: invert via the geometric series
    r = TruncatedSeries(SparsePoly(ring, {(): 1}) - s.body * cinv,
                        s.bound, s.exclude)
    acc = TruncatedSeries(SparsePoly(ring, {(): 1}), s.bound, s.exclude)
    power = acc
    for _ in range(s.bound):
        power = power * r
        if power.body.is_zero():
            break
        acc = acc + power
    return TruncatedSeries(acc.body * cinv, s.bound, s.exclude)


def compositional_inverse(s: TruncatedSeries, var: str = "t") -> TruncatedSeries:
    """Inverse under composition of a single-variable series t + O(t^2).

    Newton-style iteration g <- g - (s(g) - t); each pass gains one order
    of accuracy, so bound passes suffice."""
    ring = s.body.ring
    vars_ = {v for v in s.body.variables() if not is_coefficient_var(v)}
    if vars_ - {var}:
        raise ValueError(f"series involves variables besides {var}")
    if s.body.coeff(((var, 1),)) != 1:
        raise ValueError("linear coefficient must be 1")
    if not s.body.constant_term().is_zero():
        raise ValueError("nonzero constant term")
    t = SparsePoly.var(ring, var)
    g = TruncatedSeries(t, s.bound, s.exclude)
    for _ in range(s.bound):
        err = s.substitute_into({var: g.body}).body - t
        if err.is_zero():
            break
        g = TruncatedSeries(g.body - err, s.bound, s.exclude)
    return g
