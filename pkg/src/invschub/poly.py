"""
Sparse polynomials over the integers in x_1, x_2, ... and Schubert polynomials.

A monomial is a tuple of exponents ``(e_1, ..., e_m)`` with trailing zeros
stripped, so ``()`` is the constant monomial.  Polynomials are immutable and
compare equal exactly when their term maps agree.

>>> x1, x2 = Poly.var(1), Poly.var(2)
>>> str(x1 * (x1 + x2))
'x1^2 + x1*x2'
>>> str(schubert(Permutation.parse("312")))
'x1^2'
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Mapping

from .perm import Permutation, Transposition, compose, covers, descents, inverse, reduced_word

__all__ = [
    "Monomial", "Poly", "act", "ddiff", "ddiff_word", "schubert",
    "schubert_by_ddiff", "schubert_cache_info", "set_schubert_cache_limit",
    "staircase",
    "transition_perm",
]

Monomial = tuple[int, ...]


def _trim(exps) -> Monomial:
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, e in enumerate(b):
        out[k] += e
    return tuple(out)


class Poly:
    """An element of Z[x_1, x_2, ...]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        clean: dict[Monomial, int] = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    key = _trim(mono)
                    if any(e < 0 for e in key):
                        raise ValueError(f"negative exponent in {mono}")
                    clean[key] = clean.get(key, 0) + int(c)
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, int]) -> Poly:
        # trusted constructor: keys trimmed, coefficients nonzero
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> Poly:
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, i: int) -> Poly:
        if i < 1:
            raise ValueError("variables are indexed from 1")
        return cls._raw({(0,) * (i - 1) + (1,): 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: int = 1) -> Poly:
        return cls({tuple(exps): coeff})

    # ------------------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            other = Poly.const(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> Poly:
        return Poly.const(other) - self

    def __mul__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            if other == 0:
                return Poly()
            return Poly._raw({m: c * other for m, c in self._terms.items()})
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def nvars(self) -> int:
        return max((len(m) for m in self._terms), default=0)

    def coefficient(self, exps: Iterable[int]) -> int:
        return self._terms.get(_trim(exps), 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in graded order, then lexicographic by exponent vector, descending."""
        width = self.nvars()

        def key(item):
            m = item[0]
            return (sum(m), m + (0,) * (width - len(m)))

        return sorted(self._terms.items(), key=key, reverse=True)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = [f"x{k + 1}" if e == 1 else f"x{k + 1}^{e}"
                       for k, e in enumerate(m) if e]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> Poly:
        """
        Inverse of ``str``.

        >>> Poly.parse("x1^2 + x1*x2 - 3*x3") == Poly.var(1)**2 + Poly.var(1)*Poly.var(2) - 3*Poly.var(3)
        True
        """
        text = text.replace("−", "-").strip()
        if text == "0":
            return cls()
        tokens = re.findall(r"([+-]?)\s*([^+-]+)", text)
        out = cls()
        for sign, body in tokens:
            coeff = -1 if sign == "-" else 1
            exps: dict[int, int] = {}
            for factor in body.strip().split("*"):
                factor = factor.strip()
                mt = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor)
                if mt:
                    k = int(mt.group(1))
                    exps[k] = exps.get(k, 0) + int(mt.group(2) or 1)
                elif re.fullmatch(r"\d+", factor):
                    coeff *= int(factor)
                else:
                    raise ValueError(f"bad polynomial factor {factor!r}")
            width = max(exps, default=0)
            out = out + cls({tuple(exps.get(k, 0) for k in range(1, width + 1)): coeff})
        return out

    def to_json(self) -> list[dict]:
        return [{"coeff": c, "exps": {str(k + 1): e for k, e in enumerate(m) if e}}
                for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list[dict]) -> Poly:
        out: dict[Monomial, int] = {}
        for term in data:
            exps = {int(k): int(v) for k, v in term["exps"].items()}
            width = max(exps, default=0)
            m = _trim(exps.get(k, 0) for k in range(1, width + 1))
            out[m] = out.get(m, 0) + int(term["coeff"])
        return cls(out)


def act(w: Permutation, f: Poly) -> Poly:
    """Substitute x_i -> x_{w(i)}."""
    if not w.is_positive():
        raise ValueError(f"{w} moves non-positive points; it does not act on Z[x1, x2, ...]")
    if w.is_identity():
        return f
    out: dict[Monomial, int] = {}
    n = max(w.degree(), f.nvars())
    for m, c in f._terms.items():
        new = [0] * n
        for k, e in enumerate(m):
            new[w(k + 1) - 1] += e
        key = _trim(new)
        out[key] = out.get(key, 0) + c
    return Poly._raw({m: c for m, c in out.items() if c})


def ddiff(i: int, f: Poly) -> Poly:
    """
    The divided difference (f - s_i f) / (x_i - x_{i+1}).

    Each monomial m * x_i^a * x_{i+1}^b is paired with its s_i-image and the
    quotient of the pair is written down directly, so the division is exact by
    construction.

    >>> str(ddiff(2, Poly.parse("x1^2 + x1*x2")))
    'x1'
    """
    if i < 1:
        raise ValueError("divided differences are indexed from 1")
    out: dict[Monomial, int] = {}
    k = i - 1
    for m, c in f._terms.items():
        a = m[k] if k < len(m) else 0
        b = m[k + 1] if k + 1 < len(m) else 0
        if a == b:
            continue
        lo, hi = (b, a) if a > b else (a, b)
        sign = c if a > b else -c
        base = list(m) + [0] * max(0, k + 2 - len(m))
        # (x_i^hi x_{i+1}^lo - x_i^lo x_{i+1}^hi) / (x_i - x_{i+1})
        #   = sum_{r=0}^{hi-lo-1} x_i^{hi-1-r} x_{i+1}^{lo+r}
        for r in range(hi - lo):
            base[k] = hi - 1 - r
            base[k + 1] = lo + r
            key = _trim(base)
            out[key] = out.get(key, 0) + sign
    return Poly._raw({m: c for m, c in out.items() if c})


def ddiff_word(word: Iterable[int], f: Poly) -> Poly:
    """Apply d_{a_1} d_{a_2} ... d_{a_k}, rightmost first."""
    for a in reversed(tuple(word)):
        f = ddiff(a, f)
    return f


def staircase(n: int) -> Poly:
    """x_1^{n-1} x_2^{n-2} ... x_{n-1}."""
    return Poly.monomial(tuple(range(n - 1, 0, -1)) if n > 1 else ())


def _schubert(w: Permutation) -> Poly:
    if w.is_identity():
        return Poly.const(1)
    # peel the last descent r: w = v (r, s) with v < w a cover, then
    # S_w = x_r S_v + sum of S_{v (i, r)} over covers v < v (i, r) with 1 <= i < r
    r = max(descents(w))
    wr = w(r)
    s = max(j for j in range(r + 1, w.degree() + 1) if w(j) < wr)
    v = compose(w, Permutation.transposition(r, s))
    out = Poly.var(r) * _schubert_cached(v)
    vr = v(r)
    for i in range(r - 1, 0, -1):
        vi = v(i)
        if vi < vr and not any(vi < v(e) < vr for e in range(i + 1, r)):
            out = out + _schubert_cached(compose(v, Permutation.transposition(i, r)))
    return out


_schubert_cached = lru_cache(maxsize=None)(_schubert)


def schubert(w: Permutation) -> Poly:
    """
    The Schubert polynomial of w in S_infinity.

    Uses the transition recursion on the last descent, which only visits
    permutations of smaller length or smaller last descent; results are
    cached per permutation.  `schubert_by_ddiff` is the definition and is
    kept as an independent check.
    """
    if not w.is_positive():
        raise ValueError(f"{w} is not in S_infinity")
    return _schubert_cached(w)


def schubert_by_ddiff(w: Permutation, n: int | None = None) -> Poly:
    """
    S_w as the divided difference of x^delta_n along a reduced word of w^-1 w_n.

    Any n with w in S_n gives the same answer.
    """
    if not w.is_positive():
        raise ValueError(f"{w} is not in S_infinity")
    n = max(w.degree(), 1) if n is None else n
    if w.degree() > n:
        raise ValueError(f"{w} is not in S_{n}")
    w0 = Permutation.from_one_line(range(n, 0, -1))
    return ddiff_word(reduced_word(compose(inverse(w), w0)), staircase(n))


def set_schubert_cache_limit(limit: int | None) -> None:
    """Replace the Schubert cache with one holding at most `limit` entries (None: unbounded)."""
    global _schubert_cached
    _schubert_cached = lru_cache(maxsize=limit)(_schubert)


def schubert_cache_info():
    return _schubert_cached.cache_info()


def transition_perm(w: Permutation, r: int) -> tuple[list[Permutation], list[Permutation]]:
    """
    The cover sets in the ordinary transition formula
    x_r S_w = sum_{w(r,j) covers w, r<j} S - sum_{w(i,r) covers w, i<r} S.

    Elements of the second list may move non-positive points; those
    contribute zero to the polynomial identity.
    """
    lo, hi = w.window() if not w.is_identity() else (r, r)
    lo, hi = min(lo, r), max(hi, r)
    plus = [compose(w, Permutation.transposition(r, j))
            for j in range(r + 1, hi + 2) if covers(w, Transposition(r, j))]
    minus = [compose(w, Permutation.transposition(i, r))
             for i in range(lo - 1, r) if covers(w, Transposition(i, r))]
    return plus, minus
