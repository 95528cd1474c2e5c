"""
Finitely supported permutations of the integers.

A `Permutation` stores only its moved points, so elements of S_Z whose support
reaches zero or the negative integers are as cheap as elements of S_n.  The
group product is function composition, ``(u * v)(i) == u(v(i))``, and a word
``(a_1, ..., a_k)`` denotes the product ``s_{a_1} s_{a_2} ... s_{a_k}``.

>>> w = Permutation.from_word((1, 2))
>>> w.one_line()
(2, 3, 1)
>>> length(Permutation.parse("4231"))
5
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "Permutation", "Transposition", "Word",
    "compose", "inverse", "length", "inversions", "descents", "bruhat_leq",
    "covers", "demazure", "flatten", "shift", "star", "reduced_word",
    "reduced_words", "word_product", "parse_word", "format_word",
    "symmetric_group",
]

# a sequence of simple-reflection indices; letter k stands for s_k = (k, k+1)
Word = tuple[int, ...]


class Permutation:
    """An immutable finitely supported bijection of the integers."""

    __slots__ = ("_map", "_hash")

    def __init__(self, mapping: Mapping[int, int] | None = None):
        moved = {}
        if mapping:
            for i, v in mapping.items():
                i, v = int(i), int(v)
                if i != v:
                    moved[i] = v
        if set(moved) != set(moved.values()):
            raise ValueError(f"not a bijection on its support: {dict(mapping or {})}")
        self._map = moved
        self._hash = None

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def identity(cls) -> Permutation:
        return cls()

    @classmethod
    def s(cls, i: int) -> Permutation:
        """The simple transposition (i, i+1)."""
        return cls({i: i + 1, i + 1: i})

    @classmethod
    def transposition(cls, i: int, j: int) -> Permutation:
        if i == j:
            raise ValueError("a transposition needs two distinct points")
        return cls({i: j, j: i})

    @classmethod
    def from_one_line(cls, values: Sequence[int], start: int = 1) -> Permutation:
        values = [int(v) for v in values]
        if sorted(values) != list(range(start, start + len(values))):
            raise ValueError(f"not a permutation of {start}..{start + len(values) - 1}: {values}")
        return cls({start + k: v for k, v in enumerate(values)})

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]]) -> Permutation:
        mapping: dict[int, int] = {}
        for cycle in cycles:
            cycle = [int(c) for c in cycle]
            for k, a in enumerate(cycle):
                if a in mapping:
                    raise ValueError(f"point {a} appears in two cycles")
                mapping[a] = cycle[(k + 1) % len(cycle)]
        return cls(mapping)

    @classmethod
    def from_word(cls, word: Iterable[int]) -> Permutation:
        return word_product(word)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """
        Parse one of the accepted text forms.

        >>> Permutation.parse("4,1,5,3,7,2,6") == Permutation.parse("4153726")
        True
        >>> Permutation.parse("(2,3)(4,7)").one_line()
        (1, 3, 2, 7, 5, 6, 4)
        >>> Permutation.parse("[(0,2),(2,0)]")
        Permutation([(0, 2), (2, 0)])
        """
        text = text.strip()
        if text in ("", "1", "e", "id", "()"):
            return cls()
        if text.startswith("["):
            pairs = ast.literal_eval(text)
            return cls({int(a): int(b) for a, b in pairs})
        if text.startswith("("):
            body = text.replace(" ", "")
            if not re.fullmatch(r"(\((-?\d+)(,-?\d+)*\))+", body):
                raise ValueError(f"malformed cycle notation: {text!r}")
            cycles = [tuple(int(x) for x in c.split(","))
                      for c in re.findall(r"\(([^)]*)\)", body)]
            return cls.from_cycles(cycles)
        if "," in text:
            return cls.from_one_line([int(x) for x in text.split(",")])
        if text.isdigit():
            if len(text) > 9:
                raise ValueError("compact one-line form is limited to n <= 9; use commas")
            return cls.from_one_line([int(c) for c in text])
        raise ValueError(f"cannot parse permutation: {text!r}")

    # ------------------------------------------------------------------
    # basic protocol

    def __call__(self, i: int) -> int:
        return self._map.get(i, i)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._map == other._map

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._map.items()))
        return self._hash

    def __lt__(self, other: Permutation) -> bool:
        # a total order for deterministic sorting only; not the Bruhat order
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return f"Permutation({sorted(self._map.items())})"

    def __str__(self) -> str:
        if not self._map:
            return "1"
        if self.is_positive():
            line = self.one_line()
            if len(line) <= 9:
                return "".join(map(str, line))
            return ",".join(map(str, line))
        return "[" + ",".join(f"({a},{b})" for a, b in sorted(self._map.items())) + "]"

    def sort_key(self) -> tuple:
        lo, hi = self.window()
        return (lo, hi, tuple(self(i) for i in range(lo, hi + 1)))

    # ------------------------------------------------------------------
    # queries

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self._map)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._map.items())

    def is_identity(self) -> bool:
        return not self._map

    def is_positive(self) -> bool:
        """True when the support lies in {1, 2, 3, ...}, i.e. w is in S_infinity."""
        return all(i >= 1 for i in self._map)

    def is_involution(self) -> bool:
        return all(self._map.get(v, v) == i for i, v in self._map.items())

    def window(self) -> tuple[int, int]:
        """The smallest interval containing the support; (1, 0) for the identity."""
        if not self._map:
            return (1, 0)
        return (min(self._map), max(self._map))

    def degree(self) -> int:
        """The least n >= 0 with the support inside [n] (requires positive support)."""
        if not self.is_positive():
            raise ValueError(f"{self!r} moves non-positive points")
        return max(self._map, default=0)

    def one_line(self, n: int | None = None) -> tuple[int, ...]:
        if n is None:
            n = self.degree()
        elif self._map and (min(self._map) < 1 or max(self._map) > n):
            raise ValueError(f"{self} is not in S_{n}")
        return tuple(self(i) for i in range(1, n + 1))

    def inverse(self) -> Permutation:
        return inverse(self)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least element, sorted."""
        seen: set[int] = set()
        out = []
        for a in sorted(self._map):
            if a in seen:
                continue
            cycle = [a]
            seen.add(a)
            b = self._map[a]
            while b != a:
                cycle.append(b)
                seen.add(b)
                b = self._map[b]
            out.append(tuple(cycle))
        return out

    def cycle_notation(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)

    def to_json(self) -> list[list[int]]:
        return [[a, b] for a, b in sorted(self._map.items())]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]]) -> Permutation:
        return cls({int(a): int(b) for a, b in data})


@dataclass(frozen=True, order=True)
class Transposition:
    """The transposition (i, j) with i < j."""

    i: int
    j: int

    def __post_init__(self):
        if not self.i < self.j:
            raise ValueError(f"transposition needs i < j, got ({self.i}, {self.j})")

    @property
    def perm(self) -> Permutation:
        return Permutation.transposition(self.i, self.j)

    def __iter__(self) -> Iterator[int]:
        return iter((self.i, self.j))

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


def _as_transposition(t) -> Transposition:
    if isinstance(t, Transposition):
        return t
    i, j = t
    return Transposition(min(i, j), max(i, j))


# ----------------------------------------------------------------------
# group operations

def compose(u: Permutation, v: Permutation) -> Permutation:
    """The product i -> u(v(i))."""
    points = u._map.keys() | v._map.keys()
    return Permutation({i: u(v(i)) for i in points})


def inverse(w: Permutation) -> Permutation:
    return Permutation({v: i for i, v in w._map.items()})


def inversions(w: Permutation) -> list[tuple[int, int]]:
    """Inv(w): pairs i < j with w(i) > w(j), all inside the support window."""
    lo, hi = w.window()
    values = [w(i) for i in range(lo, hi + 1)]
    return [(lo + a, lo + b)
            for a in range(len(values))
            for b in range(a + 1, len(values))
            if values[a] > values[b]]


def length(w: Permutation) -> int:
    lo, hi = w.window()
    values = [w(i) for i in range(lo, hi + 1)]
    n = len(values)
    return sum(1 for a in range(n) for b in range(a + 1, n) if values[a] > values[b])


def descents(w: Permutation, side: str = "right") -> frozenset[int]:
    """
    Indices i with s_i in the right (or left) descent set.

    >>> sorted(descents(Permutation.parse("1342")))
    [3]
    """
    if side == "left":
        w = inverse(w)
    elif side != "right":
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    lo, hi = w.window()
    return frozenset(i for i in range(lo, hi) if w(i) > w(i + 1))


def word_product(word: Iterable[int]) -> Permutation:
    """The product s_{a_1} s_{a_2} ... s_{a_k}."""
    # right-multiplying by s_a swaps the values in positions a and a+1
    m: dict[int, int] = {}
    for a in word:
        x, y = m.get(a, a), m.get(a + 1, a + 1)
        m[a], m[a + 1] = y, x
    return Permutation(m)


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """
    Bruhat comparison u <= v by the dominance criterion on a common window.

    >>> bruhat_leq(Permutation.parse("231"), Permutation.parse("321"))
    True
    """
    if u == v:
        return True
    both = u._map.keys() | v._map.keys()
    lo, hi = min(both), max(both)
    uu = [u(i) for i in range(lo, hi + 1)]
    vv = [v(i) for i in range(lo, hi + 1)]
    n = len(uu)
    # compare #{a <= p : x(a) >= k} for every prefix p and threshold k
    cu = [0] * (n + 1)
    cv = [0] * (n + 1)
    for p in range(n):
        for k in range(uu[p] - lo + 1):
            cu[k] += 1
        for k in range(vv[p] - lo + 1):
            cv[k] += 1
        for k in range(n + 1):
            if cu[k] > cv[k]:
                return False
    return True


def covers(u: Permutation, t) -> bool:
    """
    Whether u is covered by u*t, tested with the interval criterion: u(a) < u(b)
    and no a < e < b has u(a) < u(e) < u(b).
    """
    a, b = _as_transposition(t)
    ua, ub = u(a), u(b)
    if ua > ub:
        return False
    return not any(ua < u(e) < ub for e in range(a + 1, b))


def reduced_word(w: Permutation) -> Word:
    """One reduced word for w, found by peeling the least right descent."""
    word: list[int] = []
    m = dict(w._map)
    while True:
        if not m:
            return tuple(reversed(word))
        i = min(m)
        while m.get(i, i) < m.get(i + 1, i + 1):
            i += 1
        m[i], m[i + 1] = m.get(i + 1, i + 1), m.get(i, i)
        if m[i] == i:
            del m[i]
        if m[i + 1] == i + 1:
            del m[i + 1]
        word.append(i)


def demazure(u: Permutation, v: Permutation) -> Permutation:
    """
    The Demazure product u o v: fold v's reduced word into u, letting s o s = s.

    >>> demazure(Permutation.s(1), Permutation.s(1)) == Permutation.s(1)
    True
    """
    m = dict(u._map)
    for a in reduced_word(v):
        x, y = m.get(a, a), m.get(a + 1, a + 1)
        if x < y:
            m[a], m[a + 1] = y, x
    return Permutation(m)


def flatten(w: Permutation, E: Iterable[int]) -> Permutation:
    """
    The standardization [w]_E in S_|E|.

    >>> w = Permutation.parse("2,3,5,6,8,10,9,4,1,7")
    >>> flatten(w, {3, 4, 5, 6, 7, 8, 10}).one_line()
    (2, 3, 5, 7, 6, 1, 4)
    """
    points = sorted(set(E))
    if not points:
        raise ValueError("cannot flatten to an empty set")
    images = [w(e) for e in points]
    rank = {v: r for r, v in enumerate(sorted(images), start=1)}
    return Permutation({k: rank[v] for k, v in enumerate(images, start=1)})


def shift(w: Permutation, N: int) -> Permutation:
    """The translate i -> w(i - N) + N."""
    return Permutation({i + N: v + N for i, v in w._map.items()})


def star(w: Permutation) -> Permutation:
    """The reflection i -> -w(-i)."""
    return Permutation({-i: -v for i, v in w._map.items()})


@lru_cache(maxsize=None)
def reduced_words(w: Permutation) -> frozenset[Word]:
    """
    All reduced words of w.

    >>> sorted(reduced_words(Permutation.parse("321")))
    [(1, 2, 1), (2, 1, 2)]
    """
    if w.is_identity():
        return frozenset({()})
    out = set()
    for i in descents(w):
        ws = compose(w, Permutation.s(i))
        out.update(word + (i,) for word in reduced_words(ws))
    return frozenset(out)


def symmetric_group(n: int) -> Iterator[Permutation]:
    """S_n in lexicographic order of one-line notation."""
    for line in _itertools_permutations(range(1, n + 1)):
        yield Permutation.from_one_line(line)


def parse_word(text: str) -> Word:
    text = text.strip().strip("()")
    if not text:
        return ()
    return tuple(int(x) for x in re.split(r"[\s,]+", text) if x)


def format_word(word: Sequence[int]) -> str:
    return " ".join(map(str, word))
