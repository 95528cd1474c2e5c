"""
Fixed-point-free involutions of the integers.

The base element is ``Theta``, the involution 1<->2, 3<->4, ... extended to
all integers (i maps to i + 1 for odd i and to i - 1 for even i).  An
`FpfInvolution` agrees with Theta outside a finite set and stores only the
points where it differs, so an element of F_n and its image under the
natural inclusion into F_infinity are the same value.

>>> z = FpfInvolution.parse("4321")
>>> z.cycle_notation()
'(1,4)(2,3)'
>>> fpf_length(z)
2
>>> sorted(str(w) for w in fpf_atoms(z))
['1342', '312']
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .perm import (
    Permutation, Word, _as_transposition, bruhat_leq, compose, inverse,
    reduced_words,
)
from .poly import Poly, schubert

__all__ = [
    "theta", "FpfInvolution", "fpf_length", "crossings_nestings",
    "fpf_descents", "fpf_atoms", "fpf_words", "fpf_of_word", "fpf_conjugate",
    "theta_conjugate", "fpf_cover", "psi", "fpf_bruhat_leq", "fpf_involutions", "fpf_schubert",
    "transition_fpf", "longest_fpf_product",
]


def theta(i: int) -> int:
    """i - (-1)^i."""
    return i - 1 if i % 2 == 0 else i + 1


class FpfInvolution:
    """A fixed-point-free involution of Z agreeing with Theta outside a finite set."""

    __slots__ = ("_dev", "_hash")

    def __init__(self, mapping: Mapping[int, int] | None = None):
        # `mapping` may list any points; those matching Theta are dropped
        full: dict[int, int] = {}
        for i, v in (mapping or {}).items():
            i, v = int(i), int(v)
            if full.get(i, v) != v:
                raise ValueError(f"point {i} given two images")
            full[i] = v
        for i, v in list(full.items()):
            if full.setdefault(v, i) != i:
                raise ValueError(f"not an involution at {i} -> {v}")
            if i == v:
                raise ValueError(f"fixed point {i}")
        dev = {i: v for i, v in full.items() if v != theta(i)}
        # every point moved away from its Theta partner must be listed,
        # and so must that partner
        for i in dev:
            if theta(i) not in dev:
                raise ValueError(
                    f"{i} is matched to {dev[i]} but its partner {theta(i)} is left on Theta")
        self._dev = dev
        self._hash = None

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def theta(cls) -> FpfInvolution:
        return cls()

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]]) -> FpfInvolution:
        mapping: dict[int, int] = {}
        for c in cycles:
            c = tuple(int(x) for x in c)
            if len(c) != 2:
                raise ValueError(f"fixed-point-free involutions have 2-cycles only, got {c}")
            a, b = c
            if a in mapping or b in mapping:
                raise ValueError(f"point repeated in {c}")
            mapping[a], mapping[b] = b, a
        return cls(mapping)

    @classmethod
    def from_one_line(cls, values: Iterable[int]) -> FpfInvolution:
        """The inclusion of a fixed-point-free involution of [n], n even."""
        values = list(values)
        if len(values) % 2:
            raise ValueError("a fixed-point-free involution of [n] needs n even")
        w = Permutation.from_one_line(values)
        if not w.is_involution() or len(w.support) != len(values):
            raise ValueError(f"{values} is not a fixed-point-free involution")
        return cls({k: v for k, v in enumerate(values, start=1)})

    @classmethod
    def from_permutation(cls, w: Permutation) -> FpfInvolution:
        """Read w as a fixed-point-free involution on its support window, Theta elsewhere."""
        lo, hi = w.window()
        if lo % 2 == 0:
            lo -= 1
        if hi % 2 == 1:
            hi += 1
        return cls({i: w(i) for i in range(lo, hi + 1)})

    @classmethod
    def parse(cls, text: str) -> FpfInvolution:
        """
        Accepts one-line forms ("4321", "2,1,6,5,4,3") and cycle forms
        ("(1,5)(2,4)(3,6)(7,8)"); "()" and "Theta" give Theta.
        """
        text = text.strip()
        if text in ("", "()", "Theta", "theta", "Θ"):
            return cls()
        if text.startswith("("):
            return cls.from_cycles(Permutation.parse(text).cycles())
        if text.startswith("["):
            return cls(dict(Permutation.parse(text)._map))
        return cls.from_one_line(Permutation.parse(text).one_line())

    # ------------------------------------------------------------------

    def __call__(self, i: int) -> int:
        return self._dev.get(i, theta(i))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FpfInvolution):
            return NotImplemented
        return self._dev == other._dev

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._dev.items()))
        return self._hash

    def __lt__(self, other: FpfInvolution) -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self) -> tuple:
        lo, hi = self.window()
        return (lo, hi, tuple(self(i) for i in range(lo, hi + 1)))

    def window(self) -> tuple[int, int]:
        """The least [lo, hi] with lo odd and hi even outside which z is Theta; (1, 0) for Theta."""
        if not self._dev:
            return (1, 0)
        lo, hi = min(self._dev), max(self._dev)
        return (lo if lo % 2 else lo - 1, hi if hi % 2 == 0 else hi + 1)

    def is_theta(self) -> bool:
        return not self._dev

    def is_positive(self) -> bool:
        """Membership in F_infinity: Theta on all non-positive integers."""
        return all(i >= 1 for i in self._dev)

    def degree(self) -> int:
        """The least even n >= 0 with z in F_n (requires positive support)."""
        if not self.is_positive():
            raise ValueError(f"{self} is not in F_infinity")
        return self.window()[1] if self._dev else 0

    def one_line(self, n: int | None = None) -> tuple[int, ...]:
        if n is None:
            n = self.degree()
        lo, hi = self.window()
        if self._dev and (lo < 1 or hi > n) or n % 2:
            raise ValueError(f"{self} is not in F_{n}")
        return tuple(self(i) for i in range(1, n + 1))

    def cycles(self, lo: int | None = None, hi: int | None = None) -> list[tuple[int, int]]:
        """The 2-cycles (a, b), a < b, inside the window (or inside [lo, hi])."""
        wlo, whi = self.window()
        lo = wlo if lo is None else lo
        hi = whi if hi is None else hi
        return [(a, self(a)) for a in range(lo, hi + 1) if a < self(a) <= hi]

    def restrict(self, lo: int | None = None, hi: int | None = None) -> Permutation:
        """z as a permutation of an aligned window [lo, hi] (default: its own window)."""
        wlo, whi = self.window()
        lo = wlo if lo is None else lo
        hi = whi if hi is None else hi
        if lo % 2 == 0 or hi % 2 or lo > wlo and self._dev or hi < whi and self._dev:
            raise ValueError(f"[{lo}, {hi}] is not an aligned window containing {self}")
        return Permutation({i: self(i) for i in range(lo, hi + 1)})

    def conjugate(self, t) -> FpfInvolution:
        """t z t for a transposition t."""
        i, j = _as_transposition(t)
        sw = {i: j, j: i}
        pts = set(self._dev) | {i, j, self(i), self(j), theta(i), theta(j)}
        return FpfInvolution({sw.get(p, p): sw.get(self(p), self(p)) for p in pts})

    def cycle_notation(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join(f"({a},{b})" for a, b in cyc)

    def __str__(self) -> str:
        return self.cycle_notation()

    def __repr__(self) -> str:
        return f"FpfInvolution({self.cycle_notation()!r})"

    def to_json(self) -> list[list[int]]:
        return [[a, b] for a, b in self.cycles()]

    @classmethod
    def from_json(cls, data) -> FpfInvolution:
        return cls.from_cycles(data)


# ----------------------------------------------------------------------
# length and descents

def fpf_length(z: FpfInvolution) -> int:
    """
    Half the number of inversions of z that are not 2-cycles.

    >>> fpf_length(FpfInvolution.parse("(1,5)(2,4)(3,6)(7,8)"))
    4
    """
    lo, hi = z.window()
    vals = [z(i) for i in range(lo, hi + 1)]
    n = len(vals)
    inv = sum(1 for a in range(n) for b in range(a + 1, n) if vals[a] > vals[b])
    # every 2-cycle inside the window is an inversion
    return (inv - n // 2) // 2


def crossings_nestings(z: FpfInvolution) -> tuple[int, int]:
    """(crossing pairs, nesting pairs) of 2-cycles."""
    cyc = z.cycles()
    cross = nest = 0
    for k, (a, b) in enumerate(cyc):
        for c, d in cyc[k + 1:]:
            # a < c since cycles are sorted by their smaller point
            if c < b < d:
                cross += 1
            elif d < b:
                nest += 1
    return cross, nest


def fpf_descents(z: FpfInvolution) -> frozenset[int]:
    """i with z(i) > z(i+1) and (i, i+1) not a cycle of z."""
    lo, hi = z.window()
    return frozenset(i for i in range(lo, hi) if z(i) > z(i + 1) and z(i) != i + 1)


def fpf_conjugate(i: int, z: FpfInvolution) -> FpfInvolution:
    return z.conjugate((i, i + 1))


def fpf_of_word(word: Iterable[int]) -> FpfInvolution | None:
    """
    The z with `word` among its FPF-involution words, or None.

    Starting at Theta, each letter must be an ascent of the current element,
    which is then conjugated by it.
    """
    z = FpfInvolution()
    for a in word:
        if z(a) > z(a + 1):
            return None
        z = fpf_conjugate(a, z)
    return z


@lru_cache(maxsize=4096)
def fpf_atoms(z: FpfInvolution) -> frozenset[Permutation]:
    """The minimal-length w with w^-1 Theta w = z, by peeling FPF descents."""
    if z.is_theta():
        return frozenset({Permutation()})
    out = set()
    for i in fpf_descents(z):
        for v in fpf_atoms(fpf_conjugate(i, z)):
            if v(i) < v(i + 1):
                out.add(compose(v, Permutation.s(i)))
    return frozenset(out)


def fpf_words(z: FpfInvolution) -> frozenset[Word]:
    """
    >>> sorted(fpf_words(FpfInvolution.parse("4321")))
    [(2, 1), (2, 3)]
    """
    out: set[Word] = set()
    for w in fpf_atoms(z):
        out |= reduced_words(w)
    return frozenset(out)


def theta_conjugate(w: Permutation) -> FpfInvolution:
    """w^-1 Theta w."""
    winv = inverse(w)
    # z differs from Theta only on supp(w) and its Theta partners
    pts = set(w.support) | {theta(i) for i in w.support}
    return FpfInvolution({i: winv(theta(w(i))) for i in pts})


# ----------------------------------------------------------------------
# order and covers

def _pattern(z: FpfInvolution, points: list[int]) -> tuple[int, ...]:
    images = [z(p) for p in points]
    rank = {v: r for r, v in enumerate(sorted(images), start=1)}
    return tuple(rank[v] for v in images)


_COVER_STEPS = {
    ((2, 1, 4, 3), (3, 4, 1, 2)),
    ((3, 4, 1, 2), (4, 3, 2, 1)),
}


def fpf_cover(y: FpfInvolution, t) -> FpfInvolution | None:
    """
    t y t when it covers y, else None.

    >>> str(fpf_cover(FpfInvolution.parse("2143"), (2, 3)))
    '(1,3)(2,4)'
    """
    i, j = _as_transposition(t)
    yi, yj = y(i), y(j)
    if yi > yj or any(yi < y(e) < yj for e in range(i + 1, j)):
        return None
    A = sorted({i, j, yi, yj})
    if len(A) != 4:
        return None
    z = y.conjugate((i, j))
    if (_pattern(y, A), _pattern(z, A)) not in _COVER_STEPS:
        return None
    return z


def _psi_window(y: FpfInvolution, r: int, margin: int) -> tuple[int, int]:
    # widen the aligned window to contain the Theta pair through r
    rlo, rhi = (r, r + 1) if r % 2 else (r - 1, r)
    if y.is_theta():
        lo, hi = rlo, rhi
    else:
        lo, hi = y.window()
        lo, hi = min(lo, rlo), max(hi, rhi)
    return lo - margin, hi + margin


def psi(y: FpfInvolution, r: int, sign: str = "plus", margin: int = 2) -> frozenset[FpfInvolution]:
    """
    The covers (r, j) y (r, j) with j > r ("plus"), or (i, r) y (i, r) with
    i < r ("minus").  Candidates more than one Theta pair beyond the window
    cannot give covers.
    """
    lo, hi = _psi_window(y, r, margin)
    if sign == "plus":
        cands = (fpf_cover(y, (r, j)) for j in range(r + 1, hi + 1))
    elif sign == "minus":
        cands = (fpf_cover(y, (i, r)) for i in range(lo, r))
    else:
        raise ValueError(f"sign must be 'plus' or 'minus', got {sign!r}")
    return frozenset(z for z in cands if z is not None)


def fpf_bruhat_leq(y: FpfInvolution, z: FpfInvolution) -> bool:
    """Bruhat order of S_Z restricted to fixed-point-free involutions."""
    wins = [x.window() for x in (y, z) if not x.is_theta()]
    if not wins:
        return True
    lo = min(a for a, _ in wins)
    hi = max(b for _, b in wins)
    return bruhat_leq(y.restrict(lo, hi), z.restrict(lo, hi))


def fpf_involutions(n: int) -> Iterator[FpfInvolution]:
    """F_n in lexicographic order of one-line notation."""
    if n % 2:
        raise ValueError("n must be even")

    def rec(line: list[int], used: set[int]):
        k = len(line) + 1
        if k > n:
            yield FpfInvolution.from_one_line(line)
            return
        if k in used:
            yield from rec(line + [line.index(k) + 1], used)
            return
        for v in range(k + 1, n + 1):
            if v not in used:
                yield from rec(line + [v], used | {k, v})

    yield from rec([], set())


# ----------------------------------------------------------------------
# polynomials

@lru_cache(maxsize=None)
def fpf_schubert(z: FpfInvolution) -> Poly:
    """
    The sum of Schubert polynomials over the FPF atoms of z.

    >>> str(fpf_schubert(FpfInvolution.parse("4321")))
    'x1^2 + x1*x2 + x1*x3 + x2*x3'
    """
    if not z.is_positive():
        raise ValueError(f"{z} is not in F_infinity")
    out = Poly()
    for w in sorted(fpf_atoms(z)):
        out = out + schubert(w)
    return out


def transition_fpf(y: FpfInvolution, p: int, q: int | None = None):
    """
    Expand (x_p + x_q) times the FPF involution Schubert polynomial of y over
    covers of y, for a cycle (p, q) of y with p >= 1.
    """
    from .inv_schubert import TransitionResult

    if q is None:
        q = y(p)
    if p > q:
        p, q = q, p
    if p < 1 or y(p) != q:
        raise ValueError(f"({p},{q}) is not a cycle of {y} inside the positive integers")
    plus = psi(y, q, "plus")
    minus = psi(y, p, "minus")
    lhs = (Poly.var(p) + Poly.var(q)) * fpf_schubert(y)
    rhs = Poly()
    for z in sorted(plus):
        if z.is_positive():
            rhs = rhs + fpf_schubert(z)
    for z in sorted(minus):
        if z.is_positive():
            rhs = rhs - fpf_schubert(z)
    return TransitionResult(p, q, plus, minus, lhs, rhs)


def longest_fpf_product(n: int) -> Poly:
    """
    The product of x_i + x_j over 1 <= i < j with i + j <= n.

    >>> str(longest_fpf_product(4))
    'x1^2 + x1*x2 + x1*x3 + x2*x3'
    """
    if n < 1 or n % 2:
        raise ValueError("n must be even and positive")
    out = Poly.const(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1 - i):
            out = out * (Poly.var(i) + Poly.var(j))
    return out
