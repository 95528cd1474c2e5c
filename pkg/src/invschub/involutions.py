"""
Involutions of the integers: atoms, involution words, and the involution length.

Involutions are plain `Permutation` values that happen to be self-inverse;
the functions here check that where it matters.

>>> y = Permutation.parse("321")
>>> sorted(str(w) for w in atoms(y))
['231', '312']
>>> hat_length(y), kappa(y)
(2, 1)
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .perm import (
    Permutation, Word, bruhat_leq, compose, length, reduced_words,
)

__all__ = [
    "Involution", "require_involution", "kappa", "hat_length",
    "demazure_conjugate", "involution_of_word", "atoms", "atom_lines",
    "atoms_by_descent", "inv_words", "inv_bruhat_leq", "covers_I",
    "involutions", "cycle_pairs",
]

# an involution is carried by a Permutation equal to its own inverse
Involution = Permutation


def require_involution(y: Permutation) -> Permutation:
    if not y.is_involution():
        raise ValueError(f"{y} is not an involution")
    return y


def kappa(y: Involution) -> int:
    """The number of 2-cycles."""
    return len(y.support) // 2


def hat_length(y: Involution) -> int:
    """(length + kappa) / 2, the rank of y among involutions."""
    require_involution(y)
    return (length(y) + kappa(y)) // 2


def cycle_pairs(y: Involution) -> list[tuple[int, int]]:
    """The 2-cycles (a, b) with a < b, sorted."""
    return [(a, b) for a, b in y.items() if a < b]


def demazure_conjugate(i: int, y: Involution) -> Involution:
    """
    s o y o s for s = s_i: sys, ys, or y according to whether s is a right
    descent of y and whether s commutes with y.

    >>> demazure_conjugate(2, Permutation.s(1)).cycle_notation()
    '(1,3)'
    """
    a, b = y(i), y(i + 1)
    if a > b:
        return y
    s = Permutation.s(i)
    if a == i and b == i + 1:
        # i and i+1 both fixed: s commutes with y and s o y o s = ys
        return compose(y, s)
    return compose(compose(s, y), s)


def involution_of_word(word: Iterable[int]) -> Involution | None:
    """
    The involution y with `word` in its involution words, or None.

    The word is read left to right starting from the identity, each letter
    acting by Demazure conjugation; it is an involution word exactly when no
    letter is a descent at the moment it is applied.
    """
    y = Permutation()
    for a in word:
        if y(a) > y(a + 1):
            return None
        y = demazure_conjugate(a, y)
    return y


# ----------------------------------------------------------------------
# atoms

def atom_lines(pairs: dict[int, int], lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """
    One-line forms (w(lo), ..., w(hi)) of the atoms of the involution given
    by `pairs` (a full map on [lo, hi]).

    An atom is built by listing the points of [lo, hi] in the order of their
    w-values.  A 2-cycle (a, b) lists b before a with nothing from the open
    interval (a, b) in between; for cycles (a, b), (a', b') with a < a' and
    b < b', a is listed before b'.  Fixed points count as cycles (a, a).
    """
    points = list(range(lo, hi + 1))
    cycles = sorted({(min(p, pairs[p]), max(p, pairs[p])) for p in points})
    # before[x]: points that must already be listed when x is listed
    before: dict[int, set[int]] = {x: set() for x in points}
    for a, b in cycles:
        if a < b:
            before[a].add(b)
        for a2, b2 in cycles:
            if a < a2 and b < b2:
                before[b2].add(a)
    n = len(points)
    placed: set[int] = set()
    order: list[int] = []
    open_cycles: list[tuple[int, int]] = []

    def rec():
        if len(order) == n:
            w = [0] * n
            for k, x in enumerate(order):
                w[x - lo] = lo + k
            yield tuple(w)
            return
        for x in points:
            if x in placed or not before[x] <= placed:
                continue
            if any(a < x < b for a, b in open_cycles):
                continue
            y_x = pairs[x]
            placed.add(x)
            order.append(x)
            if y_x < x:
                open_cycles.append((y_x, x))
            elif y_x > x:
                open_cycles.remove((x, y_x))
            yield from rec()
            if y_x < x:
                open_cycles.pop()
            elif y_x > x:
                open_cycles.append((x, y_x))
            order.pop()
            placed.discard(x)

    yield from rec()


@lru_cache(maxsize=4096)
def atoms(y: Involution) -> frozenset[Permutation]:
    """
    All minimal-length w with w^-1 o w = y.

    >>> sorted(str(w) for w in atoms(Permutation.parse("15432")))
    ['13542', '14523', '15324']
    """
    require_involution(y)
    if y.is_identity():
        return frozenset({Permutation()})
    lo, hi = y.window()
    pairs = {x: y(x) for x in range(lo, hi + 1)}
    return frozenset(Permutation({lo + k: v for k, v in enumerate(line)})
                     for line in atom_lines(pairs, lo, hi))


@lru_cache(maxsize=4096)
def atoms_by_descent(y: Involution) -> frozenset[Permutation]:
    """
    The atoms of y by peeling right descents: every atom w of y ends in a
    descent s of y, and w s is an atom of the involution y' with s o y' o s = y.
    """
    require_involution(y)
    if y.is_identity():
        return frozenset({Permutation()})
    lo, hi = y.window()
    out = set()
    for i in range(lo, hi):
        if y(i) < y(i + 1):
            continue
        s = Permutation.s(i)
        sy = compose(s, y)
        prev = compose(sy, s) if sy != compose(y, s) else sy
        for v in atoms_by_descent(prev):
            if v(i) < v(i + 1):
                out.add(compose(v, s))
    return frozenset(out)


def inv_words(y: Involution) -> frozenset[Word]:
    """
    The involution words of y: reduced words of its atoms.

    >>> sorted(inv_words(Permutation.parse("321")))
    [(1, 2), (2, 1)]
    """
    out: set[Word] = set()
    for w in atoms(y):
        out |= reduced_words(w)
    return frozenset(out)


# ----------------------------------------------------------------------
# order

def inv_bruhat_leq(y: Involution, z: Involution) -> bool:
    return bruhat_leq(y, z)


def covers_I(y: Involution, z: Involution) -> bool:
    """y < z with hat_length(z) = hat_length(y) + 1."""
    return y != z and hat_length(z) == hat_length(y) + 1 and bruhat_leq(y, z)


def involutions(n: int) -> Iterator[Permutation]:
    """The involutions in S_n in lexicographic order of one-line notation."""
    def rec(line: list[int], used: set[int]):
        k = len(line) + 1
        if k > n:
            yield Permutation.from_one_line(line)
            return
        if k in used:
            # k was matched to an earlier point
            partner = line.index(k) + 1
            yield from rec(line + [partner], used)
            return
        for v in range(k, n + 1):
            if v in used:
                continue
            yield from rec(line + [v], used | {k, v})

    yield from rec([], set())
