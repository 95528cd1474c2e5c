"""
Covering transformations on involutions.

`tau(i, j, y)` changes y on at most two of its cycles, namely those through
i and j.  When it changes anything the result covers y in the Bruhat order
on involutions, and every cover of y arises this way.  The rule is a small
lookup table on the pattern that y makes on A = {i, j, y(i), y(j)}.

>>> y = Permutation.parse("(1,10)(2,5)(4,8)(6,11)")
>>> tau(2, 11, y).cycle_notation()
'(1,10)(2,11)(4,8)'
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .involutions import Involution, atoms, hat_length, require_involution
from .perm import (
    Permutation, Transposition, _as_transposition, compose, covers, demazure,
    inverse, length,
)

__all__ = [
    "COVER_TABLE", "PAIR_TABLE", "CoverLabel", "tau", "phi", "tau_covers",
    "transition_target", "mir2_pair", "pair_lookup", "atom_owner",
]

# (pattern of y on A, flattened (i, j)) -> pattern of tau_ij(y) on A
# patterns are one-line forms on [|A|]
COVER_TABLE: dict[tuple[tuple[int, ...], tuple[int, int]], tuple[int, ...]] = {
    ((1, 2), (1, 2)): (2, 1),
    ((2, 1, 3), (2, 3)): (3, 2, 1),
    ((2, 1, 3), (1, 3)): (3, 2, 1),
    ((1, 3, 2), (1, 2)): (3, 2, 1),
    ((1, 3, 2), (1, 3)): (3, 2, 1),
    ((2, 1, 4, 3), (2, 3)): (3, 4, 1, 2),
    ((2, 1, 4, 3), (1, 3)): (4, 2, 3, 1),
    ((2, 1, 4, 3), (2, 4)): (4, 2, 3, 1),
    ((2, 1, 4, 3), (1, 4)): (4, 2, 3, 1),
    ((3, 4, 1, 2), (1, 2)): (4, 3, 2, 1),
    ((3, 4, 1, 2), (3, 4)): (4, 3, 2, 1),
    ((3, 4, 1, 2), (1, 4)): (4, 3, 2, 1),
}

# (pattern of y on A, pattern of w on A, flattened (i, j)) -> flattened (i', j')
# with i' in {j, y(j)} and j' in {i, y(i)}; the last two entries record which
PAIR_TABLE: dict[tuple[tuple[int, ...], tuple[int, ...], tuple[int, int]],
                 tuple[tuple[int, int], str, str]] = {
    ((3, 2, 1), (2, 3, 1), (1, 2)): ((2, 3), "j", "y(i)"),
    ((3, 2, 1), (3, 1, 2), (2, 3)): ((1, 2), "y(j)", "i"),
    ((4, 3, 2, 1), (2, 4, 3, 1), (1, 2)): ((3, 4), "y(j)", "y(i)"),
    ((4, 3, 2, 1), (2, 4, 3, 1), (1, 3)): ((3, 4), "j", "y(i)"),
    ((4, 3, 2, 1), (3, 4, 1, 2), (1, 2)): ((2, 4), "j", "y(i)"),
    ((4, 3, 2, 1), (3, 4, 1, 2), (3, 4)): ((1, 3), "y(j)", "i"),
    ((4, 3, 2, 1), (4, 2, 1, 3), (2, 4)): ((1, 2), "y(j)", "i"),
    ((4, 3, 2, 1), (4, 2, 1, 3), (3, 4)): ((1, 2), "y(j)", "y(i)"),
}


@dataclass(frozen=True)
class CoverLabel:
    """A cover source < target witnessed by target = tau(t.i, t.j, source)."""

    t: Transposition
    source: Permutation
    target: Permutation

    def __post_init__(self):
        if tau(self.t.i, self.t.j, self.source) != self.target or self.target == self.source:
            raise ValueError(f"{self.target} is not tau{self.t}({self.source})")
        if hat_length(self.target) != hat_length(self.source) + 1:
            raise ValueError(f"tau{self.t}({self.source}) is not a cover")


def _pattern(y: Callable[[int], int], points: list[int]) -> tuple[int, ...]:
    images = [y(p) for p in points]
    rank = {v: r for r, v in enumerate(sorted(images), start=1)}
    return tuple(rank[v] for v in images)


def tau(i: int, j: int, y: Involution) -> Involution:
    """
    The covering transformation tau_ij applied to y (returns y when no rule applies).

    >>> tau(1, 2, Permutation()).cycle_notation()
    '(1,2)'
    """
    if not i < j:
        raise ValueError(f"tau needs i < j, got ({i}, {j})")
    A = sorted({i, j, y(i), y(j)})
    key = (_pattern(y, A), (A.index(i) + 1, A.index(j) + 1))
    row = COVER_TABLE.get(key)
    if row is None:
        return y
    m = dict(y._map)
    for k, p in enumerate(A):
        m[p] = A[row[k] - 1]
    return Permutation(m)


def _scan_window(y: Involution, r: int) -> tuple[int, int]:
    pts = set(y.support) | {r}
    return min(pts) - 1, max(pts) + 1


def phi(y: Involution, r: int, sign: str = "plus", margin: int = 1) -> frozenset[Involution]:
    """
    The covers of y of the form tau(r, j, y) with j > r ("plus") or
    tau(i, r, y) with i < r ("minus").

    Only j (or i) within `margin` of the support of y and r can matter.

    >>> y = Permutation.parse("(2,3)(4,7)")
    >>> sorted(z.cycle_notation() for z in phi(y, 3))
    ['(2,4)(3,7)', '(2,5)(4,7)', '(2,7)']
    """
    require_involution(y)
    lo, hi = _scan_window(y, r)
    lo, hi = lo - (margin - 1), hi + (margin - 1)
    target = hat_length(y) + 1
    if sign == "plus":
        cands = (tau(r, j, y) for j in range(r + 1, hi + 1))
    elif sign == "minus":
        cands = (tau(i, r, y) for i in range(lo, r))
    else:
        raise ValueError(f"sign must be 'plus' or 'minus', got {sign!r}")
    return frozenset(z for z in cands if z != y and hat_length(z) == target)


def tau_covers(y: Involution, lo: int | None = None, hi: int | None = None) -> frozenset[Involution]:
    """
    All tau_ij(y) with lo <= i < j <= hi whose involution length is one more than y.

    The default window is the support of y widened by one on each side; a
    window must be given for the identity, whose covers are unbounded.
    """
    require_involution(y)
    if lo is None or hi is None:
        if y.is_identity():
            raise ValueError("the identity needs an explicit window")
        wlo, whi = y.window()
        lo = wlo - 1 if lo is None else lo
        hi = whi + 1 if hi is None else hi
    target = hat_length(y) + 1
    out = set()
    for i in range(lo, hi + 1):
        for j in range(i + 1, hi + 1):
            z = tau(i, j, y)
            if z != y and hat_length(z) == target:
                out.add(z)
    return frozenset(out)


def atom_owner(w: Permutation) -> Involution | None:
    """The involution z with w in atoms(z), if any."""
    z = demazure(inverse(w), w)
    return z if length(w) == hat_length(z) else None


def _check_atom_cover(y: Involution, w: Permutation, t: Transposition) -> None:
    require_involution(y)
    if w not in atoms(y):
        raise ValueError(f"{w} is not an atom of {y.cycle_notation()}")
    if not covers(w, t):
        raise ValueError(f"{w} is not covered by {w}{t}")


def transition_target(y: Involution, w: Permutation, t) -> Involution | None:
    """
    For an atom w of y and a cover w < wt: the involution z with wt an atom
    of z, which is then tau_ij(y), or None when wt is not an atom of anything.
    """
    t = _as_transposition(t)
    _check_atom_cover(y, w, t)
    z = tau(t.i, t.j, y)
    wt = compose(w, t.perm)
    if z != y and wt in atoms(z):
        return z
    return None


def mir2_pair(y: Involution, w: Permutation, t) -> Transposition:
    """
    For an atom w of y and a cover w < wt with wt not an atom: the unique
    (i', j') with w != wt(i', j') an atom of y, read off the pairing table.

    >>> y = Permutation.parse("(1,9)(3,8)(5,10)(6,7)")
    >>> w = Permutation.parse("2,3,5,6,8,10,9,4,1,7")
    >>> str(mir2_pair(y, w, (5, 6)))
    '(7,10)'
    """
    t = _as_transposition(t)
    _check_atom_cover(y, w, t)
    if transition_target(y, w, t) is not None:
        raise ValueError(f"{compose(w, t.perm)} is an atom; no pairing applies")
    pair = pair_lookup(y, w, t.i, t.j)
    if pair is None:
        raise AssertionError(f"no pairing row for y={y.cycle_notation()}, w={w}, t={t}")
    return Transposition(*pair)


def pair_lookup(y: Callable[[int], int], w: Callable[[int], int], i: int, j: int) -> tuple[int, int] | None:
    """
    The pairing-table entry (i', j') for y, w and (i, j), or None when no row
    matches.  y and w may be any callables on the integers.
    """
    A = sorted({i, j, y(i), y(j)})
    key = (_pattern(y, A), _pattern(w, A), (A.index(i) + 1, A.index(j) + 1))
    row = PAIR_TABLE.get(key)
    if row is None:
        return None
    (a, b), _, _ = row
    return A[a - 1], A[b - 1]
