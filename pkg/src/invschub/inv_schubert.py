"""
Involution Schubert polynomials and the orthogonal transition formula.

The involution Schubert polynomial of y is the sum of the Schubert
polynomials of its atoms.

>>> str(inv_schubert(Permutation.parse("321")))
'x1^2 + x1*x2'
>>> r = transition_inv(Permutation.parse("15432"), 3)
>>> sorted(str(z) for z in r.plus_set), sorted(str(z) for z in r.minus_set)
(['156423'], ['45312'])
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .involutions import Involution, atoms, kappa, require_involution
from .perm import Permutation  # noqa: F401  (used by the doctests)
from .poly import Poly, schubert
from .tau import phi

__all__ = [
    "TransitionResult", "inv_schubert", "pair_form", "transition_inv",
    "longest_inv_product", "upsilon",
]


@dataclass(frozen=True)
class TransitionResult:
    """Both cover sets of a transition identity and its two sides."""

    p: int
    q: int
    plus_set: frozenset
    minus_set: frozenset
    lhs: Poly
    rhs: Poly

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "plus": [z.to_json() for z in sorted(self.plus_set)],
            "minus": [z.to_json() for z in sorted(self.minus_set)],
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "holds": self.holds,
        }


@lru_cache(maxsize=None)
def inv_schubert(y: Involution) -> Poly:
    require_involution(y)
    if not y.is_positive():
        raise ValueError(f"{y} is not in S_infinity")
    out = Poly()
    for w in sorted(atoms(y)):
        out = out + schubert(w)
    return out


def pair_form(p: int, q: int) -> Poly:
    """x_p + x_q, or x_p alone when p == q."""
    return Poly.var(p) if p == q else Poly.var(p) + Poly.var(q)


def transition_inv(y: Involution, p: int, q: int | None = None) -> TransitionResult:
    """
    Expand (x_p + x_q) times the involution Schubert polynomial of y, for a
    cycle (p, q) of y, as a signed sum over covers of y.

    Covers moving a non-positive point are kept in the sets but contribute
    zero to the right side.
    """
    require_involution(y)
    if q is None:
        q = y(p)
    if p > q:
        p, q = q, p
    if p < 1 or y(p) != q:
        raise ValueError(f"({p},{q}) is not a cycle of {y.cycle_notation()} inside the positive integers")
    plus = phi(y, q, "plus")
    minus = phi(y, p, "minus")
    lhs = pair_form(p, q) * inv_schubert(y)
    rhs = Poly()
    for z in sorted(plus):
        if z.is_positive():
            rhs = rhs + inv_schubert(z)
    for z in sorted(minus):
        if z.is_positive():
            rhs = rhs - inv_schubert(z)
    return TransitionResult(p, q, plus, minus, lhs, rhs)


def longest_inv_product(n: int) -> Poly:
    """
    The product of x_i + x_j over 1 <= i < j with i + j <= n, times x_i for 2i <= n.

    >>> str(longest_inv_product(3))
    'x1^2 + x1*x2'
    """
    if n < 1:
        raise ValueError("n must be positive")
    out = Poly.const(1)
    for i in range(1, n + 1):
        for j in range(i, n + 1 - i):
            out = out * pair_form(i, j)
    return out


def upsilon(y: Involution) -> Poly:
    """2^kappa(y) times the involution Schubert polynomial."""
    return inv_schubert(y) * (2 ** kappa(y))
