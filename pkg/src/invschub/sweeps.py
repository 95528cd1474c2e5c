"""
Exhaustive verification sweeps.

A suite is a family of checks run over a finite universe (the involutions
in S_n, the fixed-point-free involutions in S_n, all of S_n, or a short
list of sizes).  Suite names carry their size, e.g. "tau-s6" or
"little-fpf-f6"; `run_suite` splits the universe into contiguous index
ranges, runs them on a process pool, and merges failures in enumeration
order, so the report does not depend on the worker count.

>>> run_suite("wy-n4").passed
True
>>> [len(enumerate_universe(k, n)) for k, n in (("inv", 4), ("fpf", 6), ("perm", 4))]
[10, 15, 24]
"""

from __future__ import annotations

import json
import random
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable

from .fpf import (
    FpfInvolution, crossings_nestings, fpf_atoms, fpf_bruhat_leq, fpf_conjugate,
    fpf_cover, fpf_descents, fpf_involutions, fpf_length, fpf_schubert, fpf_words,
    longest_fpf_product, psi, theta_conjugate, transition_fpf,
)
from .inv_schubert import inv_schubert, longest_inv_product, transition_inv
from .involutions import (
    atom_lines, atoms, atoms_by_descent, covers_I, hat_length,
    inv_words, involutions,
)
from .little import (
    BumpError, MarkedWord, WordStatus, classify, step_down, step_up,
    verify_bijection,
)
from .perm import (
    Permutation, Transposition, bruhat_leq, compose, covers, demazure, flatten,
    inverse, length, reduced_words, symmetric_group,
)
from .poly import Poly, ddiff, schubert, schubert_by_ddiff
from .tau import atom_owner, pair_lookup, phi, tau, tau_covers

__all__ = [
    "SweepReport", "SuiteError", "BoundError", "DEFAULT_BOUNDS", "SAMPLE_SEED",
    "enumerate_universe", "suite_names", "describe_suite", "resolve_suite", "run_suite",
]

DEFAULT_BOUNDS = {"perm": 9, "inv": 10, "fpf": 12}
SAMPLE_SEED = 20180801
SAMPLE_SIZE = 100


class SuiteError(ValueError):
    """Unknown suite name or a suite that needs --big."""


class BoundError(ValueError):
    """The requested size is above the configured bound."""


@dataclass
class SweepReport:
    suite: str
    universe_size: int
    checked: int
    failures: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures and self.checked == self.universe_size

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "universe_size": self.universe_size,
            "checked": self.checked,
            "failures": list(self.failures),
            "passed": self.passed,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def dumps(self) -> str:
        """Deterministic JSON: no timing, sorted keys."""
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> SweepReport:
        return cls(data["suite"], data["universe_size"], data["checked"],
                   list(data["failures"]), data.get("wall_time", 0.0))

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{self.suite}: {status} ({self.checked}/{self.universe_size} checked, "
                 f"{len(self.failures)} failures)"]
        lines += [f"  {f}" for f in self.failures]
        return "\n".join(lines)


# ----------------------------------------------------------------------
# universes

def enumerate_universe(kind: str, n: int, bound: int | None = None) -> list:
    """
    I_n, F_n or S_n as a list in lexicographic order of one-line notation.
    """
    if kind not in DEFAULT_BOUNDS:
        raise ValueError(f"kind must be one of {sorted(DEFAULT_BOUNDS)}, got {kind!r}")
    bound = DEFAULT_BOUNDS[kind] if bound is None else bound
    if n > bound:
        raise BoundError(f"{kind} universe of size n={n} exceeds the bound {bound}")
    if n < 0:
        raise ValueError("n must be non-negative")
    if kind == "inv":
        return list(involutions(n))
    if kind == "fpf":
        return list(fpf_involutions(n))
    return list(symmetric_group(n))


@lru_cache(maxsize=None)
def _universe_cached(kind: str, n: int) -> tuple:
    return tuple(enumerate_universe(kind, n, bound=max(n, 0)))


@lru_cache(maxsize=None)
def _atom_index(n: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    """One-line atom -> one-line involution, over all involutions in S_n."""
    out = {}
    for y in _universe_cached("inv", n):
        line = y.one_line(n)
        pairs = {k: line[k - 1] for k in range(1, n + 1)}
        for w in atom_lines(pairs, 1, n):
            out[w] = line
    return out


@lru_cache(maxsize=4096)
def _atom_lines_of(line: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    n = len(line)
    return tuple(sorted(atom_lines({k: line[k - 1] for k in range(1, n + 1)}, 1, n)))


def _line_covers(w: tuple[int, ...]) -> Iterable[tuple[int, int]]:
    """0-based a < b with w < w(a, b) a Bruhat cover."""
    n = len(w)
    for a in range(n):
        wa = w[a]
        ceiling = n + 1
        for b in range(a + 1, n):
            wb = w[b]
            if wa < wb < ceiling:
                yield a, b
                ceiling = wb


def _swap(w: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
    v = list(w)
    v[a], v[b] = v[b], v[a]
    return tuple(v)


def _line_str(w: Iterable[int]) -> str:
    w = list(w)
    return "".join(map(str, w)) if len(w) < 10 else ",".join(map(str, w))


# ----------------------------------------------------------------------
# checks: each takes one universe element and the size n, returns failures

def _check_tau(y: Permutation, n: int) -> list[str]:
    index = _atom_index(n)
    line = y.one_line(n)
    fails = []
    taus: dict[tuple[int, int], Permutation] = {}
    for w in _atom_lines_of(line):
        for a, b in _line_covers(w):
            i, j = a + 1, b + 1
            if (i, j) not in taus:
                taus[(i, j)] = tau(i, j, y)
            ty = taus[(i, j)]
            owner = index.get(_swap(w, a, b))
            if owner is not None:
                if ty == y or ty.one_line(n) != owner:
                    fails.append(f"(a) w={_line_str(w)} t=({i},{j}): wt is an atom of "
                                 f"{_line_str(owner)} but tau gives {_line_str(ty.one_line(n))}")
            elif ty != y:
                fails.append(f"(b) w={_line_str(w)} t=({i},{j}): wt is no atom but tau moves y")
    return fails


_MIR2_PATTERNS = {(2, 3, 1), (3, 1, 2), (2, 4, 3, 1), (3, 4, 1, 2), (4, 2, 1, 3)}


def _check_mir2(y: Permutation, n: int) -> list[str]:
    index = _atom_index(n)
    line = y.one_line(n)
    own = set(_atom_lines_of(line))
    yf = lambda k: line[k - 1] if 1 <= k <= n else k
    fails = []
    for w in sorted(own):
        wf = lambda k: w[k - 1] if 1 <= k <= n else k
        for a, b in _line_covers(w):
            wt = _swap(w, a, b)
            if wt in index:
                continue
            i, j = a + 1, b + 1
            found = [(c + 1, d + 1) for c, d in combinations(range(n), 2)
                     if _swap(wt, c, d) in own and _swap(wt, c, d) != w]
            A = sorted({i, j, yf(i), yf(j)})
            vals = sorted(wf(p) for p in A)
            wA = tuple(vals.index(wf(p)) + 1 for p in A)
            tag = f"w={_line_str(w)} t=({i},{j})"
            if len(found) != 1:
                fails.append(f"(1) {tag}: {len(found)} pairs (i',j') return to an atom")
                continue
            if wA not in _MIR2_PATTERNS:
                fails.append(f"(2) {tag}: flattened w is {_line_str(wA)}")
            if pair_lookup(yf, wf, i, j) != found[0]:
                fails.append(f"(2) {tag}: table gives {pair_lookup(yf, wf, i, j)}, found {found[0]}")
    return fails


def _w0(n: int) -> Permutation:
    return Permutation.from_one_line(range(n, 0, -1))


def _check_wy(n: int, _: int) -> list[str]:
    if inv_schubert(_w0(n)) != longest_inv_product(n):
        return [f"n={n}: product formula fails"]
    return []


def _check_wy_fpf(n: int, _: int) -> list[str]:
    z = FpfInvolution.from_one_line(range(n, 0, -1))
    if fpf_schubert(z) != longest_fpf_product(n):
        return [f"n={n}: FPF product formula fails"]
    return []


def _inv_cycles(y: Permutation, n: int) -> list[tuple[int, int]]:
    """Cycles (p, q), p <= q, meeting [n + 1]: one fixed point past n is included."""
    return [(p, y(p)) for p in range(1, n + 2) if p <= y(p)]


def _fpf_cycles(z: FpfInvolution, n: int) -> list[tuple[int, int]]:
    """Cycles (p, q), p < q, meeting [n + 2]: one Theta pair past n is included."""
    return [(p, z(p)) for p in range(1, n + 3) if p < z(p)]


def _check_transition_inv(y: Permutation, n: int) -> list[str]:
    return [f"({p},{q}): lhs != rhs" for p, q in _inv_cycles(y, n)
            if not transition_inv(y, p, q).holds]


def _check_transition_fpf(z: FpfInvolution, n: int) -> list[str]:
    return [f"({p},{q}): lhs != rhs" for p, q in _fpf_cycles(z, n)
            if not transition_fpf(z, p, q).holds]


def _word_count(targets, words) -> int:
    return sum(len(words(z)) for z in targets)


def _check_counting_inv(y: Permutation, n: int) -> list[str]:
    fails = []
    for p, q in _inv_cycles(y, n):
        minus = _word_count(phi(y, p, "minus"), inv_words)
        plus = _word_count(phi(y, q, "plus"), inv_words)
        if minus != plus:
            fails.append(f"({p},{q}): {minus} minus words, {plus} plus words")
    return fails


def _check_counting_fpf(z: FpfInvolution, n: int) -> list[str]:
    fails = []
    for p, q in _fpf_cycles(z, n):
        minus = _word_count(psi(z, p, "minus"), fpf_words)
        plus = _word_count(psi(z, q, "plus"), fpf_words)
        if minus != plus:
            fails.append(f"({p},{q}): {minus} minus words, {plus} plus words")
    return fails


def _bijection_failures(y, cycles) -> list[str]:
    fails = []
    for p, q in cycles:
        try:
            rep = verify_bijection(y, p, q, track=True)
        except BumpError as err:
            fails.append(f"({p},{q}): {err}")
            continue
        if not rep.ok:
            fails.append(f"({p},{q}): {json.dumps(rep.to_json(), sort_keys=True)}")
    return fails


def _check_little_inv(y: Permutation, n: int) -> list[str]:
    return _bijection_failures(y, _inv_cycles(y, n))


def _check_little_fpf(z: FpfInvolution, n: int) -> list[str]:
    return _bijection_failures(z, _fpf_cycles(z, n))


# structural properties ------------------------------------------------

def _check_covers(y: Permutation, n: int) -> list[str]:
    brute = {z for z in _universe_cached("inv", n + 1) if covers_I(y, z)}
    via_tau = {z for z in tau_covers(y, 1, n + 1) if z.is_positive()}
    if brute != via_tau:
        extra = sorted(z.cycle_notation() for z in via_tau - brute)
        missing = sorted(z.cycle_notation() for z in brute - via_tau)
        return [f"tau covers differ: extra {extra}, missing {missing}"]
    return []


def _check_tcover(x: Permutation, n: int) -> list[str]:
    # T(x, z) over every z reachable by one cover from an atom of x
    fails = []
    T: dict[Permutation, set[Transposition]] = {}
    owners: dict[Transposition, set[Permutation]] = {}
    for w in atoms(x):
        for i in range(0, n + 2):
            for j in range(i + 1, n + 2):
                t = Transposition(i, j)
                if not covers(w, t):
                    continue
                z = atom_owner(compose(w, t.perm))
                if z is not None:
                    T.setdefault(z, set()).add(t)
                    owners.setdefault(t, set()).add(z)
    for t, zs in sorted(owners.items(), key=lambda kv: (kv[0].i, kv[0].j)):
        if len(zs) > 1:
            fails.append(f"{t} lies in T(x, z) for {len(zs)} involutions z")
    for z, ts in sorted(T.items()):
        if not covers_I(x, z):
            fails.append(f"T(x, {z.cycle_notation()}) is nonempty but x is not covered")
        images = [compose(w, t.perm) for w in atoms(x) for t in ts if covers(w, t)]
        if len(images) != len(set(images)) or set(images) != atoms(z):
            fails.append(f"(w, t) -> wt is not a bijection onto the atoms of {z.cycle_notation()}")
    return fails


def _check_phi_inclusions(y: Permutation, n: int) -> list[str]:
    fails = []
    for p, q in _inv_cycles(y, n):
        if not phi(y, p, "plus") <= phi(y, q, "plus"):
            fails.append(f"({p},{q}): plus set at p not inside plus set at q")
        if not phi(y, q, "minus") <= phi(y, p, "minus"):
            fails.append(f"({p},{q}): minus set at q not inside minus set at p")
        if not phi(y, p, "minus") or not phi(y, q, "plus"):
            fails.append(f"({p},{q}): empty cover set")
    return fails


def _check_phi_window(y: Permutation, n: int) -> list[str]:
    return [f"r={r} {sign}: the default scan misses covers"
            for r in range(0, n + 2) for sign in ("plus", "minus")
            if phi(y, r, sign) != phi(y, r, sign, margin=3)]


def _check_atoms(y: Permutation, n: int) -> list[str]:
    fails = []
    A = atoms(y)
    if A != atoms_by_descent(y):
        fails.append("the two atom algorithms disagree")
    target = hat_length(y)
    for w in sorted(A):
        if demazure(inverse(w), w) != y or length(w) != target:
            fails.append(f"{w} is not a minimal w with w^-1 o w = y")
        if atom_owner(w) != y:
            fails.append(f"{w} also lies in the atoms of {atom_owner(w)}")
    return fails


def _invariant_sets(y: Permutation, n: int) -> list[tuple[int, ...]]:
    orbits = sorted({tuple(sorted({p, y(p)})) for p in range(1, n + 1)})
    out = [o for o in orbits]
    out += [tuple(sorted(o1 + o2)) for o1, o2 in combinations(orbits, 2)]
    return out


def _check_atom_locality(y: Permutation, n: int) -> list[str]:
    A = atoms(y)
    Es = _invariant_sets(y, n)
    fails = []
    for w in _universe_cached("perm", n):
        local = all(flatten(w, E) in atoms(flatten(y, E)) for E in Es)
        if local != (w in A):
            fails.append(f"w={w}: atom={w in A}, all flattenings atoms={local}")
    return fails


def _contains_subword(big: tuple[int, ...], small: tuple[int, ...]) -> bool:
    it = iter(big)
    return all(a in it for a in small)


def _subword_leq(words_y, words_z) -> bool:
    return any(_contains_subword(b, a) for b in words_z for a in words_y)


def _check_inv_subword(y: Permutation, n: int) -> list[str]:
    wy = inv_words(y)
    return [f"z={z.cycle_notation()}: bruhat {bruhat_leq(y, z)} vs subword"
            for z in _universe_cached("inv", n)
            if bruhat_leq(y, z) != _subword_leq(wy, inv_words(z))]


def _check_perm_subword(u: Permutation, n: int) -> list[str]:
    wu = reduced_words(u)
    return [f"v={v}: bruhat {bruhat_leq(u, v)} vs subword"
            for v in _universe_cached("perm", n)
            if bruhat_leq(u, v) != _subword_leq(wu, reduced_words(v))]


def _check_perm_covers(u: Permutation, n: int) -> list[str]:
    fails = []
    for i, j in combinations(range(1, n + 2), 2):
        t = Transposition(i, j)
        ut = compose(u, t.perm)
        expect = bruhat_leq(u, ut) and length(ut) == length(u) + 1
        if covers(u, t) != expect:
            fails.append(f"t={t}: covers says {covers(u, t)}")
    for i in range(1, n + 1):
        if abs(length(compose(u, Permutation.s(i))) - length(u)) != 1:
            fails.append(f"s_{i} does not change the length by one")
    return fails


def _check_ddiff(w: Permutation, n: int) -> list[str]:
    fails = []
    S = schubert(w)
    for i in range(1, n + 1):
        expect = schubert(compose(w, Permutation.s(i))) if w(i) > w(i + 1) else Poly()
        if ddiff(i, S) != expect:
            fails.append(f"i={i}: divided difference of the Schubert polynomial is wrong")
    return fails


def _check_schubert_ambient(w: Permutation, n: int) -> list[str]:
    ref = schubert(w)
    return [f"ambient {m}: differs" for m in range(max(w.degree(), 1), n + 3)
            if schubert_by_ddiff(w, m) != ref]


def _check_inv_recurrence(y: Permutation, n: int) -> list[str]:
    fails = []
    S = inv_schubert(y)
    if S.degree() != hat_length(y) or not S.is_homogeneous():
        fails.append("degree differs from the involution length")
    for i in range(1, n + 1):
        s = Permutation.s(i)
        if y(i) > y(i + 1):
            sy = compose(s, y)
            expect = inv_schubert(compose(sy, s) if sy != compose(y, s) else sy)
        else:
            expect = Poly()
        if ddiff(i, S) != expect:
            fails.append(f"i={i}: recurrence fails")
    return fails


def _check_fpf_length(z: FpfInvolution, n: int) -> list[str]:
    cross, nest = crossings_nestings(z)
    if fpf_length(z) != 2 * nest + cross:
        return [f"length {fpf_length(z)} != 2*{nest} + {cross}"]
    return []


def _check_fpf_atoms(z: FpfInvolution, n: int) -> list[str]:
    target = fpf_length(z)
    return [f"{w} is not a minimal w with w^-1 Theta w = z"
            for w in sorted(fpf_atoms(z))
            if theta_conjugate(w) != z or length(w) != target]


def _check_fpf_order(y: FpfInvolution, n: int) -> list[str]:
    fails = []
    lo, hi = 1, n
    via_covers = set()
    for i, j in combinations(range(lo, hi + 1), 2):
        z = fpf_cover(y, (i, j))
        if z is None:
            continue
        if fpf_length(z) != fpf_length(y) + 1:
            fails.append(f"cover by ({i},{j}) does not raise the length by one")
        via_covers.add(z)
    universe = _universe_cached("fpf", n)
    above = [z for z in universe if z != y and fpf_bruhat_leq(y, z)]
    restricted = {z for z in above
                  if not any(x != z and fpf_bruhat_leq(x, z) for x in above)}
    if restricted != via_covers:
        fails.append(f"covers {sorted(map(str, via_covers))} vs restricted order "
                     f"{sorted(map(str, restricted))}")
    return fails


def _check_fpf_subword(y: FpfInvolution, n: int) -> list[str]:
    wy = fpf_words(y)
    return [f"z={z}: bruhat {fpf_bruhat_leq(y, z)} vs subword"
            for z in _universe_cached("fpf", n)
            if fpf_bruhat_leq(y, z) != _subword_leq(wy, fpf_words(z))]


def _fpf_recurrence_target(z: FpfInvolution, i: int) -> Poly:
    if i in fpf_descents(z):
        return fpf_schubert(fpf_conjugate(i, z))
    return Poly()


def _check_fpf_recurrence(z: FpfInvolution, n: int) -> list[str]:
    S = fpf_schubert(z)
    fails = []
    if S.degree() != fpf_length(z) or not S.is_homogeneous():
        fails.append("degree differs from the FPF length")
    fails += [f"i={i}: recurrence fails" for i in range(1, n + 1)
              if ddiff(i, S) != _fpf_recurrence_target(z, i)]
    return fails


def _D(i: int, X) -> set:
    return {fpf_conjugate(i, z) for z in X if i in fpf_descents(z)}


def _check_dsets(y: FpfInvolution, n: int) -> list[str]:
    fails = []
    for i in sorted(fpf_descents(y)):
        s = Permutation.s(i)
        sys = fpf_conjugate(i, y)
        for p, q in _fpf_cycles(y, n):
            e_minus = {y} if i in (p, q) else set()
            e_plus = {y} if i in (p - 1, q - 1) else set()
            dm = _D(i, psi(y, p, "minus"))
            dp = _D(i, psi(y, q, "plus"))
            if psi(sys, s(p), "minus") != dm | e_minus or dm & e_minus:
                fails.append(f"s_{i}, ({p},{q}): minus sets do not match")
            if psi(sys, s(q), "plus") != dp | e_plus or dp & e_plus:
                fails.append(f"s_{i}, ({p},{q}): plus sets do not match")
    return fails


def _check_psi_inclusions(y: FpfInvolution, n: int) -> list[str]:
    fails = []
    for p, q in _fpf_cycles(y, n):
        if not psi(y, p, "plus") <= psi(y, q, "plus"):
            fails.append(f"({p},{q}): plus set at p not inside plus set at q")
        if not psi(y, q, "minus") <= psi(y, p, "minus"):
            fails.append(f"({p},{q}): minus set at q not inside minus set at p")
    return fails


def _marked_words(y, words, letters: range) -> list[MarkedWord]:
    """Every y-marked word: a word of y with one letter from `letters` inserted."""
    out = set()
    for b in words(y):
        for k in range(len(b) + 1):
            for a in letters:
                out.add(MarkedWord(b[:k] + (a,) + b[k:], k + 1))
    return sorted(out, key=lambda m: (len(m.word), m.word, m.mark))


def _involutive_steps(y, mws: list[MarkedWord], mode: str) -> list[str]:
    fails = []
    for mw in mws:
        for first, second, name in ((step_down, step_up, "up(down)"), (step_up, step_down, "down(up)")):
            try:
                back = second(first(mw, y, mode), y, mode)
            except BumpError as err:
                fails.append(f"{mw}: {name} raised {err}")
                continue
            if back != mw:
                fails.append(f"{mw}: {name} gives {back}")
    return fails


def _check_little_steps(y: Permutation, n: int) -> list[str]:
    return _involutive_steps(y, _marked_words(y, inv_words, range(0, n + 2)), "inv")


def _check_little_steps_fpf(z: FpfInvolution, n: int) -> list[str]:
    return _involutive_steps(z, _marked_words(z, fpf_words, range(0, n + 2)), "fpf")


def _check_semi_reduced(z: FpfInvolution, n: int) -> list[str]:
    fails = []
    for mw in _marked_words(z, fpf_words, range(0, n + 2)):
        status = classify(mw, z, "fpf")
        if status is not WordStatus.SEMI_REDUCED:
            continue
        if length(Permutation.from_word(mw.word)) != len(mw.word):
            fails.append(f"{mw}: semi-reduced but not reduced as a plain word")
        down = step_down(mw, z, "fpf")
        if classify(down, z, "fpf") is WordStatus.SEMI_REDUCED:
            fails.append(f"{mw}: it and its step down are both semi-reduced")
    return fails


# ----------------------------------------------------------------------
# registry

@dataclass(frozen=True)
class _Family:
    name: str
    universe: str        # inv, fpf, perm, sizes, even-sizes
    letter: str          # size letter in the suite name
    default: int
    check: Callable[[object, int], list[str]]
    summary: str
    big_from: int | None = None
    sampled: bool = False


_FAMILIES = [
    _Family("tau", "inv", "s", 6, _check_tau,
            "covers of atoms land in the atoms of tau_ij(y), or tau_ij fixes y", big_from=9),
    _Family("mir2", "inv", "s", 6, _check_mir2,
            "non-atom covers of atoms return to a unique other atom as the pairing table says",
            big_from=9),
    _Family("wy", "sizes", "n", 7, _check_wy,
            "involution Schubert polynomial of the longest element is the product formula"),
    _Family("wy-fpf", "even-sizes", "n", 8, _check_wy_fpf,
            "FPF involution Schubert polynomial of the longest element is the product formula"),
    _Family("transition-inv", "inv", "i", 6, _check_transition_inv,
            "involution transition identity for every cycle"),
    _Family("transition-fpf", "fpf", "f", 6, _check_transition_fpf,
            "FPF transition identity for every cycle"),
    _Family("transition-inv-sample", "inv", "i", 7, _check_transition_inv,
            f"involution transition identity on {SAMPLE_SIZE} seeded random involutions",
            sampled=True),
    _Family("transition-fpf-sample", "fpf", "f", 8, _check_transition_fpf,
            f"FPF transition identity on {SAMPLE_SIZE} seeded random FPF involutions",
            sampled=True),
    _Family("counting-inv", "inv", "i", 5, _check_counting_inv,
            "minus and plus covers have equally many involution words"),
    _Family("counting-fpf", "fpf", "f", 6, _check_counting_fpf,
            "minus and plus covers have equally many FPF-involution words"),
    _Family("little-inv", "inv", "i", 5, _check_little_inv,
            "the involution Little map is a bijection, with mid-bump tracking"),
    _Family("little-fpf", "fpf", "f", 6, _check_little_fpf,
            "the FPF Little map is a bijection, with mid-bump tracking"),
    _Family("covers", "inv", "i", 6, _check_covers,
            "tau produces exactly the covers in the involution Bruhat order"),
    _Family("tcover", "inv", "i", 5, _check_tcover,
            "T-sets are disjoint and (w, t) -> wt is a bijection onto atoms"),
    _Family("phi-inclusions", "inv", "i", 6, _check_phi_inclusions,
            "cover sets are nested along each cycle and nonempty"),
    _Family("phi-window", "inv", "i", 5, _check_phi_window,
            "the default cover scan agrees with a wider one"),
    _Family("atoms", "inv", "i", 5, _check_atoms,
            "both atom algorithms agree, atoms are minimal and lie over one involution"),
    _Family("atom-locality", "inv", "i", 5, _check_atom_locality,
            "w is an atom iff every flattening to at most two orbits is"),
    _Family("inv-subword", "inv", "i", 4, _check_inv_subword,
            "involution Bruhat order is the subword order on involution words"),
    _Family("perm-subword", "perm", "s", 4, _check_perm_subword,
            "Bruhat order is the subword order on reduced words"),
    _Family("perm-covers", "perm", "s", 5, _check_perm_covers,
            "covers agree with Bruhat order plus length"),
    _Family("ddiff", "perm", "s", 5, _check_ddiff,
            "divided differences of Schubert polynomials"),
    _Family("schubert-ambient", "perm", "s", 4, _check_schubert_ambient,
            "Schubert polynomials do not depend on the ambient S_n"),
    _Family("inv-recurrence", "inv", "i", 5, _check_inv_recurrence,
            "divided differences of involution Schubert polynomials"),
    _Family("fpf-length", "fpf", "f", 8, _check_fpf_length,
            "FPF length is 2 * nestings + crossings"),
    _Family("fpf-atoms", "fpf", "f", 6, _check_fpf_atoms,
            "FPF atoms are minimal and conjugate Theta to z"),
    _Family("fpf-order", "fpf", "f", 6, _check_fpf_order,
            "FPF covers raise the length by one and generate the restricted Bruhat order"),
    _Family("fpf-subword", "fpf", "f", 6, _check_fpf_subword,
            "FPF Bruhat order is the subword order on FPF-involution words"),
    _Family("fpf-recurrence", "fpf", "f", 6, _check_fpf_recurrence,
            "divided differences of FPF involution Schubert polynomials"),
    _Family("dsets", "fpf", "f", 6, _check_dsets,
            "cover sets of sys are the conjugated cover sets of y plus possibly y"),
    _Family("psi-inclusions", "fpf", "f", 8, _check_psi_inclusions,
            "FPF cover sets are nested along each cycle"),
    _Family("little-steps", "inv", "i", 4, _check_little_steps,
            "step up and step down are inverse on marked involution words"),
    _Family("little-steps-fpf", "fpf", "f", 4, _check_little_steps_fpf,
            "step up and step down are inverse on marked FPF-involution words"),
    _Family("semi-reduced", "fpf", "f", 6, _check_semi_reduced,
            "semi-reduced words are reduced, and no step joins two of them"),
]

_BY_NAME = {f.name: f for f in _FAMILIES}
_NAME_RE = re.compile(r"^(?P<family>[a-z0-9-]+?)-(?P<letter>[sinf])(?P<n>\d+)$")


def suite_names() -> list[str]:
    """Every family at its default size."""
    return [f"{f.name}-{f.letter}{f.default}" for f in _FAMILIES]


def describe_suite(name: str) -> str:
    family, _ = resolve_suite(name)
    return family.summary


def resolve_suite(name: str, n: int | None = None) -> tuple[_Family, int]:
    """
    A suite name "family-<letter><n>", or a bare family name with `n` (or
    its default size).
    """
    if name in _BY_NAME:
        fam = _BY_NAME[name]
        return fam, fam.default if n is None else n
    m = _NAME_RE.match(name)
    if m and m.group("family") in _BY_NAME:
        fam = _BY_NAME[m.group("family")]
        if m.group("letter") != fam.letter:
            raise SuiteError(f"suite {fam.name} is sized as {fam.name}-{fam.letter}N")
        size = int(m.group("n"))
        if n is not None and n != size:
            raise SuiteError(f"conflicting sizes {size} and {n} for {name}")
        return fam, size
    raise SuiteError(f"unknown suite {name!r}; see list-suites")


def _items(fam: _Family, n: int, bound: int | None) -> list:
    if fam.universe == "sizes":
        return list(range(1, n + 1))
    if fam.universe == "even-sizes":
        return list(range(2, n + 1, 2))
    full = enumerate_universe(fam.universe, n, bound)
    if fam.sampled and len(full) > SAMPLE_SIZE:
        picks = sorted(random.Random(SAMPLE_SEED).sample(range(len(full)), SAMPLE_SIZE))
        return [full[k] for k in picks]
    return full


def _describe_item(item) -> str:
    if isinstance(item, Permutation):
        return item.cycle_notation()
    return str(item)


def _run_range(name: str, n: int, bound: int | None, lo: int, hi: int) -> tuple[int, list[str]]:
    fam = _BY_NAME[name]
    items = _items(fam, n, bound)[lo:hi]
    fails = []
    for item in items:
        fails += [f"{_describe_item(item)}: {msg}" for msg in fam.check(item, n)]
    return len(items), fails


def _chunks(size: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, size))
    bounds = [size * k // parts for k in range(parts + 1)]
    return [(a, b) for a, b in zip(bounds, bounds[1:]) if a < b]


def run_suite(name: str, workers: int = 1, n: int | None = None, bound: int | None = None,
              big: bool = False, on_failure: Callable[[str], None] | None = None) -> SweepReport:
    """
    Run a registered suite and return its report.

    Failures are handed to `on_failure` as each index range finishes (in
    order) and collected in enumeration order in the report.
    """
    fam, n = resolve_suite(name, n)
    if fam.big_from is not None and n >= fam.big_from and not big:
        raise SuiteError(f"{fam.name} at n={n} is a long run; pass --big to allow it")
    label = f"{fam.name}-{fam.letter}{n}"
    start = time.perf_counter()
    size = len(_items(fam, n, bound))
    ranges = _chunks(size, 4 * workers if workers > 1 else 1)
    checked, failures = 0, []

    def collect(result):
        nonlocal checked
        count, fails = result
        checked += count
        for f in fails:
            failures.append(f)
            if on_failure:
                on_failure(f)

    if workers <= 1:
        for lo, hi in ranges:
            collect(_run_range(fam.name, n, bound, lo, hi))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_range, fam.name, n, bound, lo, hi) for lo, hi in ranges]
            for fut in futures:
                collect(fut.result())
    return SweepReport(label, size, checked, failures, time.perf_counter() - start)
