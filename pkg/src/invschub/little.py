"""
Marked involution words and the involution Little bump.

A marked word is a word with one distinguished position.  Relative to an
involution y (or a fixed-point-free involution in "fpf" mode) it is
y-marked when deleting the marked letter leaves an involution word of y.
The bump repeatedly decrements the marked letter, moving the mark whenever
the word stops being an involution word, until the word is again an
involution word; this carries the words of one cover of y to the words of
another.

>>> y = Permutation.parse("(2,5)")
>>> bump(MarkedWord((3, 2, 4, 5), 4), y)
MarkedWord(word=(2, 1, 3, 4), mark=2)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .fpf import FpfInvolution, fpf_of_word, fpf_words, psi, theta_conjugate
from .involutions import inv_words, involution_of_word
from .perm import Permutation, Word, compose, inverse, length, word_product
from .tau import phi

__all__ = [
    "MarkedWord", "WordStatus", "BumpError", "delete", "is_marked", "classify",
    "step_down", "step_up", "bump", "bump_inverse", "bump_trace", "little_map",
    "infer_mark", "BijectionReport", "verify_bijection",
]


class BumpError(AssertionError):
    """A uniqueness or termination property of the bump failed."""


@dataclass(frozen=True)
class MarkedWord:
    word: Word
    mark: int  # 1-based

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(a) for a in self.word))
        if not 1 <= self.mark <= len(self.word):
            raise ValueError(f"mark {self.mark} outside 1..{len(self.word)}")

    def __str__(self) -> str:
        return " ".join(f"[{a}]" if k == self.mark else str(a)
                        for k, a in enumerate(self.word, start=1))

    @classmethod
    def parse(cls, text: str) -> MarkedWord:
        """'3 2 4 [5]' marks the bracketed letter."""
        toks = text.replace(",", " ").split()
        marks = [k for k, tok in enumerate(toks, start=1) if tok.startswith("[")]
        if len(marks) != 1:
            raise ValueError(f"exactly one letter must be bracketed in {text!r}")
        return cls(tuple(int(tok.strip("[]")) for tok in toks), marks[0])

    def to_json(self) -> dict:
        return {"word": list(self.word), "mark": self.mark}

    @classmethod
    def from_json(cls, data: dict) -> MarkedWord:
        return cls(tuple(data["word"]), data["mark"])


class WordStatus(enum.Enum):
    REDUCED = "reduced"
    NEARLY_REDUCED = "nearly_reduced_strict"
    SEMI_REDUCED = "semi_reduced"
    NOT_WORD = "not_word"


def delete(mw: MarkedWord) -> Word:
    """The word with the marked letter removed."""
    k = mw.mark - 1
    return mw.word[:k] + mw.word[k + 1:]


def _target_fn(mode: str) -> Callable[[Iterable[int]], object]:
    if mode == "inv":
        return involution_of_word
    if mode == "fpf":
        return fpf_of_word
    raise ValueError(f"mode must be 'inv' or 'fpf', got {mode!r}")


def _mode_of(y) -> str:
    return "fpf" if isinstance(y, FpfInvolution) else "inv"


def is_marked(mw: MarkedWord, y, mode: str | None = None) -> bool:
    mode = mode or _mode_of(y)
    return _target_fn(mode)(delete(mw)) == y


def _is_reduced(word: Word, mode: str) -> bool:
    return _target_fn(mode)(word) is not None


def _is_semi_reduced(mw: MarkedWord) -> bool:
    return theta_conjugate(word_product(mw.word)) == theta_conjugate(word_product(delete(mw)))


def classify(mw: MarkedWord, y, mode: str | None = None) -> WordStatus:
    """
    >>> classify(MarkedWord((2, 1, 3, 4), 4), Permutation.parse("(1,4)"))
    <WordStatus.REDUCED: 'reduced'>
    """
    mode = mode or _mode_of(y)
    if not is_marked(mw, y, mode):
        raise ValueError(f"{mw} is not a marked word for {y}")
    if _is_reduced(mw.word, mode):
        return WordStatus.REDUCED
    if mode == "fpf" and _is_semi_reduced(mw):
        return WordStatus.SEMI_REDUCED
    if length(word_product(mw.word)) == len(mw.word):
        return WordStatus.NEARLY_REDUCED
    return WordStatus.NOT_WORD


def _keeps_mark(mw: MarkedWord, mode: str) -> bool:
    if _is_reduced(mw.word, mode):
        return True
    return mode == "fpf" and _is_semi_reduced(mw)


def _other_mark(word: Word, mark: int, y, mode: str) -> int:
    target = _target_fn(mode)
    found = [k for k in range(1, len(word) + 1)
             if k != mark and target(word[:k - 1] + word[k:]) == y]
    if len(found) != 1:
        raise BumpError(f"expected one other mark in {word} besides {mark}, found {found}")
    return found[0]


def step_down(mw: MarkedWord, y, mode: str | None = None) -> MarkedWord:
    """
    Decrement the marked letter; move the mark if the result is no longer an
    involution word (in fpf mode: neither reduced nor semi-reduced).

    >>> step_down(MarkedWord((2, 1, 3, 3), 3), Permutation.parse("(1,4)"))
    MarkedWord(word=(2, 1, 2, 3), mark=1)
    """
    mode = mode or _mode_of(y)
    if not is_marked(mw, y, mode):
        raise ValueError(f"{mw} is not a marked word for {y}")
    k = mw.mark - 1
    b = MarkedWord(mw.word[:k] + (mw.word[k] - 1,) + mw.word[k + 1:], mw.mark)
    if _keeps_mark(b, mode):
        return b
    return MarkedWord(b.word, _other_mark(b.word, b.mark, y, mode))


def step_up(mw: MarkedWord, y, mode: str | None = None) -> MarkedWord:
    """
    The inverse of `step_down`.

    >>> step_up(MarkedWord((2, 1, 3, 3), 3), Permutation.parse("(1,4)"))
    MarkedWord(word=(2, 1, 3, 4), mark=4)
    """
    mode = mode or _mode_of(y)
    if not is_marked(mw, y, mode):
        raise ValueError(f"{mw} is not a marked word for {y}")
    i = mw.mark if _keeps_mark(mw, mode) else _other_mark(mw.word, mw.mark, y, mode)
    k = i - 1
    return MarkedWord(mw.word[:k] + (mw.word[k] + 1,) + mw.word[k + 1:], i)


def _cap(mw: MarkedWord, y) -> int:
    # generous: the number of steps seen in practice is at most the word length
    lo, hi = y.window()
    width = max(hi - lo + 1, 2)
    return 4 * max(len(mw.word), 1) * width


def bump_trace(mw: MarkedWord, y, mode: str | None = None, up: bool = False) -> list[MarkedWord]:
    """All marked words visited by the bump, starting with `mw` and ending reduced."""
    mode = mode or _mode_of(y)
    step = step_up if up else step_down
    cap = _cap(mw, y)
    seq = [mw]
    cur = mw
    for _ in range(cap):
        cur = step(cur, y, mode)
        seq.append(cur)
        if _is_reduced(cur.word, mode):
            return seq
    raise BumpError(f"bump of {mw} did not reach a reduced word within {cap} steps")


def bump(mw: MarkedWord, y, mode: str | None = None) -> MarkedWord:
    """Apply `step_down` at least once and until the word is an involution word."""
    return bump_trace(mw, y, mode)[-1]


def bump_inverse(mw: MarkedWord, y, mode: str | None = None) -> MarkedWord:
    return bump_trace(mw, y, mode, up=True)[-1]


def infer_mark(word: Word, y, mode: str) -> int:
    target = _target_fn(mode)
    if target(word) is None:
        raise ValueError(f"{word} is not an involution word")
    found = [k for k in range(1, len(word) + 1) if target(word[:k - 1] + word[k:]) == y]
    if len(found) != 1:
        raise ValueError(f"{word} has {len(found)} deletions giving {y}; it is not a word of a cover")
    return found[0]


def little_map(y, word: Iterable[int], mode: str | None = None) -> Word:
    """
    Bump the unique letter of `word` whose deletion gives a word of y.

    >>> little_map(Permutation.parse("15432"), (5, 3, 4, 2, 3))
    (4, 2, 3, 1, 2)
    """
    mode = mode or _mode_of(y)
    word = tuple(word)
    return bump(MarkedWord(word, infer_mark(word, y, mode)), y, mode).word


# ----------------------------------------------------------------------
# bijection check

@dataclass
class BijectionReport:
    y: str
    p: int
    q: int
    mode: str
    plus_targets: list[str]
    minus_targets: list[str]
    domain_size: int
    codomain_size: int
    image_size: int
    collisions: list = field(default_factory=list)
    off_target: list = field(default_factory=list)
    tracking_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (not self.collisions and not self.off_target and not self.tracking_failures
                and self.image_size == self.domain_size == self.codomain_size)

    def to_json(self) -> dict:
        return {
            "y": self.y, "p": self.p, "q": self.q, "mode": self.mode,
            "plus": self.plus_targets, "minus": self.minus_targets,
            "domain_size": self.domain_size, "codomain_size": self.codomain_size,
            "image_size": self.image_size,
            "collisions": [list(map(list, c)) for c in self.collisions],
            "off_target": [list(w) for w in self.off_target],
            "tracking_failures": self.tracking_failures,
            "ok": self.ok,
        }


def _cover_side(u: Permutation, w: Permutation, rs: tuple[int, int]) -> set[str]:
    """Which of '+', '-' hold for w among the covers u(r, j), j > r and u(i, r), i < r, r in rs."""
    if length(w) != length(u) + 1:
        return set()
    t = compose(inverse(u), w)
    if len(t.support) != 2:
        return set()
    a, b = sorted(t.support)
    out = set()
    if a in rs:
        out.add("+")
    if b in rs:
        out.add("-")
    return out


def _track(seq: list[MarkedWord], p: int, q: int) -> list[str]:
    """
    Check the movement of the ordinary bump across nearly reduced stops.

    Between consecutive stops the full word's permutation must lie below the
    deleted word before the stop on the minus side and above the deleted word
    after the stop on the plus side.
    """
    rs = (p, q)
    fails = []
    first = seq[0]
    u = word_product(delete(first))
    if "+" not in _cover_side(u, word_product(first.word), rs):
        fails.append(f"start {first} is not on the plus side")
    for prev, cur in zip(seq, seq[1:]):
        w = word_product(cur.word)
        if length(w) != len(cur.word):
            continue
        # the decremented word before the mark moved
        pre = MarkedWord(cur.word, prev.mark)
        u_before = word_product(delete(pre))
        u_after = word_product(delete(cur))
        if "-" not in _cover_side(u_before, w, rs):
            fails.append(f"{cur}: not on the minus side of its predecessor")
        if cur is not seq[-1] and "+" not in _cover_side(u_after, w, rs):
            fails.append(f"{cur}: not on the plus side after re-marking")
    return fails


def verify_bijection(y, p: int, q: int | None = None, mode: str | None = None,
                     track: bool = False) -> BijectionReport:
    """
    Check that `little_map(y, .)` carries the words of the plus covers at q
    bijectively onto the words of the minus covers at p.
    """
    mode = mode or _mode_of(y)
    if q is None:
        q = y(p)
    if p > q:
        p, q = q, p
    if y(p) != q:
        raise ValueError(f"({p},{q}) is not a cycle of {y}")
    if mode == "inv":
        plus, minus, words = phi(y, q, "plus"), phi(y, p, "minus"), inv_words
    else:
        plus, minus, words = psi(y, q, "plus"), psi(y, p, "minus"), fpf_words
    domain = sorted(set().union(*(words(z) for z in plus)) if plus else set())
    codomain = set().union(*(words(z) for z in minus)) if minus else set()
    images: dict[Word, Word] = {}
    collisions, off_target, tracking = [], [], []
    for a in domain:
        mw = MarkedWord(a, infer_mark(a, y, mode))
        seq = bump_trace(mw, y, mode)
        b = seq[-1].word
        if track:
            tracking.extend(f"{a}: {msg}" for msg in _track(seq, p, q))
        if b in images:
            collisions.append((images[b], a))
        images[b] = a
        if b not in codomain:
            off_target.append(a)
    return BijectionReport(
        y=str(y), p=p, q=q, mode=mode,
        plus_targets=sorted(str(z) for z in plus),
        minus_targets=sorted(str(z) for z in minus),
        domain_size=len(domain), codomain_size=len(codomain),
        image_size=len(images), collisions=collisions, off_target=off_target,
        tracking_failures=tracking,
    )
