"""
Command-line front end.

    invschub <command> [args] [--json] [--workers K] [--bound N]

Exit status is 0 on success, 1 when a verification (a transition identity,
a bump bijection, a sweep) fails, and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from .fpf import FpfInvolution, fpf_atoms, fpf_schubert, fpf_words, transition_fpf
from .inv_schubert import inv_schubert, transition_inv
from .involutions import atoms, inv_words, require_involution
from .little import (
    BumpError, MarkedWord, infer_mark, bump_trace, verify_bijection,
)
from .perm import (
    Permutation, bruhat_leq, descents, format_word, length, parse_word,
)
from .poly import schubert, set_schubert_cache_limit
from .sweeps import BoundError, SuiteError, describe_suite, run_suite, suite_names
from .tau import phi, tau

__all__ = ["main", "build_parser"]


class UsageError(ValueError):
    pass


def _perm(text: str) -> Permutation:
    return Permutation.parse(text)


def _inv(text: str) -> Permutation:
    return require_involution(Permutation.parse(text))


def _fpf(text: str) -> FpfInvolution:
    return FpfInvolution.parse(text)


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _lines(objs) -> str:
    return "\n".join(objs)


# ----------------------------------------------------------------------
# commands; each returns an exit status

def cmd_perm_length(args) -> int:
    w = _perm(args.w)
    _emit(args, {"perm": w.to_json(), "length": length(w)}, str(length(w)))
    return 0


def cmd_descents(args) -> int:
    w = _perm(args.w)
    side = "left" if args.left else "right"
    des = sorted(descents(w, side))
    _emit(args, {"perm": w.to_json(), "side": side, "descents": des}, " ".join(map(str, des)))
    return 0


def cmd_bruhat(args) -> int:
    u, v = _perm(args.u), _perm(args.v)
    leq = bruhat_leq(u, v)
    _emit(args, {"u": u.to_json(), "v": v.to_json(), "leq": leq}, "true" if leq else "false")
    return 0


def cmd_schubert(args) -> int:
    w = _perm(args.w)
    f = schubert(w)
    _emit(args, {"perm": w.to_json(), "poly": f.to_json()}, str(f))
    return 0


def cmd_inv_schubert(args) -> int:
    y = _inv(args.y)
    f = inv_schubert(y)
    _emit(args, {"involution": y.to_json(), "poly": f.to_json()}, str(f))
    return 0


def cmd_atoms(args) -> int:
    y = _inv(args.y)
    ws = sorted(atoms(y))
    _emit(args, {"involution": y.to_json(), "atoms": [w.to_json() for w in ws]},
          _lines(str(w) for w in ws))
    return 0


def cmd_invwords(args) -> int:
    y = _inv(args.y)
    words = sorted(inv_words(y))
    _emit(args, {"involution": y.to_json(), "words": [list(a) for a in words]},
          _lines(format_word(a) for a in words))
    return 0


def cmd_tau(args) -> int:
    if not args.i < args.j:
        raise UsageError(f"tau needs I < J, got {args.i} and {args.j}")
    y = _inv(args.y)
    z = tau(args.i, args.j, y)
    _emit(args, {"i": args.i, "j": args.j, "involution": y.to_json(), "result": z.to_json()},
          z.cycle_notation())
    return 0


def cmd_phi(args) -> int:
    y = _inv(args.y)
    sign = "minus" if args.minus else "plus"
    zs = sorted(phi(y, args.r, sign))
    _emit(args, {"involution": y.to_json(), "r": args.r, "sign": sign,
                 "covers": [z.to_json() for z in zs]},
          _lines(z.cycle_notation() for z in zs))
    return 0


def cmd_transition(args) -> int:
    if args.fpf:
        y = _fpf(args.y)
        res = transition_fpf(y, args.p)
        show = str
    else:
        y = _inv(args.y)
        res = transition_inv(y, args.p)
        show = Permutation.cycle_notation
    payload = {"kind": "fpf" if args.fpf else "inv", "y": y.to_json(), **res.to_json()}
    text = _lines([
        f"cycle: ({res.p},{res.q})",
        "plus: " + " ".join(show(z) for z in sorted(res.plus_set)),
        "minus: " + " ".join(show(z) for z in sorted(res.minus_set)),
        f"lhs: {res.lhs}",
        f"rhs: {res.rhs}",
        f"holds: {'true' if res.holds else 'false'}",
    ])
    _emit(args, payload, text)
    return 0 if res.holds else 1


def cmd_fpf_atoms(args) -> int:
    z = _fpf(args.z)
    ws = sorted(fpf_atoms(z))
    _emit(args, {"fpf_involution": z.to_json(), "atoms": [w.to_json() for w in ws]},
          _lines(str(w) for w in ws))
    return 0


def cmd_fpf_words(args) -> int:
    z = _fpf(args.z)
    words = sorted(fpf_words(z))
    _emit(args, {"fpf_involution": z.to_json(), "words": [list(a) for a in words]},
          _lines(format_word(a) for a in words))
    return 0


def cmd_fpf_schubert(args) -> int:
    z = _fpf(args.z)
    f = fpf_schubert(z)
    _emit(args, {"fpf_involution": z.to_json(), "poly": f.to_json()}, str(f))
    return 0


def cmd_bump(args) -> int:
    mode = "fpf" if args.fpf else "inv"
    y = _fpf(args.y) if args.fpf else _inv(args.y)
    word = parse_word(args.word)
    if not word:
        raise UsageError("--word must not be empty")
    mark = args.mark if args.mark is not None else infer_mark(word, y, mode)
    try:
        seq = bump_trace(MarkedWord(word, mark), y, mode, up=args.inverse)
    except BumpError as err:
        print(f"bump failed: {err}", file=sys.stderr)
        return 1
    payload = {"mode": mode, "y": y.to_json(), "start": seq[0].to_json(),
               "result": seq[-1].to_json(), "steps": len(seq) - 1}
    if args.trace:
        payload["trace"] = [m.to_json() for m in seq]
        text = _lines(str(m) for m in seq)
    else:
        text = str(seq[-1])
    _emit(args, payload, text)
    return 0


def cmd_little(args) -> int:
    mode = "fpf" if args.fpf else "inv"
    y = _fpf(args.y) if args.fpf else _inv(args.y)
    rep = verify_bijection(y, args.p, mode=mode, track=True)
    text = _lines([
        f"cycle: ({rep.p},{rep.q})",
        f"plus covers: {' '.join(rep.plus_targets)}",
        f"minus covers: {' '.join(rep.minus_targets)}",
        f"words: {rep.domain_size} -> {rep.codomain_size}, image {rep.image_size}",
        f"bijection: {'true' if rep.ok else 'false'}",
    ])
    _emit(args, rep.to_json(), text)
    return 0 if rep.ok else 1


def cmd_verify(args) -> int:
    stream = None if args.json else (lambda msg: print(f"FAIL {msg}", file=sys.stderr, flush=True))
    rep = run_suite(args.suite, workers=args.workers, n=args.n, bound=args.bound,
                    big=args.big, on_failure=stream)
    if args.json:
        print(json.dumps(rep.to_json(timing=args.timing), sort_keys=True))
    else:
        print(rep.render().splitlines()[0])
        if args.timing:
            print(f"wall time: {rep.wall_time:.2f}s")
    return 0 if rep.passed else 1


def cmd_list_suites(args) -> int:
    names = suite_names()
    _emit(args, [{"suite": n, "summary": describe_suite(n)} for n in names],
          _lines(f"{n:28s} {describe_suite(n)}" for n in names))
    return 0


# ----------------------------------------------------------------------
# parser

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="print JSON instead of text")
    p.add_argument("--workers", type=int, default=1, metavar="K",
                   help="worker processes for sweeps (default 1)")
    p.add_argument("--bound", type=int, default=None, metavar="N",
                   help="largest universe size a sweep may enumerate")
    p.add_argument("--cache-limit", type=int, default=None, metavar="M",
                   help="cap the Schubert polynomial cache at M entries")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="invschub", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="<command>")

    def add(name: str, fn: Callable, helptext: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.set_defaults(func=fn)
        return p

    p = add("perm-length", cmd_perm_length, "Coxeter length of a permutation")
    p.add_argument("w")
    p = add("descents", cmd_descents, "descent set of a permutation")
    p.add_argument("w")
    p.add_argument("--left", action="store_true", help="left descents instead of right")
    p = add("bruhat", cmd_bruhat, "is U <= V in Bruhat order")
    p.add_argument("u")
    p.add_argument("v")
    p = add("schubert", cmd_schubert, "Schubert polynomial")
    p.add_argument("w")
    p = add("inv-schubert", cmd_inv_schubert, "involution Schubert polynomial")
    p.add_argument("y")
    p = add("atoms", cmd_atoms, "atoms of an involution")
    p.add_argument("y")
    p = add("invwords", cmd_invwords, "involution words")
    p.add_argument("y")
    p = add("tau", cmd_tau, "apply tau_IJ to an involution")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.add_argument("y")
    p = add("phi", cmd_phi, "covers of Y through R (plus side unless --minus)")
    p.add_argument("--minus", action="store_true")
    p.add_argument("y")
    p.add_argument("r", type=int)
    p = add("transition", cmd_transition, "transition identity at the cycle through P")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--inv", action="store_true")
    kind.add_argument("--fpf", action="store_true")
    p.add_argument("y")
    p.add_argument("p", type=int)
    p = add("fpf-atoms", cmd_fpf_atoms, "FPF atoms")
    p.add_argument("z")
    p = add("fpf-words", cmd_fpf_words, "FPF-involution words")
    p.add_argument("z")
    p = add("fpf-schubert", cmd_fpf_schubert, "FPF involution Schubert polynomial")
    p.add_argument("z")
    p = add("bump", cmd_bump, "Little bump of a marked word")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--inv", action="store_true")
    kind.add_argument("--fpf", action="store_true")
    p.add_argument("y")
    p.add_argument("--word", required=True, help='letters, e.g. "3 2 4 5"')
    p.add_argument("--mark", type=int, default=None,
                   help="1-based marked position (inferred when unique)")
    p.add_argument("--trace", action="store_true", help="print every step")
    p.add_argument("--inverse", action="store_true", help="bump upward instead")
    p = add("little", cmd_little, "check the Little bijection at the cycle through P")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--inv", action="store_true")
    kind.add_argument("--fpf", action="store_true")
    p.add_argument("y")
    p.add_argument("p", type=int)
    p = add("verify", cmd_verify, "run a verification suite")
    p.add_argument("suite")
    p.add_argument("n", type=int, nargs="?", default=None, help="size, overriding the name")
    p.add_argument("--big", action="store_true", help="allow the long S_9 runs")
    p.add_argument("--timing", action="store_true", help="also report wall time")
    add("list-suites", cmd_list_suites, "registered suites")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.workers < 1:
        parser.error("--workers must be at least 1")
    if args.cache_limit is not None:
        set_schubert_cache_limit(args.cache_limit)
    try:
        return args.func(args)
    except (UsageError, SuiteError, BoundError, ValueError) as err:
        print(f"invschub {args.command}: error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
