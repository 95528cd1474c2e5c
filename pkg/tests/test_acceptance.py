"""
Acceptance criteria 1 to 7.  Each test prints one line

    criterion N <title>: PASS|FAIL

before asserting, so `pytest -v` (or `-s`) shows the verdicts in order.
"""

from invschub.fpf import (
    FpfInvolution, fpf_involutions, fpf_schubert, longest_fpf_product, transition_fpf,
)
from invschub.inv_schubert import inv_schubert, longest_inv_product, transition_inv
from invschub.involutions import atoms
from invschub.little import MarkedWord, bump, bump_trace, little_map
from invschub.perm import Permutation, compose, flatten
from invschub.poly import Poly
from invschub.sweeps import resolve_suite, run_suite, suite_names
from invschub.tau import mir2_pair, tau, transition_target

P = Permutation.parse
F = FpfInvolution.parse
M = MarkedWord.parse
x = Poly.var


def verdict(capsys, n, title, failures):
    status = "PASS" if not failures else "FAIL"
    with capsys.disabled():
        print(f"\ncriterion {n} {title}: {status}")
    assert not failures, failures


def check(failures, label, ok):
    if not ok:
        failures.append(label)


def suite_failures(names, **kw):
    out = []
    for name in names:
        r = run_suite(name, **kw)
        if not r.passed:
            out.append(r.render())
    return out


# ----------------------------------------------------------------------

def worked_example_failures():
    fails = []
    check(fails, "S_321", inv_schubert(P("321")) == x(1) ** 2 + x(1) * x(2))
    for y, ws in [("15432", {"13542", "14523", "15324"}),
                  ("156423", {"135624", "136425", "146235"}),
                  ("45312", {"25314", "24513", "35124"})]:
        check(fails, f"atoms of {y}", atoms(P(y)) == {P(w) for w in ws})

    r = transition_inv(P("(2,3)(4,7)"), 2)
    check(fails, "transition (2,3)(4,7)", r.holds and r.lhs == (x(2) + x(3)) * inv_schubert(P("(2,3)(4,7)")))
    r = transition_inv(P("15432"), 3)
    check(fails, "transition 15432", r.holds and r.plus_set == {P("156423")}
          and r.minus_set == {P("45312")})
    r = transition_inv(P("3214765"), 4)
    check(fails, "transition 3214765", r.holds
          and r.plus_set == {P("3217564"), P("3216745")}
          and r.minus_set == {P("4231765"), P("3412765")})
    y8 = F("(1,5)(2,4)(3,6)(7,8)")
    r = transition_fpf(y8, 3)
    check(fails, "FPF transition", r.holds and r.plus_set == {F("(1,5)(2,4)(3,7)(6,8)")}
          and r.minus_set == {F("(1,5)(2,6)(3,4)(7,8)"), F("(1,6)(2,4)(3,5)(7,8)")})

    check(fails, "tau at (2,11)",
          tau(2, 11, P("(1,10)(2,5)(4,8)(6,11)")) == P("(1,10)(2,11)(4,8)"))

    y = P("(1,9)(3,8)(5,10)(6,7)")
    w = P("2,3,5,6,8,10,9,4,1,7")
    t = Permutation.transposition(8, 10)
    E = {3, 4, 5, 6, 7, 8, 10}
    z = P("(1,9)(3,8)(4,7)(5,10)")
    check(fails, "target", transition_target(y, w, (8, 10)) == P("(1,9)(3,10)(5,8)(6,7)"))
    check(fails, "flattenings", flatten(y, E) == P("(1,6)(3,7)(4,5)")
          and flatten(z, E) == P("(1,6)(2,5)(3,7)")
          and flatten(t, E) == P("(6,7)")
          and flatten(w, E) == P("2357614")
          and flatten(compose(w, t), E) == P("2357641"))
    fy = flatten(tau(8, 10, y), E)
    check(fails, "flattened tau", fy == tau(6, 7, flatten(y, E)) == P("(1,7)(3,6)(4,5)")
          and P("2357641") in atoms(fy))
    check(fails, "mir2 pair", tuple(mir2_pair(y, w, (5, 6))) == (7, 10))

    check(fails, "little map 15432", little_map(P("15432"), (5, 3, 4, 2, 3)) == (4, 2, 3, 1, 2))
    check(fails, "little map 3214765 (i)", little_map(P("3214765"), (4, 5, 6, 1, 2)) == (3, 5, 6, 1, 2))
    check(fails, "little map 3214765 (ii)", little_map(P("3214765"), (4, 5, 6, 2, 1)) == (3, 5, 6, 2, 1))
    check(fails, "bump 324[5]", bump(M("3 2 4 [5]"), P("(2,5)")) == M("2 [1] 3 4"))
    chain = bump_trace(M("4 [6] 5"), F("216543"))
    check(fails, "six-step FPF chain", len(chain) == 7 and chain[-1] == M("[2] 4 3"))
    return fails


def test_criterion_1_worked_examples(capsys):
    verdict(capsys, 1, "worked examples", worked_example_failures())


def test_criterion_2_product_formulas(capsys):
    fails = []
    for n in range(1, 8):
        w0 = Permutation.from_one_line(range(n, 0, -1))
        check(fails, f"inv n={n}", inv_schubert(w0) == longest_inv_product(n))
    for n in range(2, 9, 2):
        z0 = FpfInvolution.from_one_line(range(n, 0, -1))
        check(fails, f"fpf n={n}", fpf_schubert(z0) == longest_fpf_product(n))
    fails += suite_failures(["wy-n7", "wy-fpf-n8"])
    verdict(capsys, 2, "product formulas", fails)


def test_criterion_3_transition_identities(capsys):
    fails = suite_failures(["transition-inv-i6", "transition-fpf-f6",
                            "transition-inv-sample-i7", "transition-fpf-sample-f8"])
    # every cycle of every element of F_6 once more, directly
    for z in fpf_involutions(6):
        for p, _ in z.cycles(1, 6):
            check(fails, f"{z} at {p}", transition_fpf(z, p).holds)
    verdict(capsys, 3, "transition identities", fails)


def test_criterion_4_proof_sweeps(capsys, big):
    names = ["tau-s6", "mir2-s6", "tau-s8", "mir2-s8"]
    if big:
        names += ["tau-s9", "mir2-s9"]
    verdict(capsys, 4, "proof sweeps" + (" with S_9" if big else ""),
            suite_failures(names, workers=4, big=big))


def test_criterion_5_counting_identities(capsys):
    fails = suite_failures(["counting-inv-i5", "counting-fpf-f6", "little-inv-i5", "little-fpf-f6"])
    verdict(capsys, 5, "counting identities", fails)


STRUCTURAL = [name for name in suite_names()
              if resolve_suite(name)[0].name not in {
                  "tau", "mir2", "wy", "wy-fpf", "transition-inv", "transition-fpf",
                  "transition-inv-sample", "transition-fpf-sample",
                  "counting-inv", "counting-fpf", "little-inv", "little-fpf"}]


def test_criterion_6_structural_suites(capsys):
    assert len(STRUCTURAL) == 22
    verdict(capsys, 6, "structural suites", suite_failures(STRUCTURAL))


def test_criterion_7_determinism(capsys):
    fails = []
    for name in suite_names():
        dumps = {run_suite(name, workers=k).dumps() for k in (1, 4, 8)}
        check(fails, name, len(dumps) == 1)
    verdict(capsys, 7, "determinism across 1, 4, 8 workers", fails)
