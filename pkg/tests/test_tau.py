import pytest

from invschub.involutions import atoms, hat_length, involutions
from invschub.perm import Permutation, Transposition, bruhat_leq, compose, covers, star
from invschub.sweeps import run_suite
from invschub.tau import (
    COVER_TABLE, PAIR_TABLE, CoverLabel, atom_owner, mir2_pair, phi, tau, tau_covers,
    transition_target,
)

from . import oracles as O

P = Permutation.parse

Y320 = P("(1,9)(3,8)(5,10)(6,7)")
W320 = P("2,3,5,6,8,10,9,4,1,7")


def test_tau_examples():
    assert tau(1, 2, Permutation()) == P("(1,2)")
    assert tau(2, 11, P("(1,10)(2,5)(4,8)(6,11)")) == P("(1,10)(2,11)(4,8)")
    y = P("(2,3)(4,7)")
    assert tau(2, 3, y) == y == tau(4, 5, y)
    with pytest.raises(ValueError):
        tau(3, 3, y)


def test_tau_has_no_inverse_map():
    targets = {tau(1, 4, P(s)) for s in ("321", "2143", "1432")}
    assert targets == {P("4231")}


def test_tau_reaches_non_positive_points():
    assert tau(0, 1, Permutation()) == Permutation.transposition(0, 1)
    assert phi(Permutation(), 1, "minus") == {Permutation.transposition(0, 1)}


def test_tau_is_idempotent_and_increasing_on_i5():
    for y in involutions(5):
        for i in range(0, 7):
            for j in range(i + 1, 7):
                z = tau(i, j, y)
                assert tau(i, j, z) == z
                assert bruhat_leq(y, z)


def test_tau_commutes_with_the_star_map():
    for y in involutions(5):
        for i in range(0, 7):
            for j in range(i + 1, 7):
                assert star(tau(i, j, y)) == tau(-j, -i, star(y))


def test_tables_have_the_expected_shape():
    assert len(COVER_TABLE) == 12
    assert len(PAIR_TABLE) == 8
    for (ypat, wpat, _), ((a, b), _, _) in PAIR_TABLE.items():
        assert a < b
        assert wpat in {(2, 3, 1), (3, 1, 2), (2, 4, 3, 1), (3, 4, 1, 2), (4, 2, 1, 3)}


def test_phi_examples():
    y = P("(2,3)(4,7)")
    assert phi(y, 3, "plus") == {P("(2,4)(3,7)"), P("(2,5)(4,7)"), P("(2,7)")}
    assert phi(y, 2, "minus") == {P("(1,3)(4,7)")}
    assert phi(Permutation(), 1, "plus") == {P("(1,2)")}
    with pytest.raises(ValueError):
        phi(y, 3, "sideways")


def test_tau_covers_need_a_window_for_the_identity():
    with pytest.raises(ValueError):
        tau_covers(Permutation())
    assert tau_covers(Permutation(), 1, 3) == {P("(1,2)"), P("(2,3)")}


def test_cover_labels():
    CoverLabel(Transposition(1, 2), Permutation(), P("(1,2)"))
    with pytest.raises(ValueError):
        CoverLabel(Transposition(1, 3), Permutation(), P("(1,3)"))


def test_transition_target_examples():
    z = transition_target(Y320, W320, (8, 10))
    assert z == P("(1,9)(3,10)(5,8)(6,7)")
    assert transition_target(Y320, W320, (5, 6)) is None
    # 231 (1,3) = 132 is shorter, so (1,3) is not a cover of 231
    with pytest.raises(ValueError):
        transition_target(P("321"), P("231"), (1, 3))
    with pytest.raises(ValueError):
        transition_target(P("321"), P("132"), (1, 2))


def test_transition_target_matches_brute_force_on_i4():
    owners = {}
    for n in (4, 5):
        for line in O.involutions(n):
            for w in O.atoms(line):
                owners[w + tuple(range(n + 1, 6))] = Permutation.from_one_line(line)
    for y in involutions(4):
        for w in atoms(y):
            for i in range(1, 6):
                for j in range(i + 1, 6):
                    if not covers(w, (i, j)):
                        continue
                    wt = compose(w, Permutation.transposition(i, j)).one_line(5)
                    assert transition_target(y, w, (i, j)) == owners.get(wt)
                    assert atom_owner(compose(w, Permutation.transposition(i, j))) == owners.get(wt)


def test_mir2_pair_example():
    assert mir2_pair(Y320, W320, (5, 6)) == Transposition(7, 10)
    with pytest.raises(ValueError):
        mir2_pair(Y320, W320, (8, 10))


def test_mir2_pair_matches_brute_force_on_i5():
    seen = 0
    for y in involutions(5):
        A = atoms(y)
        for w in A:
            for i in range(1, 6):
                for j in range(i + 1, 6):
                    if not covers(w, (i, j)) or transition_target(y, w, (i, j)) is not None:
                        continue
                    wt = compose(w, Permutation.transposition(i, j))
                    found = [(k, l) for k in range(1, 6) for l in range(k + 1, 6)
                             if compose(wt, Permutation.transposition(k, l)) in A - {w}]
                    assert found == [tuple(mir2_pair(y, w, (i, j)))]
                    seen += 1
    assert seen > 0


def test_covers_come_from_tau():
    assert run_suite("covers-i6").passed
    for y in involutions(4):
        brute = {z for z in involutions(5) if bruhat_leq(y, z) and hat_length(z) == hat_length(y) + 1}
        assert brute == {z for z in tau_covers(y, 1, 5) if z.is_positive()}


def test_t_sets_are_disjoint_and_give_bijections():
    assert run_suite("tcover-i5").passed


def test_cover_sets_are_nested_and_nonempty():
    assert run_suite("phi-inclusions-i6").passed


def test_cover_scan_window_is_wide_enough():
    assert run_suite("phi-window-i5").passed


def test_tau_uniqueness_sweep_s6():
    assert run_suite("tau-s6").passed


def test_pairing_sweep_s6():
    assert run_suite("mir2-s6").passed
