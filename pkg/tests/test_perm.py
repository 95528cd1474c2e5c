import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from invschub.perm import (
    Permutation, Transposition, bruhat_leq, compose, covers, demazure, descents,
    flatten, inverse, length, reduced_word, reduced_words, shift, star, symmetric_group,
    word_product,
)
from invschub.sweeps import run_suite
from invschub.tau import tau

from . import oracles as O

P = Permutation.parse


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(Permutation.from_one_line)


# ----------------------------------------------------------------------
# representation

def test_canonical_form_drops_fixed_points():
    assert Permutation({1: 1, 2: 3, 3: 2}) == Permutation({2: 3, 3: 2})
    assert Permutation({1: 1}).is_identity()
    assert hash(P("1324")) == hash(P("(2,3)"))


def test_rejects_non_bijections():
    with pytest.raises(ValueError):
        Permutation({1: 2, 2: 2})
    with pytest.raises(ValueError):
        Permutation({1: 2})


def test_text_forms_round_trip():
    for text in ["1", "231", "4153726", "2,3,5,6,8,10,9,4,1,7", "[(0,2),(2,0)]"]:
        w = P(text)
        assert P(str(w)) == w
        assert Permutation.from_json(w.to_json()) == w
        assert P(w.cycle_notation()) == w


def test_negative_support_is_first_class():
    w = Permutation.transposition(0, 2)
    assert not w.is_positive()
    assert length(w) == 3
    assert w.window() == (0, 2)


def test_transposition_requires_order():
    assert tuple(Transposition(2, 5)) == (2, 5)
    with pytest.raises(ValueError):
        Transposition(3, 3)


# ----------------------------------------------------------------------
# examples

def test_compose_examples():
    w = P("4153726")
    assert compose(Permutation(), w) == w
    assert compose(Permutation.s(1), Permutation.s(2)) == P("231")
    assert compose(P("231"), inverse(P("231"))).is_identity()


def test_word_product_reads_letters_left_to_right():
    assert word_product((1, 2)) == P("231")
    assert word_product((5, 3, 4, 2, 3)).one_line(6) == O.word_perm((5, 3, 4, 2, 3), 6)
    assert word_product(reduced_word(P("4153726"))) == P("4153726")


def test_length_examples():
    assert length(Permutation()) == 0
    assert length(P("321")) == 3
    assert length(P("4231")) == O.inv_count((4, 2, 3, 1)) == 5


def test_descent_examples():
    assert descents(Permutation()) == frozenset()
    assert descents(P("321")) == {1, 2}
    assert descents(P("1342")) == {3}
    assert descents(P("1342"), "left") == descents(inverse(P("1342")))


def test_bruhat_examples():
    w = P("4153726")
    assert bruhat_leq(w, w)
    assert bruhat_leq(P("231"), P("321"))
    assert not bruhat_leq(P("321"), P("231"))


def test_cover_examples():
    assert covers(Permutation(), (2, 3))
    u = P("4153726")
    assert covers(u, (2, 3)) and compose(u, Permutation.transposition(2, 3)) == P("4513726")
    assert not covers(Permutation(), (1, 4))
    # the plus covers through 2 in the same example
    plus = {j for j in range(3, 9) if covers(u, (2, j))}
    assert plus == {3, 4, 6}


def test_demazure_examples():
    s1, s2 = Permutation.s(1), Permutation.s(2)
    assert demazure(s1, s1) == s1
    assert demazure(s1, s2) == P("231")
    assert demazure(inverse(P("231")), P("231")) == P("321")


def test_flatten_examples():
    w = P("2,3,5,6,8,10,9,4,1,7")
    y = P("(1,9)(3,8)(5,10)(6,7)")
    E = {3, 4, 5, 6, 7, 8, 10}
    assert flatten(w, E) == P("2357614")
    assert flatten(y, E) == P("(1,6)(3,7)(4,5)")
    assert flatten(P("4153726"), range(1, 8)) == P("4153726")
    with pytest.raises(ValueError):
        flatten(w, set())


def test_shift_examples():
    assert shift(Permutation(), 5).is_identity()
    assert shift(P("(1,3)"), -1) == Permutation.transposition(0, 2)
    y = P("(2,3)(4,7)")
    assert shift(tau(3, 4, y), 2) == tau(5, 6, shift(y, 2))


def test_reduced_word_examples():
    assert reduced_words(Permutation()) == {()}
    assert reduced_words(P("321")) == {(1, 2, 1), (2, 1, 2)}
    assert reduced_words(P("312")) == {(2, 1)}


def test_symmetric_group_is_lexicographic():
    lines = [w.one_line(4) for w in symmetric_group(4)]
    assert lines == sorted(lines) == list(permutations(range(1, 5)))


# ----------------------------------------------------------------------
# invariants

def test_bruhat_matches_subword_oracle_on_s4():
    group = list(permutations(range(1, 5)))
    for u in group:
        for v in group:
            expect = O.bruhat_by_subword(u, v)
            assert bruhat_leq(Permutation.from_one_line(u), Permutation.from_one_line(v)) == expect


def test_bruhat_matches_subword_oracle_on_random_s6_pairs():
    rng = random.Random(6)
    base = list(range(1, 7))
    for _ in range(60):
        u, v = rng.sample(base, 6), rng.sample(base, 6)
        if O.inv_count(u) > O.inv_count(v):
            u, v = v, u
        expect = O.bruhat_by_subword(tuple(u), tuple(v))
        assert bruhat_leq(Permutation.from_one_line(u), Permutation.from_one_line(v)) == expect


def test_reduced_words_match_oracle_on_s4():
    for line in permutations(range(1, 5)):
        assert reduced_words(Permutation.from_one_line(line)) == O.reduced_words(line)


def test_structural_perm_suites():
    assert run_suite("perm-subword-s4").passed
    assert run_suite("perm-covers-s5").passed


@given(perms(6), st.integers(1, 7))
def test_simple_reflection_changes_length_by_one(w, i):
    assert abs(length(compose(w, Permutation.s(i))) - length(w)) == 1


@given(perms(5), perms(5), perms(5))
@settings(max_examples=60)
def test_demazure_is_associative(u, v, x):
    assert demazure(demazure(u, v), x) == demazure(u, demazure(v, x))


@given(perms(5), perms(5))
@settings(max_examples=80)
def test_demazure_is_the_product_when_lengths_add(u, v):
    if length(compose(u, v)) == length(u) + length(v):
        assert demazure(u, v) == compose(u, v)
    assert length(demazure(u, v)) >= max(length(u), length(v))


@given(perms(6), st.data())
@settings(max_examples=80)
def test_flatten_respects_products(y, data):
    # z must preserve E: build z as a permutation of E
    E = sorted(data.draw(st.sets(st.integers(1, 6), min_size=1, max_size=6)))
    images = data.draw(st.permutations(E))
    z = Permutation(dict(zip(E, images)))
    assert flatten(compose(y, z), E) == compose(flatten(y, E), flatten(z, E))


@given(perms(5), st.integers(-4, 4))
@settings(max_examples=60)
def test_shift_preserves_length_and_covers(w, N):
    assert length(shift(w, N)) == length(w)
    for i in range(1, 6):
        for j in range(i + 1, 7):
            assert covers(w, (i, j)) == covers(shift(w, N), (i + N, j + N))


@given(perms(5))
@settings(max_examples=40)
def test_star_is_an_involutive_length_preserving_map(w):
    assert star(star(w)) == w
    assert length(star(w)) == length(w)
