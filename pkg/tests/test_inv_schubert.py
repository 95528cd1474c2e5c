import pytest

from invschub.involutions import hat_length, involutions
from invschub.inv_schubert import (
    inv_schubert, longest_inv_product, pair_form, transition_inv, upsilon,
)
from invschub.perm import Permutation
from invschub.poly import Poly, schubert
from invschub.sweeps import run_suite

x = Poly.var
P = Permutation.parse


def test_small_examples():
    assert inv_schubert(Permutation()) == Poly.const(1)
    assert inv_schubert(P("(1,2)")) == x(1)
    assert inv_schubert(P("321")) == x(1) ** 2 + x(1) * x(2)
    assert inv_schubert(P("321")) == schubert(P("231")) + schubert(P("312"))
    with pytest.raises(ValueError):
        inv_schubert(P("231"))
    with pytest.raises(ValueError):
        inv_schubert(Permutation.transposition(0, 1))


def test_pair_form():
    assert pair_form(2, 2) == x(2)
    assert pair_form(1, 3) == x(1) + x(3)


def test_transition_on_a_two_cycle_example():
    r = transition_inv(P("15432"), 3)
    assert (r.p, r.q) == (3, 4)
    assert r.plus_set == {P("156423")}
    assert r.minus_set == {P("45312")}
    assert r.holds


def test_transition_on_a_fixed_point_example():
    r = transition_inv(P("3214765"), 4)
    assert (r.p, r.q) == (4, 4)
    assert r.plus_set == {P("3217564"), P("3216745")}
    assert r.minus_set == {P("4231765"), P("3412765")}
    assert r.holds


def test_transition_on_a_cycle_given_by_either_end():
    y = P("(2,3)(4,7)")
    a, b = transition_inv(y, 2), transition_inv(y, 3, 2)
    assert a == b and a.holds
    assert (a.p, a.q) == (2, 3)


def test_transition_rejects_non_cycles():
    with pytest.raises(ValueError):
        transition_inv(P("321"), 1, 2)
    with pytest.raises(ValueError):
        transition_inv(P("231"), 1)


def test_transition_json_shape():
    d = transition_inv(P("15432"), 3).to_json()
    assert d["holds"] is True
    assert [Permutation.from_json(z) for z in d["plus"]] == [P("156423")]
    assert Poly.from_json(d["lhs"]) == Poly.from_json(d["rhs"])


def test_longest_involution_is_a_product_of_linear_forms():
    assert longest_inv_product(2) == x(1)
    assert longest_inv_product(3) == x(1) * (x(1) + x(2))
    assert longest_inv_product(4) == x(1) * x(2) * (x(1) + x(2)) * (x(1) + x(3))
    for n in range(1, 7):
        w0 = Permutation.from_one_line(range(n, 0, -1))
        assert inv_schubert(w0) == longest_inv_product(n)
    with pytest.raises(ValueError):
        longest_inv_product(0)


def test_upsilon_examples():
    assert upsilon(P("321")) == 2 * (x(1) ** 2 + x(1) * x(2))
    assert upsilon(P("(1,2)")) == 2 * x(1)
    assert upsilon(Permutation()) == Poly.const(1)


def test_degree_is_hat_length():
    for y in involutions(6):
        f = inv_schubert(y)
        assert f.is_homogeneous() and f.degree() == hat_length(y)


def test_descent_recurrence_sweep():
    assert run_suite("inv-recurrence-i5").passed


def test_transition_sweep_i6():
    assert run_suite("transition-inv-i6").passed
