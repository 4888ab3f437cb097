from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from posthopf.kernel import (
    LinComb,
    extend_bilinear,
    extend_linear,
    flatten_tensor,
    format_lincomb,
    in_span,
    nullspace,
    parse_lincomb,
    rank,
    rref,
    tensor,
)
from posthopf.trees import parse_tree

b = LinComb.basis


def test_cancellation_gives_empty_map():
    u = b("b", 2) + b("b", -2)
    assert u == LinComb()
    assert len(u) == 0 and not u


def test_distinct_keys_stay_separate():
    assert b("b") + b("b'") == LinComb({"b": 1, "b'": 1})


def test_rational_coefficients_are_exact():
    u = b("b", Fraction(1, 2)) + b("b", Fraction(1, 3))
    assert u.coeff("b") == Fraction(5, 6)


def test_zero_coefficients_never_stored():
    u = LinComb({"x": 0, "y": 1})
    assert list(u) == ["y"]
    assert u.coeff("x") == 0


def test_extend_linear_examples():
    f = lambda k: b("c", 2)
    assert extend_linear(f, LinComb()) == LinComb()
    assert extend_linear(b, b("x", 3) + b("y")) == b("x", 3) + b("y")
    assert extend_linear(f, b("b", 3)) == b("c", 6)


def test_tensor_examples():
    assert tensor(LinComb(), b("c")) == LinComb()
    assert tensor(b("b"), b("c")) == b(("b", "c"))
    assert tensor(b("b") + b("b'"), b("c")) == b(("b", "c")) + b(("b'", "c"))


def test_flatten_nested_tensor():
    nested = tensor(tensor(b("x"), b("y")), b("z"))
    assert flatten_tensor(nested) == b(("x", "y", "z"))


def test_extend_bilinear_is_bilinear():
    f = lambda x, y: b(x + y)
    u, v = b("a", 2) + b("b"), b("c", -1)
    assert extend_bilinear(f, u, v) == b("ac", -2) + b("bc", -1)


def test_format_orders_by_degree_then_string():
    u = b("(()())") + b("()", 3) + b("((()))", Fraction(-1, 2))
    assert format_lincomb(u, str) == "3*() - 1/2*((())) + (()())"


def test_format_parse_round_trip_on_trees():
    u = b("(()())") + b("()", 3) + b("((()))", Fraction(-1, 2))
    assert parse_lincomb(format_lincomb(u, str), parse_tree) == u
    assert parse_lincomb("0", parse_tree) == LinComb()


def test_rank_and_span():
    vs = [LinComb({0: 1, 1: 1}), LinComb({1: 1, 2: 1}), LinComb({0: 1, 2: -1})]
    assert rank(vs) == 2
    ech = rref(vs)
    assert in_span(LinComb({0: 2, 1: 3, 2: 1}), ech)
    assert not in_span(LinComb({0: 1}), ech)


def test_nullspace_of_dependent_columns():
    cols = [LinComb({"p": 1}), LinComb({"q": 1}), LinComb({"p": 1, "q": 1})]
    (v,) = nullspace(cols)
    combo = LinComb()
    for j, c in v.items():
        combo = combo + cols[j] * c
    assert combo == LinComb()


coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
lincombs = st.dictionaries(st.sampled_from(["()", "(())", "(()())", "((()))"]), coeffs, max_size=4).map(LinComb)


@settings(max_examples=60, deadline=None)
@given(lincombs, lincombs, lincombs)
def test_vector_space_laws(u, v, w):
    assert (u + v) + w == u + (v + w)
    assert u + v == v + u
    assert u - u == LinComb()
    assert (u + v) * 3 == u * 3 + v * 3


@settings(max_examples=60, deadline=None)
@given(lincombs)
def test_printed_lincombs_reparse(u):
    assert parse_lincomb(format_lincomb(u, str), parse_tree) == u
