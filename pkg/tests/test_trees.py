from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from posthopf.kernel import LinComb
from posthopf.trees import (
    TreeParseError,
    b_minus,
    b_minus_tree,
    b_plus,
    canonical,
    children,
    degree,
    graft_left,
    graft_unordered,
    ordered_forests,
    ordered_trees,
    parse_forest,
    parse_tree,
    unordered_trees,
)


def letters(s: str) -> str:
    """Trees written with the a/b letters of the grafting displays."""
    return s.replace("a", "(").replace("b", ")")


def lc(*terms):
    out = LinComb()
    for t in terms:
        c, t = (t if isinstance(t, tuple) else (1, t))
        out = out + LinComb.basis(t, c)
    return out


def test_graft_left_display():
    # aabb ↷ aabababb = aaabbabababb + aaaabbbababb + aabaaabbbabb + aababaaabbbb
    expected = lc(*(letters(w) for w in ["aaabbabababb", "aaaabbbababb", "aabaaabbbabb", "aababaaabbbb"]))
    assert graft_left("(())", "(()()())") == expected
    assert expected == lc("((())()()())", "(((()))()())", "(()((()))())", "(()()((())))")


def test_graft_left_second_display():
    # aababb ↷ aaabbabb = aaababbaabbabb + aaaababbabbabb + aaaaababbbbabb + aaabbaaababbbb
    expected = lc(*(letters(w) for w in ["aaababbaabbabb", "aaaababbabbabb", "aaaaababbbbabb", "aaabbaaababbbb"]))
    assert graft_left(letters("aababb"), letters("aaabbabb")) == expected


def test_graft_left_small():
    assert graft_left("()", "()") == lc("(())")
    assert graft_left("()", "(())") == lc("(()())", "((()))")


def test_graft_unordered_display():
    # = aaabbabababb + 3 aaaabbbababb
    expected = lc(letters("aaabbabababb"), (3, letters("aaaabbbababb")))
    assert graft_unordered("(())", "(()()())") == expected


def test_graft_unordered_small():
    assert graft_unordered("()", "()") == lc("(())")
    assert graft_unordered("()", "(()())") == lc("(()()())", (2, "((())())"))


def test_b_plus_display():
    assert b_plus(("(())", "(()())")) == "((())(()()))"
    assert b_plus(()) == "()"
    assert b_plus(("()",)) == "(())"


def test_b_minus_display():
    assert b_minus_tree("(()()((())))") == ("()", "()", "((()))")
    assert b_minus_tree("()") == ()
    assert b_minus(("(())", "(())")) == ("()", "()")


def test_letter_form_accepted():
    assert parse_tree("aababb") == "(()())"


@pytest.mark.parametrize("bad, pos", [("(()", 3), ("())", 2), ("()()", 2), ("(x)", 1)])
def test_parse_errors_report_position(bad, pos):
    with pytest.raises(TreeParseError) as info:
        parse_tree(bad)
    assert info.value.position == pos


def test_forest_parsing():
    assert parse_forest("") == ()
    assert parse_forest("1") == ()
    assert parse_forest("() (())") == ("()", "(())")


def test_catalan_counts():
    assert [len(ordered_trees(n)) for n in range(1, 6)] == [1, 1, 2, 5, 14]


def test_unordered_tree_counts():
    # rooted unlabelled trees: 1, 1, 2, 4, 9, 20
    assert [len(unordered_trees(n)) for n in range(1, 7)] == [1, 1, 2, 4, 9, 20]


def test_ordered_forest_counts():
    # forests of degree n are in bijection with trees of degree n + 1
    assert [len(ordered_forests(n)) for n in range(0, 5)] == [1, 1, 2, 5, 14]


def test_canonical_sorts_larger_children_first():
    assert canonical("(()(()))") == "((())())"
    assert canonical("((())())") == "((())())"


trees5 = st.sampled_from([t for n in range(1, 5) for t in ordered_trees(n)])


@settings(max_examples=80, deadline=None)
@given(trees5, trees5)
def test_grafting_degree_and_term_count(tau, omega):
    result = graft_left(tau, omega)
    assert all(degree(t) == degree(tau) + degree(omega) for t in result)
    assert sum(result.values()) == degree(omega)


@settings(max_examples=80, deadline=None)
@given(trees5, trees5)
def test_unordered_grafting_forgets_planarity(tau, omega):
    assert graft_unordered(tau, omega) == graft_unordered(canonical(tau), canonical(omega))


@settings(max_examples=50, deadline=None)
@given(trees5)
def test_b_plus_inverts_b_minus(t):
    assert b_plus(b_minus_tree(t)) == t
    assert children(t) == b_minus_tree(t)
