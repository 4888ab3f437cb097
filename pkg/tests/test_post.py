from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from posthopf.kernel import CutoffExceeded, LinComb
from posthopf.post import (
    PostHopfTrunc,
    TableMagma,
    brace_check,
    dump_magma,
    load_magma,
    ordered_instance,
    primitive_post_lie_check,
    unordered_instance,
    verify_post_hopf,
    verify_subadjacent,
    zero_magma,
)
from posthopf.trees import b_minus, canonical_forest, graft_left, ordered_trees

b = LinComb.basis
one = b(())
dot = b(("()",))


@pytest.fixture(scope="module")
def ph():
    return ordered_instance(6)


def test_unit_acts_trivially(ph):
    Y = b(("(())", "()"))
    assert ph.triangle(one, Y) == Y


def test_nothing_acts_on_the_unit(ph):
    assert ph.triangle(dot, one) == LinComb()


def test_single_letter_is_grafting(ph):
    assert ph.triangle(dot, b(("(())",))) == b(("(()())",)) + b(("((()))",))
    for tau in ordered_trees(2):
        for omega in ordered_trees(2):
            expected = LinComb({(t,): c for t, c in graft_left(tau, omega).items()})
            assert ph.triangle(b((tau,)), b((omega,))) == expected


def test_letter_acts_on_words_by_derivation(ph):
    # x ▷ (y z) = (x ▷ y) z + y (x ▷ z) for a primitive letter x
    lhs = ph.triangle(dot, b(("()", "(())")))
    rhs = ph.mul(ph.triangle(dot, b(("()",))), b(("(())",))) + ph.mul(b(("()",)), ph.triangle(dot, b(("(())",))))
    assert lhs == rhs


def test_gl_units(ph):
    Y = b(("(())", "()"))
    assert ph.gl_product(one, Y) == Y
    assert ph.gl_product(Y, one) == Y


def test_gl_of_two_nodes(ph):
    assert ph.gl_product(dot, dot) == b(("()", "()")) + b(("(())",))


def test_gl_matches_root_removal_form(ph):
    via_b = LinComb({b_minus(w): c for w, c in ph.triangle(dot, b(("((()))",))).items()})
    assert ph.gl_product(dot, b(("(())",))) == via_b


def test_subadjacent_antipode_small(ph):
    assert ph.subadjacent_antipode(one) == one
    assert ph.subadjacent_antipode(dot) == -dot
    # from the antipode law on () () with Δ(() ()) = () ()⊗1 + 2 ()⊗() + 1⊗() ()
    assert ph.subadjacent_antipode(b(("()", "()"))) == b(("()", "()")) + b(("(())",), 2)


def test_cutoff_is_enforced():
    small = ordered_instance(3)
    with pytest.raises(CutoffExceeded):
        small.triangle(b(("(())",)), b(("(())",)))
    with pytest.raises(CutoffExceeded):
        small.gl_product(b(("(())",)), b(("(())",)))


def test_post_hopf_suite_both_alphabets():
    assert verify_post_hopf(ordered_instance(3), 3).passed
    assert verify_post_hopf(unordered_instance(3), 3).passed


def test_subadjacent_suite_both_alphabets():
    assert verify_subadjacent(ordered_instance(3), 3).passed
    assert verify_subadjacent(unordered_instance(3), 3).passed


def test_zero_magma_is_a_post_hopf_algebra():
    ph0 = PostHopfTrunc(zero_magma(), 3, commutative=False)
    assert verify_post_hopf(ph0, 3).passed
    # x ▷ y = ε(x) y on the sub-coalgebra generated by a letter
    assert ph0.triangle(dot, b(("(())",))) == LinComb()
    assert ph0.triangle(one, b(("(())",))) == b(("(())",))


def test_corrupted_magma_fails_post4_at_degree_3(data_dir):
    m = load_magma(data_dir / "bad_graft_override.json")
    ph_bad = PostHopfTrunc(m["magma"], 4, m["commutative"], m["overrides"])
    rep = verify_post_hopf(ph_bad, 4)
    check = rep["Post-4: x▷(y▷z) = (x1·(x2▷y))▷z"]
    assert not check.passed
    assert check.witness.startswith("x=(), y=(), z=()")


def test_brace_identity_and_reconstruction():
    rep = brace_check(ordered_instance(3), 3)
    assert rep.passed, rep.render()


def test_primitive_post_lie_both_alphabets():
    assert primitive_post_lie_check(ordered_instance(5), 5).passed
    assert primitive_post_lie_check(unordered_instance(5), 5).passed


def test_table_magma_round_trip(tmp_path):
    entries = {}
    for p in range(1, 3):
        for q in range(1, 4 - p):
            for x in ordered_trees(p):
                for a in ordered_trees(q):
                    entries[(x, a)] = graft_left(x, a)
    path = tmp_path / "graft3.json"
    dump_magma(TableMagma(entries), path)
    m = load_magma(path)
    assert m["magma"].table == entries
    ph_table = PostHopfTrunc(m["magma"], 3, False)
    ph_graft = ordered_instance(3)
    for X in ph_graft.words_upto(2):
        for Y in ph_graft.words_upto(3 - len("".join(X)) // 2):
            assert ph_table.word_triangle(X, Y) == ph_graft.word_triangle(X, Y)
    assert verify_post_hopf(ph_table, 3).passed


def test_table_must_be_degree_additive():
    with pytest.raises(ValueError):
        TableMagma({("()", "()"): b("()")})


def test_override_must_be_degree_additive(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"base": "graft", "overrides": [
        {"left": "() ()", "right": "()", "result": [{"tree": "((()()))", "num": 1, "den": 1}]}]}))
    with pytest.raises(ValueError):
        load_magma(path)


words3 = st.lists(st.sampled_from(["()", "(())", "(()())", "((()))"]), min_size=0, max_size=2).map(tuple)


def _deg(w):
    return sum(len(t) // 2 for t in w)


@settings(max_examples=40, deadline=None)
@given(words3, words3)
def test_forgetting_planarity_commutes_with_the_product(X, Y):
    """The unordered recursion gives the same answer whichever letter it peels first."""
    if _deg(X) + _deg(Y) > 6:
        return
    ordered, unordered = ordered_instance(6), unordered_instance(6)
    lhs = _forget(ordered.triangle(b(X), b(Y)))
    rhs = unordered.triangle(b(canonical_forest(X)), b(canonical_forest(Y)))
    assert lhs == rhs


def _forget(u: LinComb) -> LinComb:
    out = LinComb()
    for w, c in u.items():
        out = out + b(canonical_forest(w), c)
    return out
