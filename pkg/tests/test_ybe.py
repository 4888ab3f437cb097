from __future__ import annotations

import pytest

from posthopf.kernel import LinComb, tensor
from posthopf.post import ordered_instance, unordered_instance
from posthopf.ybe import YbeOperator, verify_braid, verify_compatibility, ybe_suite

b = LinComb.basis
one = b(())
dot = b(("()",))


@pytest.fixture(scope="module")
def op():
    return YbeOperator(ordered_instance(6))


def test_right_action_units(op):
    X = b(("(())", "()"))
    assert op.right_action(X, one) == X
    assert op.right_action(one, X) == LinComb()
    assert op.right_action(one, one) == one


def test_right_action_of_two_nodes(op):
    # expanded by hand: -(()) - (() () + (())) + (() () + (()))
    assert op.right_action(dot, dot) == -b(("(())",))


def test_R_units(op):
    X = ("(())", "()")
    assert op.R(b((X, ()))) == b(((), X))
    assert op.R(b(((), X))) == b((X, ()))


def test_R_of_two_nodes(op):
    expected = tensor(b(("(())",)), one) + tensor(dot, dot) - tensor(one, b(("(())",)))
    assert op.R(tensor(dot, dot)) == expected
    assert op.R_trees_explicit(tensor(dot, dot)) == expected


def test_explicit_form_units(op):
    Y = ("(())",)
    assert op.R_trees_explicit(b(((), Y))) == b((Y, ()))
    assert op.R_trees_explicit(b((Y, ()))) == b(((), Y))


@pytest.mark.parametrize("make", [ordered_instance, unordered_instance])
def test_braid_relation_degree_3(make):
    assert verify_braid(YbeOperator(make(6)), 3).passed


@pytest.mark.parametrize("make", [ordered_instance, unordered_instance])
def test_compatibility_degree_3(make):
    rep = verify_compatibility(YbeOperator(make(6)), 3)
    assert rep.passed, rep.render()


def test_degree_zero_is_vacuous():
    rep = ybe_suite(ordered_instance(1), 0)
    assert rep.passed
    assert all(c.cases == 1 for c in rep.checks)


def test_plain_word_antipode_breaks_the_braiding():
    ph = ordered_instance(6)
    rep = ybe_suite(ph, 3, antipode=lambda w: ph.H.antipode_word(w))
    assert not rep.passed
    failing = [c for c in rep.checks if not c.passed]
    assert any(c.name.startswith("braiding condition") for c in failing)
    assert all(c.witness for c in failing)
