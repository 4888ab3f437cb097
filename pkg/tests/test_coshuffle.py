from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from posthopf.coshuffle import COMMUTATIVE, ORDERED, antipode, concat, counit, deshuffle, iterated_coproduct, word
from posthopf.kernel import Accumulator, LinComb, tensor

t, s = "(())", "()"
one = LinComb.basis(())


def test_concat():
    assert concat(one, word(t)) == word(t)
    assert concat(word("()"), word("()")) == word("()", "()")
    assert concat(word("(())"), word("()", "()")) == word("(())", "()", "()")


def test_deshuffle_examples():
    assert deshuffle(()) == tensor(one, one)
    assert deshuffle((t,)) == tensor(word(t), one) + tensor(one, word(t))
    expected = (tensor(word(t, s), one) + tensor(word(t), word(s)) + tensor(word(s), word(t))
                + tensor(one, word(t, s)))
    assert deshuffle((t, s)) == expected


def test_antipode_examples():
    assert antipode(one) == one
    assert antipode(word(t)) == -word(t)
    assert antipode(word(t, s)) == word(s, t)


def test_iterated_coproduct():
    assert iterated_coproduct((), 2) == LinComb.basis(((), (), ()))
    assert iterated_coproduct((t,), 2) == LinComb({((t,), (), ()): 1, ((), (t,), ()): 1, ((), (), (t,)): 1})


def test_commutative_words_are_sorted():
    assert COMMUTATIVE.concat(word("()"), word("(())")) == COMMUTATIVE.concat(word("(())"), word("()"))
    assert ORDERED.concat(word("()"), word("(())")) != ORDERED.concat(word("(())"), word("()"))


letters = st.sampled_from(["()", "(())", "(()())", "((()))"])
words = st.lists(letters, max_size=4).map(tuple)


@settings(max_examples=60, deadline=None)
@given(words)
def test_antipode_law(w):
    for H in (ORDERED, COMMUTATIVE):
        w = H.word(w)
        acc = Accumulator()
        for (l, r), c in H.deshuffle(w).items():
            acc.add(H.concat(H.antipode(LinComb.basis(l)), LinComb.basis(r)), c)
        assert acc.result() == one * H.counit_word(w)


@settings(max_examples=60, deadline=None)
@given(words, words)
def test_coproduct_is_multiplicative(u, v):
    lhs = ORDERED.deshuffle(u + v)
    acc = Accumulator()
    for (a, b), c in deshuffle(u).items():
        for (x, y), d in deshuffle(v).items():
            acc.add_term((a + x, b + y), c * d)
    assert lhs == acc.result()
    assert counit(LinComb.basis(u + v)) == counit(LinComb.basis(u)) * counit(LinComb.basis(v))
