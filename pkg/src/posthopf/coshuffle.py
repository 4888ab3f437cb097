"""The coshuffle Hopf algebra T(V) over a tree alphabet.

Basis words are tuples of letters (tree strings); ``()`` is the unit.  The
product is concatenation and letters are primitive, so the coproduct of a
word is the sum over all ways of splitting its letters into a left and a
right subsequence.

:class:`WordHopf` also covers the commutative quotient S(V) used for
non-planar trees: words are then kept sorted (larger trees first) and
concatenation re-sorts.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product

from .kernel import Accumulator, LinComb, extend_bilinear, extend_linear
from .trees import canonical_forest

Word = tuple


class WordHopf:
    """Tensor (or symmetric) Hopf algebra on words with the deshuffle coproduct."""

    def __init__(self, commutative: bool = False):
        self.commutative = commutative
        # per-instance caches; the tables are pure functions of the word
        self._split = lru_cache(maxsize=None)(self._split_impl)
        self._split_n = lru_cache(maxsize=None)(self._split_n_impl)

    def __repr__(self) -> str:
        return f"WordHopf(commutative={self.commutative})"

    def word(self, letters) -> Word:
        letters = tuple(letters)
        return canonical_forest(letters) if self.commutative else letters

    def unit(self) -> LinComb:
        return LinComb.basis(())

    # products ---------------------------------------------------------------

    def concat_words(self, u: Word, v: Word) -> Word:
        w = u + v
        return canonical_forest(w) if self.commutative and u and v else w

    def concat(self, u: LinComb, v: LinComb) -> LinComb:
        return extend_bilinear(lambda a, b: LinComb.basis(self.concat_words(a, b)), u, v)

    def mul_many(self, *factors: LinComb) -> LinComb:
        out = self.unit()
        for f in factors:
            out = self.concat(out, f)
        return out

    # coproduct ----------------------------------------------------------------

    def _split_impl(self, w: Word) -> tuple:
        acc = Accumulator()
        m = len(w)
        for mask in range(1 << m):
            left = tuple(w[i] for i in range(m) if mask >> i & 1)
            right = tuple(w[i] for i in range(m) if not mask >> i & 1)
            acc.add_term((left, right), 1)
        return tuple(acc.result().items())

    def splits(self, w: Word) -> tuple:
        """Collected terms ``((left, right), coeff)`` of the coproduct of a word."""
        return self._split(w)

    def _split_n_impl(self, w: Word, legs: int) -> tuple:
        acc = Accumulator()
        for assign in product(range(legs), repeat=len(w)):
            bins: list[list] = [[] for _ in range(legs)]
            for letter, b in zip(w, assign):
                bins[b].append(letter)
            acc.add_term(tuple(tuple(b) for b in bins), 1)
        return tuple(acc.result().items())

    def splits_n(self, w: Word, legs: int) -> tuple:
        """Collected terms of the iterated coproduct with ``legs`` tensor factors."""
        if legs == 1:
            return (((w,), 1),)
        if legs == 2:
            return self._split(w)
        return self._split_n(w, legs)

    def deshuffle(self, w: Word) -> LinComb:
        return LinComb(dict(self._split(w)))

    def coproduct(self, u: LinComb) -> LinComb:
        return extend_linear(self.deshuffle, u)

    def iterated_coproduct(self, w: Word, n: int) -> LinComb:
        """Δ^(n)(w): an (n+1)-fold tensor; n = 1 is the coproduct itself."""
        if n < 1:
            raise ValueError("iterated coproduct needs n >= 1")
        return LinComb(dict(self.splits_n(w, n + 1)))

    # counit and antipode ----------------------------------------------------

    @staticmethod
    def counit_word(w: Word) -> int:
        return 1 if not w else 0

    def counit(self, u: LinComb):
        return u.coeff(())

    def antipode_word(self, w: Word) -> LinComb:
        sign = -1 if len(w) % 2 else 1
        return LinComb.basis(self.word(reversed(w)), sign)

    def antipode(self, u: LinComb) -> LinComb:
        return extend_linear(self.antipode_word, u)


ORDERED = WordHopf(commutative=False)
COMMUTATIVE = WordHopf(commutative=True)


def concat(u: LinComb, v: LinComb) -> LinComb:
    return ORDERED.concat(u, v)


def deshuffle(w: Word) -> LinComb:
    return ORDERED.deshuffle(w)


def counit(u: LinComb):
    return ORDERED.counit(u)


def antipode(u: LinComb) -> LinComb:
    return ORDERED.antipode(u)


def iterated_coproduct(w: Word, n: int) -> LinComb:
    return ORDERED.iterated_coproduct(w, n)


def word(*letters: str) -> LinComb:
    """Basis element for the word with the given letters."""
    return LinComb.basis(tuple(letters))
