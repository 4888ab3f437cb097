"""The right action ◁ and the Yang-Baxter operator R of a post-Hopf algebra.

For a cocommutative post-Hopf algebra (H, ▷) with subadjacent product ∗,

    a ◁ b = S▷(a1 ▷ b1) ∗ a2 ∗ b2,        R(x ⊗ y) = (x1 ▷ y1) ⊗ (x2 ◁ y2),

and R satisfies the braid relation.  On tree alphabets R also has the
closed form ``(X1 ▷ Y1) ⊗ B⁻(S▷(X2 ▷ Y2) ▷ (X3 ▷ B⁺(Y3)))``, which is
implemented separately and used as a cross-check.
"""
from __future__ import annotations

from collections.abc import Callable

from .kernel import Accumulator, CutoffExceeded, LinComb, extend_linear, rank
from .post import PostHopfTrunc, fmt, fmt_key, lin_degree
from .report import Report
from .trees import forest_degree

Word = tuple


class YbeOperator:
    """◁ and R for a truncated tree post-Hopf algebra.

    ``antipode`` replaces S▷ on basis words; it exists so that tests can
    plug in a deliberately wrong antipode and watch the suites fail.
    """

    def __init__(self, ph: PostHopfTrunc, antipode: Callable[[Word], LinComb] | None = None):
        self.ph = ph
        self.H = ph.H
        self._santi = antipode or ph.santi_word
        self._ra: dict = {}
        self._r: dict = {}
        self._rx: dict = {}

    @property
    def cutoff(self) -> int:
        return self.ph.cutoff

    def _check(self, deg: int) -> None:
        if deg > self.cutoff:
            raise CutoffExceeded(f"degree {deg} exceeds cutoff {self.cutoff}")

    def _santi_lin(self, u: LinComb) -> LinComb:
        return extend_linear(self._santi, u)

    def _gl(self, u: LinComb, v: LinComb) -> LinComb:
        acc = Accumulator()
        for a, c in u.items():
            for b, d in v.items():
                acc.add(self.ph.gl_word(a, b), c * d)
        return acc.result()

    # ◁ ---------------------------------------------------------------------

    def right_action_word(self, a: Word, b: Word) -> LinComb:
        key = (a, b)
        r = self._ra.get(key)
        if r is None:
            acc = Accumulator()
            for (a1, a2), c in self.H.splits(a):
                for (b1, b2), d in self.H.splits(b):
                    s = self._santi_lin(self.ph.word_triangle(a1, b1))
                    if not s:
                        continue
                    acc.add(self._gl(self._gl(s, LinComb.basis(a2)), LinComb.basis(b2)), c * d)
            r = self._ra[key] = acc.result()
        return r

    def right_action(self, u: LinComb, v: LinComb) -> LinComb:
        """``u ◁ v``."""
        self._check(lin_degree(u) + lin_degree(v))
        acc = Accumulator()
        for a, c in u.items():
            for b, d in v.items():
                acc.add(self.right_action_word(a, b), c * d)
        return acc.result()

    # R ---------------------------------------------------------------------

    def R_word(self, x: Word, y: Word) -> LinComb:
        key = (x, y)
        r = self._r.get(key)
        if r is None:
            acc = Accumulator()
            for (x1, x2), c in self.H.splits(x):
                for (y1, y2), d in self.H.splits(y):
                    left = self.ph.word_triangle(x1, y1)
                    if not left:
                        continue
                    right = self.right_action_word(x2, y2)
                    for k1, c1 in left.items():
                        for k2, c2 in right.items():
                            acc.add_term((k1, k2), c * d * c1 * c2)
            r = self._r[key] = acc.result()
        return r

    def R(self, u: LinComb) -> LinComb:
        """R on a LinComb of pairs ``(x, y)`` of words."""
        self._check(max((forest_degree(x) + forest_degree(y) for x, y in u), default=0))
        acc = Accumulator()
        for (x, y), c in u.items():
            acc.add(self.R_word(x, y), c)
        return acc.result()

    def R_trees_word(self, X: Word, Y: Word) -> LinComb:
        key = (X, Y)
        r = self._rx.get(key)
        if r is not None:
            return r
        ph, H = self.ph, self.H
        acc = Accumulator()
        for (X1, X2, X3), c in H.splits_n(X, 3):
            for (Y1, Y2, Y3), d in H.splits_n(Y, 3):
                left = ph.word_triangle(X1, Y1)
                if not left:
                    continue
                s = self._santi_lin(ph.word_triangle(X2, Y2))
                inner = ph.letter_triangle(X3, ph.b_plus(Y3))
                right = Accumulator()
                for w, cw in s.items():
                    for t, ct in inner.items():
                        for t2, c2 in ph.letter_triangle(w, t).items():
                            right.add_term(ph.b_minus((t2,)), cw * ct * c2)
                right = right.result()
                for k1, c1 in left.items():
                    for k2, c2 in right.items():
                        acc.add_term((k1, k2), c * d * c1 * c2)
        r = self._rx[key] = acc.result()
        return r

    def R_trees_explicit(self, u: LinComb) -> LinComb:
        """R through ``(X1▷Y1) ⊗ B⁻(S▷(X2▷Y2) ▷ (X3▷B⁺(Y3)))``."""
        self._check(max((forest_degree(x) + forest_degree(y) for x, y in u), default=0))
        acc = Accumulator()
        for (x, y), c in u.items():
            acc.add(self.R_trees_word(x, y), c)
        return acc.result()

    # on 3-fold tensors -------------------------------------------------------

    def R12(self, u: LinComb) -> LinComb:
        acc = Accumulator()
        for (x, y, z), c in u.items():
            for (a, b), d in self.R_word(x, y).items():
                acc.add_term((a, b, z), c * d)
        return acc.result()

    def R23(self, u: LinComb) -> LinComb:
        acc = Accumulator()
        for (x, y, z), c in u.items():
            for (a, b), d in self.R_word(y, z).items():
                acc.add_term((x, a, b), c * d)
        return acc.result()

    def matrix_rank(self, d: int) -> tuple[int, int]:
        """(rank of R on the degree-d part of H⊗H, dimension of that part)."""
        pairs = [(x, y) for x, y in self.ph.tuples_upto(2, d) if forest_degree(x) + forest_degree(y) == d]
        return rank(self.R_word(x, y) for x, y in pairs), len(pairs)


def _tensor_fmt(u: LinComb) -> str:
    return fmt(u)


def _b3(x, y, z) -> LinComb:
    return LinComb.basis((x, y, z))


def verify_braid(op: YbeOperator, D: int) -> Report:
    """Braid relation ``R12 R23 R12 = R23 R12 R23`` on basis triples of total degree ≤ D."""
    ph = op.ph
    rep = Report(f"braid[{ph.magma.name}, {'unordered' if ph.commutative else 'ordered'}]")
    rng = f"3-tuples of basis words, total degree <= {D}"
    rep.identity(
        "braid: (R⊗id)(id⊗R)(R⊗id) = (id⊗R)(R⊗id)(id⊗R)", rng,
        ((f"x={fmt_key(x)}, y={fmt_key(y)}, z={fmt_key(z)}",
          lambda x=x, y=y, z=z: op.R12(op.R23(op.R12(_b3(x, y, z)))),
          lambda x=x, y=y, z=z: op.R23(op.R12(op.R23(_b3(x, y, z)))))
         for x, y, z in ph.tuples_upto(3, D)), _tensor_fmt)
    return rep


def verify_compatibility(op: YbeOperator, D: int) -> Report:
    """∗∘R = ∗, unit rules, R a coalgebra map, agreement of both R formulas, and invertibility."""
    ph, H = op.ph, op.H
    rep = Report(f"ybe-compat[{ph.magma.name}, {'unordered' if ph.commutative else 'ordered'}]")
    rng = f"pairs of basis words, total degree <= {D}"
    pairs = list(ph.tuples_upto(2, D))
    b = LinComb.basis

    def gl_after_R(x, y):
        acc = Accumulator()
        for (p, q), c in op.R_word(x, y).items():
            acc.add(ph.gl_word(p, q), c)
        return acc.result()

    rep.identity(
        "braiding condition: a∗b = (a1▷b1)∗(a2◁b2)", rng,
        ((f"a={fmt_key(x)}, b={fmt_key(y)}", lambda x=x, y=y: gl_after_R(x, y), lambda x=x, y=y: ph.gl_word(x, y))
         for x, y in pairs), fmt)
    words = list(ph.words_upto(D))
    rep.identity(
        "unit rules: R(x⊗1) = 1⊗x, R(1⊗x) = x⊗1", f"basis words, degree <= {D}",
        ((f"x={fmt_key(x)}", lambda x=x: op.R_word(x, ()) + 2 * op.R_word((), x), b(((), x)) + 2 * b((x, ())))
         for x in words), fmt)
    rep.identity(
        "right action units: x◁1 = x, 1◁x = ε(x)1", f"basis words, degree <= {D}",
        ((f"x={fmt_key(x)}",
          lambda x=x: (op.right_action_word(x, ()), op.right_action_word((), x)),
          (b(x), b(()) * H.counit_word(x)))
         for x in words), lambda p: " , ".join(fmt(q) for q in p))

    def delta_R(x, y):
        acc = Accumulator()
        for (p, q), c in op.R_word(x, y).items():
            for (p1, p2), c1 in H.splits(p):
                for (q1, q2), c2 in H.splits(q):
                    acc.add_term((p1, q1, p2, q2), c * c1 * c2)
        return acc.result()

    def R_delta(x, y):
        acc = Accumulator()
        for (x1, x2), c1 in H.splits(x):
            for (y1, y2), c2 in H.splits(y):
                left = op.R_word(x1, y1)
                if not left:
                    continue
                right = op.R_word(x2, y2)
                for (p1, q1), d1 in left.items():
                    for (p2, q2), d2 in right.items():
                        acc.add_term((p1, q1, p2, q2), c1 * c2 * d1 * d2)
        return acc.result()

    rep.identity(
        "coalgebra map: Δ_{H⊗H} R = (R⊗R) Δ_{H⊗H}", rng,
        ((f"x={fmt_key(x)}, y={fmt_key(y)}", lambda x=x, y=y: delta_R(x, y), lambda x=x, y=y: R_delta(x, y))
         for x, y in pairs), fmt)
    rep.identity(
        "counit: (ε⊗ε)R = ε⊗ε", rng,
        ((f"x={fmt_key(x)}, y={fmt_key(y)}",
          lambda x=x, y=y: op.R_word(x, y).coeff(((), ())),
          H.counit_word(x) * H.counit_word(y))
         for x, y in pairs))
    rep.identity(
        "R preserves total degree", rng,
        ((f"x={fmt_key(x)}, y={fmt_key(y)}",
          lambda x=x, y=y: {forest_degree(p) + forest_degree(q) for p, q in op.R_word(x, y)} - {forest_degree(x) + forest_degree(y)},
          set())
         for x, y in pairs))
    rep.identity(
        "general R = explicit B± form", rng,
        ((f"x={fmt_key(x)}, y={fmt_key(y)}", lambda x=x, y=y: op.R_word(x, y), lambda x=x, y=y: op.R_trees_word(x, y))
         for x, y in pairs), fmt)
    rep.identity(
        "R invertible on each degree", f"degrees 0..{D}",
        ((f"degree {d}", lambda d=d: (lambda rk: f"rank {rk[0]} of {rk[1]}")(op.matrix_rank(d)),
          lambda d=d: (lambda rk: f"rank {rk[1]} of {rk[1]}")(op.matrix_rank(d)))
         for d in range(D + 1)))
    return rep


def ybe_suite(ph: PostHopfTrunc, D: int, antipode: Callable[[Word], LinComb] | None = None) -> Report:
    op = YbeOperator(ph, antipode)
    rep = Report(f"ybe[{ph.magma.name}, {'unordered' if ph.commutative else 'ordered'}, D={D}]")
    rep.extend(verify_braid(op, D))
    rep.extend(verify_compatibility(op, D))
    return rep
