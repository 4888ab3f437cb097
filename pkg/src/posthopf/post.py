"""Post-Hopf structure on the coshuffle Hopf algebra of a magma.

Given a bilinear product ``⋆`` on an alphabet of trees, Foissy's recursion
extends it to a product ``▷`` on words:

* ``1 ▷ a = a`` and ``x ▷ a = x ⋆ a`` for letters,
* ``(x x1 ... xn) ▷ a = x ⋆ ((x1 ... xn) ▷ a) - Σ_i (x1 .. (x ⋆ xi) .. xn) ▷ a``,
* ``X ▷ 1 = ε(X) 1`` and ``X ▷ (a1 ... am) = (X1 ▷ a1) ... (Xm ▷ am)``
  summed over the m-fold deshuffle of X.

With left grafting on planar trees this is the free post-Lie enveloping
algebra; the subadjacent product ``X ∗ Y = X1 · (X2 ▷ Y)`` is then the
Grossman-Larson product ``B⁻(X ▷ B⁺(Y))``.
"""
from __future__ import annotations

import json
from collections.abc import Callable, Iterable, Iterator, Mapping
from fractions import Fraction
from itertools import product
from pathlib import Path

from .coshuffle import WordHopf
from .kernel import (
    Accumulator,
    CutoffExceeded,
    LinComb,
    extend_bilinear,
    extend_linear,
    format_lincomb,
    format_scalar,
)
from .report import Report
from .trees import (
    b_minus,
    b_plus,
    canonical,
    canonical_forest,
    degree,
    format_forest,
    forest_degree,
    graft_left,
    graft_unordered,
    ordered_forests,
    ordered_trees,
    parse_forest,
    parse_tree,
    unordered_forests,
    unordered_trees,
)

Word = tuple


# ---------------------------------------------------------------------------
# magma products on letters


class Magma:
    """A bilinear product on tree letters, given on basis letters."""

    def __init__(self, fn: Callable[[str, str], LinComb], name: str, graded: bool = True):
        self._fn = fn
        self._cache: dict = {}
        self.name = name
        self.graded = graded

    def __call__(self, x: str, a: str) -> LinComb:
        key = (x, a)
        r = self._cache.get(key)
        if r is None:
            r = self._cache[key] = self._fn(x, a)
        return r

    def __repr__(self) -> str:
        return f"Magma({self.name})"


GRAFT_LEFT = Magma(graft_left, "graft_left")
GRAFT_UNORDERED = Magma(graft_unordered, "graft_unordered")


def zero_magma() -> Magma:
    return Magma(lambda x, a: LinComb(), "zero")


class TableMagma(Magma):
    """Magma given by a finite table; unlisted products are zero."""

    def __init__(self, table: Mapping[tuple[str, str], LinComb], name: str = "table"):
        for (x, a), val in table.items():
            for t in val:
                if degree(t) != degree(x) + degree(a):
                    raise ValueError(f"table entry {x} ⋆ {a} -> {t} is not degree-additive")
        self.table = dict(table)
        super().__init__(lambda x, a: self.table.get((x, a), LinComb()), name)


def _coeff_from_json(entry: Mapping) -> Fraction:
    if "coeff" in entry:
        return Fraction(str(entry["coeff"]))
    return Fraction(int(entry.get("num", entry.get("coeff-num", 1))), int(entry.get("den", entry.get("coeff-den", 1))))


def _terms_from_json(items: Iterable[Mapping], key: str, parse) -> LinComb:
    return LinComb([(parse(e[key]), _coeff_from_json(e)) for e in items])


def load_magma(path: str | Path) -> dict:
    """Load a magma table file.

    Schema: ``{"alphabet": "ordered"|"unordered", "entries": [{"left": tree,
    "right": tree, "result": [{"tree": t, "num": p, "den": q}, ...]}, ...],
    "overrides": [{"left": forest, "right": tree, "result": [...]}]}``.
    A bare list is read as the entries.  ``"base": "graft"`` uses the
    grafting magma of the alphabet instead of a table (entries must then be
    absent).  ``overrides`` replace the recursion value of ``left ▷ right``
    outright (used for hand-entered tables).
    """
    data = json.loads(Path(path).read_text())
    if isinstance(data, list):
        data = {"entries": data}
    commutative = data.get("alphabet", "ordered") == "unordered"
    norm = canonical if commutative else (lambda t: t)
    table = {}
    for e in data.get("entries", []):
        x, a = norm(parse_tree(e["left"])), norm(parse_tree(e["right"]))
        table[(x, a)] = _terms_from_json(e["result"], "tree", lambda s: norm(parse_tree(s)))
    overrides = {}
    for e in data.get("overrides", []):
        left = parse_forest(e["left"])
        if commutative:
            left = canonical_forest(left)
        a = norm(parse_tree(e["right"]))
        val = _terms_from_json(e["result"], "tree", lambda s: norm(parse_tree(s)))
        for t in val:
            if degree(t) != forest_degree(left) + degree(a):
                raise ValueError(f"override {format_forest(left)} ▷ {a} -> {t} is not degree-additive")
        overrides[(left, a)] = val
    if data.get("base") == "graft":
        if table:
            raise ValueError("a magma file with base 'graft' cannot also list entries")
        magma = GRAFT_UNORDERED if commutative else GRAFT_LEFT
    elif "base" in data:
        raise ValueError(f"unknown magma base {data['base']!r}")
    else:
        magma = TableMagma(table, name=Path(path).stem)
    return {
        "magma": magma,
        "commutative": commutative,
        "overrides": overrides,
    }


def dump_magma(magma: TableMagma, path: str | Path, commutative: bool = False) -> None:
    entries = []
    for (x, a), val in sorted(magma.table.items()):
        entries.append({
            "left": x,
            "right": a,
            "result": [{"tree": t, "num": c.numerator, "den": c.denominator} for t, c in val.sorted_items()],
        })
    doc = {"alphabet": "unordered" if commutative else "ordered", "entries": entries}
    Path(path).write_text(json.dumps(doc, indent=2))


# ---------------------------------------------------------------------------
# formatting helpers


def fmt_key(key) -> str:
    """Tree, forest, or tensor-of-forests key to text."""
    if isinstance(key, str):
        return key
    if key and isinstance(key[0], tuple):
        return " ⊗ ".join(format_forest(k) for k in key)
    return format_forest(key)


def fmt(u: LinComb) -> str:
    return format_lincomb(u, fmt_key)


def parse_key(text: str):
    text = text.strip()
    if "⊗" in text:
        return tuple(parse_forest(p) for p in text.split("⊗"))
    return parse_forest(text)


def lin_degree(u: LinComb) -> int:
    return max((forest_degree(w) for w in u), default=0)


# ---------------------------------------------------------------------------
# the truncated post-Hopf algebra


class PostHopfTrunc:
    """Coshuffle Hopf algebra of a magma with Foissy's post-Hopf product ▷.

    All public products refuse inputs whose output degree would exceed
    ``cutoff`` (raising :class:`CutoffExceeded`); everything below the cutoff
    is exact.
    """

    def __init__(
        self,
        magma: Magma = GRAFT_LEFT,
        cutoff: int = 6,
        commutative: bool | None = None,
        overrides: Mapping[tuple[Word, str], LinComb] | None = None,
    ):
        if commutative is None:
            commutative = magma is GRAFT_UNORDERED
        self.magma = magma
        self.cutoff = cutoff
        self.commutative = commutative
        self.H = WordHopf(commutative)
        self.overrides = dict(overrides or {})
        self._letter_memo: dict = {}
        self._word_memo: dict = {}
        self._santi_memo: dict = {}

    def __repr__(self) -> str:
        kind = "unordered" if self.commutative else "ordered"
        return f"PostHopfTrunc({self.magma.name}, {kind}, cutoff={self.cutoff})"

    # alphabet ---------------------------------------------------------------

    def letters(self, n: int) -> tuple[str, ...]:
        return unordered_trees(n) if self.commutative else ordered_trees(n)

    def words(self, n: int) -> tuple[Word, ...]:
        return unordered_forests(n) if self.commutative else ordered_forests(n)

    def words_upto(self, d: int) -> Iterator[Word]:
        for n in range(d + 1):
            yield from self.words(n)

    def tuples_upto(self, k: int, d: int) -> Iterator[tuple[Word, ...]]:
        """All k-tuples of basis words with total degree ≤ d."""
        for degs in product(range(d + 1), repeat=k):
            if sum(degs) <= d:
                yield from product(*(self.words(n) for n in degs))

    def b_plus(self, w: Word) -> str:
        t = b_plus(w)
        return canonical(t) if self.commutative else t

    def b_minus(self, w: Word) -> Word:
        return self.H.word(b_minus(w))

    def _check(self, deg: int) -> None:
        if deg > self.cutoff:
            raise CutoffExceeded(f"degree {deg} exceeds cutoff {self.cutoff}")

    # ▷ on basis elements ------------------------------------------------------

    def _star_lin(self, x: str, u: LinComb) -> LinComb:
        return extend_linear(lambda b: self.magma(x, b), u)

    def letter_triangle(self, X: Word, a: str) -> LinComb:
        """``X ▷ a`` for a word X and a letter a; a LinComb of letters."""
        key = (X, a)
        r = self._letter_memo.get(key)
        if r is not None:
            return r
        if key in self.overrides:
            r = self.overrides[key]
        elif not X:
            r = LinComb.basis(a)
        elif len(X) == 1:
            r = self.magma(X[0], a)
        else:
            x, rest = X[0], X[1:]
            acc = Accumulator()
            acc.add(self._star_lin(x, self.letter_triangle(rest, a)))
            for i, xi in enumerate(rest):
                for c, cc in self.magma(x, xi).items():
                    w = self.H.word(rest[:i] + (c,) + rest[i + 1:])
                    acc.add(self.letter_triangle(w, a), -cc)
            r = acc.result()
        self._letter_memo[key] = r
        return r

    def word_triangle(self, X: Word, Y: Word) -> LinComb:
        """``X ▷ Y`` on basis words."""
        key = (X, Y)
        r = self._word_memo.get(key)
        if r is not None:
            return r
        if not Y:
            r = LinComb.basis((), 1) if not X else LinComb()
        elif not X:
            r = LinComb.basis(Y)
        else:
            acc = Accumulator()
            for bins, c in self.H.splits_n(X, len(Y)):
                partial = {(): Fraction(c)}
                for Xi, a in zip(bins, Y):
                    lt = self.letter_triangle(Xi, a)
                    if not lt:
                        partial = {}
                        break
                    partial = {w + (t,): pc * tc for w, pc in partial.items() for t, tc in lt.items()}
                for w, pc in partial.items():
                    acc.add_term(self.H.word(w), pc)
            r = acc.result()
        self._word_memo[key] = r
        return r

    # public linear operations --------------------------------------------------

    def triangle(self, U: LinComb, V: LinComb) -> LinComb:
        self._check(lin_degree(U) + lin_degree(V))
        return extend_bilinear(self.word_triangle, U, V)

    def mul(self, U: LinComb, V: LinComb) -> LinComb:
        return self.H.concat(U, V)

    def gl_word(self, X: Word, Y: Word) -> LinComb:
        acc = Accumulator()
        for (X1, X2), c in self.H.splits(X):
            for w, d in self.word_triangle(X2, Y).items():
                acc.add_term(self.H.concat_words(X1, w), c * d)
        return acc.result()

    def gl_product(self, U: LinComb, V: LinComb) -> LinComb:
        """Subadjacent product ``X ∗ Y = X1 · (X2 ▷ Y)``."""
        self._check(lin_degree(U) + lin_degree(V))
        return extend_bilinear(self.gl_word, U, V)

    def gl_word_trees(self, X: Word, Y: Word) -> LinComb:
        acc = Accumulator()
        for t, c in self.letter_triangle(X, self.b_plus(Y)).items():
            acc.add_term(self.b_minus((t,)), c)
        return acc.result()

    def gl_product_trees(self, U: LinComb, V: LinComb) -> LinComb:
        """Grossman-Larson form ``B⁻(X ▷ B⁺(Y))``; only meaningful for grafting magmas."""
        self._check(lin_degree(U) + lin_degree(V))
        return extend_bilinear(self.gl_word_trees, U, V)

    def santi_word(self, X: Word) -> LinComb:
        r = self._santi_memo.get(X)
        if r is not None:
            return r
        if not X:
            r = LinComb.basis(())
        else:
            acc = Accumulator()
            acc.add(self.H.antipode_word(X))
            for (X1, X2), c in self.H.splits(X):
                # skip X1 = 1 (projected away) and X2 = 1 (term vanishes since y ▷ 1 = ε(y)1)
                if not X1 or not X2:
                    continue
                left = self.santi_word(X1)
                left = LinComb({k: v for k, v in left.items() if k})
                for w, d in self.H.antipode_word(X2).items():
                    acc.add(extend_linear(lambda k: self.word_triangle(k, w), left), c * d)
            r = acc.result()
        self._santi_memo[X] = r
        return r

    def subadjacent_antipode(self, U: LinComb) -> LinComb:
        """``S▷`` by the recursion ``S▷(X) = S(X) + (Id - με)(S▷(X1)) ▷ S(X2)``."""
        self._check(lin_degree(U))
        return extend_linear(self.santi_word, U)

    # conveniences for suites ----------------------------------------------------

    def counit(self, U: LinComb):
        return self.H.counit(U)

    def coproduct(self, U: LinComb) -> LinComb:
        return self.H.coproduct(U)

    def antipode(self, U: LinComb) -> LinComb:
        return self.H.antipode(U)


def posthopf_from_brace(
    mul: Callable[[LinComb, LinComb], LinComb],
    circ: Callable[[LinComb, LinComb], LinComb],
    splits: Callable[[object], Iterable[tuple[tuple, Fraction]]],
    antipode: Callable[[LinComb], LinComb],
) -> Callable[[LinComb, LinComb], LinComb]:
    """Post product ``x ▷ y = S(x1) · (x2 ∘ y)`` of a cocommutative Hopf brace."""

    def tri(U: LinComb, V: LinComb) -> LinComb:
        acc = Accumulator()
        for x, cx in U.items():
            for (x1, x2), c in splits(x):
                s = antipode(LinComb.basis(x1))
                acc.add(mul(s, circ(LinComb.basis(x2), V)), cx * c)
        return acc.result()

    return tri


# ---------------------------------------------------------------------------
# verification suites


def _b(w: Word) -> LinComb:
    return LinComb.basis(w)


def _pair_sum(ph: PostHopfTrunc, X: Word, Y: Word) -> LinComb:
    """Σ (X1 ▷ Y1) ⊗ (X2 ▷ Y2)."""
    acc = Accumulator()
    for (X1, X2), c in ph.H.splits(X):
        for (Y1, Y2), d in ph.H.splits(Y):
            left = ph.word_triangle(X1, Y1)
            if not left:
                continue
            right = ph.word_triangle(X2, Y2)
            for k1, c1 in left.items():
                for k2, c2 in right.items():
                    acc.add_term((k1, k2), c * d * c1 * c2)
    return acc.result()


def _rng(k: int, D: int) -> str:
    return f"{k}-tuples of basis words, total degree <= {D}"


def verify_post_hopf(ph: PostHopfTrunc, D: int) -> Report:
    """Check the post-Hopf axioms on all basis tuples of total degree ≤ D."""
    if D > ph.cutoff:
        raise CutoffExceeded(f"degree {D} exceeds cutoff {ph.cutoff}")
    H = ph.H
    rep = Report(f"post-hopf[{ph.magma.name}, {'unordered' if ph.commutative else 'ordered'}]")
    tri = ph.triangle

    rep.identity(
        "coalgebra-map: Δ(x▷y) = (x1▷y1)⊗(x2▷y2)", _rng(2, D),
        ((f"x={fmt_key(x)}, y={fmt_key(y)}",
          lambda x=x, y=y: H.coproduct(ph.word_triangle(x, y)),
          lambda x=x, y=y: _pair_sum(ph, x, y))
         for x, y in ph.tuples_upto(2, D)), fmt)
    rep.identity(
        "counit: ε(x▷y) = ε(x)ε(y)", _rng(2, D),
        ((f"x={fmt_key(x)}, y={fmt_key(y)}",
          lambda x=x, y=y: H.counit(ph.word_triangle(x, y)),
          H.counit_word(x) * H.counit_word(y))
         for x, y in ph.tuples_upto(2, D)))

    def post2(x, y, z):
        acc = Accumulator()
        for (x1, x2), c in H.splits(x):
            acc.add(H.concat(ph.word_triangle(x1, y), ph.word_triangle(x2, z)), c)
        return acc.result()

    rep.identity(
        "Post-2: x▷(y·z) = (x1▷y)·(x2▷z)", _rng(3, D),
        ((f"x={fmt_key(x)}, y={fmt_key(y)}, z={fmt_key(z)}",
          lambda x=x, y=y, z=z: tri(_b(x), H.concat(_b(y), _b(z))),
          lambda x=x, y=y, z=z: post2(x, y, z))
         for x, y, z in ph.tuples_upto(3, D)), fmt)

    def post4(x, y, z):
        acc = Accumulator()
        for (x1, x2), c in H.splits(x):
            acc.add(tri(H.concat(_b(x1), ph.word_triangle(x2, y)), _b(z)), c)
        return acc.result()

    rep.identity(
        "Post-4: x▷(y▷z) = (x1·(x2▷y))▷z", _rng(3, D),
        ((f"x={fmt_key(x)}, y={fmt_key(y)}, z={fmt_key(z)}",
          lambda x=x, y=y, z=z: tri(_b(x), ph.word_triangle(y, z)),
          lambda x=x, y=y, z=z: post4(x, y, z))
         for x, y, z in ph.tuples_upto(3, D)), fmt)

    def con_left(x, y):
        acc = Accumulator()
        for (x1, x2), c in H.splits(x):
            acc.add(tri(_b(x1), tri(ph.santi_word(x2), _b(y))), c)
        return acc.result()

    def con_right(x, y):
        acc = Accumulator()
        for (x1, x2), c in H.splits(x):
            acc.add(tri(ph.santi_word(x1), ph.word_triangle(x2, y)), c)
        return acc.result()

    rep.identity(
        "Post-con: α(x1)β(x2) = ε(x)id, β(x) = α(S▷x)", _rng(2, D),
        ((f"x={fmt_key(x)}, y={fmt_key(y)}",
          lambda x=x, y=y: con_left(x, y),
          _b(y) * H.counit_word(x))
         for x, y in ph.tuples_upto(2, D)), fmt)
    rep.identity(
        "Post-con: β(x1)α(x2) = ε(x)id, β(x) = α(S▷x)", _rng(2, D),
        ((f"x={fmt_key(x)}, y={fmt_key(y)}",
          lambda x=x, y=y: con_right(x, y),
          _b(y) * H.counit_word(x))
         for x, y in ph.tuples_upto(2, D)), fmt)
    rep.identity(
        "Post-1: x▷1 = ε(x)1", _rng(1, D),
        ((f"x={fmt_key(x)}", lambda x=x: ph.word_triangle(x, ()), _b(()) * H.counit_word(x))
         for x in ph.words_upto(D)), fmt)
    rep.identity(
        "Post-3: 1▷x = x", _rng(1, D),
        ((f"x={fmt_key(x)}", lambda x=x: ph.word_triangle((), x), _b(x)) for x in ph.words_upto(D)), fmt)
    rep.identity(
        "Post-5: S(x▷y) = x▷S(y)", _rng(2, D),
        ((f"x={fmt_key(x)}, y={fmt_key(y)}",
          lambda x=x, y=y: H.antipode(ph.word_triangle(x, y)),
          lambda x=x, y=y: tri(_b(x), H.antipode_word(y)))
         for x, y in ph.tuples_upto(2, D)), fmt)
    return rep


def _gl_tensor(ph: PostHopfTrunc, u: LinComb, v: LinComb) -> LinComb:
    """Componentwise ∗ on two 2-fold tensors."""
    acc = Accumulator()
    for (a1, a2), c in u.items():
        for (b1, b2), d in v.items():
            left = ph.gl_word(a1, b1)
            right = ph.gl_word(a2, b2)
            for k1, c1 in left.items():
                for k2, c2 in right.items():
                    acc.add_term((k1, k2), c * d * c1 * c2)
    return acc.result()


def verify_subadjacent(ph: PostHopfTrunc, D: int, grafting: bool = True) -> Report:
    """Hopf axioms of the subadjacent (Grossman-Larson) Hopf algebra and the ▷-action law."""
    H = ph.H
    rep = Report(f"subadjacent[{ph.magma.name}, {'unordered' if ph.commutative else 'ordered'}]")
    gl = ph.gl_product
    rep.identity(
        "∗ associative", _rng(3, D),
        ((f"x={fmt_key(x)}, y={fmt_key(y)}, z={fmt_key(z)}",
          lambda x=x, y=y, z=z: gl(ph.gl_word(x, y), _b(z)),
          lambda x=x, y=y, z=z: gl(_b(x), ph.gl_word(y, z)))
         for x, y, z in ph.tuples_upto(3, D)), fmt)
    rep.identity(
        "∗ unit: 1∗x = x = x∗1", _rng(1, D),
        ((f"x={fmt_key(x)}", lambda x=x: (ph.gl_word((), x), ph.gl_word(x, ())), (_b(x), _b(x)))
         for x in ph.words_upto(D)), lambda p: " , ".join(fmt(q) for q in p))
    rep.identity(
        "Δ multiplicative for ∗", _rng(2, D),
        ((f"x={fmt_key(x)}, y={fmt_key(y)}",
          lambda x=x, y=y: H.coproduct(ph.gl_word(x, y)),
          lambda x=x, y=y: _gl_tensor(ph, H.deshuffle(x), H.deshuffle(y)))
         for x, y in ph.tuples_upto(2, D)), fmt)
    rep.identity(
        "ε multiplicative for ∗", _rng(2, D),
        ((f"x={fmt_key(x)}, y={fmt_key(y)}",
          lambda x=x, y=y: H.counit(ph.gl_word(x, y)),
          H.counit_word(x) * H.counit_word(y))
         for x, y in ph.tuples_upto(2, D)))

    def anti(x, left: bool):
        acc = Accumulator()
        for (x1, x2), c in H.splits(x):
            if left:
                acc.add(gl(ph.santi_word(x1), _b(x2)), c)
            else:
                acc.add(gl(_b(x1), ph.santi_word(x2)), c)
        return acc.result()

    rep.identity(
        "S▷ antipode law: S▷(x1)∗x2 = ε(x)1", _rng(1, D),
        ((f"x={fmt_key(x)}", lambda x=x: anti(x, True), _b(()) * H.counit_word(x)) for x in ph.words_upto(D)), fmt)
    rep.identity(
        "S▷ antipode law: x1∗S▷(x2) = ε(x)1", _rng(1, D),
        ((f"x={fmt_key(x)}", lambda x=x: anti(x, False), _b(()) * H.counit_word(x)) for x in ph.words_upto(D)), fmt)
    rep.identity(
        "action law: (x∗y)▷z = x▷(y▷z)", _rng(3, D),
        ((f"x={fmt_key(x)}, y={fmt_key(y)}, z={fmt_key(z)}",
          lambda x=x, y=y, z=z: ph.triangle(ph.gl_word(x, y), _b(z)),
          lambda x=x, y=y, z=z: ph.triangle(_b(x), ph.word_triangle(y, z)))
         for x, y, z in ph.tuples_upto(3, D)), fmt)
    if grafting:
        rep.identity(
            "x1·(x2▷y) = B⁻(x▷B⁺(y))", _rng(2, D),
            ((f"x={fmt_key(x)}, y={fmt_key(y)}",
              lambda x=x, y=y: ph.gl_word(x, y),
              lambda x=x, y=y: ph.gl_word_trees(x, y))
             for x, y in ph.tuples_upto(2, D)), fmt)
    return rep


def brace_check(ph: PostHopfTrunc, D: int) -> Report:
    """Hopf brace compatibility for (·, ∗▷) and reconstruction of ▷ from it."""
    H = ph.H
    rep = Report(f"hopf-brace[{ph.magma.name}, {'unordered' if ph.commutative else 'ordered'}]")

    def rhs(a, b, c):
        acc = Accumulator()
        for (a1, a2, a3), k in H.splits_n(a, 3):
            acc.add(H.mul_many(ph.gl_word(a1, b), H.antipode_word(a2), ph.gl_word(a3, c)), k)
        return acc.result()

    rep.identity(
        "brace: a∘(b·c) = (a1∘b)·S(a2)·(a3∘c)", _rng(3, D),
        ((f"a={fmt_key(a)}, b={fmt_key(b)}, c={fmt_key(c)}",
          lambda a=a, b=b, c=c: ph.gl_product(_b(a), H.concat(_b(b), _b(c))),
          lambda a=a, b=b, c=c: rhs(a, b, c))
         for a, b, c in ph.tuples_upto(3, D)), fmt)
    rebuilt = posthopf_from_brace(H.concat, ph.gl_product, H.splits, H.antipode)
    rep.identity(
        "reconstruction: S(x1)·(x2∘y) = x▷y", _rng(2, D),
        ((f"x={fmt_key(x)}, y={fmt_key(y)}",
          lambda x=x, y=y: rebuilt(_b(x), _b(y)),
          lambda x=x, y=y: ph.word_triangle(x, y))
         for x, y in ph.tuples_upto(2, D)), fmt)
    return rep


def primitive_post_lie_check(ph: PostHopfTrunc, D: int) -> Report:
    """Post-Lie identities on letters (primitive elements) with [u,v] = uv - vu."""
    H = ph.H
    rep = Report(f"post-lie[{ph.magma.name}, {'unordered' if ph.commutative else 'ordered'}]")

    def br(u, v):
        return H.concat(u, v) - H.concat(v, u)

    tri = ph.triangle
    triples = [
        (x, y, z)
        for dx in range(1, D + 1) for dy in range(1, D + 1 - dx) for dz in range(1, D + 1 - dx - dy)
        for x in ph.letters(dx) for y in ph.letters(dy) for z in ph.letters(dz)
    ]

    def l1(x, y, z):
        X, Y, Z = _b((x,)), _b((y,)), _b((z,))
        return tri(X, br(Y, Z)), br(tri(X, Y), Z) + br(Y, tri(X, Z))

    def l2(x, y, z):
        X, Y, Z = _b((x,)), _b((y,)), _b((z,))
        lhs = tri(br(X, Y) + tri(X, Y) - tri(Y, X), Z)
        rhs = tri(X, tri(Y, Z)) - tri(Y, tri(X, Z))
        return lhs, rhs

    def cases(f):
        for x, y, z in triples:
            lhs, rhs = f(x, y, z)
            yield f"x={x}, y={y}, z={z}", lhs, rhs

    rng = f"letter triples, total degree <= {D}"
    rep.identity("Post-L-1: x▷[y,z] = [x▷y,z] + [y,x▷z]", rng, cases(l1), fmt)
    rep.identity("Post-L-2: ([x,y] + x▷y - y▷x)▷z = x▷(y▷z) - y▷(x▷z)", rng, cases(l2), fmt)
    return rep


def ordered_instance(cutoff: int = 6) -> PostHopfTrunc:
    return PostHopfTrunc(GRAFT_LEFT, cutoff, commutative=False)


def unordered_instance(cutoff: int = 6) -> PostHopfTrunc:
    return PostHopfTrunc(GRAFT_UNORDERED, cutoff, commutative=True)


__all__ = [
    "CutoffExceeded",
    "GRAFT_LEFT",
    "GRAFT_UNORDERED",
    "Magma",
    "PostHopfTrunc",
    "TableMagma",
    "brace_check",
    "dump_magma",
    "fmt",
    "format_scalar",
    "load_magma",
    "ordered_instance",
    "parse_key",
    "posthopf_from_brace",
    "primitive_post_lie_check",
    "unordered_instance",
    "verify_post_hopf",
    "verify_subadjacent",
    "zero_magma",
]
