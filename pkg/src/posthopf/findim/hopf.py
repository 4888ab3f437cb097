"""Hopf algebras given by structure constants, and their axiom suites.

Basis vectors are the ints ``0 .. n-1`` (with display names); elements are
LinCombs over ints and tensors are LinCombs over tuples of ints.  Index 0 is
not assumed to be the unit; the unit is stored explicitly.
"""
from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping, Sequence
from fractions import Fraction
from itertools import product

from ..kernel import Accumulator, LinComb, format_lincomb, nullspace, tensor
from ..report import Report


class HopfAxiomError(ValueError):
    """A structure that was required to be a Hopf algebra is not one."""

    def __init__(self, report: Report):
        failed = [c for c in report.checks if not c.passed]
        super().__init__(f"{report.suite}: {failed[0].name} fails; {failed[0].witness}")
        self.report = report


class NotCocommutative(ValueError):
    """The construction needs a cocommutative Hopf algebra."""


def _lc(u) -> LinComb:
    return u if isinstance(u, LinComb) else LinComb(u)


class FinDimHopf:
    """A finite-dimensional Hopf algebra from structure constants.

    ``mult[(i, j)]`` is ``e_i e_j``, ``comult[i]`` is ``Δ(e_i)`` (tensor keys
    ``(j, k)``), ``counit[i]`` is ``ε(e_i)`` and ``antipode[i]`` is ``S(e_i)``.
    Missing products are zero.  With ``check=True`` the constructor runs
    :func:`verify_hopf` and raises :class:`HopfAxiomError` on failure.
    """

    def __init__(
        self,
        names: Sequence[str],
        mult: Mapping[tuple[int, int], LinComb],
        unit: LinComb,
        comult: Mapping[int, LinComb],
        counit: Sequence,
        antipode: Mapping[int, LinComb],
        name: str = "H",
        check: bool = True,
    ):
        self.names = tuple(names)
        self.n = len(self.names)
        self.name = name
        self._mult = {k: _lc(v) for k, v in mult.items() if v}
        self._unit = _lc(unit)
        self._comult = {i: _lc(comult.get(i, LinComb())) for i in range(self.n)}
        self._counit = tuple(Fraction(c) for c in counit)
        self._antipode = {i: _lc(antipode.get(i, LinComb())) for i in range(self.n)}
        self.cocommutative = all(
            self._comult[i] == LinComb({(k, j): c for (j, k), c in self._comult[i].items()}) for i in range(self.n)
        )
        self.commutative = all(self.mul_basis(i, j) == self.mul_basis(j, i) for i in range(self.n) for j in range(self.n))
        if check:
            rep = verify_hopf(self)
            if not rep.passed:
                raise HopfAxiomError(rep)

    def __repr__(self) -> str:
        return f"FinDimHopf({self.name}, dim={self.n})"

    # elements ----------------------------------------------------------------

    def e(self, i: int) -> LinComb:
        return LinComb.basis(i)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def one(self) -> LinComb:
        return self._unit

    def fmt(self, u: LinComb) -> str:
        return format_lincomb(u, self.fmt_key)

    def fmt_key(self, k) -> str:
        if isinstance(k, tuple):
            return " ⊗ ".join(self.names[i] for i in k)
        return self.names[k]

    # structure maps --------------------------------------------------------------

    def mul_basis(self, i: int, j: int) -> LinComb:
        return self._mult.get((i, j), LinComb())

    def mul(self, u: LinComb, v: LinComb) -> LinComb:
        acc = Accumulator()
        for i, a in u.items():
            for j, b in v.items():
                acc.add(self.mul_basis(i, j), a * b)
        return acc.result()

    def mul_many(self, *factors: LinComb) -> LinComb:
        out = self.one()
        for f in factors:
            out = self.mul(out, f)
        return out

    def delta_basis(self, i: int) -> LinComb:
        return self._comult[i]

    def delta(self, u: LinComb) -> LinComb:
        acc = Accumulator()
        for i, a in u.items():
            acc.add(self._comult[i], a)
        return acc.result()

    def delta3_basis(self, i: int) -> LinComb:
        """(Δ ⊗ id)Δ(e_i) with keys ``(j, k, l)``."""
        acc = Accumulator()
        for (j, k), c in self._comult[i].items():
            for (p, q), d in self._comult[j].items():
                acc.add_term((p, q, k), c * d)
        return acc.result()

    def delta_n_basis(self, i: int, legs: int) -> LinComb:
        """Iterated coproduct of e_i with the given number of tensor legs."""
        if legs == 1:
            return LinComb.basis((i,))
        acc = Accumulator()
        for (j, k), c in self._comult[i].items():
            for rest, d in self.delta_n_basis(k, legs - 1).items():
                acc.add_term((j,) + rest, c * d)
        return acc.result()

    def counit_basis(self, i: int) -> Fraction:
        return self._counit[i]

    def eps(self, u: LinComb) -> Fraction:
        return sum((self._counit[i] * a for i, a in u.items()), Fraction(0))

    def S_basis(self, i: int) -> LinComb:
        return self._antipode[i]

    def S(self, u: LinComb) -> LinComb:
        acc = Accumulator()
        for i, a in u.items():
            acc.add(self._antipode[i], a)
        return acc.result()

    # tensor helpers ------------------------------------------------------------------

    def mul_tensor(self, u: LinComb, v: LinComb) -> LinComb:
        """Componentwise product in H⊗H."""
        acc = Accumulator()
        for (a1, a2), c in u.items():
            for (b1, b2), d in v.items():
                acc.add(tensor(self.mul_basis(a1, b1), self.mul_basis(a2, b2)), c * d)
        return acc.result()

    def is_grouplike(self, v: LinComb) -> bool:
        return bool(v) and self.delta(v) == tensor(v, v) and self.eps(v) == 1

    # matrices ------------------------------------------------------------------------

    def with_antipode(self, antipode: Mapping[int, LinComb], name: str | None = None) -> FinDimHopf:
        """Same bialgebra with a replaced antipode (unchecked); for mutation tests."""
        return FinDimHopf(self.names, self._mult, self._unit, self._comult, self._counit, antipode,
                          name or self.name + "'", check=False)

    def structure(self) -> dict:
        return {
            "names": self.names,
            "mult": dict(self._mult),
            "unit": self._unit,
            "comult": dict(self._comult),
            "counit": self._counit,
            "antipode": dict(self._antipode),
        }


def verify_hopf(H: FinDimHopf) -> Report:
    """Exhaustive check of the bialgebra and antipode axioms on basis tuples."""
    rep = Report(f"hopf[{H.name}]")
    n = range(H.n)
    e = H.e
    fmt = H.fmt
    rep.identity(
        "associativity: (ab)c = a(bc)", f"basis triples of {H.name}",
        ((f"a={H.names[i]}, b={H.names[j]}, c={H.names[k]}",
          lambda i=i, j=j, k=k: H.mul(H.mul_basis(i, j), e(k)),
          lambda i=i, j=j, k=k: H.mul(e(i), H.mul_basis(j, k)))
         for i, j, k in product(n, repeat=3)), fmt)
    rep.identity(
        "unit: 1a = a = a1", f"basis of {H.name}",
        ((f"a={H.names[i]}", lambda i=i: H.mul(H.one(), e(i)) + 2 * H.mul(e(i), H.one()), 3 * e(i)) for i in n), fmt)
    rep.identity(
        "coassociativity", f"basis of {H.name}",
        ((f"a={H.names[i]}",
          lambda i=i: H.delta3_basis(i),
          lambda i=i: LinComb({(j, p, q): c * d for (j, k), c in H.delta_basis(i).items()
                               for (p, q), d in H.delta_basis(k).items()}))
         for i in n), fmt)

    def counit_left(i):
        acc = Accumulator()
        for (j, k), c in H.delta_basis(i).items():
            acc.add_term(k, c * H.counit_basis(j))
        return acc.result()

    def counit_right(i):
        acc = Accumulator()
        for (j, k), c in H.delta_basis(i).items():
            acc.add_term(j, c * H.counit_basis(k))
        return acc.result()

    rep.identity(
        "counit: (ε⊗id)Δ = id = (id⊗ε)Δ", f"basis of {H.name}",
        ((f"a={H.names[i]}", lambda i=i: (counit_left(i), counit_right(i)), (e(i), e(i))) for i in n),
        lambda p: " , ".join(fmt(q) for q in p))
    rep.identity(
        "bialgebra: Δ(ab) = Δ(a)Δ(b)", f"basis pairs of {H.name}",
        ((f"a={H.names[i]}, b={H.names[j]}",
          lambda i=i, j=j: H.delta(H.mul_basis(i, j)),
          lambda i=i, j=j: H.mul_tensor(H.delta_basis(i), H.delta_basis(j)))
         for i, j in product(n, repeat=2)), fmt)
    rep.identity(
        "bialgebra: ε(ab) = ε(a)ε(b)", f"basis pairs of {H.name}",
        ((f"a={H.names[i]}, b={H.names[j]}",
          lambda i=i, j=j: H.eps(H.mul_basis(i, j)),
          H.counit_basis(i) * H.counit_basis(j))
         for i, j in product(n, repeat=2)))
    rep.identity(
        "bialgebra: Δ(1) = 1⊗1, ε(1) = 1", "unit",
        [("1", lambda: (H.delta(H.one()), H.eps(H.one())), (tensor(H.one(), H.one()), 1))],
        lambda p: f"{fmt(p[0])} , {p[1]}")

    def anti(i, left):
        acc = Accumulator()
        for (j, k), c in H.delta_basis(i).items():
            if left:
                acc.add(H.mul(H.S_basis(j), e(k)), c)
            else:
                acc.add(H.mul(e(j), H.S_basis(k)), c)
        return acc.result()

    rep.identity(
        "antipode: S(a1)a2 = ε(a)1", f"basis of {H.name}",
        ((f"a={H.names[i]}", lambda i=i: anti(i, True), H.one() * H.counit_basis(i)) for i in n), fmt)
    rep.identity(
        "antipode: a1S(a2) = ε(a)1", f"basis of {H.name}",
        ((f"a={H.names[i]}", lambda i=i: anti(i, False), H.one() * H.counit_basis(i)) for i in n), fmt)
    return rep


# ---------------------------------------------------------------------------
# standard examples


def sweedler_h4(check: bool = True) -> FinDimHopf:
    """Sweedler's algebra: g² = 1, x² = 0, gx = -xg; Δg = g⊗g, Δx = x⊗1 + g⊗x."""
    one, g, x, gx = range(4)
    b = LinComb.basis
    mult = {
        (g, g): b(one), (g, x): b(gx), (g, gx): b(x),
        (x, g): b(gx, -1), (x, x): LinComb(), (x, gx): LinComb(),
        (gx, g): b(x, -1), (gx, x): LinComb(), (gx, gx): LinComb(),
    }
    for i in range(4):
        mult[(one, i)] = b(i)
        mult[(i, one)] = b(i)
    comult = {
        one: b((one, one)),
        g: b((g, g)),
        x: LinComb({(x, one): 1, (g, x): 1}),
        gx: LinComb({(gx, g): 1, (one, gx): 1}),
    }
    antipode = {one: b(one), g: b(g), x: b(gx, -1), gx: b(x)}
    return FinDimHopf(("1", "g", "x", "gx"), mult, b(one), comult, (1, 1, 0, 0), antipode, "H4", check)


def h4_post_table(a) -> dict[tuple[int, int], LinComb]:
    """The product ▷_a on H4 (rows: left argument)."""
    a = Fraction(a)
    one, g, x, gx = range(4)
    b = LinComb.basis
    t = {}
    for j in range(4):
        t[(one, j)] = b(j)
    t[(g, one)], t[(g, g)], t[(g, x)], t[(g, gx)] = b(one), b(g), b(x, -1), b(gx, -1)
    for i in (x, gx):
        t[(i, one)], t[(i, g)], t[(i, x)], t[(i, gx)] = LinComb(), LinComb(), b(x, a), b(gx, a)
    return t


def trivial_post_table(H: FinDimHopf) -> dict[tuple[int, int], LinComb]:
    """``x ▷ y = ε(x) y``."""
    return {(i, j): LinComb.basis(j, H.counit_basis(i)) for i in range(H.n) for j in range(H.n)}


def primitives(H: FinDimHopf) -> list[LinComb]:
    """Basis of {v : Δv = v⊗1 + 1⊗v}, by exact elimination."""
    cols = []
    for i in range(H.n):
        cols.append(H.delta_basis(i) - tensor(H.e(i), H.one()) - tensor(H.one(), H.e(i)))
    return [LinComb(v) for v in nullspace(cols)]


def grouplike_check(H: FinDimHopf, v: LinComb) -> bool:
    return H.is_grouplike(v)


def skew_primitive_check(H: FinDimHopf, v: LinComb, g: LinComb, h: LinComb) -> bool:
    """Whether ``Δv = v⊗g + h⊗v`` (the space P_{g,h})."""
    return H.delta(v) == tensor(v, g) + tensor(h, v)


def skew_primitives(H: FinDimHopf, g: LinComb, h: LinComb) -> list[LinComb]:
    cols = [H.delta_basis(i) - tensor(H.e(i), g) - tensor(h, H.e(i)) for i in range(H.n)]
    return [LinComb(v) for v in nullspace(cols)]


# ---------------------------------------------------------------------------
# post-Hopf structures on structure-constant algebras


Table = Mapping[tuple[int, int], LinComb]


def table_op(table: Table) -> Callable[[LinComb, LinComb], LinComb]:
    def op(u: LinComb, v: LinComb) -> LinComb:
        acc = Accumulator()
        for i, a in u.items():
            for j, b in v.items():
                acc.add(table.get((i, j), LinComb()), a * b)
        return acc.result()

    return op


def convolution_inverse(H: FinDimHopf, table: Table) -> dict[tuple[int, int], LinComb] | None:
    """Solve for β with α(x1)β(x2) = ε(x)id = β(x1)α(x2); None if no such β exists.

    The unknowns are the n³ structure constants of β; both conditions are
    linear in them and are solved exactly together.
    """
    n = H.n
    tri = table_op(table)
    # unknown index u = (i, j, k): coefficient of e_k in β(e_i, e_j)
    unknowns = list(product(range(n), repeat=3))
    col_of = {u: c for c, u in enumerate(unknowns)}
    rows: dict = {}

    def add(eq, u, c):
        if c:
            rows.setdefault(eq, {})
            rows[eq][col_of[u]] = rows[eq].get(col_of[u], 0) + c

    rhs: dict = {}
    for i in range(n):
        for y in range(n):
            target = LinComb.basis(y, H.counit_basis(i))
            for m in range(n):
                rhs[("L", i, y, m)] = target.coeff(m)
                rhs[("R", i, y, m)] = target.coeff(m)
            for (i1, i2), c in H.delta_basis(i).items():
                # α(i1)(β(i2)(y)) = Σ_k β_{i2,y}^k α(i1)(e_k)
                for k in range(n):
                    for m, d in tri(LinComb.basis(i1), LinComb.basis(k)).items():
                        add(("L", i, y, m), (i2, y, k), c * d)
                # β(i1)(α(i2)(y)) = Σ_l α(i2)(y)_l β(i1, l)
                for l, d in tri(LinComb.basis(i2), LinComb.basis(y)).items():
                    for m in range(n):
                        add(("R", i, y, m), (i1, l, m), c * d)
    # augmented system: columns plus a constant column
    eqs = sorted(set(rows) | {k for k, v in rhs.items() if v}, key=repr)
    N = len(unknowns)
    mat = [[Fraction(rows.get(eq, {}).get(c, 0)) for c in range(N)] + [Fraction(rhs.get(eq, 0))] for eq in eqs]
    piv_cols = []
    r = 0
    for c in range(N):
        p = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        piv_cols.append(c)
        r += 1
    if any(row[N] for row in mat[r:]):
        return None
    sol = [Fraction(0)] * N
    for i, c in enumerate(piv_cols):
        sol[c] = mat[i][N]
    out: dict = {}
    for (i, j, k), c in zip(unknowns, sol):
        if c:
            out.setdefault((i, j), {})[k] = c
    return {(i, j): LinComb(out.get((i, j), {})) for i in range(n) for j in range(n)}


def verify_post_hopf_findim(H: FinDimHopf, table: Table, inverse: Table | None, name: str = "▷") -> Report:
    """Post-Hopf axioms for ``x ▷ y = table[x, y]``; Post-con uses the supplied inverse candidate.

    With ``inverse=None`` the convolution inverse is solved for exactly and
    the check records whether one exists.
    """
    rep = Report(f"post-hopf[{H.name}, {name}]")
    n = range(H.n)
    tri = table_op(table)
    e = H.e
    fmt = H.fmt
    nm = H.names

    def pair_sum(i, j):
        acc = Accumulator()
        for (i1, i2), c in H.delta_basis(i).items():
            for (j1, j2), d in H.delta_basis(j).items():
                acc.add(tensor(tri(e(i1), e(j1)), tri(e(i2), e(j2))), c * d)
        return acc.result()

    rep.identity(
        "coalgebra-map: Δ(x▷y) = (x1▷y1)⊗(x2▷y2)", "basis pairs",
        ((f"x={nm[i]}, y={nm[j]}", lambda i=i, j=j: H.delta(tri(e(i), e(j))), lambda i=i, j=j: pair_sum(i, j))
         for i, j in product(n, repeat=2)), fmt)
    rep.identity(
        "counit: ε(x▷y) = ε(x)ε(y)", "basis pairs",
        ((f"x={nm[i]}, y={nm[j]}", lambda i=i, j=j: H.eps(tri(e(i), e(j))), H.counit_basis(i) * H.counit_basis(j))
         for i, j in product(n, repeat=2)))

    def post2(i, j, k):
        acc = Accumulator()
        for (i1, i2), c in H.delta_basis(i).items():
            acc.add(H.mul(tri(e(i1), e(j)), tri(e(i2), e(k))), c)
        return acc.result()

    rep.identity(
        "Post-2: x▷(yz) = (x1▷y)(x2▷z)", "basis triples",
        ((f"x={nm[i]}, y={nm[j]}, z={nm[k]}",
          lambda i=i, j=j, k=k: tri(e(i), H.mul_basis(j, k)), lambda i=i, j=j, k=k: post2(i, j, k))
         for i, j, k in product(n, repeat=3)), fmt)

    def post4(i, j, k):
        acc = Accumulator()
        for (i1, i2), c in H.delta_basis(i).items():
            acc.add(tri(H.mul(e(i1), tri(e(i2), e(j))), e(k)), c)
        return acc.result()

    rep.identity(
        "Post-4: x▷(y▷z) = (x1(x2▷y))▷z", "basis triples",
        ((f"x={nm[i]}, y={nm[j]}, z={nm[k]}",
          lambda i=i, j=j, k=k: tri(e(i), tri(e(j), e(k))), lambda i=i, j=j, k=k: post4(i, j, k))
         for i, j, k in product(n, repeat=3)), fmt)
    rep.identity(
        "Post-1: x▷1 = ε(x)1", "basis",
        ((f"x={nm[i]}", lambda i=i: tri(e(i), H.one()), H.one() * H.counit_basis(i)) for i in n), fmt)
    rep.identity(
        "Post-3: 1▷x = x", "basis",
        ((f"x={nm[i]}", lambda i=i: tri(H.one(), e(i)), e(i)) for i in n), fmt)
    rep.identity(
        "Post-5: S(x▷y) = x▷S(y)", "basis pairs",
        ((f"x={nm[i]}, y={nm[j]}", lambda i=i, j=j: H.S(tri(e(i), e(j))), lambda i=i, j=j: tri(e(i), H.S_basis(j)))
         for i, j in product(n, repeat=2)), fmt)

    if inverse is None:
        inv = convolution_inverse(H, table)
        rep.record("Post-con: α has a convolution inverse (solved exactly)", "all of End(H)-valued maps",
                   inv is not None, None if inv is not None else "the linear system for β is inconsistent")
        if inv is None:
            return rep
        inverse = inv
    beta = table_op(inverse)

    def con(i, j, left):
        acc = Accumulator()
        for (i1, i2), c in H.delta_basis(i).items():
            if left:
                acc.add(tri(e(i1), beta(e(i2), e(j))), c)
            else:
                acc.add(beta(e(i1), tri(e(i2), e(j))), c)
        return acc.result()

    rep.identity(
        "Post-con: α(x1)β(x2) = ε(x)id", "basis pairs",
        ((f"x={nm[i]}, y={nm[j]}", lambda i=i, j=j: con(i, j, True), e(j) * H.counit_basis(i))
         for i, j in product(n, repeat=2)), fmt)
    rep.identity(
        "Post-con: β(x1)α(x2) = ε(x)id", "basis pairs",
        ((f"x={nm[i]}, y={nm[j]}", lambda i=i, j=j: con(i, j, False), e(j) * H.counit_basis(i))
         for i, j in product(n, repeat=2)), fmt)
    return rep


def check_posthopf_iso(f: Mapping[int, LinComb], H: FinDimHopf, table: Table, H2: FinDimHopf, table2: Table) -> Report:
    """Whether the linear map f (basis image table) is a post-Hopf isomorphism (H, ▷) → (H2, ▷′)."""
    rep = Report(f"post-hopf-iso[{H.name} -> {H2.name}]")
    n = range(H.n)

    def F(u: LinComb) -> LinComb:
        acc = Accumulator()
        for i, c in u.items():
            acc.add(f.get(i, LinComb()), c)
        return acc.result()

    def FF(u: LinComb) -> LinComb:
        acc = Accumulator()
        for (i, j), c in u.items():
            acc.add(tensor(F(LinComb.basis(i)), F(LinComb.basis(j))), c)
        return acc.result()

    tri, tri2 = table_op(table), table_op(table2)
    e = H.e
    nm = H.names
    fmt = H2.fmt
    rep.identity("algebra map: f(xy) = f(x)f(y)", "basis pairs",
                 ((f"x={nm[i]}, y={nm[j]}", lambda i=i, j=j: F(H.mul_basis(i, j)), lambda i=i, j=j: H2.mul(F(e(i)), F(e(j))))
                  for i, j in product(n, repeat=2)), fmt)
    rep.identity("unit: f(1) = 1", "unit", [("1", lambda: F(H.one()), H2.one())], fmt)
    rep.identity("coalgebra map: Δf = (f⊗f)Δ", "basis",
                 ((f"x={nm[i]}", lambda i=i: H2.delta(F(e(i))), lambda i=i: FF(H.delta_basis(i))) for i in n), fmt)
    rep.identity("counit: ε′f = ε", "basis",
                 ((f"x={nm[i]}", lambda i=i: H2.eps(F(e(i))), H.counit_basis(i)) for i in n))
    rep.identity("▷-compatible: f(x▷y) = f(x)▷′f(y)", "basis pairs",
                 ((f"x={nm[i]}, y={nm[j]}", lambda i=i, j=j: F(tri(e(i), e(j))), lambda i=i, j=j: tri2(F(e(i)), F(e(j))))
                  for i, j in product(n, repeat=2)), fmt)
    from ..kernel import rank
    r = rank(F(e(i)) for i in n)
    rep.record("bijective", "basis images", r == H.n == H2.n, None if r == H.n == H2.n else f"rank {r}, dims {H.n} -> {H2.n}")
    return rep


def h4_scaling_map(a) -> dict[int, LinComb]:
    """g ↦ g, x ↦ a x (hence gx ↦ a gx)."""
    a = Fraction(a)
    return {0: LinComb.basis(0), 1: LinComb.basis(1), 2: LinComb.basis(2, a), 3: LinComb.basis(3, a)}


def tensor_hopf(K: FinDimHopf, H: FinDimHopf) -> FinDimHopf:
    """K ⊗ H with componentwise structure; basis index ``a * H.n + x``."""
    idx = lambda a, x: a * H.n + x
    names = [f"{ka}⊗{hx}" for ka in K.names for hx in H.names]
    mult, comult, antipode, counit = {}, {}, {}, []
    for a, x in product(range(K.n), range(H.n)):
        comult[idx(a, x)] = LinComb({(idx(a1, x1), idx(a2, x2)): c * d
                                     for (a1, a2), c in K.delta_basis(a).items()
                                     for (x1, x2), d in H.delta_basis(x).items()})
        antipode[idx(a, x)] = LinComb({idx(p, q): c * d for p, c in K.S_basis(a).items() for q, d in H.S_basis(x).items()})
        counit.append(K.counit_basis(a) * H.counit_basis(x))
        for b, y in product(range(K.n), range(H.n)):
            mult[(idx(a, x), idx(b, y))] = LinComb({idx(p, q): c * d for p, c in K.mul_basis(a, b).items()
                                                    for q, d in H.mul_basis(x, y).items()})
    unit = LinComb({idx(p, q): c * d for p, c in K.one().items() for q, d in H.one().items()})
    return FinDimHopf(names, mult, unit, comult, counit, antipode, f"{K.name}⊗{H.name}")
