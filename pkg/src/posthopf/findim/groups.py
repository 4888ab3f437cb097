"""Finite groups from Cayley tables, group algebras, and group-level Rota-Baxter data."""
from __future__ import annotations

from collections.abc import Sequence
from itertools import permutations, product

from ..kernel import LinComb
from ..report import Report
from .hopf import FinDimHopf


class GroupAxiomError(ValueError):
    pass


class GroupRBViolation(ValueError):
    """``T(h)T(k) = T(h Φ(T(h))k)`` fails for the pair (h, k)."""

    def __init__(self, h: str, k: str, lhs: str, rhs: str):
        super().__init__(f"h={h}, k={k}: T(h)T(k) = {lhs} but T(h·Φ(T(h))k) = {rhs}")
        self.h, self.k = h, k


class FiniteGroup:
    def __init__(self, names: Sequence[str], table: Sequence[Sequence[int]], name: str = "G"):
        self.names = tuple(names)
        self.n = len(self.names)
        self.table = tuple(tuple(r) for r in table)
        self.name = name
        if len(self.table) != self.n or any(len(r) != self.n for r in self.table):
            raise GroupAxiomError("Cayley table has the wrong shape")
        ids = [e for e in range(self.n) if all(self.table[e][g] == g == self.table[g][e] for g in range(self.n))]
        if not ids:
            raise GroupAxiomError("no identity element")
        self.identity = ids[0]
        self.inverse = []
        for g in range(self.n):
            inv = [h for h in range(self.n) if self.table[g][h] == self.identity == self.table[h][g]]
            if not inv:
                raise GroupAxiomError(f"{self.names[g]} has no inverse")
            self.inverse.append(inv[0])
        self.inverse = tuple(self.inverse)
        for a, b, c in product(range(self.n), repeat=3):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise GroupAxiomError(f"not associative at ({self.names[a]}, {self.names[b]}, {self.names[c]})")

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.n})"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, g: int, k: int) -> int:
        """g k g⁻¹."""
        return self.mul(self.mul(g, k), self.inv(g))

    def index(self, name: str) -> int:
        return self.names.index(name)


def cyclic_group(n: int) -> FiniteGroup:
    names = ["e"] + [f"c{i}" if i > 1 else "c" for i in range(1, n)]
    return FiniteGroup(names, [[(i + j) % n for j in range(n)] for i in range(n)], f"Z{n}")


def symmetric_group(n: int) -> FiniteGroup:
    """S_n on permutations in one-line notation; (p·q)(i) = p(q(i))."""
    perms = sorted(permutations(range(n)))
    idx = {p: i for i, p in enumerate(perms)}
    table = [[idx[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    names = ["".join(str(i + 1) for i in p) for p in perms]
    return FiniteGroup(names, table, f"S{n}")


def conjugation_action(G: FiniteGroup) -> list[list[int]]:
    return [[G.conj(g, k) for k in range(G.n)] for g in range(G.n)]


def trivial_action(G: FiniteGroup, K: FiniteGroup) -> list[list[int]]:
    return [list(range(K.n)) for _ in range(G.n)]


def check_group_action(G: FiniteGroup, K: FiniteGroup, act: Sequence[Sequence[int]]) -> Report:
    """Φ: G → Aut(K): each Φ(g) an automorphism, Φ(gh) = Φ(g)Φ(h), Φ(e) = id."""
    rep = Report(f"group-action[{G.name} on {K.name}]")
    nG, nK = range(G.n), range(K.n)
    rep.identity("Φ(g) is a homomorphism", "g in G, k, l in K",
                 ((f"g={G.names[g]}, k={K.names[k]}, l={K.names[l]}",
                   K.names[act[g][K.mul(k, l)]], K.names[K.mul(act[g][k], act[g][l])])
                  for g in nG for k in nK for l in nK))
    rep.identity("Φ(g) is bijective", "g in G",
                 ((f"g={G.names[g]}", len(set(act[g])), K.n) for g in nG))
    rep.identity("Φ(gh) = Φ(g)Φ(h)", "g, h in G, k in K",
                 ((f"g={G.names[g]}, h={G.names[h]}, k={K.names[k]}",
                   K.names[act[G.mul(g, h)][k]], K.names[act[g][act[h][k]]])
                  for g in nG for h in nG for k in nK))
    rep.identity("Φ(e) = id", "k in K",
                 ((f"k={K.names[k]}", act[G.identity][k], k) for k in nK))
    return rep


def group_rb_report(G: FiniteGroup, K: FiniteGroup, act, T: Sequence[int]) -> Report:
    """Exhaustive check of ``T(h)T(k) = T(h·Φ(T(h))k)`` over K × K."""
    rep = Report(f"group-rb[{K.name} -> {G.name}]")
    rep.identity(
        "rRBg: T(h)T(k) = T(h·Φ(T(h))k)", f"all pairs of {K.name}",
        ((f"h={K.names[h]}, k={K.names[k]}",
          G.names[G.mul(T[h], T[k])],
          G.names[T[K.mul(h, act[T[h]][k])]])
         for h in range(K.n) for k in range(K.n)))
    return rep


def is_group_rb(G: FiniteGroup, K: FiniteGroup, act, T: Sequence[int]) -> bool:
    return all(G.mul(T[h], T[k]) == T[K.mul(h, act[T[h]][k])] for h in range(K.n) for k in range(K.n))


def find_group_rb_operators(G: FiniteGroup, K: FiniteGroup, act) -> list[tuple[int, ...]]:
    """All maps T: K → G satisfying the group relative Rota-Baxter identity (brute force)."""
    return [T for T in product(range(G.n), repeat=K.n) if is_group_rb(G, K, act, T)]


def group_algebra(G: FiniteGroup) -> FinDimHopf:
    b = LinComb.basis
    mult = {(g, h): b(G.mul(g, h)) for g in range(G.n) for h in range(G.n)}
    comult = {g: b((g, g)) for g in range(G.n)}
    antipode = {g: b(G.inv(g)) for g in range(G.n)}
    return FinDimHopf(G.names, mult, b(G.identity), comult, [1] * G.n, antipode, f"k[{G.name}]")


def linear_action(act) -> dict[tuple[int, int], LinComb]:
    """Linearise Φ: ``g ⇀ k = Φ(g)k``."""
    return {(g, k): LinComb.basis(row[k]) for g, row in enumerate(act) for k in range(len(row))}


def linear_map(T: Sequence[int]) -> dict[int, LinComb]:
    return {a: LinComb.basis(t) for a, t in enumerate(T)}


def group_rb_lift(G: FiniteGroup, K: FiniteGroup, act, T: Sequence[int], check: bool = True):
    """Linearise group data to (k[K], k[G], T, ⇀); raises GroupRBViolation when asked to check."""
    if check:
        for h in range(K.n):
            for k in range(K.n):
                lhs = G.mul(T[h], T[k])
                rhs = T[K.mul(h, act[T[h]][k])]
                if lhs != rhs:
                    raise GroupRBViolation(K.names[h], K.names[k], G.names[lhs], G.names[rhs])
    return group_algebra(K), group_algebra(G), linear_map(T), linear_action(act)
