"""Exact formal linear combinations over canonical basis keys.

Every algebra element in this package is a :class:`LinComb`: a finite map
from hashable, canonically-ordered basis keys to :class:`fractions.Fraction`
coefficients.  Keys are plain Python values:

* a rooted tree is its balanced-parentheses string, e.g. ``"(()())"``;
* a word (forest) is a tuple of tree strings, the empty tuple being the unit;
* a tensor key is a tuple of component keys;
* basis vectors of structure-constant algebras are ints, PBW monomials are
  tuples of ints.

Because keys are canonical, structural equality of LinCombs is algebraic
equality, which is what every axiom check in the package relies on.
"""
from __future__ import annotations

import re
from collections.abc import Callable, Hashable, Iterable, Iterator, Mapping
from fractions import Fraction
from typing import Any

Scalar = int | Fraction


class CutoffExceeded(ValueError):
    """Raised when an exact result would leave the truncation range."""


def grade(key: Any) -> int:
    """Grading used for canonical ordering (node count for trees/forests)."""
    if isinstance(key, str):
        return len(key) // 2
    if isinstance(key, tuple):
        return sum(grade(k) for k in key)
    return 1


def _struct(key: Any):
    if isinstance(key, str):
        return (1, key)
    if isinstance(key, tuple):
        return (2, tuple(_struct(k) for k in key))
    return (0, key)


def order_key(key: Any):
    """Total order on keys: by grade, then structurally."""
    return (grade(key), _struct(key))


class LinComb(Mapping):
    """Immutable finite linear combination with exact rational coefficients.

    Zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Hashable, Scalar] | Iterable[tuple[Hashable, Scalar]] | None = None):
        clean: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, c in items:
                c = clean.get(k, 0) + c
                if c:
                    clean[k] = c
                else:
                    clean.pop(k, None)
        self._terms = {k: Fraction(c) for k, c in clean.items()}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> LinComb:
        # terms already free of zeros and Fraction-valued
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def basis(cls, key: Hashable, coeff: Scalar = 1) -> LinComb:
        return cls._raw({key: Fraction(coeff)}) if coeff else cls._raw({})

    # Mapping protocol
    def __getitem__(self, key):
        return self._terms[key]

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def values(self):
        return self._terms.values()

    def __contains__(self, key) -> bool:
        return key in self._terms

    def coeff(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def sorted_items(self) -> list[tuple[Any, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: order_key(kv[0]))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # vector space operations
    def __add__(self, other: LinComb) -> LinComb:
        if not isinstance(other, LinComb):
            if other == 0:
                return self
            return NotImplemented
        if len(other._terms) > len(self._terms):
            self, other = other, self
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return LinComb._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LinComb:
        return LinComb._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: LinComb) -> LinComb:
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> LinComb:
        if isinstance(scalar, LinComb):
            return NotImplemented
        if not scalar:
            return LinComb._raw({})
        s = Fraction(scalar)
        return LinComb._raw({k: s * c for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"LinComb({format_lincomb(self)})"


ZERO = LinComb()


def add(u: LinComb, v: LinComb) -> LinComb:
    return u + v


def collect(pairs: Iterable[tuple[Hashable, Scalar]]) -> LinComb:
    """Sum an iterable of (key, coefficient) pairs into a LinComb."""
    acc: dict = {}
    for k, c in pairs:
        if c:
            acc[k] = acc.get(k, 0) + c
    return LinComb._raw({k: Fraction(c) for k, c in acc.items() if c})


class Accumulator:
    """Mutable builder for sums of LinCombs; call :meth:`result` at the end."""

    __slots__ = ("_acc",)

    def __init__(self):
        self._acc: dict = {}

    def add(self, u: Mapping, scale: Scalar = 1) -> None:
        if not scale:
            return
        acc = self._acc
        if scale == 1:
            for k, c in u.items():
                acc[k] = acc.get(k, 0) + c
        else:
            for k, c in u.items():
                acc[k] = acc.get(k, 0) + scale * c

    def add_term(self, key: Hashable, coeff: Scalar) -> None:
        if coeff:
            self._acc[key] = self._acc.get(key, 0) + coeff

    def result(self) -> LinComb:
        return LinComb._raw({k: Fraction(c) for k, c in self._acc.items() if c})


def extend_linear(f: Callable[[Any], LinComb], u: LinComb) -> LinComb:
    """Linear extension of a basis map ``f`` applied to ``u``."""
    acc = Accumulator()
    for k, c in u.items():
        acc.add(f(k), c)
    return acc.result()


def extend_bilinear(f: Callable[[Any, Any], LinComb], u: LinComb, v: LinComb) -> LinComb:
    acc = Accumulator()
    for k1, c1 in u.items():
        for k2, c2 in v.items():
            acc.add(f(k1, k2), c1 * c2)
    return acc.result()


def tensor(*factors: LinComb) -> LinComb:
    """Tensor product; keys of the result are tuples of factor keys."""
    terms: dict = {(): Fraction(1)}
    for u in factors:
        terms = {k + (b,): c * cb for k, c in terms.items() for b, cb in u.items()}
    return LinComb._raw(terms)


def apply_tensor(maps: tuple[Callable[[Any], LinComb], ...], u: LinComb) -> LinComb:
    """Apply ``f1 ⊗ ... ⊗ fn`` to a LinComb of n-fold tensor keys."""
    acc = Accumulator()
    for key, c in u.items():
        acc.add(tensor(*(f(k) for f, k in zip(maps, key))), c)
    return acc.result()


def flatten_tensor(u: LinComb) -> LinComb:
    """Flatten nested tensor keys ((a, b), c) -> (a, b, c) one level deep."""
    acc = Accumulator()
    for key, c in u.items():
        flat = []
        for part in key:
            flat.extend(part)
        acc.add_term(tuple(flat), c)
    return acc.result()


# ---------------------------------------------------------------------------
# text format


def format_scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_lincomb(u: LinComb, fmt_key: Callable[[Any], str] = repr) -> str:
    """Render ``u`` deterministically: terms by (degree, canonical string)."""
    if not u:
        return "0"
    parts = []
    for k, c in u.sorted_items():
        sign = "-" if c < 0 else "+"
        a = abs(c)
        body = fmt_key(k) if a == 1 else f"{format_scalar(a)}*{fmt_key(k)}"
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TERM_SPLIT = re.compile(r"\s+([+-])\s+")
_COEFF = re.compile(r"^(\d+(?:/\d+)?)\*(.*)$", re.S)


def parse_lincomb(text: str, parse_key: Callable[[str], Any]) -> LinComb:
    """Inverse of :func:`format_lincomb` for a given key parser."""
    text = text.strip()
    if text == "0":
        return ZERO
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:].lstrip()
    pieces = _TERM_SPLIT.split(text)
    terms = []
    signs = [sign] + [1 if s == "+" else -1 for s in pieces[1::2]]
    for s, body in zip(signs, pieces[0::2]):
        m = _COEFF.match(body)
        if m:
            c, body = Fraction(m.group(1)), m.group(2)
        else:
            c = Fraction(1)
        terms.append((parse_key(body), s * c))
    return collect(terms)


# ---------------------------------------------------------------------------
# exact linear algebra over Q (sparse rows)


def rref(rows: Iterable[Mapping[Any, Fraction]]) -> list[tuple[Any, dict]]:
    """Reduced row echelon form of sparse rows.

    Columns are ordered by :func:`order_key`.  Returns ``(pivot, row)`` pairs with
    each row normalised so its pivot coefficient is 1.
    """
    basis: dict[Any, dict] = {}  # pivot column -> row
    for r in rows:
        row = {k: Fraction(c) for k, c in r.items() if c}
        for piv, prow in basis.items():
            c = row.get(piv)
            if c:
                for k, v in prow.items():
                    nv = row.get(k, 0) - c * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        if not row:
            continue
        piv = min(row, key=order_key)
        inv = 1 / row[piv]
        row = {k: v * inv for k, v in row.items()}
        for q, qrow in basis.items():
            c = qrow.get(piv)
            if c:
                for k, v in row.items():
                    nv = qrow.get(k, 0) - c * v
                    if nv:
                        qrow[k] = nv
                    else:
                        qrow.pop(k, None)
        basis[piv] = row
    return sorted(basis.items(), key=lambda pr: order_key(pr[0]))


def rank(vectors: Iterable[Mapping]) -> int:
    return len(rref(vectors))


def in_span(v: Mapping, echelon: list[tuple[Any, dict]]) -> bool:
    """Membership test against the output of :func:`rref`."""
    row = {k: Fraction(c) for k, c in v.items() if c}
    for piv, prow in echelon:
        c = row.get(piv)
        if c:
            for k, x in prow.items():
                nv = row.get(k, 0) - c * x
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return not row


def nullspace(columns: list[Mapping]) -> list[dict[int, Fraction]]:
    """Basis of {c : Σ_j c_j columns[j] = 0}, as sparse dicts over column indices."""
    # transpose into rows indexed by output key
    keys = sorted({k for col in columns for k in col}, key=order_key)
    n = len(columns)
    mat = [[Fraction(columns[j].get(k, 0)) for j in range(n)] for k in keys]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    out = []
    for fc in free:
        vec = {fc: Fraction(1)}
        for i, pc in enumerate(pivots):
            if mat[i][fc]:
                vec[pc] = -mat[i][fc]
        out.append(vec)
    return out
