"""Planar and non-planar rooted trees in balanced-parentheses form.

A tree *is* its canonical string: ``"()"`` is the single node and the
children of a node are listed left to right between its parentheses, so
``"(()(()))"`` is a root with a leaf and a 2-chain as children.  Letter
strings over a/b map onto this format via ``a -> "("`` and ``b -> ")"``.

Non-planar (unordered) trees use the same strings in a canonical form in
which siblings are sorted by ``(degree, string)`` in decreasing order, so
larger branches come first (``"((())()())"``, not ``"(()()(()))"``).
"""
from __future__ import annotations

from functools import lru_cache

from .kernel import Accumulator, LinComb

Tree = str
Forest = tuple  # tuple[Tree, ...]


class TreeParseError(ValueError):
    """Malformed tree text; ``position`` is the offending 0-based index."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


def _check_balanced(text: str) -> list[int]:
    """Return the start indices of top-level trees, validating along the way."""
    depth = 0
    starts = []
    for i, ch in enumerate(text):
        if ch == "(":
            if depth == 0:
                starts.append(i)
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise TreeParseError("unmatched ')'", text, i)
        else:
            raise TreeParseError(f"unexpected character {ch!r}", text, i)
    if depth:
        raise TreeParseError("unclosed '('", text, len(text))
    return starts


def _from_letters(s: str) -> str:
    if s and set(s) <= {"a", "b"}:
        return s.replace("a", "(").replace("b", ")")
    return s


def parse_tree(text: str) -> Tree:
    """Parse one tree; the a/b letter form (``"aabb"``) is accepted too."""
    s = _from_letters(text.strip())
    if not s:
        raise TreeParseError("empty tree", text, 0)
    starts = _check_balanced(s)
    if len(starts) != 1:
        raise TreeParseError("expected a single tree", s, starts[1])
    return s


def parse_forest(text: str) -> Forest:
    """Parse whitespace-separated trees; ``""`` or ``"1"`` is the empty forest."""
    s = text.strip()
    if s in ("", "1"):
        return ()
    out = []
    offset = 0
    for token in s.split():
        pos = s.index(token, offset)
        offset = pos + len(token)
        token = _from_letters(token)
        try:
            starts = _check_balanced(token)
        except TreeParseError as exc:
            raise TreeParseError(exc.args[0].split(" at position")[0], s, pos + exc.position) from None
        starts.append(len(token))
        out.extend(token[a:b] for a, b in zip(starts, starts[1:]))
    return tuple(out)


def format_forest(forest: Forest) -> str:
    return " ".join(forest) if forest else "1"


def degree(tree: Tree) -> int:
    return len(tree) // 2


def forest_degree(forest: Forest) -> int:
    return sum(len(t) for t in forest) // 2


@lru_cache(maxsize=None)
def children(tree: Tree) -> Forest:
    """Branches of the root, left to right."""
    inner = tree[1:-1]
    out = []
    depth = 0
    start = 0
    for i, ch in enumerate(inner):
        if ch == "(":
            if depth == 0:
                start = i
            depth += 1
        else:
            depth -= 1
            if depth == 0:
                out.append(inner[start:i + 1])
    return tuple(out)


def b_plus(forest: Forest) -> Tree:
    return "(" + "".join(forest) + ")"


def b_minus_tree(tree: Tree) -> Forest:
    return children(tree)


def b_minus(forest: Forest) -> Forest:
    out: list[Tree] = []
    for t in forest:
        out.extend(children(t))
    return tuple(out)


def graft_left(tau: Tree, omega: Tree) -> LinComb:
    """Left grafting: sum over nodes s of omega of tau inserted as s's new leftmost child."""
    acc = Accumulator()
    for i, ch in enumerate(omega):
        if ch == "(":
            acc.add_term(omega[:i + 1] + tau + omega[i + 1:], 1)
    return acc.result()


def _sibling_key(t: Tree):
    return (len(t), t)


@lru_cache(maxsize=None)
def canonical(tree: Tree) -> Tree:
    """Canonical representative of the non-planar isomorphism class."""
    kids = sorted((canonical(c) for c in children(tree)), key=_sibling_key, reverse=True)
    return "(" + "".join(kids) + ")"


def canonical_forest(forest: Forest) -> Forest:
    return tuple(sorted((canonical(t) for t in forest), key=_sibling_key, reverse=True))


def b_plus_unordered(forest: Forest) -> Tree:
    return canonical(b_plus(forest))


def graft_unordered(tau: Tree, omega: Tree) -> LinComb:
    """Grafting of non-planar trees, collected with multiplicities."""
    acc = Accumulator()
    for t, c in graft_left(canonical(tau), canonical(omega)).items():
        acc.add_term(canonical(t), c)
    return acc.result()


def canonicalize(u: LinComb) -> LinComb:
    """Forget planarity in a LinComb of trees."""
    acc = Accumulator()
    for t, c in u.items():
        acc.add_term(canonical(t), c)
    return acc.result()


@lru_cache(maxsize=None)
def ordered_trees(n: int) -> tuple[Tree, ...]:
    """All planar rooted trees with n nodes, sorted."""
    if n < 1:
        return ()
    return tuple(sorted(b_plus(f) for f in ordered_forests(n - 1)))


@lru_cache(maxsize=None)
def ordered_forests(n: int) -> tuple[Forest, ...]:
    """All planar forests (sequences of trees) with n nodes in total."""
    if n == 0:
        return ((),)
    out = []
    for k in range(1, n + 1):
        for t in ordered_trees(k):
            out.extend((t,) + rest for rest in ordered_forests(n - k))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def unordered_trees(n: int) -> tuple[Tree, ...]:
    return tuple(sorted({canonical(t) for t in ordered_trees(n)}))


@lru_cache(maxsize=None)
def unordered_forests(n: int) -> tuple[Forest, ...]:
    return tuple(sorted({canonical_forest(f) for f in ordered_forests(n)}))
