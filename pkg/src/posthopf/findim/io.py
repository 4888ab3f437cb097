"""JSON files for structure-constant Hopf algebras and relative Rota-Baxter data.

Coefficients are ``[numerator, denominator]`` pairs (plain ints are read as
integers; floats are rejected).  Tensors are sparse lists:

* ``mult``: ``[i, j, k, c]`` meaning e_i e_j has coefficient c on e_k;
* ``unit``: ``[k, c]``;
* ``comult``: ``[i, j, k, c]`` meaning Δ(e_i) has coefficient c on e_j ⊗ e_k;
* ``counit``: ``[i, c]``;
* ``antipode``: ``[i, j, c]`` meaning S(e_i) has coefficient c on e_j.

A Hopf file may also carry a post-Hopf product ``post`` (same shape as
``mult``) and an inverse candidate ``post_inverse``.

Relative Rota-Baxter files come in two kinds.  ``"kind": "group"`` gives
Cayley tables, an action (``"conjugation"``, ``"trivial"`` or a table
``action[g][k]``) and ``T`` as a list of element names.  ``"kind": "hopf"``
gives two Hopf objects ``K`` and ``H``, ``action`` entries ``[x, a, b, c]``
(x ⇀ e_a has coefficient c on e_b) and ``T`` entries ``[a, x, c]``.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from ..kernel import LinComb
from ..report import Report
from .groups import (
    FiniteGroup,
    check_group_action,
    conjugation_action,
    group_rb_lift,
    group_rb_report,
    trivial_action,
)
from .hopf import FinDimHopf
from .rrb import RRB


class FixtureError(ValueError):
    """A JSON fixture does not match the expected schema."""


def coeff_from_json(c) -> Fraction:
    if isinstance(c, bool) or isinstance(c, float):
        raise FixtureError(f"coefficient {c!r} must be an integer or a [num, den] pair")
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, (list, tuple)) and len(c) == 2 and all(isinstance(v, int) for v in c):
        if c[1] == 0:
            raise FixtureError("zero denominator")
        return Fraction(c[0], c[1])
    if isinstance(c, str):
        return Fraction(c)
    raise FixtureError(f"bad coefficient {c!r}")


def coeff_to_json(c: Fraction) -> list[int]:
    c = Fraction(c)
    return [c.numerator, c.denominator]


def _check_index(i, n: int, what: str) -> int:
    if not isinstance(i, int) or not 0 <= i < n:
        raise FixtureError(f"{what}: index {i!r} out of range 0..{n - 1}")
    return i


def _table3(entries, n: int, what: str) -> dict[tuple[int, int], LinComb]:
    acc: dict = {}
    for e in entries:
        if len(e) != 4:
            raise FixtureError(f"{what}: entries must be [i, j, k, coeff]")
        i, j, k = (_check_index(v, n, what) for v in e[:3])
        acc.setdefault((i, j), []).append((k, coeff_from_json(e[3])))
    return {key: LinComb(v) for key, v in acc.items()}


def _table3_to_json(table) -> list:
    out = []
    for (i, j), v in sorted(table.items()):
        for k, c in sorted(v.items()):
            out.append([i, j, k, coeff_to_json(c)])
    return out


def hopf_from_dict(d: dict, check: bool = False) -> FinDimHopf:
    try:
        names = d["basis"]
        n = len(names)
        mult = _table3(d["mult"], n, "mult")
        unit = LinComb([(_check_index(k, n, "unit"), coeff_from_json(c)) for k, c in d["unit"]])
        comult_raw = _table3(d["comult"], n, "comult")
        comult = {}
        for (i, j), v in comult_raw.items():
            for k, c in v.items():
                comult.setdefault(i, {})[(j, k)] = c
        comult = {i: LinComb(v) for i, v in comult.items()}
        counit = [Fraction(0)] * n
        for i, c in d["counit"]:
            counit[_check_index(i, n, "counit")] += coeff_from_json(c)
        antipode: dict = {}
        for i, j, c in d["antipode"]:
            antipode.setdefault(_check_index(i, n, "antipode"), []).append((_check_index(j, n, "antipode"), coeff_from_json(c)))
        antipode = {i: LinComb(v) for i, v in antipode.items()}
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, FixtureError):
            raise
        raise FixtureError(f"malformed Hopf algebra: {exc!r}") from None
    return FinDimHopf(names, mult, unit, comult, counit, antipode, d.get("name", "H"), check=check)


def hopf_to_dict(H: FinDimHopf, post=None, post_inverse=None) -> dict:
    s = H.structure()
    d = {
        "name": H.name,
        "basis": list(H.names),
        "mult": _table3_to_json(s["mult"]),
        "unit": [[k, coeff_to_json(c)] for k, c in sorted(s["unit"].items())],
        "comult": [[i, j, k, coeff_to_json(c)] for i, v in sorted(s["comult"].items()) for (j, k), c in sorted(v.items())],
        "counit": [[i, coeff_to_json(c)] for i, c in enumerate(s["counit"]) if c],
        "antipode": [[i, j, coeff_to_json(c)] for i, v in sorted(s["antipode"].items()) for j, c in sorted(v.items())],
    }
    if post is not None:
        d["post"] = _table3_to_json(post)
    if post_inverse is not None:
        d["post_inverse"] = _table3_to_json(post_inverse)
    return d


def load_hopf(path: str | Path, check: bool = False) -> dict:
    """Read a Hopf file; returns {"hopf", "post", "post_inverse"} (tables may be None)."""
    d = json.loads(Path(path).read_text())
    H = hopf_from_dict(d, check)
    post = _table3(d["post"], H.n, "post") if "post" in d else None
    inv = _table3(d["post_inverse"], H.n, "post_inverse") if "post_inverse" in d else None
    return {"hopf": H, "post": post, "post_inverse": inv}


def save_hopf(H: FinDimHopf, path: str | Path, post=None, post_inverse=None) -> None:
    Path(path).write_text(json.dumps(hopf_to_dict(H, post, post_inverse), indent=1))


def group_from_dict(d: dict) -> FiniteGroup:
    names = d["elements"]
    idx = {nm: i for i, nm in enumerate(names)}
    table = [[idx[v] if isinstance(v, str) else v for v in row] for row in d["table"]]
    return FiniteGroup(names, table, d.get("name", "G"))


def group_to_dict(G: FiniteGroup) -> dict:
    return {"name": G.name, "elements": list(G.names), "table": [[G.names[v] for v in row] for row in G.table]}


def load_rrb(path: str | Path) -> tuple[RRB, Report]:
    """Read relative Rota-Baxter data; the report holds checks made before linearising."""
    d = json.loads(Path(path).read_text())
    name = d.get("name", Path(path).stem)
    pre = Report(f"input[{name}]")
    kind = d.get("kind", "hopf")
    try:
        if kind == "group":
            G = group_from_dict(d["G"])
            K = G if d.get("K", "same") == "same" else group_from_dict(d["K"])
            spec = d.get("action", "trivial")
            if spec == "conjugation":
                if K is not G:
                    raise FixtureError("conjugation action needs K = G")
                act = conjugation_action(G)
            elif spec == "trivial":
                act = trivial_action(G, K)
            else:
                act = [[K.index(v) if isinstance(v, str) else v for v in row] for row in spec]
            T = [G.index(v) if isinstance(v, str) else v for v in d["T"]]
            if len(T) != K.n:
                raise FixtureError(f"T must list {K.n} images")
            pre.extend(check_group_action(G, K, act))
            pre.extend(group_rb_report(G, K, act, T))
            kK, kG, Tm, lin = group_rb_lift(G, K, act, T, check=False)
            return RRB(kK, kG, lin, Tm, name), pre
        if kind == "hopf":
            K = hopf_from_dict(d["K"])
            H = hopf_from_dict(d["H"])
            act = _table3(d["action"], max(H.n, K.n), "action")
            T: dict = {}
            for a, x, c in d["T"]:
                T.setdefault(_check_index(a, K.n, "T"), []).append((_check_index(x, H.n, "T"), coeff_from_json(c)))
            return RRB(K, H, act, {a: LinComb(v) for a, v in T.items()}, name), pre
    except (KeyError, TypeError) as exc:
        raise FixtureError(f"malformed rrb file: {exc!r}") from None
    raise FixtureError(f"unknown rrb kind {kind!r}")


def rrb_to_dict(r: RRB, name: str | None = None) -> dict:
    return {
        "kind": "hopf",
        "name": name or r.name,
        "K": hopf_to_dict(r.K),
        "H": hopf_to_dict(r.H),
        "action": _table3_to_json(r.action_table),
        "T": [[a, x, coeff_to_json(c)] for a, v in sorted(r.T_table.items()) for x, c in sorted(v.items())],
    }
