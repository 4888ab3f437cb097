"""Command-line front end: ``posthopf`` (or ``python -m posthopf``).

Computation commands print a single canonical LinComb.  ``ybe`` and the
``verify`` suites print a report (or JSON with ``--json``) and exit 0 exactly
when every identity passes, 1 when some identity fails, and 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .kernel import CutoffExceeded, LinComb, format_lincomb
from .post import (
    GRAFT_LEFT,
    GRAFT_UNORDERED,
    PostHopfTrunc,
    brace_check,
    fmt,
    load_magma,
    primitive_post_lie_check,
    verify_post_hopf,
    verify_subadjacent,
)
from .report import Report
from .trees import TreeParseError, canonical, graft_left, graft_unordered, parse_forest, parse_tree
from .ybe import ybe_suite


class InputError(Exception):
    """Bad user input; reported on stderr with exit code 2."""


def _trees_fmt(u: LinComb) -> str:
    return format_lincomb(u, str)


def _instance(alphabet: str, degree: int, magma_file: str | None) -> PostHopfTrunc:
    if magma_file:
        m = load_magma(magma_file)
        if alphabet == "unordered" and not m["commutative"]:
            raise InputError(f"{magma_file} declares an ordered alphabet")
        return PostHopfTrunc(m["magma"], max(degree, 1), m["commutative"], m["overrides"])
    unordered = alphabet == "unordered"
    return PostHopfTrunc(GRAFT_UNORDERED if unordered else GRAFT_LEFT, max(degree, 1), unordered)


def _forest(ph: PostHopfTrunc, text: str) -> LinComb:
    return LinComb.basis(ph.H.word(parse_forest(text)))


# ---------------------------------------------------------------------------
# computation commands


def cmd_graft(args) -> int:
    tau, omega = parse_tree(args.tau), parse_tree(args.omega)
    result = graft_unordered(tau, omega) if args.unordered else graft_left(tau, omega)
    print(_trees_fmt(result))
    return 0


def cmd_gl(args) -> int:
    ph = _instance("unordered" if args.unordered else "ordered", args.degree, None)
    print(fmt(ph.gl_product(_forest(ph, args.X), _forest(ph, args.Y))))
    return 0


def cmd_post(args) -> int:
    ph = _instance("unordered" if args.unordered else "ordered", args.degree, args.magma)
    print(fmt(ph.triangle(_forest(ph, args.X), _forest(ph, args.Y))))
    return 0


def cmd_coproduct(args) -> int:
    ph = _instance("unordered" if args.unordered else "ordered", args.degree, None)
    print(fmt(ph.coproduct(_forest(ph, args.X))))
    return 0


def cmd_antipode(args) -> int:
    ph = _instance("unordered" if args.unordered else "ordered", args.degree, None)
    X = _forest(ph, args.X)
    print(fmt(ph.subadjacent_antipode(X) if args.subadjacent else ph.antipode(X)))
    return 0


# ---------------------------------------------------------------------------
# suites


def run_ybe(args) -> Report:
    ph = _instance(args.alphabet, max(args.degree, 1), args.magma)
    return ybe_suite(ph, args.degree)


def suite_posthopf_trees(args) -> Report:
    D = args.degree
    ph = _instance(args.alphabet, max(D, 1), args.magma)
    kind = "unordered" if ph.commutative else "ordered"
    rep = Report(f"posthopf-trees[{ph.magma.name}, {kind}, D={D}]")
    rep.extend(verify_post_hopf(ph, D))
    grafting = ph.magma in (GRAFT_LEFT, GRAFT_UNORDERED) and not ph.overrides
    rep.extend(verify_subadjacent(ph, D, grafting=grafting))
    rep.extend(brace_check(ph, min(D, 3)))
    rep.extend(primitive_post_lie_check(ph, D))
    return rep


def suite_h4(args) -> Report:
    from .findim.hopf import check_posthopf_iso, convolution_inverse, h4_post_table, h4_scaling_map, sweedler_h4, verify_hopf, verify_post_hopf_findim

    a = Fraction(args.a)
    H = sweedler_h4(check=False)
    table = h4_post_table(a)
    rep = Report(f"h4[a={a}, inverse={args.inverse}]")
    rep.extend(verify_hopf(H))
    if args.inverse == "solved":
        inverse = None
    elif args.inverse == "negated":
        inverse = h4_post_table(-a)
    else:
        inverse = table
    rep.extend(verify_post_hopf_findim(H, table, inverse, f"▷_{a}"))
    if a != 0:
        rep.extend(check_posthopf_iso(h4_scaling_map(a), H, table, H, h4_post_table(1)),
                   prefix="g↦g, x↦ax onto ▷_1: ")
    return rep


def suite_findim(args) -> Report:
    from .findim.hopf import verify_hopf, verify_post_hopf_findim
    from .findim.io import load_hopf

    d = load_hopf(args.file)
    H = d["hopf"]
    rep = Report(f"findim[{H.name}]")
    rep.extend(verify_hopf(H))
    if d["post"] is not None:
        rep.extend(verify_post_hopf_findim(H, d["post"], d["post_inverse"]))
    return rep


def _rrb_suite(args, pipeline_name: str) -> Report:
    from .findim.hopf import NotCocommutative
    from .findim.io import load_rrb
    from .findim.rrb import matched_pair_pipeline, rrb_pipeline

    r, pre = load_rrb(args.file)
    rep = Report(f"{pipeline_name}[{r.name}]")
    rep.extend(pre)
    try:
        rep.extend(rrb_pipeline(r) if pipeline_name == "rrb" else matched_pair_pipeline(r))
    except NotCocommutative as exc:
        rep.record("cocommutativity required by the construction", "structure", False, str(exc))
    return rep


def suite_rrb(args) -> Report:
    return _rrb_suite(args, "rrb")


def suite_matched_pair(args) -> Report:
    return _rrb_suite(args, "matched-pair")


def suite_liepbw(args) -> Report:
    from .liepbw import liepbw_pipeline, load_lie_rb

    d = load_lie_rb(args.file)
    D = args.degree if args.degree is not None else d["degree"]
    return liepbw_pipeline(d["T"], d["phi"], D, d["name"])


SUITES = {
    "posthopf-trees": suite_posthopf_trees,
    "h4": suite_h4,
    "findim": suite_findim,
    "rrb": suite_rrb,
    "matched-pair": suite_matched_pair,
    "liepbw": suite_liepbw,
}


def emit(rep: Report, as_json: bool) -> int:
    print(rep.to_json() if as_json else rep.render())
    return 0 if rep.passed else 1


def cmd_ybe(args) -> int:
    return emit(run_ybe(args), args.json)


def cmd_verify(args) -> int:
    return emit(SUITES[args.suite](args), args.json)


# ---------------------------------------------------------------------------
# export


def cmd_export(args) -> int:
    from .findim.hopf import h4_post_table, sweedler_h4
    from .findim.io import save_hopf

    save_hopf(sweedler_h4(), args.out, post=h4_post_table(Fraction(args.a)))
    print(args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="posthopf", description="Exact post-Hopf algebra computations and verification suites.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("graft", help="left grafting τ ↷ ω of two rooted trees")
    g.add_argument("tau")
    g.add_argument("omega")
    g.add_argument("--unordered", action="store_true", help="forget planarity (pre-Lie grafting)")
    g.set_defaults(func=cmd_graft)

    def forest_cmd(name, helptext, func, two=True, magma=False):
        q = sub.add_parser(name, help=helptext)
        q.add_argument("X", help='forest, e.g. "() (())"; "" or "1" is the unit')
        if two:
            q.add_argument("Y")
        q.add_argument("--degree", type=int, default=6, help="truncation degree (default 6)")
        q.add_argument("--unordered", action="store_true")
        if magma:
            q.add_argument("--magma", help="magma table JSON instead of grafting")
        q.set_defaults(func=func)
        return q

    forest_cmd("gl", "Grossman-Larson product X ∗ Y", cmd_gl)
    forest_cmd("post", "post-Hopf product X ▷ Y", cmd_post, magma=True)
    forest_cmd("coproduct", "deshuffle coproduct of a forest", cmd_coproduct, two=False)
    a = forest_cmd("antipode", "antipode of a forest", cmd_antipode, two=False)
    a.add_argument("--subadjacent", action="store_true", help="antipode of the Grossman-Larson product")

    y = sub.add_parser("ybe", help="braid relation and compatibility of the Yang-Baxter operator")
    y.add_argument("--degree", type=int, default=3)
    y.add_argument("--alphabet", choices=["ordered", "unordered"], default="ordered")
    y.add_argument("--magma", help="magma table JSON instead of grafting")
    y.add_argument("--json", action="store_true")
    y.set_defaults(func=cmd_ybe)

    v = sub.add_parser("verify", help="run a verification suite")
    vs = v.add_subparsers(dest="suite", required=True)

    def suite_parser(name, helptext, file=False):
        q = vs.add_parser(name, help=helptext)
        if file:
            q.add_argument("file")
        q.add_argument("--json", action="store_true")
        q.set_defaults(func=cmd_verify)
        return q

    t = suite_parser("posthopf-trees", "post-Hopf, subadjacent, brace and post-Lie suites on trees")
    t.add_argument("--degree", type=int, default=4)
    t.add_argument("--alphabet", choices=["ordered", "unordered"], default="ordered")
    t.add_argument("--magma")
    h = suite_parser("h4", "post-Hopf structures ▷_a on Sweedler's algebra")
    h.add_argument("--a", default="1", help="parameter a (integer or fraction)")
    h.add_argument("--inverse", choices=["solved", "negated", "self"], default="solved",
                   help="Post-con witness: solve exactly (default), ▷_{-a}, or ▷_a")
    suite_parser("findim", "Hopf axioms and optional post-Hopf product from a JSON file", file=True)
    suite_parser("rrb", "relative Rota-Baxter pipeline from a JSON file", file=True)
    suite_parser("matched-pair", "matched pair and double crossproduct from a JSON file", file=True)
    lp = suite_parser("liepbw", "Lie / enveloping-algebra pipeline from a JSON file", file=True)
    lp.add_argument("--degree", type=int, default=None, help="truncation (default: from the file)")

    e = sub.add_parser("export", help="write the H4 post-Hopf structure ▷_a as a findim JSON file")
    e.add_argument("out")
    e.add_argument("--a", default="1")
    e.set_defaults(func=cmd_export)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TreeParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except CutoffExceeded as exc:
        print(f"error: degree cutoff exceeded: {exc}", file=sys.stderr)
    except (OSError, json.JSONDecodeError, InputError, ValueError, KeyError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
