from __future__ import annotations

from fractions import Fraction

import pytest

from posthopf.findim import (
    HopfAxiomError,
    check_posthopf_iso,
    convolution_inverse,
    cyclic_group,
    find_group_rb_operators,
    group_algebra,
    group_rb_lift,
    group_rb_report,
    GroupRBViolation,
    grouplike_check,
    h4_post_table,
    h4_scaling_map,
    primitives,
    skew_primitive_check,
    sweedler_h4,
    symmetric_group,
    trivial_post_table,
    verify_hopf,
    verify_post_hopf_findim,
    conjugation_action,
)
from posthopf.findim.groups import check_group_action, trivial_action
from posthopf.findim.hopf import skew_primitives
from posthopf.findim.io import FixtureError, coeff_from_json, hopf_from_dict, hopf_to_dict, load_hopf, save_hopf
from posthopf.kernel import LinComb

b = LinComb.basis
ONE, G, X, GX = range(4)


@pytest.fixture(scope="module")
def H4():
    return sweedler_h4()


def test_h4_relations(H4):
    assert H4.mul_many(H4.e(G), H4.e(G)) == H4.one()
    assert H4.mul(H4.e(X), H4.e(X)) == LinComb()
    assert H4.mul(H4.e(G), H4.e(X)) == -H4.mul(H4.e(X), H4.e(G))
    assert H4.S(H4.e(X)) == -H4.e(GX)
    assert H4.delta(H4.e(X)) == LinComb({(X, ONE): 1, (G, X): 1})


def test_h4_and_z2_are_hopf(H4):
    assert verify_hopf(H4).passed
    assert verify_hopf(group_algebra(cyclic_group(2))).passed


def test_h4_flags_are_computed(H4):
    assert not H4.commutative and not H4.cocommutative
    kZ2 = group_algebra(cyclic_group(2))
    assert kZ2.commutative and kZ2.cocommutative


def test_corrupted_antipode_fails(H4):
    bad = H4.with_antipode({**{i: H4.S_basis(i) for i in range(4)}, X: b(GX)})
    rep = verify_hopf(bad)
    assert not rep["antipode: S(a1)a2 = ε(a)1"].passed
    with pytest.raises(HopfAxiomError):
        hopf_from_dict(hopf_to_dict(bad), check=True)


def test_grouplikes_and_primitives(H4):
    assert primitives(H4) == []
    assert grouplike_check(H4, H4.e(G))
    assert not grouplike_check(H4, H4.e(X))
    assert skew_primitive_check(H4, H4.e(X), H4.one(), H4.e(G))
    assert grouplike_check(group_algebra(cyclic_group(2)), b(1))


def test_skew_primitive_space_for_1_g(H4):
    # P_{1,g} is spanned by x and the trivial skew primitive 1 - g
    span = skew_primitives(H4, H4.one(), H4.e(G))
    assert len(span) == 2
    for v in (H4.e(X), H4.one() - H4.e(G)):
        assert skew_primitive_check(H4, v, H4.one(), H4.e(G))


@pytest.mark.parametrize("a", [0, 1, 2, -3, Fraction(1, 2)])
def test_h4_family_with_solved_inverse(H4, a):
    rep = verify_post_hopf_findim(H4, h4_post_table(a), None)
    assert rep.passed, rep.render()


@pytest.mark.parametrize("a", [0, 1, 2, -3])
def test_h4_convolution_inverse_is_the_product_itself(H4, a):
    inv = convolution_inverse(H4, h4_post_table(a))
    table = h4_post_table(a)
    assert all(inv[k] == table[k] for k in table)


@pytest.mark.parametrize("a", [1, 2, -3])
def test_negated_parameter_is_not_the_inverse(H4, a):
    rep = verify_post_hopf_findim(H4, h4_post_table(a), h4_post_table(-a))
    check = rep["Post-con: α(x1)β(x2) = ε(x)id"]
    assert not check.passed
    assert check.witness == f"x=x, y=x: lhs = {2 * a}*x ; rhs = 0"


def test_other_axioms_hold_for_every_a(H4):
    for a in (1, 2, -3):
        rep = verify_post_hopf_findim(H4, h4_post_table(a), h4_post_table(-a))
        assert all(c.passed for c in rep.checks if not c.name.startswith("Post-con"))


def test_trivial_post_structure(H4):
    t = trivial_post_table(H4)
    assert verify_post_hopf_findim(H4, t, t).passed


def test_g_acting_as_counit_is_rejected(H4):
    t = dict(h4_post_table(1))
    t[(G, G)] = H4.one()
    rep = verify_post_hopf_findim(H4, t, None)
    assert not rep.passed
    failing = {c.name for c in rep.checks if not c.passed}
    assert failing & {"coalgebra-map: Δ(x▷y) = (x1▷y1)⊗(x2▷y2)", "Post-4: x▷(y▷z) = (x1(x2▷y))▷z"}


@pytest.mark.parametrize("a", [1, 2, -3])
def test_scaling_isomorphism(H4, a):
    assert check_posthopf_iso(h4_scaling_map(a), H4, h4_post_table(a), H4, h4_post_table(1)).passed


def test_identity_is_an_isomorphism(H4):
    ident = {i: H4.e(i) for i in range(4)}
    assert check_posthopf_iso(ident, H4, h4_post_table(1), H4, h4_post_table(1)).passed


def test_identity_does_not_intertwine_different_parameters(H4):
    ident = {i: H4.e(i) for i in range(4)}
    rep = check_posthopf_iso(ident, H4, h4_post_table(2), H4, h4_post_table(1))
    assert not rep.passed
    assert "lhs = 2*x ; rhs = x" in rep["▷-compatible: f(x▷y) = f(x)▷′f(y)"].witness


# groups -------------------------------------------------------------------


def test_s3_conjugation_is_an_action():
    S3 = symmetric_group(3)
    assert check_group_action(S3, S3, conjugation_action(S3)).passed


def test_s3_rb_operators_by_brute_force():
    S3 = symmetric_group(3)
    ops = find_group_rb_operators(S3, S3, conjugation_action(S3))
    assert len(ops) == 8
    e = S3.identity
    assert (e,) * 6 in ops
    assert tuple(S3.index(n) for n in ["123", "132", "132", "123", "123", "132"]) in ops
    assert tuple(S3.inverse) in ops
    assert tuple(range(6)) not in ops


def test_constant_identity_map_is_always_rb():
    # T(h)T(k) = e = T(h Φ(e) k) holds for every group and action
    for G in (cyclic_group(3), symmetric_group(3)):
        T = [G.identity] * G.n
        assert group_rb_report(G, G, conjugation_action(G), T).passed


def test_identity_on_s3_fails_with_witness():
    S3 = symmetric_group(3)
    rep = group_rb_report(S3, S3, conjugation_action(S3), list(range(6)))
    assert not rep.passed
    assert rep.checks[0].witness == "h=132, k=213: lhs = 312 ; rhs = 231"
    with pytest.raises(GroupRBViolation):
        group_rb_lift(S3, S3, conjugation_action(S3), list(range(6)))


def test_z2_trivial_identity_passes():
    Z2 = cyclic_group(2)
    assert group_rb_report(Z2, Z2, trivial_action(Z2, Z2), [0, 1]).passed


# files --------------------------------------------------------------------


def test_hopf_file_round_trip(tmp_path, H4):
    path = tmp_path / "h4.json"
    save_hopf(H4, path, post=h4_post_table(2))
    d = load_hopf(path, check=True)
    assert d["hopf"].structure() == H4.structure()
    table = h4_post_table(2)
    assert all(d["post"].get(k, LinComb()) == v for k, v in table.items())
    assert d["post_inverse"] is None


@pytest.mark.parametrize("bad", [0.5, True, [1, 0], "x", None])
def test_coefficients_must_be_exact(bad):
    with pytest.raises((FixtureError, ValueError)):
        coeff_from_json(bad)


def test_coefficient_forms():
    assert coeff_from_json(3) == 3
    assert coeff_from_json([-1, 2]) == Fraction(-1, 2)
    assert coeff_from_json("2/3") == Fraction(2, 3)


def test_out_of_range_index_is_rejected(H4):
    d = hopf_to_dict(H4)
    d["mult"].append([0, 9, 0, 1])
    with pytest.raises(FixtureError):
        hopf_from_dict(d)
