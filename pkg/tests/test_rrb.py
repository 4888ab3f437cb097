from __future__ import annotations

import json

import pytest

from posthopf.findim import (
    RRB,
    MatchedPairViolation,
    NotCocommutative,
    adT_module_bialgebra_check,
    conjugation_action,
    cyclic_group,
    descendent_hopf,
    double_crossproduct,
    graph_check,
    group_algebra,
    group_rb_lift,
    matched_pair_from_rrb,
    module_characterization_check,
    smash_product,
    sweedler_h4,
    symmetric_group,
    verify_hopf,
    verify_rrb,
)
from posthopf.findim.hopf import tensor_hopf
from posthopf.findim.io import load_rrb, rrb_to_dict
from posthopf.findim.rrb import (
    adjoint_action_table,
    identity_map,
    matched_pair_report,
    rrb_pipeline,
    trivial_action_table,
    unit_counit_map,
)
from posthopf.kernel import LinComb

FACTORISATION = ["123", "132", "132", "123", "123", "132"]


def s3_rrb(images):
    S3 = symmetric_group(3)
    T = [S3.index(n) for n in images]
    kK, kG, Tm, act = group_rb_lift(S3, S3, conjugation_action(S3), T, check=False)
    return RRB(kK, kG, act, Tm, "S3")


@pytest.fixture(scope="module")
def kZ2():
    return group_algebra(cyclic_group(2))


@pytest.fixture(scope="module")
def trivial_z2(kZ2):
    return RRB(kZ2, kZ2, trivial_action_table(kZ2, kZ2), identity_map(kZ2), "id")


def test_trivial_action_identity_is_rrb(trivial_z2):
    assert verify_rrb(trivial_z2).passed


def test_trivial_action_descendent_is_original(trivial_z2, kZ2):
    assert trivial_z2.star_table() == kZ2.structure()["mult"]


def test_trivial_action_adT_is_counit(trivial_z2, kZ2):
    for a in range(2):
        for c in range(2):
            assert trivial_z2.ad_T(kZ2.e(a), kZ2.e(c)) == kZ2.e(c) * kZ2.counit_basis(a)


def test_trivial_action_smash_is_tensor_product(kZ2):
    sm = smash_product(kZ2, kZ2, trivial_action_table(kZ2, kZ2))
    tp = tensor_hopf(kZ2, kZ2)
    s1, s2 = sm.structure(), tp.structure()
    assert all(s1[k] == s2[k] for k in ("mult", "unit", "comult", "counit", "antipode"))
    assert sm.n == 4 and sm.commutative and sm.cocommutative


def test_trivial_action_matched_pair(trivial_z2):
    right, rep = matched_pair_from_rrb(trivial_z2)
    assert rep.passed
    # x ↼ a = ε(a) x when both actions are trivial
    for (x, a), v in right.items():
        assert v == trivial_z2.H.e(x) * trivial_z2.K.counit_basis(a)


def test_goncharov_adjoint_unit_counit():
    kS3 = group_algebra(symmetric_group(3))
    r = RRB(kS3, kS3, adjoint_action_table(kS3), unit_counit_map(kS3), "B = unit after counit")
    rep = rrb_pipeline(r)
    assert rep.passed, rep.render()


def test_factorisation_operator_descendent():
    r = s3_rrb(FACTORISATION)
    KT = descendent_hopf(r)
    assert verify_hopf(KT).passed
    # the descendent group of this exact factorisation is abelian, unlike S3
    assert KT.commutative and not r.K.commutative


def test_mat4_forced_by_unit():
    r = s3_rrb(FACTORISATION)
    H, K = r.H, r.K
    for a in range(K.n):
        assert r.right_action(H.one(), K.e(a)) == H.one() * K.counit_basis(a)


def test_violating_operator_breaks_graph_closure():
    r = s3_rrb(list(symmetric_group(3).names))
    rep = graph_check(r)
    closure = rep["Gr_T closed under the smash product"]
    assert not closure.passed and closure.witness
    assert rep["Gr_T is a subalgebra exactly when T satisfies the rrb identity"].passed


def test_mutated_operator_breaks_module_action():
    images = FACTORISATION[:5] + ["123"]
    r = s3_rrb(images)
    assert not verify_rrb(r).passed
    rep = module_characterization_check(r)
    action = rep["action: (a∗_T b) ⋆_T x = a ⋆_T (b ⋆_T x)"]
    assert not action.passed and action.witness
    assert rep["⋆_T is an action exactly when T satisfies the rrb identity"].passed


def test_broken_antipode_breaks_adT():
    r = s3_rrb(FACTORISATION)
    assert adT_module_bialgebra_check(r).passed
    rep = adT_module_bialgebra_check(r, antipode=lambda u: u)
    # on a group algebra every basis-to-basis map is a coalgebra map, so the
    # damage shows up in the module and measuring laws
    assert not rep.passed
    assert not rep["module: (xy)⇀a = x⇀(y⇀a)"].passed
    assert not rep["measuring: x⇀(ab) = (x1⇀a)(x2⇀b)"].passed
    assert rep["coalgebra map: Δ(x⇀a) = (x1⇀a1)⊗(x2⇀a2)"].passed


def test_non_cocommutative_constructions_are_refused():
    H4 = sweedler_h4()
    with pytest.raises(NotCocommutative):
        smash_product(H4, H4, trivial_action_table(H4, H4))
    r = RRB(H4, H4, trivial_action_table(H4, H4), identity_map(H4))
    with pytest.raises(NotCocommutative):
        descendent_hopf(r)


def test_failing_matched_pair_is_refused():
    r = s3_rrb(FACTORISATION[:5] + ["123"])
    rep = matched_pair_report(r)
    assert not rep["↼ right module: (x↼a)↼b = x↼(a∗b)"].passed
    with pytest.raises(MatchedPairViolation):
        double_crossproduct(r.K, r.H, r.action_table, r.right_table(), report=rep)


def test_identity_on_s3_breaks_the_double_crossproduct():
    from posthopf.findim.rrb import double_crossproduct_report

    r = s3_rrb(list(symmetric_group(3).names))
    rep = double_crossproduct_report(r)
    assert not rep["associativity: (ab)c = a(bc)"].passed


def test_rrb_file_round_trip(tmp_path, data_dir):
    r, pre = load_rrb(data_dir / "s3_conjugation_rrb.json")
    assert pre.passed
    path = tmp_path / "hopf_form.json"
    path.write_text(json.dumps(rrb_to_dict(r)))
    r2, pre2 = load_rrb(path)
    assert pre2.checks == []
    assert r2.T_table == r.T_table
    assert r2.K.structure() == r.K.structure()
