from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from posthopf.kernel import CutoffExceeded, LinComb
from posthopf.liepbw import (
    ExtendedRB,
    LieAction,
    LieAlg,
    TruncUEA,
    abelian,
    extend_action,
    extend_rb,
    graph_envelope_check,
    heisenberg,
    induced_postlie,
    lie_from_upper,
    liepbw_pipeline,
    load_lie_rb,
    nonabelian2,
    posthopf_consistency_check,
    verify_extended_action,
    verify_lie,
    verify_lie_action,
    verify_rb_lie,
    verify_uea,
)

b = LinComb.basis
E1, E2, E3 = 0, 1, 2
MINUS_P2 = {E2: b(E2, -1)}


@pytest.fixture(scope="module")
def aff2():
    return nonabelian2()


@pytest.fixture(scope="module")
def ad2(aff2):
    return LieAction.adjoint(aff2)


def test_standard_algebras_are_lie():
    for L in (abelian(2), nonabelian2(), heisenberg()):
        assert verify_lie(L).passed


def test_jacobi_violation_is_caught():
    L = lie_from_upper(["e1", "e2", "e3"], {(0, 1): b(0), (1, 2): b(1)})
    rep = verify_lie(L)
    assert rep["antisymmetry: [x,y] = -[y,x]"].passed
    assert not rep["Jacobi: [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0"].passed


def test_antisymmetry_violation_is_caught():
    L = LieAlg(["e1", "e2"], {(0, 1): b(0), (1, 0): b(0)})
    assert not verify_lie(L)["antisymmetry: [x,y] = -[y,x]"].passed


def test_adjoint_action_is_a_lie_action(ad2):
    assert verify_lie_action(ad2).passed
    H = heisenberg()
    assert verify_lie_action(LieAction.adjoint(H)).passed


def test_non_derivation_is_caught(aff2):
    # φ(e1) = id is not a derivation of [e1,e2] = e1
    phi = LieAction(aff2, aff2, {(E1, E1): b(E1), (E1, E2): b(E2)})
    assert not verify_lie_action(phi).passed


def test_rb_zero_operator_on_abelian():
    A = abelian(2)
    assert verify_rb_lie({}, LieAction.zero(A, A)).passed


def test_rb_identity_fails_on_affine_algebra(ad2):
    rep = verify_rb_lie({E1: b(E1), E2: b(E2)}, ad2)
    check = rep.checks[0]
    assert not check.passed
    # [e1,e2] = e1 but T(φ(e1)e2 − φ(e2)e1 + [e1,e2]) = T(3 e1)
    assert check.witness == "u=e1, v=e2: lhs = e1 ; rhs = 3*e1"


@pytest.mark.parametrize("T", [MINUS_P2, {E1: b(E1, -1)}, {E1: b(E1, -1), E2: b(E2, -1)}])
def test_rb_operators_on_affine_algebra(ad2, T):
    assert verify_rb_lie(T, ad2).passed


def test_generic_operator_fails(ad2):
    assert not verify_rb_lie({E1: b(E2), E2: b(E1) + b(E2)}, ad2).passed


def test_minus_identity_is_rb_for_the_adjoint_action():
    H = heisenberg()
    assert verify_rb_lie({i: b(i, -1) for i in range(3)}, LieAction.adjoint(H)).passed


def test_zero_operator_gives_zero_post_product(aff2, ad2):
    table, rep = induced_postlie({}, ad2)
    assert all(not v for v in table.values())
    assert rep.passed


def test_induced_post_lie_on_affine_algebra(ad2):
    table, rep = induced_postlie(MINUS_P2, ad2)
    assert rep.passed
    # e2 ▷ e1 = [−e2, e1] = e1 and everything else vanishes
    assert table[(E2, E1)] == b(E1)
    assert not table[(E1, E1)] and not table[(E1, E2)] and not table[(E2, E2)]


def test_subadjacent_jacobi_on_heisenberg():
    H = heisenberg()
    _, rep = induced_postlie({i: b(i, -1) for i in range(3)}, LieAction.adjoint(H))
    assert rep["subadjacent Jacobi"].passed


# truncated enveloping algebras ------------------------------------------------


def test_abelian_truncation_is_commutative():
    U = TruncUEA(abelian(2), 2)
    assert U.mul(U.gen(1), U.gen(0)) == b((0, 1))


def test_one_straightening_step(aff2):
    U = TruncUEA(aff2, 2)
    assert U.mul(U.gen(E2), U.gen(E1)) == b((E1, E2)) - b((E1,))


def test_coproduct_of_e1e2(aff2):
    U = TruncUEA(aff2, 2)
    expected = LinComb({((0, 1), ()): 1, ((0,), (1,)): 1, ((1,), (0,)): 1, ((), (0, 1)): 1})
    assert U.delta(b((0, 1))) == expected


def test_antipode_of_e1e2(aff2):
    U = TruncUEA(aff2, 2)
    assert U.S(b((E1, E2))) == b((E1, E2)) - b((E1,))


def test_truncation_is_enforced(aff2):
    U = TruncUEA(aff2, 2)
    with pytest.raises(CutoffExceeded):
        U.mul(b((0, 1)), U.gen(0))


@pytest.mark.parametrize("L", [abelian(2), nonabelian2(), heisenberg()])
def test_uea_hopf_axioms(L):
    assert verify_uea(TruncUEA(L, 3)).passed


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 2), max_size=3), st.lists(st.integers(0, 2), max_size=3))
def test_straightening_is_multiplicative(w1, w2):
    U = TruncUEA(heisenberg(), 6)
    assert U.mul(U.straighten(tuple(w1)), U.straighten(tuple(w2))) == U.straighten(tuple(w1 + w2))


def test_extended_action_small_cases(ad2):
    A = extend_action(ad2, 3)
    Uh = A.Uh
    x = b((E2,))
    assert A(x, Uh.one()) == LinComb()
    assert A(x, b((E1,))) == Uh.embed(ad2(b(E2), b(E1)))
    lhs = A(x, b((E1, E2)))
    rhs = Uh.mul(Uh.embed(ad2(b(E2), b(E1))), b((E2,))) + Uh.mul(b((E1,)), Uh.embed(ad2(b(E2), b(E2))))
    assert lhs == rhs


def test_extended_action_laws(ad2):
    assert verify_extended_action(extend_action(ad2, 3)).passed


def test_degree_two_lift_unfolds_once(ad2):
    ext = ExtendedRB(MINUS_P2, ad2, 3)
    Ug = ext.Ug
    T = lambda y: ext.T(b(y))
    for y1 in range(2):
        for y2 in range(y1, 2):
            expected = Ug.mul(Ug.embed(T(y1)), Ug.embed(T(y2))) - Ug.embed(ext.T(ad2(T(y1), b(y2))))
            assert ext(b((y1, y2))) == expected


def test_lift_satisfies_hopf_identity(ad2):
    _, rep = extend_rb(MINUS_P2, ad2, 3)
    assert rep.passed, rep.render()


def test_post_products_coincide(ad2):
    assert posthopf_consistency_check(MINUS_P2, ad2, 3).passed


def test_flipped_recursion_sign_is_caught(ad2):
    # with T = -P1 the correction term x1 ▷ (x2⋯xr) is nonzero on e1·e2
    T = {E1: b(E1, -1)}
    assert posthopf_consistency_check(T, ad2, 3).passed
    rep = posthopf_consistency_check(T, ad2, 3, sign=1)
    assert not rep.passed
    assert rep.checks[0].witness == "u=e1·e2, v=e2: lhs = -e1 ; rhs = e1"


def test_sign_is_invisible_when_the_correction_vanishes(ad2):
    # for T = -P2 only e2 ▷ e1 is nonzero, so x1 ▷ (x2⋯xr) = 0 on sorted monomials
    assert posthopf_consistency_check(MINUS_P2, ad2, 3, sign=1).passed


def test_graph_dimensions_trivial_case():
    A = abelian(2)
    assert graph_envelope_check({}, LieAction.zero(A, A), 3).passed


def test_graph_dimensions_affine(ad2):
    rep = graph_envelope_check(MINUS_P2, ad2, 3)
    assert rep.passed
    assert rep["filtered dimension d=3: Gr_T̄ vs U(Gr_T)"].passed


def test_broken_operator_stops_at_the_subalgebra_check(ad2):
    rep = graph_envelope_check({E1: b(E1), E2: b(E2)}, ad2, 3)
    assert not rep.passed
    assert [c.name for c in rep.checks] == ["Gr_T is a Lie subalgebra of h⋊g"]


@pytest.mark.parametrize("name, ok", [
    ("aff2_minus_p2.json", True),
    ("heisenberg_minus_id.json", True),
    ("abelian2_id.json", True),
    ("bad_aff2_identity.json", False),
])
def test_lie_fixture_files(data_dir, name, ok):
    d = load_lie_rb(data_dir / name)
    assert liepbw_pipeline(d["T"], d["phi"], d["degree"], d["name"]).passed is ok
