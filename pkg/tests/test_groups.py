import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import F13, Q, QI, pencils
from pencilgit import atlas
from pencilgit.fields import field_from_spec
from pencilgit.forms import pencil_from_coeffs
from pencilgit.groups import (
    InfiniteField,
    MissingRootOfUnity,
    ProjMatrix,
    SingularMatrix,
    act,
    act_plucker,
    enumerate_pgl2,
    normalizer,
    pgl2_elements,
    stabilizer,
    subgroup,
    trivial_subgroup,
)
from pencilgit.invariants import classify_stability, invariants_of_plucker, newstead_point, StabilityClass

ELEMENTS = pgl2_elements(F13)
matrices = st.sampled_from(ELEMENTS)


def test_projective_normalisation():
    assert ProjMatrix.of(Q, ((2, 4), (6, 10))) == ProjMatrix.of(Q, ((1, 2), (3, 5)))
    with pytest.raises(SingularMatrix):
        ProjMatrix.of(Q, ((1, 2), (2, 4)))


def test_enumeration_counts():
    assert len(ELEMENTS) == 2184
    assert len(enumerate_pgl2(field_from_spec("fp:5"))) == 120
    with pytest.raises(InfiniteField):
        enumerate_pgl2(Q)


@given(matrices, matrices, pencils(F13))
def test_left_action(A, B, p):
    assert act(A * B, p) == act(A, act(B, p))
    assert act(ProjMatrix.identity(F13), p) == p


@given(matrices, pencils(F13))
def test_invariants_have_determinant_weight(A, p):
    base = invariants_of_plucker(p.plucker())
    moved = invariants_of_plucker(act_plucker(A.rows, p))
    d = A.det
    assert moved.Iprime == base.Iprime / d**3
    assert moved.J == base.J / d**9


@given(matrices, pencils(F13))
def test_invariants_exact_at_determinant_one(A, p):
    root = F13.sqrt(A.det)
    if root is None:
        return
    rows = tuple(tuple(x / root for x in r) for r in A.rows)
    assert invariants_of_plucker(act_plucker(rows, p)) == invariants_of_plucker(p.plucker())


@given(matrices, pencils(F13))
def test_quotient_point_and_stability_are_invariant(A, p):
    assert classify_stability(act(A, p)) is classify_stability(p)
    if classify_stability(p) is not StabilityClass.UNSTABLE:
        assert newstead_point(act(A, p)) == newstead_point(p)


@pytest.mark.parametrize("field", [F13, QI], ids=["fp:13", "q(sqrt:-1)"])
def test_named_subgroups(field):
    orders = {name: subgroup(name, field).order for name in ("D4", "A4", "S4", "D8")}
    assert orders == {"D4": 4, "A4": 12, "S4": 24, "D8": 8}
    S4 = subgroup("S4", field)
    assert subgroup("D4", field).as_set() <= S4.as_set()
    assert subgroup("A4", field).as_set() <= S4.as_set()
    assert S4.is_closed()


def test_cyclic_and_dihedral():
    assert subgroup("D4", Q).order == 4
    assert subgroup("C_4", F13).order == 4
    assert subgroup("D_8", F13).order == 8
    with pytest.raises(MissingRootOfUnity):
        subgroup("C_5", F13)


def test_identity_and_d4_fix_wall_pencils():
    p = atlas.wall_pencil(atlas.WallParam.of(F13, 2))
    assert act(ProjMatrix.identity(F13), p) == p
    assert act(ProjMatrix.of(F13, ((1, 0), (0, -1))), p) == p


def test_stabilizers():
    p2 = pencil_from_coeffs(F13, [1, 0, 2, 0], [0, 2, 0, 1])
    st2 = stabilizer(p2)
    assert st2.order == 4 and st2.profile == {1: 1, 2: 3}
    p6 = atlas.wall_pencil(atlas.WallParam.of(F13, 6))
    assert stabilizer(p6).order == 12
    assert stabilizer(pencil_from_coeffs(F13, [1, 0, 0, 0], [0, 1, 0, 0])).order == 156
    with pytest.raises(InfiniteField):
        stabilizer(pencil_from_coeffs(Q, [1, 0, 0, 0], [0, 1, 0, 0]))


def test_normalizers():
    S4 = subgroup("S4", F13)
    assert normalizer(subgroup("D4", F13)).as_set() == S4.as_set()
    p6 = atlas.wall_pencil(atlas.WallParam.of(F13, 6))
    assert normalizer(stabilizer(p6).group).order == 24
    assert normalizer(trivial_subgroup(F13)).order == 2184


@settings(max_examples=5)
@given(pencils(F13))
def test_fast_stabilizer_matches_generic_scan(p):
    from pencilgit.groups import act_pencil

    generic = {A for A in ELEMENTS if act_pencil(A, p) == p}
    assert stabilizer(p).group.as_set() == generic
