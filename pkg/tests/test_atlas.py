from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import F13, Q, QI, small_rationals
from pencilgit import atlas
from pencilgit.atlas import WallParam
from pencilgit.fields import ParseError
from pencilgit.forms import NotOnPluckerQuadric, ProjectivePoint, pencil_from_coeffs
from pencilgit.groups import act, pgl2_elements, sigma2, sigma3, stabilizer, subgroup
from pencilgit.invariants import newstead_point

P1_F13 = atlas.projective_line(F13)
STABLE_F13 = [w for w in P1_F13 if not w.in_fwall]
S4_F13 = subgroup("S4", F13).elements
S4_QI = subgroup("S4", QI).elements


def w13(x):
    return WallParam.infinity(F13) if x is None else WallParam.of(F13, x)


def names(ws):
    return {str(w) for w in ws}


class TestWallPencils:
    def test_special_parameters(self):
        assert atlas.wall_pencil(WallParam.of(Q, 0)) == pencil_from_coeffs(Q, [1, 0, 0, 0], [0, 0, 0, 1])
        assert atlas.wall_pencil(WallParam.infinity(Q)) == pencil_from_coeffs(Q, [0, 0, 1, 0], [0, 1, 0, 0])
        assert atlas.wall_pencil(WallParam.of(Q, 2)) == pencil_from_coeffs(Q, [1, 0, 2, 0], [0, 2, 0, 1])

    def test_closed_forms(self):
        ci = atlas.wall_closed_invariants
        assert (ci(WallParam.of(Q, 2)).Iprime, ci(WallParam.of(Q, 2)).J) == (7, Fraction(-143, 216))
        assert (ci(WallParam.of(Q, 0)).Iprime, ci(WallParam.of(Q, 0)).J) == (3, Fraction(-1, 8))
        assert (ci(WallParam.of(Q, 1)).Iprime, ci(WallParam.of(Q, 1)).J) == (4, Fraction(8, 27))
        with pytest.raises(atlas.InfinityParam):
            ci(WallParam.infinity(Q))

    @given(small_rationals)
    def test_closed_forms_agree_with_quotient_point(self, r):
        w = WallParam.of(Q, r)
        inv = atlas.wall_closed_invariants(w)
        if inv.Iprime or inv.J:
            assert newstead_point(atlas.wall_pencil(w)) == ProjectivePoint(Q, (inv.Iprime**3, inv.J))

    def test_fwall(self):
        assert names(atlas.fwall(F13)) == {"0", "1", "3", "10", "12", "inf"}
        assert names(STABLE_F13) == {"2", "4", "5", "6", "7", "8", "9", "11"}


class TestS4OnRho:
    def test_formula_is_realised_by_a_coset(self):
        s = sigma3(QI).inverse()
        assert atlas.s4_on_rho(s, WallParam.of(QI, 2)) == WallParam.of(QI, Fraction(-1, 3))
        assert atlas.s4_on_rho(s, WallParam.infinity(QI)) == WallParam.of(QI, 1)
        assert atlas.s4_on_rho(sigma2(QI), WallParam.of(QI, 3)) == WallParam.of(QI, 0)

    def test_minus_rho_coset(self):
        s = sigma3(QI).inverse() * sigma2(QI)
        p = atlas.wall_pencil(WallParam.of(QI, 5))
        assert act(s, p) == atlas.wall_pencil(WallParam.of(QI, -5))

    def test_not_in_s4(self):
        A = next(A for A in pgl2_elements(F13) if A not in subgroup("S4", F13))
        with pytest.raises(atlas.NotInS4):
            atlas.s4_on_rho(A, w13(2))

    def test_orbits(self):
        assert names(atlas.s4_orbit_rho(w13(2))) == {"2", "11", "5", "8", "4", "9"}
        assert names(atlas.s4_orbit_rho(w13(6))) == {"6", "7"}
        zero = atlas.s4_orbit_rho(WallParam.of(Q, 0))
        one = atlas.s4_orbit_rho(WallParam.of(Q, 1))
        assert names(zero) == {"0", "3", "-3"}
        assert names(zero | one) == {"0", "1", "-1", "3", "-3", "inf"}

    @given(st.sampled_from(S4_F13), st.sampled_from(P1_F13))
    def test_equivariance_over_f13(self, s, w):
        if not w.in_fwall:
            assert act(s, atlas.wall_pencil(w)) == atlas.wall_pencil(atlas.s4_on_rho(s, w))

    @given(st.sampled_from(S4_QI), small_rationals)
    def test_equivariance_over_gaussian_rationals(self, s, r):
        w = WallParam.of(QI, r)
        if not w.in_fwall:
            assert act(s, atlas.wall_pencil(w)) == atlas.wall_pencil(atlas.s4_on_rho(s, w))

    @given(st.sampled_from(S4_F13), st.sampled_from(S4_F13), st.sampled_from(P1_F13))
    def test_group_law(self, s, t, w):
        assert atlas.s4_on_rho(s * t, w) == atlas.s4_on_rho(s, atlas.s4_on_rho(t, w))

    @given(st.sampled_from(S4_F13))
    def test_fwall_is_preserved(self, s):
        fw = atlas.fwall(F13)
        assert {atlas.s4_on_rho(s, w) for w in fw} == set(fw)


class TestFibers:
    def test_invariant_fiber_over_f13(self):
        x = newstead_point(atlas.wall_pencil(w13(2)))
        fib = atlas.invariant_fiber_rho(x)
        assert len(fib) == 6 and names(fib) == {"2", "11", "5", "8", "4", "9"}

    def test_invariant_fiber_over_q(self):
        assert names(atlas.invariant_fiber_rho(ProjectivePoint(Q, (74088, -143)))) == {
            "2", "-2", "5", "-5", "1/3", "-1/3"}
        minus = atlas.invariant_fiber_rho(ProjectivePoint(Q, (-216, 1)))
        assert sorted(map(str, minus)) == ["-3", "-3", "0", "0", "3", "3"]
        plus = atlas.invariant_fiber_rho(ProjectivePoint(Q, (216, 1)))
        assert sorted(map(str, plus)) == ["-1", "-1", "1", "1", "inf", "inf"]

    def test_irrational_fiber(self):
        # I' = 0 exactly when rho^2 = -3, which has no rational solution
        with pytest.raises(atlas.NotSplit):
            atlas.invariant_fiber_rho(ProjectivePoint(Q, (0, 1)))

    @pytest.mark.parametrize("rho", [2, 6])
    def test_phi_fiber_factorisation(self, rho):
        p = atlas.wall_pencil(w13(rho))
        fib = atlas.phi_fiber(p)
        assert len(fib) == 24
        assert len(fib) == len(atlas.s4_orbit_rho(w13(rho))) * stabilizer(p).order
        assert {r for _, r in fib} == atlas.s4_orbit_rho(w13(rho))

    def test_phi_fiber_translates(self):
        p = atlas.wall_pencil(w13(2))
        A = pgl2_elements(F13)[777]
        fib = atlas.phi_fiber(p)
        moved = atlas.phi_fiber(act(A, p))
        assert {(A * B, r) for B, r in fib} == set(moved)

    def test_wall_normal_form(self):
        p = act(pgl2_elements(F13)[1234], atlas.wall_pencil(w13(2)))
        B, rho = atlas.wall_normal_form(p)
        assert str(rho) in {"2", "11", "5", "8", "4", "9"}
        assert act(B, atlas.wall_pencil(rho)) == p
        assert str(atlas.wall_normal_form(atlas.wall_pencil(w13(6)))[1]) in {"6", "7"}
        with pytest.raises(atlas.NotStable):
            atlas.wall_normal_form(atlas.wall_pencil(w13(0)))


class TestOrbitAtlas:
    @pytest.mark.parametrize("label", atlas.NONSTABLE_LABELS)
    @pytest.mark.parametrize("field", [F13, Q], ids=["fp:13", "q"])
    def test_representatives_round_trip(self, label, field):
        assert str(atlas.classify_orbit(atlas.representative(label, field))) == label

    def test_extra_z3_1_example(self):
        p = pencil_from_coeffs(Q, [0, 0, 1, 0], [1, 1, 0, 0])
        assert str(atlas.classify_orbit(p)) == "Z3_1"

    def test_stable_label(self):
        assert str(atlas.classify_orbit(atlas.wall_pencil(WallParam.of(Q, 2)))) == "STABLE(74088:-143)"

    @given(st.sampled_from(atlas.NONSTABLE_LABELS), st.sampled_from(pgl2_elements(F13)))
    def test_label_is_orbit_invariant(self, label, A):
        assert str(atlas.classify_orbit(act(A, atlas.representative(label, F13)))) == label

    def test_isotropy_counts(self):
        for label in atlas.NONSTABLE_LABELS:
            _, count = atlas.ISOTROPY[label]
            assert stabilizer(atlas.representative(label, F13)).order == count(13)

    def test_closure_predicates(self):
        rep = lambda lab: atlas.representative(lab, Q).plucker()
        assert atlas.closure_predicates("Z2_2", rep("Z2_2"))
        assert atlas.closure_predicates("Z2_2", rep("Z1"))
        assert not atlas.closure_predicates("Z2_2", atlas.wall_pencil(w13(2)).plucker())
        assert not atlas.closure_predicates("Z2_1", pencil_from_coeffs(Q, [0, 0, 1, 0], [1, 1, 0, 0]).plucker())
        with pytest.raises(NotOnPluckerQuadric):
            atlas.closure_predicates("Z2_2", (1, 0, 0, 0, 0, 1))

    def test_listed_relations_do_not_cut_out_the_closure(self):
        # both Z2_2 relations vanish on the Z3_2 representative and on a stable family
        assert atlas.closure_predicates("Z2_2", atlas.representative("Z3_2", Q).plucker())
        assert atlas.closure_predicates("Z2_2", pencil_from_coeffs(Q, [1, 0, 0, 2], [0, 0, 1, -3]).plucker())


class TestAnharmonic:
    def test_lambda(self):
        assert atlas.anharmonic_lambda(WallParam.of(Q, 2)) == ProjectivePoint.affine(Q, Fraction(3, 8))
        with pytest.raises(atlas.PoleParam):
            atlas.anharmonic_lambda(WallParam.of(Q, 0))

    @given(small_rationals)
    def test_orbit_correspondence(self, r):
        w = WallParam.of(Q, r)
        if w.in_fwall:
            return
        lam = atlas.anharmonic_lambda(w)
        assert atlas.anharmonic_orbit(lam) == {atlas.anharmonic_lambda(x) for x in atlas.s4_orbit_rho(w)}


class TestParsing:
    def test_pencil_syntax(self):
        p = atlas.parse_pencil("f=[1,0,2,0];g=[0,2,0,1]", Q)
        assert p == atlas.parse_pencil("wall:2", Q) == atlas.parse_pencil("plucker=[2,0,1,-4,0,2]", Q)
        assert atlas.parse_pencil("wall:inf", Q) == atlas.wall_pencil(WallParam.infinity(Q))

    @pytest.mark.parametrize("text", ["f=[1,2];g=[0,1,0,0]", "rep:Z9", "wall:x", "g=[1,0,0,0]", "f=[1,0,0,0];g=[2,0,0,0]"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            atlas.parse_pencil(text, Q)
