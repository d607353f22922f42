from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import F13, Q, pencils, small_rationals
from pencilgit.fields import (
    CharTwoOrThree,
    NotPrime,
    ParseError,
    SquareDiscriminant,
    field_from_spec,
    sqrt_in_field,
)
from pencilgit.forms import (
    BinaryForm,
    BothZero,
    DegreeMismatch,
    LinearlyDependent,
    ProjectivePoint,
    WrongDegree,
    ZeroForm,
    cube_members,
    gcd_forms,
    is_perfect_cube,
    jacobian,
    make_pencil,
    pencil_from_coeffs,
    pencil_from_plucker,
    plucker_quadric,
    wronskian_point,
)


def form(field, *c):
    return BinaryForm.of(field, c)


class TestFields:
    def test_prime_field(self):
        assert field_from_spec("fp:13").order == 13

    def test_not_prime(self):
        with pytest.raises(NotPrime):
            field_from_spec("fp:12")

    def test_small_characteristic_rejected(self):
        for p in (2, 3):
            with pytest.raises(CharTwoOrThree):
                field_from_spec("fp:%d" % p)

    def test_quadratic_extension_order(self):
        assert field_from_spec("fp:13(sqrt:2)").order == 169

    def test_square_discriminant_rejected(self):
        with pytest.raises(SquareDiscriminant):
            field_from_spec("fp:13(sqrt:3)")  # 4^2 = 3 mod 13
        with pytest.raises(SquareDiscriminant):
            field_from_spec("q(sqrt:4)")

    def test_bad_spec(self):
        with pytest.raises(ParseError):
            field_from_spec("gf(13)")

    def test_square_roots(self):
        assert sqrt_in_field(F13(-3), F13) == F13(6)
        assert sqrt_in_field(F13(-1), F13) == F13(5)
        assert sqrt_in_field(Fraction(2), Q) is None
        assert sqrt_in_field(Fraction(9, 4), Q) in (Fraction(3, 2), Fraction(-3, 2))

    @given(small_rationals)
    def test_sqrt_of_square_over_q(self, x):
        r = sqrt_in_field(x * x, Q)
        assert r is not None and r * r == x * x

    @given(st.integers(1, 12), st.integers(1, 12))
    def test_prime_field_is_a_field(self, a, b):
        x, y = F13(a), F13(b)
        assert (x / y) * y == x
        assert x * (y + F13(1)) == x * y + x

    def test_quadratic_extension_arithmetic(self):
        K = field_from_spec("q(sqrt:-1)")
        i = K.sqrt(K(-1))
        assert i * i == K(-1)
        z = K.make(Fraction(1, 2), 3)
        assert z * z.inverse() == K.one


class TestForms:
    def test_gcd_examples(self):
        assert gcd_forms(form(Q, 1, 0, 0, 0), form(Q, 0, 1, 0, 0)) == form(Q, 1, 0, 0)
        assert gcd_forms(form(Q, 0, 1, 0, 0), form(Q, 0, 0, 1, 0)) == form(Q, 0, 1, 0)
        assert gcd_forms(form(Q, 1, 0, 2, 0), form(Q, 0, 2, 0, 1)).degree == 0

    def test_gcd_both_zero(self):
        with pytest.raises(BothZero):
            gcd_forms(form(Q, 0, 0, 0, 0), form(Q, 0, 0, 0, 0))

    def test_jacobian_examples(self):
        assert jacobian(form(Q, 1, 0, 0, 0), form(Q, 0, 0, 0, 1)) == form(Q, 0, 0, 9, 0, 0)
        f = form(Q, 1, 2, 3, 4)
        assert jacobian(f, f).is_zero

    def test_jacobian_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            jacobian(form(Q, 1, 0, 0, 0), form(Q, 1, 0))

    def test_jacobian_of_wall_pencil(self):
        # raw coefficients (c0, 4c1, 6c2, 4c3, c4) = (2, 0, -1, 0, 2), i.e. (rho : 0 : 3 - rho^2 : 0 : rho)
        jac = jacobian(form(Q, 1, 0, 2, 0), form(Q, 0, 2, 0, 1))
        assert ProjectivePoint(Q, jac.coeffs) == ProjectivePoint(Q, (2, 0, -1, 0, 2))

    def test_perfect_cubes(self):
        assert is_perfect_cube(form(Q, 1, 0, 0, 0))
        assert not is_perfect_cube(form(Q, 0, 1, 0, 0))
        assert is_perfect_cube(form(Q, 1, 3, 3, 1))
        with pytest.raises(WrongDegree):
            is_perfect_cube(form(Q, 1, 0, 0))
        with pytest.raises(ZeroForm):
            is_perfect_cube(form(Q, 0, 0, 0, 0))

    @given(small_rationals, small_rationals)
    def test_cubes_of_linear_forms(self, a, b):
        if a or b:
            lin = form(Q, a, b)
            assert is_perfect_cube(lin * lin * lin)


class TestPencils:
    def test_linearly_dependent(self):
        with pytest.raises(LinearlyDependent):
            make_pencil(form(Q, 1, 0, 0, 0), form(Q, 1, 0, 0, 0))

    def test_plucker_examples(self):
        assert pencil_from_coeffs(Q, [1, 0, 0, 0], [0, 0, 0, 1]).plucker() == (0, 0, 1, 0, 0, 0)
        q = pencil_from_coeffs(Q, [1, 0, 2, 0], [0, 2, 0, 1]).plucker()
        assert ProjectivePoint(Q, q) == ProjectivePoint(Q, (2, 0, 1, -4, 0, 2))

    def test_wronskian_examples(self):
        assert wronskian_point(pencil_from_coeffs(Q, [1, 0, 0, 0], [0, 1, 0, 0])) == ProjectivePoint(Q, (1, 0, 0, 0, 0))
        assert wronskian_point(pencil_from_coeffs(Q, [1, 0, 0, 0], [0, 0, 0, 1])) == ProjectivePoint(Q, (0, 0, 1, 0, 0))

    @given(small_rationals.filter(lambda r: r != 0))
    def test_wronskian_of_wall_pencils(self, r):
        p = pencil_from_coeffs(Q, [1, 0, r, 0], [0, r, 0, 1])
        assert wronskian_point(p) == ProjectivePoint(Q, (r, 0, 3 - r * r, 0, r))

    def test_cube_members(self):
        assert cube_members(pencil_from_coeffs(Q, [1, 0, 0, 0], [0, 0, 0, 1])).count == 2
        assert cube_members(pencil_from_coeffs(Q, [1, 0, 0, 0], [0, 0, 1, 1])).count == 1
        assert cube_members(pencil_from_coeffs(Q, [0, 1, 0, 0], [0, 0, 1, 0])).count == 0

    @given(pencils(F13))
    def test_plucker_round_trip(self, p):
        q = p.plucker()
        assert plucker_quadric(q) == 0
        assert pencil_from_plucker(F13, q) == p

    @given(pencils(Q))
    def test_pencil_is_basis_independent(self, p):
        f, g = p.generators
        assert make_pencil(f + g, g.scale(Fraction(-3, 2))) == p

    @given(pencils(Q))
    def test_wronskian_is_jacobian(self, p):
        f, g = p.generators
        assert wronskian_point(p) == ProjectivePoint(Q, jacobian(f, g).coeffs)
