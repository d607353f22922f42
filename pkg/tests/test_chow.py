import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pencilgit import chow


def piece(name, d):
    p = chow.graded_piece(chow.builtin(name), d)
    return p.free_rank, p.invariant_factors


def test_builtin_final():
    P = chow.builtin("FINAL")
    assert dict(P.gens) == {"alpha": 1, "zeta1": 2, "zeta": 1}
    assert len(P.relations) == 4


def test_unknown_name():
    with pytest.raises(chow.UnknownName):
        chow.builtin("NOPE")


def test_graded_pieces():
    assert chow.graded_piece(chow.builtin("FINAL"), 1).describe() == "Z/2 + Z/3"
    assert chow.graded_piece(chow.builtin("FINAL"), 1).elementary_divisors == (2, 3)
    assert piece("FINAL", 2) == (0, (12,))
    assert piece("FINAL", 3) == (0, (6,))
    pgl3 = chow.graded_piece(chow.builtin("PGL2_PT"), 3)
    assert pgl3.invariant_factors == (2,)
    assert chow.builtin("PGL2_PT").format(pgl3.generators[0]) == "c3"
    for name in chow.BUILTIN_NAMES:
        assert piece(name, 0) == (1, ())


def test_family_matters():
    S4 = chow.builtin("S4_PT")
    assert chow.in_ideal(S4, "alpha*nu - alpha**2*zeta1 - alpha**4")
    without = chow.GradedPresentation("no family", S4.gens, S4.relations)
    assert not chow.in_ideal(without, "alpha*nu - alpha**2*zeta1 - alpha**4")


def test_ideal_membership():
    D8 = chow.builtin("D8_COHOM")
    Dq = chow.quotient(D8, ["3*beta_d"])
    assert chow.in_ideal(Dq, "beta_d")
    assert chow.in_ideal(Dq, "alpha_d**2")
    assert chow.in_ideal(Dq, "nu_d**2")
    assert not chow.in_ideal(D8, "beta_d")


def test_not_homogeneous():
    with pytest.raises(chow.NotHomogeneous):
        chow.in_ideal(chow.builtin("FINAL"), "alpha + zeta1")


def test_maps():
    for name in chow.BUILTIN_MAPS:
        assert chow.verify_map(chow.builtin_map(name))
    with pytest.raises(chow.DegreeMismatch):
        chow.verify_map(
            chow.RingMap.build(chow.builtin("PGL2_PT"), chow.builtin("FINAL"), {"c2": "alpha", "c3": "alpha*zeta1"})
        )


def test_broken_map_is_detected():
    m = chow.RingMap.build(chow.builtin("PGL2_PT"), chow.builtin("FINAL"), {"c2": "zeta1", "c3": "zeta**3"})
    assert not chow.verify_map(m)
    assert m.failing_relations() == ["2*c3"]


def test_pushforward():
    S = chow.builtin("S4_P1")
    assert chow.pushforward_projection(S, "zeta", 3) == S.parse("3*zeta")
    assert chow.pushforward_projection(S, 1, 3) == S.parse(3)
    assert chow.pushforward_projection(S, "c1V", 3) == S.parse("3*c1V")


S4P1 = chow.builtin("S4_P1")
deg2 = chow._monomials(S4P1.degrees, 2)
coeffs = st.lists(st.integers(-5, 5), min_size=len(deg2), max_size=len(deg2))


def element(cs):
    out = {}
    for c, m in zip(cs, deg2):
        out = chow.poly_add(out, {m: 1}, c)
    return out


@given(coeffs, coeffs, st.integers(-4, 4))
def test_pushforward_is_linear(a, b, c):
    x, y = element(a), element(b)
    push = lambda v: chow.pushforward_projection(S4P1, v, 3)
    lhs = push(chow.poly_add(x, y, c))
    rhs = chow.poly_add(push(x), push(y), c)
    assert chow.equal_in_ring(S4P1, lhs, rhs)
    z = S4P1.parse("zeta")
    assert chow.equal_in_ring(S4P1, push(chow.poly_mul(z, x)), chow.poly_mul(z, push(x)))


def test_solve_by_pullbacks():
    src = chow.builtin("D8_P1_SUB")
    f1, f2, fg = (chow.builtin_map(n) for n in ("f1*", "f2*", "forget"))
    q1 = chow.solve_by_pullbacks(src, 1, ["xi", "beta_d"], [(f1, "-beta_d"), (f2, 0), (fg, "h")])
    q2 = chow.solve_by_pullbacks(src, 1, ["xi", "beta_d"], [(f2, "beta_d"), (f1, 0), (fg, "h")])
    assert src.format(q1) == "xi"
    assert src.format(q2) == "xi + beta_d"
    with pytest.raises(chow.NonUnique):
        chow.solve_by_pullbacks(src, 1, ["xi", "beta_d"], [(f1, "-beta_d"), (f2, 0)])
    with pytest.raises(chow.NoSolution):
        chow.solve_by_pullbacks(src, 1, ["xi", "beta_d"], [(fg, "h"), (fg, 0)])


def test_excision_pipeline():
    S = chow.builtin("S4_P1")
    minus = chow.quotient(S, ["3*zeta", "3*c1V"])
    assert chow.pieces_equal(minus, chow.builtin("S4_P1_MINUS_F"), 8)
    final = chow.quotient(minus, ["c1V", "c2V - eta", "alpha**2", "nu"])
    assert chow.pieces_equal(final, chow.builtin("FINAL"), 8)


@pytest.mark.parametrize("name", ["FINAL", "PGL2_PT", "S4_PT", "D8_COHOM", "S4_P1"])
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_pieces_ignore_relation_order_and_duplicates(name, seed):
    P = chow.builtin(name)
    rels = list(P.relations) + list(P.relations[: 1 + seed])
    random.Random(seed).shuffle(rels)
    Q = chow.GradedPresentation(P.name + "'", P.gens, tuple(rels), P.families, P.grading)
    assert chow.pieces_equal(P, Q, 6)


def test_parse_presentation():
    P = chow.parse_presentation("gen x 1; gen y 2; rel 2*x; rel x**2 - y;", "toy")
    assert chow.graded_piece(P, 1).describe() == "Z/2"
    assert chow.graded_piece(P, 2).describe() == "Z/2"  # x^2 = y and 2 x^2 = 0
    assert chow.in_ideal(P, "2*y")
    with pytest.raises(chow.ParseError):
        chow.parse_presentation("gen x 0;")
    with pytest.raises(chow.ParseError):
        chow.parse_presentation("generator x 1;")
