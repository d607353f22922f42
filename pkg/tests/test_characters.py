import pytest

from pencilgit import characters as ch

FIELDS = ["q(sqrt:-1)", "fp:13"]


@pytest.mark.parametrize("spec", FIELDS)
@pytest.mark.parametrize("name", ["S4", "A4", "D8", "D4", "C3"])
def test_tables_are_orthogonal(name, spec):
    G = ch.group_data(name, spec)
    G.check_orthogonality()
    assert sum(c.size for c in G.classes) == G.order


@pytest.mark.parametrize("spec", FIELDS)
def test_restrictions_to_d8(spec):
    D8 = ch.group_data("D8", spec)
    V = ch.v_character(D8)
    assert V.as_ints() == (2, 2, 0, 2, 0)
    assert ch.decompose(V) == {"triv": 1, "k_<r>": 0, "k_D4": 1, "k_third": 0, "k2": 0}
    ad = ch.adjoint_character(D8)
    assert ad.as_ints() == (3, -1, 1, -1, -1)
    assert ch.decompose(ad) == {"triv": 0, "k_<r>": 1, "k_D4": 0, "k_third": 0, "k2": 1}


def test_adjoint_values():
    from pencilgit.groups import ProjMatrix

    D8 = ch.group_data("D8")
    K = D8.group.field
    assert ch.adjoint_value(ProjMatrix.identity(K)) == 3
    assert ch.adjoint_value(ProjMatrix.of(K, ((1, 0), (0, -1)))) == -1


@pytest.mark.parametrize("spec", FIELDS)
@pytest.mark.parametrize("sub", ["D8", "D4", "A4"])
def test_decompose_recompose(spec, sub):
    S4 = ch.group_data("S4", spec)
    H = ch.group_data(sub, spec)
    for name, _ in S4.irreducibles:
        chi = ch.restrict(S4.character(name), H)
        assert ch.recompose(ch.decompose(chi), H) == chi


def test_s4_adjoint_is_std_times_sign():
    S4 = ch.group_data("S4")
    assert ch.decompose(ch.adjoint_character(S4))["std*sign"] == 1


def test_trivial_and_non_characters():
    D8 = ch.group_data("D8")
    assert ch.decompose(ch.trivial_character(D8))["triv"] == 1
    import sympy

    half = ch.ClassFunction(D8, (1, 1, 1, 1, sympy.Rational(1, 2)))
    with pytest.raises(ch.NotACharacter):
        ch.decompose(half)


def test_not_a_subgroup():
    S4 = ch.group_data("S4", "fp:13")
    C3 = ch.group_data("C3", "fp:13")
    D4 = ch.group_data("D4", "fp:13")
    with pytest.raises(ch.NotASubgroup):
        ch.restrict(D4.character("triv"), C3)
    assert ch.restrict(S4.character("sign"), D4).as_ints() == (1, 1, 1, 1)
