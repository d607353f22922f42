import sympy
from hypothesis import given
from hypothesis import strategies as st
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors

from pencilgit.lattice import HermiteLattice, cokernel, invariant_factors, mat_mul, smith_normal_form, solve_integer

entries = st.integers(-12, 12)


@st.composite
def int_matrices(draw, max_rows=6, max_cols=6):
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    return [draw(st.lists(entries, min_size=n, max_size=n)) for _ in range(m)]


def oracle(A):
    M = sympy.Matrix(A)
    return [abs(int(x)) for x in sympy_invariant_factors(M, domain=sympy.ZZ) if x != 0]


@given(int_matrices())
def test_smith_form_matches_sympy(A):
    assert invariant_factors(A) == oracle(A)


@given(int_matrices())
def test_smith_transforms(A):
    S = smith_normal_form(A)
    D = mat_mul(mat_mul(S.U, A), S.V)
    for i, row in enumerate(D):
        for j, x in enumerate(row):
            assert x == (S.diagonal[i] if i == j and i < S.rank else 0)
    assert all(b % a == 0 for a, b in zip(S.diagonal, S.diagonal[1:]))
    n = len(A[0])
    assert mat_mul(S.V, S.Vinv) == [[int(i == j) for j in range(n)] for i in range(n)]


@given(int_matrices(), st.data())
def test_solve_integer(A, data):
    x = data.draw(st.lists(entries, min_size=len(A[0]), max_size=len(A[0])))
    b = [sum(a * y for a, y in zip(row, x)) for row in A]
    sol = solve_integer(A, b)
    assert sol is not None
    assert [sum(a * y for a, y in zip(row, sol.particular)) for row in A] == b
    for k in sol.kernel:
        assert all(sum(a * y for a, y in zip(row, k)) == 0 for row in A)


def test_unsolvable():
    assert solve_integer([[2, 0], [0, 3]], [1, 0]) is None


@given(int_matrices())
def test_hermite_lattice_membership(A):
    L = HermiteLattice(len(A[0]))
    for row in A:
        L.insert(row)
    for row in A:
        assert L.contains(row)
    combo = [sum(c * r[j] for c, r in zip(range(1, len(A) + 1), A)) for j in range(len(A[0]))]
    assert L.contains(combo)


@given(int_matrices(), st.randoms(use_true_random=False))
def test_cokernel_independent_of_row_order(A, rnd):
    rows = list(A) + [list(A[0])]
    rnd.shuffle(rows)
    L1, L2 = HermiteLattice(len(A[0])), HermiteLattice(len(A[0]))
    for r in A:
        L1.insert(r)
    for r in rows:
        L2.insert(r)
    c1, c2 = cokernel(L1), cokernel(L2)
    assert (c1.torsion, c1.free) == (c2.torsion, c2.free)
    assert c1.torsion == [d for d in oracle(A) if d != 1]
