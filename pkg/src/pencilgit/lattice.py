"""Exact integer linear algebra: Smith normal form with transforms, integer
linear systems, and sparse Hermite-reduced lattices for membership tests,
canonical representatives and cokernels.

All arithmetic is on Python ints; no modular shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(A))]


@dataclass
class SmithForm:
    """U A V = D with U, V unimodular; diagonal d_1 | d_2 | ... | d_r, r = rank."""

    diagonal: list[int]
    U: Matrix
    V: Matrix
    Vinv: Matrix
    rows: int
    cols: int

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def smith_normal_form(A: Sequence[Sequence[int]]) -> SmithForm:
    m = len(A)
    n = len(A[0]) if m else 0
    M = [list(map(int, row)) for row in A]
    U = identity(m)
    V = identity(n)
    Vinv = identity(n)

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in M:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def add_row(dst, src, c):
        # row_dst += c * row_src
        if c:
            M[dst] = [x + c * y for x, y in zip(M[dst], M[src])]
            U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        # col_dst += c * col_src; inverse is row_src -= c * row_dst on Vinv
        if c:
            for row in M:
                row[dst] += c * row[src]
            for row in V:
                row[dst] += c * row[src]
            Vinv[src] = [x - c * y for x, y in zip(Vinv[src], Vinv[dst])]

    def negate_row(i):
        M[i] = [-x for x in M[i]]
        U[i] = [-x for x in U[i]]

    diag = []
    t = 0
    while t < min(m, n):
        # smallest nonzero entry of the trailing block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = M[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = M[t][t]
            dirty = False
            for i in range(t + 1, m):
                if M[i][t]:
                    q = M[i][t] // p
                    add_row(i, t, -q)
                    if M[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if M[t][j]:
                    q = M[t][j] // p
                    add_col(j, t, -q)
                    if M[t][j]:
                        dirty = True
            if dirty:
                # move the smallest remainder in row/column t to the pivot
                cand = [(abs(M[i][t]), i, t) for i in range(t, m) if M[i][t]]
                cand += [(abs(M[t][j]), t, j) for j in range(t, n) if M[t][j]]
                _, i, j = min(cand)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            # divisibility of the trailing block by the pivot
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if M[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if M[t][t] < 0:
            negate_row(t)
        diag.append(M[t][t])
        t += 1
    return SmithForm(diag, U, V, Vinv, m, n)


def invariant_factors(A: Sequence[Sequence[int]]) -> list[int]:
    return smith_normal_form(A).diagonal if A and A[0] else []


@dataclass
class IntegerSolution:
    particular: list[int]
    kernel: list[list[int]]


def solve_integer(A: Sequence[Sequence[int]], b: Sequence[int]) -> IntegerSolution | None:
    """All integer x with A x = b, as particular + span(kernel); None if none."""
    m = len(A)
    n = len(A[0]) if m else 0
    S = smith_normal_form(A)
    Ub = [sum(S.U[i][k] * b[k] for k in range(m)) for i in range(m)]
    y = [0] * n
    for i, d in enumerate(S.diagonal):
        if Ub[i] % d:
            return None
        y[i] = Ub[i] // d
    if any(Ub[i] for i in range(S.rank, m)):
        return None
    x = [sum(S.V[i][k] * y[k] for k in range(n)) for i in range(n)]
    kernel = [[S.V[i][k] for i in range(n)] for k in range(S.rank, n)]
    return IntegerSolution(x, kernel)


# ---------------------------------------------------------------------------
# sparse Hermite lattice


def _xgcd(a: int, b: int):
    """(g, x, y) with a x + b y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _axpy(u: dict, c: int, v: dict) -> dict:
    """u + c v for sparse vectors, dropping zeros."""
    out = dict(u)
    for k, x in v.items():
        s = out.get(k, 0) + c * x
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _lincomb(a: int, u: dict, b: int, v: dict) -> dict:
    out = {}
    for k in set(u) | set(v):
        s = a * u.get(k, 0) + b * v.get(k, 0)
        if s:
            out[k] = s
    return out


@dataclass
class HermiteLattice:
    """Integer row lattice in Z^n kept in reduced echelon form.

    rows[j] is the unique basis vector whose leading coordinate is j, with a
    positive pivot; after finalize() every other row's entry at column j lies
    in [0, pivot).
    """

    n: int
    rows: dict = dc_field(default_factory=dict)
    _reduced: bool = True

    def insert(self, v) -> None:
        vec = {k: int(x) for k, x in (v.items() if isinstance(v, dict) else enumerate(v)) if x}
        while vec:
            j = min(vec)
            r = self.rows.get(j)
            if r is None:
                if vec[j] < 0:
                    vec = {k: -x for k, x in vec.items()}
                self.rows[j] = vec
                self._reduced = False
                return
            a, b = r[j], vec[j]
            if b % a == 0:
                vec = _axpy(vec, -(b // a), r)
                continue
            g, x, y = _xgcd(a, b)
            new_row = _lincomb(x, r, y, vec)
            vec = _lincomb(b // g, r, -(a // g), vec)
            self.rows[j] = new_row
            self._reduced = False

    def finalize(self) -> None:
        if self._reduced:
            return
        pivots = sorted(self.rows)
        for i in pivots:
            row = self.rows[i]
            for j in pivots:
                if j <= i:
                    continue
                x = row.get(j)
                if x:
                    p = self.rows[j][j]
                    q = x // p
                    if q:
                        row = _axpy(row, -q, self.rows[j])
            self.rows[i] = row
        self._reduced = True

    def reduce(self, v) -> dict:
        """Canonical representative of v modulo the lattice."""
        self.finalize()
        vec = {k: int(x) for k, x in (v.items() if isinstance(v, dict) else enumerate(v)) if x}
        for j in sorted(self.rows):
            x = vec.get(j)
            if x:
                p = self.rows[j][j]
                q = x // p
                if q:
                    vec = _axpy(vec, -q, self.rows[j])
        return vec

    def contains(self, v) -> bool:
        return not self.reduce(v)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> dict[int, int]:
        return {j: r[j] for j, r in self.rows.items()}


@dataclass
class Cokernel:
    """Z^n / L decomposed as Z^free + sum Z/d_i (invariant factors d_i > 1).

    coords: surviving coordinates after eliminating pivots equal to 1.
    V maps surviving coordinates to Smith coordinates (x -> x V); the first
    len(torsion) Smith coordinates are torsion, the last `free` are free.
    generators: for each cyclic summand, a vector in Z^n generating it.
    """

    n: int
    torsion: list[int]
    free: int
    coords: list[int]
    V: Matrix
    lead: int
    generators: list[dict]
    lattice: HermiteLattice

    def class_of(self, v) -> tuple:
        """Coordinates of v in (Z/d_1, ..., Z/d_k, Z^free)."""
        red = self.lattice.reduce(v)
        x = [red.get(c, 0) for c in self.coords]
        z = [sum(x[i] * self.V[i][k] for i in range(len(x))) for k in range(len(self.coords))]
        skip = self.lead
        tors = tuple(z[skip + i] % d for i, d in enumerate(self.torsion))
        frees = tuple(z[skip + len(self.torsion):])
        return tors + frees


def cokernel(lattice: HermiteLattice) -> Cokernel:
    lattice.finalize()
    n = lattice.n
    unit = {j for j, r in lattice.rows.items() if r[j] == 1}
    coords = [c for c in range(n) if c not in unit]
    index = {c: i for i, c in enumerate(coords)}
    rows = [
        [r.get(c, 0) for c in coords]
        for j, r in sorted(lattice.rows.items())
        if j not in unit
    ]
    k = len(coords)
    if rows and k:
        S = smith_normal_form(rows)
        diag, V, Vinv = S.diagonal, S.V, S.Vinv
    else:
        diag, V, Vinv = [], identity(k), identity(k)
    lead = sum(1 for d in diag if d == 1)
    torsion = [d for d in diag if d != 1]
    free = k - len(diag)
    gens = []
    for s in range(lead, k):
        row = Vinv[s]
        gens.append({coords[i]: x for i, x in enumerate(row) if x})
    del index
    return Cokernel(n, torsion, free, coords, V, lead, gens, lattice)
