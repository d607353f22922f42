"""Projective 2x2 matrices, their action on binary forms and pencils, Klein's
finite subgroups of PGL2, and brute-force stabilizers over finite fields.

The action is the left action (A . f)(t) = f(A^-1 t).
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .fields import Field, PrimeField, QuadraticExtension, Rationals
from .forms import (
    BinaryForm,
    FieldMismatch,
    Pencil,
    linear_power_table,
    plucker_of_rows,
    substitute,
)


class GroupError(ValueError):
    pass


class SingularMatrix(GroupError):
    pass


class MissingRootOfUnity(GroupError):
    pass


class InfiniteField(GroupError):
    pass


class UnknownSubgroup(GroupError):
    pass


def _is_finite(field: Field) -> bool:
    return getattr(field, "order", None) is not None


def require_finite(field: Field) -> None:
    if not _is_finite(field):
        raise InfiniteField("%s is not a finite field" % field.spec)


@dataclass(frozen=True)
class ProjMatrix:
    """Element of PGL2; entries (a, b, c, d) row-major, first nonzero entry 1."""

    field: Field
    entries: tuple

    def __post_init__(self):
        f = self.field
        a, b, c, d = (f(x) for x in self.entries)
        if not (a * d - b * c):
            raise SingularMatrix("determinant vanishes")
        lead = next(x for x in (a, b, c, d) if x)
        inv = f.one / lead
        object.__setattr__(self, "entries", (a * inv, b * inv, c * inv, d * inv))

    @classmethod
    def of(cls, field: Field, rows: Sequence[Sequence]) -> "ProjMatrix":
        (a, b), (c, d) = rows
        return cls(field, (a, b, c, d))

    @classmethod
    def identity(cls, field: Field) -> "ProjMatrix":
        return cls(field, (1, 0, 0, 1))

    @property
    def rows(self) -> tuple:
        a, b, c, d = self.entries
        return ((a, b), (c, d))

    @property
    def det(self):
        a, b, c, d = self.entries
        return a * d - b * c

    @property
    def trace(self):
        return self.entries[0] + self.entries[3]

    def __mul__(self, other: "ProjMatrix") -> "ProjMatrix":
        if self.field != other.field:
            raise FieldMismatch("matrices over %s and %s" % (self.field, other.field))
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return ProjMatrix(self.field, (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h))

    def inverse(self) -> "ProjMatrix":
        a, b, c, d = self.entries
        return ProjMatrix(self.field, (d, -b, -c, a))

    def __pow__(self, n: int) -> "ProjMatrix":
        if n < 0:
            return self.inverse() ** (-n)
        out = ProjMatrix.identity(self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    @property
    def is_identity(self) -> bool:
        a, b, c, d = self.entries
        return not b and not c and a == d

    def order(self, limit: int = 100000) -> int:
        x, n = self, 1
        while not x.is_identity:
            x = x * self
            n += 1
            if n > limit:
                raise GroupError("element order exceeds %d" % limit)
        return n

    def __str__(self):
        a, b, c, d = self.entries
        return "[[%s, %s], [%s, %s]]" % (a, b, c, d)


# ---------------------------------------------------------------------------
# action


def _inverse_table(rows: Sequence[Sequence], field: Field, n: int) -> list[list]:
    """Substitution table of t -> M^-1 t for a GL2 matrix M."""
    (a, b), (c, d) = rows
    det = a * d - b * c
    if not det:
        raise SingularMatrix("determinant vanishes")
    inv = field.one / det
    l0 = (d * inv, -b * inv)
    l1 = (-c * inv, a * inv)
    return linear_power_table(field, l0, l1, n)


def act_form(A: ProjMatrix, f: BinaryForm, gl_rows: Sequence[Sequence] | None = None) -> BinaryForm:
    """f(A^-1 t), using the canonical representative unless gl_rows is given."""
    if A.field != f.field:
        raise FieldMismatch("matrix over %s, form over %s" % (A.field, f.field))
    rows = gl_rows if gl_rows is not None else A.rows
    return substitute(f, _inverse_table(rows, f.field, f.degree))


def transport_rows(A: ProjMatrix, rows: Sequence[Sequence], gl_rows=None) -> tuple:
    """Images of basis rows, without renormalizing."""
    field = A.field
    n = len(rows[0]) - 1
    table = _inverse_table(gl_rows if gl_rows is not None else A.rows, field, n)
    return tuple(substitute(BinaryForm(field, tuple(r)), table).coeffs for r in rows)


def act_pencil(A: ProjMatrix, p: Pencil) -> Pencil:
    if A.field != p.field:
        raise FieldMismatch("matrix over %s, pencil over %s" % (A.field, p.field))
    return Pencil(p.field, transport_rows(A, p.rows))


def act_plucker(gl_rows: Sequence[Sequence], p: Pencil) -> tuple:
    """Plücker vector of the transported row-reduced basis of p under the
    GL2 matrix gl_rows, with no rescaling.  Used to measure how I' and J
    transform under a specific representative."""
    A = ProjMatrix.of(p.field, gl_rows)
    return plucker_of_rows(*transport_rows(A, p.rows, gl_rows=gl_rows))


def act(A: ProjMatrix, x):
    if isinstance(x, Pencil):
        return act_pencil(A, x)
    if isinstance(x, BinaryForm):
        return act_form(A, x)
    raise TypeError("cannot act on %r" % type(x).__name__)


# ---------------------------------------------------------------------------
# finite subgroups


@dataclass(frozen=True)
class FiniteSubgroup:
    name: str
    elements: tuple
    generators: tuple

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def field(self) -> Field:
        return self.elements[0].field

    def __contains__(self, A: ProjMatrix) -> bool:
        return A in self._set

    @property
    def _set(self) -> frozenset:
        cached = self.__dict__.get("_cached_set")
        if cached is None:
            cached = frozenset(self.elements)
            object.__setattr__(self, "_cached_set", cached)
        return cached

    def as_set(self) -> frozenset:
        return self._set

    def order_profile(self) -> dict[int, int]:
        return dict(sorted(Counter(A.order() for A in self.elements).items()))

    def is_closed(self) -> bool:
        s = self._set
        return all((A * B) in s for A in self.elements for B in self.elements) and all(
            A.inverse() in s for A in self.elements
        )


def closure(generators: Iterable[ProjMatrix], field: Field, limit: int = 100000) -> tuple:
    """Subgroup generated by the given matrices, listed in discovery order."""
    gens = list(generators)
    ident = ProjMatrix.identity(field)
    seen = {ident: None}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen[y] = None
                    nxt.append(y)
                    if len(seen) > limit:
                        raise GroupError("generated group exceeds %d elements" % limit)
        frontier = nxt
    return tuple(seen)


def root_of_unity(m: int, field: Field):
    """A primitive m-th root of unity, chosen deterministically."""
    if m < 1:
        raise MissingRootOfUnity("m must be positive")
    one = field.one
    if m == 1:
        return one
    if m == 2:
        return -one
    if _is_finite(field):
        if (field.order - 1) % m:
            raise MissingRootOfUnity("no primitive %d-th root of unity in %s" % (m, field.spec))
        for x in sorted(field.elements(), key=field.key):
            if x and _mult_order(x, m) == m:
                return x
        raise MissingRootOfUnity("no primitive %d-th root of unity in %s" % (m, field.spec))
    if m == 4:
        return _sqrt_or_missing(-one, field, m)
    if m in (3, 6):
        s = _sqrt_or_missing(-3 * one, field, m)
        w3 = (s - one) / 2
        return w3 if m == 3 else -w3
    raise MissingRootOfUnity("no primitive %d-th root of unity in %s" % (m, field.spec))


def _sqrt_or_missing(x, field: Field, m: int):
    r = field.sqrt(x)
    if r is None:
        raise MissingRootOfUnity("no primitive %d-th root of unity in %s" % (m, field.spec))
    return r


def _mult_order(x, bound: int) -> int:
    y, n = x, 1
    while y != 1:
        y = y * x
        n += 1
        if n > bound:
            return n
    return n


def omega4(field: Field):
    """sqrt(-1): the smaller root over a prime field, i over Q(i)."""
    return root_of_unity(4, field)


def d4_generators(field: Field) -> tuple:
    return (
        ProjMatrix(field, (1, 0, 0, -1)),
        ProjMatrix(field, (0, -1, 1, 0)),
    )


def sigma3(field: Field) -> ProjMatrix:
    w = omega4(field)
    return ProjMatrix(field, (w, -1, w, 1))


def sigma2(field: Field) -> ProjMatrix:
    return ProjMatrix(field, (-1, 1, 1, 1))


_NAME_RE = re.compile(r"^(C|D)_?(\d+)$")


def subgroup(name: str, field: Field) -> FiniteSubgroup:
    """Klein's distinguished subgroups: C_m, D_2m, A4, S4, and the fixed D4, D8."""
    key = name.replace(" ", "")
    if key in ("D4", "D_4"):
        gens = d4_generators(field)
        return FiniteSubgroup("D4", closure(gens, field), gens)
    if key in ("A4", "A_4"):
        gens = d4_generators(field) + (sigma3(field),)
        return FiniteSubgroup("A4", closure(gens, field), gens)
    if key in ("S4", "S_4"):
        gens = d4_generators(field) + (sigma3(field), sigma2(field))
        return FiniteSubgroup("S4", closure(gens, field), gens)
    if key in ("D8", "D_8"):
        gens = d4_generators(field) + (sigma3(field).inverse() * sigma2(field),)
        return FiniteSubgroup("D8", closure(gens, field), gens)
    m = _NAME_RE.match(key)
    if not m:
        raise UnknownSubgroup("unknown subgroup name %r" % name)
    kind, n = m.group(1), int(m.group(2))
    if kind == "C":
        w = root_of_unity(n, field)
        gens = (ProjMatrix(field, (1, 0, 0, w)),)
        return FiniteSubgroup("C_%d" % n, closure(gens, field), gens)
    if n % 2 or n < 4:
        raise UnknownSubgroup("dihedral order must be even and at least 4")
    w = root_of_unity(n // 2, field)
    gens = (ProjMatrix(field, (1, 0, 0, w)), ProjMatrix(field, (0, -1, 1, 0)))
    return FiniteSubgroup("D_%d" % n, closure(gens, field), gens)


# ---------------------------------------------------------------------------
# enumeration and brute-force scans


def enumerate_pgl2(field: Field) -> list[ProjMatrix]:
    """All q^3 - q elements: [[1, b], [c, d]] with d != bc, and [[0, 1], [c, d]] with c != 0."""
    require_finite(field)
    elems = list(field.elements())
    out = []
    for b in elems:
        for c in elems:
            bc = b * c
            for d in elems:
                if d != bc:
                    out.append(ProjMatrix(field, (1, b, c, d)))
    for c in elems:
        if c:
            for d in elems:
                out.append(ProjMatrix(field, (0, 1, c, d)))
    return out


_PGL_CACHE: dict = {}


def pgl2_elements(field: Field) -> tuple:
    """Cached enumerate_pgl2; the tuple is immutable so sharing is safe."""
    key = field.spec
    if key not in _PGL_CACHE:
        _PGL_CACHE[key] = tuple(enumerate_pgl2(field))
    return _PGL_CACHE[key]


def guess_isomorphism_type(order: int, profile: dict[int, int]) -> str:
    """Name a group from its order and element-order multiset.

    Enough to tell apart every group met here: cyclic, dihedral (the Klein
    four-group is D_4), A4, S4 and Borel-type groups q(q-1).
    """
    if order == 1:
        return "trivial"
    if profile.get(order):
        return "C_%d" % order
    if order == 12 and profile == {1: 1, 2: 3, 3: 8}:
        return "A4"
    if order == 24 and profile == {1: 1, 2: 9, 3: 8, 4: 6}:
        return "S4"
    if order % 2 == 0:
        n = order // 2
        if profile.get(n, 0) >= 1 and profile.get(2, 0) >= n:
            return "D_%d" % order
    return "order-%d" % order


def _named(order: int, profile: dict[int, int], q: int) -> str:
    base = guess_isomorphism_type(order, profile)
    if base == "C_%d" % (q - 1):
        return "T (%s)" % base
    if base == "D_%d" % (2 * (q - 1)):
        return "N(T) (%s)" % base
    if order == q * (q - 1):
        return "B2"
    return base


@dataclass(frozen=True)
class StabilizerResult:
    group: FiniteSubgroup
    profile: dict
    label: str

    @property
    def order(self) -> int:
        return self.group.order


def _int_power_table(l0: tuple, l1: tuple, n: int, q: int) -> list[list[int]]:
    """linear_power_table on plain ints mod q."""

    def mul_linear(poly, lin):
        out = [0] * (len(poly) + 1)
        for k, c in enumerate(poly):
            out[k] += c * lin[0]
            out[k + 1] += c * lin[1]
        return [x % q for x in out]

    p0, p1 = [[1]], [[1]]
    for _ in range(n):
        p0.append(mul_linear(p0[-1], l0))
        p1.append(mul_linear(p1[-1], l1))
    rows = []
    for i in range(n + 1):
        out = [0] * (n + 1)
        for x, u in enumerate(p0[n - i]):
            for y, v in enumerate(p1[i]):
                out[x + y] += u * v
        rows.append(out)
    return rows


def _annihilator_mod_p(rows: list[list[int]], q: int) -> list[list[int]]:
    """Functionals k with k . v = 0 exactly on the span of the reduced rows."""
    n = len(rows[0])
    pivots = [next(j for j, x in enumerate(r) if x) for r in rows]
    out = []
    for free in (j for j in range(n) if j not in pivots):
        k = [0] * n
        k[free] = 1
        for r, piv in zip(rows, pivots):
            k[piv] = (-r[free] * pow(r[piv], -1, q)) % q
        out.append(k)
    return out


def _stabilizer_prime_field(p: Pencil, field: PrimeField) -> tuple:
    # same test as act_pencil(A, p) == p, on ints; t -> adj(A) t differs from
    # A^-1 by a scalar, which does not change membership
    q = field.p
    rows = [[x.v for x in r] for r in p.rows]
    n = len(rows[0]) - 1
    funcs = _annihilator_mod_p(rows, q)
    out = []
    for A in pgl2_elements(field):
        a, b, c, d = (x.v for x in A.entries)
        table = _int_power_table((d, -b), (-c, a), n, q)
        ok = True
        for r in rows:
            img = [sum(r[i] * table[i][j] for i in range(n + 1)) for j in range(n + 1)]
            if any(sum(k[j] * img[j] for j in range(n + 1)) % q for k in funcs):
                ok = False
                break
        if ok:
            out.append(A)
    return tuple(out)


def stabilizer(p: Pencil, field: Field | None = None) -> StabilizerResult:
    field = field or p.field
    require_finite(field)
    if isinstance(field, PrimeField) and field == p.field:
        elems = _stabilizer_prime_field(p, field)
    else:
        elems = tuple(A for A in pgl2_elements(field) if act_pencil(A, p) == p)
    group = FiniteSubgroup("Stab", elems, ())
    profile = group.order_profile()
    return StabilizerResult(group, profile, _named(len(elems), profile, _char_order(field)))


def _char_order(field: Field) -> int:
    return field.order


def normalizer(H: FiniteSubgroup, field: Field | None = None) -> FiniteSubgroup:
    field = field or H.field
    require_finite(field)
    hs = H.as_set()
    elems = []
    for A in pgl2_elements(field):
        Ai = A.inverse()
        if all((A * h * Ai) in hs for h in H.elements):
            elems.append(A)
    return FiniteSubgroup("N(%s)" % H.name, tuple(elems), ())


def trivial_subgroup(field: Field) -> FiniteSubgroup:
    ident = ProjMatrix.identity(field)
    return FiniteSubgroup("trivial", (ident,), ())


def is_rational_field(field: Field) -> bool:
    return isinstance(field, Rationals) or (
        isinstance(field, QuadraticExtension) and isinstance(field.base, Rationals)
    )
