"""Character tables of the small subgroups of PGL2 met here, realized as the
fixed matrix groups, with decomposition and restriction of class functions.

Tables are standard data, checked for row and column orthogonality when a
group is loaded.  Conjugacy classes are computed inside the matrix group and
matched to table columns by element order and membership in the fixed D4.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

import sympy

from .fields import Field, ModP, QuadElement, field_from_spec
from .groups import FiniteSubgroup, ProjMatrix, subgroup

DEFAULT_FIELD = "q(sqrt:-1)"

_W = (-1 + sympy.sqrt(3) * sympy.I) / 2  # primitive cube root of unity


class CharacterError(ValueError):
    pass


class NotACharacter(CharacterError):
    pass


class NotASubgroup(CharacterError):
    pass


class TableError(CharacterError):
    pass


@dataclass(frozen=True)
class ConjugacyClass:
    label: str
    representative: ProjMatrix
    elements: frozenset

    @property
    def size(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class GroupData:
    name: str
    group: FiniteSubgroup
    classes: tuple  # ConjugacyClass, in table column order
    irreducibles: tuple  # ((name, values), ...)

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def class_labels(self) -> tuple:
        return tuple(c.label for c in self.classes)

    def character(self, name: str) -> "ClassFunction":
        for n, vals in self.irreducibles:
            if n == name:
                return ClassFunction(self, vals)
        raise KeyError(name)

    def class_of(self, A: ProjMatrix) -> int:
        for i, c in enumerate(self.classes):
            if A in c.elements:
                return i
        raise NotASubgroup("%s is not an element of %s" % (A, self.name))

    def inner(self, a, b):
        total = sum(c.size * x * sympy.conjugate(y) for c, x, y in zip(self.classes, a, b))
        return sympy.nsimplify(sympy.simplify(sympy.expand(total / self.order)))

    def check_orthogonality(self) -> None:
        n = len(self.irreducibles)
        if n != len(self.classes):
            raise TableError("%s: %d characters for %d classes" % (self.name, n, len(self.classes)))
        if sum(c.size for c in self.classes) != self.order:
            raise TableError("%s: class sizes do not sum to the order" % self.name)
        for i, (_, a) in enumerate(self.irreducibles):
            for j, (_, b) in enumerate(self.irreducibles):
                if self.inner(a, b) != int(i == j):
                    raise TableError("%s: row orthogonality fails" % self.name)
        for k, ck in enumerate(self.classes):
            for l, cl in enumerate(self.classes):
                s = sympy.simplify(
                    sympy.expand(sum(v[k] * sympy.conjugate(v[l]) for _, v in self.irreducibles))
                )
                expect = Fraction(self.order, ck.size) if k == l else 0
                if s != sympy.Rational(expect):
                    raise TableError("%s: column orthogonality fails" % self.name)


@dataclass(frozen=True)
class ClassFunction:
    group: GroupData
    values: tuple

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(self.group, tuple(sympy.expand(a + b) for a, b in zip(self.values, other.values)))

    def scale(self, c) -> "ClassFunction":
        return ClassFunction(self.group, tuple(c * a for a in self.values))

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.group.name == other.group.name and all(
            sympy.simplify(a - b) == 0 for a, b in zip(self.values, other.values)
        )

    def __hash__(self):
        return hash((self.group.name, len(self.values)))

    def as_ints(self) -> tuple:
        return tuple(int(v) for v in self.values)


# ---------------------------------------------------------------------------
# group construction


def conjugacy_classes(G: FiniteSubgroup) -> list[frozenset]:
    seen: set = set()
    out = []
    for g in G.elements:
        if g in seen:
            continue
        cls = frozenset(h * g * h.inverse() for h in G.elements)
        seen |= cls
        out.append(cls)
    return out


def _rep(cls: frozenset) -> ProjMatrix:
    return min(cls, key=lambda A: tuple(str(x) for x in A.entries))


def _label_classes(name: str, G: FiniteSubgroup, field: Field) -> dict[str, frozenset]:
    d4 = subgroup("D4", field).as_set()
    labels: dict[str, frozenset] = {}
    classes = conjugacy_classes(G)
    for cls in classes:
        A = next(iter(cls))
        o = A.order()
        if name == "S4":
            lab = {1: "e", 3: "3-cycle", 4: "4-cycle"}.get(o)
            if o == 2:
                lab = "double-transposition" if A in d4 else "transposition"
        elif name == "A4":
            lab = {1: "e", 2: "double-transposition"}.get(o)
            if o == 3:
                lab = "sigma3" if sigma3_in(cls, field) else "sigma3^2"
        elif name == "D8":
            if o == 1:
                lab = "e"
            elif o == 4:
                lab = "r"
            elif len(cls) == 1:
                lab = "z"
            else:
                lab = "refl-in-D4" if A in d4 else "refl-out-D4"
        elif name == "D4":
            lab = "e" if o == 1 else "a%d" % _d4_index(A, field)
        elif name == "C3":
            lab = {1: "e"}.get(o) or ("g" if sigma3_in(cls, field) else "g^2")
        else:
            raise CharacterError("no table for %s" % name)
        if lab in labels:
            raise TableError("%s: two classes labelled %s" % (name, lab))
        labels[lab] = cls
    return labels


def sigma3_in(cls: frozenset, field: Field) -> bool:
    from .groups import sigma3

    return sigma3(field) in cls


def _d4_index(A: ProjMatrix, field: Field) -> int:
    from .groups import d4_generators

    a, b = d4_generators(field)
    return {a: 1, b: 2, a * b: 3}[A]


# Tables: columns in the listed class order.
_TABLES = {
    "S4": (
        ("e", "transposition", "double-transposition", "3-cycle", "4-cycle"),
        (
            ("triv", (1, 1, 1, 1, 1)),
            ("sign", (1, -1, 1, 1, -1)),
            ("V", (2, 0, 2, -1, 0)),
            ("std", (3, 1, -1, 0, -1)),
            ("std*sign", (3, -1, -1, 0, 1)),
        ),
    ),
    "A4": (
        ("e", "double-transposition", "sigma3", "sigma3^2"),
        (
            ("triv", (1, 1, 1, 1)),
            ("omega", (1, 1, _W, _W**2)),
            ("omega^2", (1, 1, _W**2, _W)),
            ("std", (3, -1, 0, 0)),
        ),
    ),
    "D8": (
        ("e", "z", "r", "refl-in-D4", "refl-out-D4"),
        (
            ("triv", (1, 1, 1, 1, 1)),
            ("k_<r>", (1, 1, 1, -1, -1)),
            ("k_D4", (1, 1, -1, 1, -1)),
            ("k_third", (1, 1, -1, -1, 1)),
            ("k2", (2, -2, 0, 0, 0)),
        ),
    ),
    "D4": (
        ("e", "a1", "a2", "a3"),
        (
            ("triv", (1, 1, 1, 1)),
            ("k_<a1>", (1, 1, -1, -1)),
            ("k_<a2>", (1, -1, 1, -1)),
            ("k_<a3>", (1, -1, -1, 1)),
        ),
    ),
    "C3": (
        ("e", "g", "g^2"),
        (
            ("triv", (1, 1, 1)),
            ("omega", (1, _W, _W**2)),
            ("omega^2", (1, _W**2, _W)),
        ),
    ),
}


def _c3_group(field: Field) -> FiniteSubgroup:
    from .groups import closure, sigma3

    s = sigma3(field)
    return FiniteSubgroup("C3", closure([s], field), (s,))


@functools.lru_cache(maxsize=None)
def group_data(name: str, field_spec: str = DEFAULT_FIELD) -> GroupData:
    field = field_from_spec(field_spec)
    if name not in _TABLES:
        raise CharacterError("no character table for %r" % name)
    G = _c3_group(field) if name == "C3" else subgroup(name, field)
    labels = _label_classes(name, G, field)
    order, irr = _TABLES[name]
    if set(labels) != set(order):
        raise TableError("%s: classes %s do not match table %s" % (name, sorted(labels), order))
    classes = tuple(ConjugacyClass(lab, _rep(labels[lab]), labels[lab]) for lab in order)
    irr = tuple((n, tuple(sympy.sympify(v) for v in vals)) for n, vals in irr)
    data = GroupData(name, G, classes, irr)
    data.check_orthogonality()
    return data


# ---------------------------------------------------------------------------
# characters


def _to_integer(x) -> int:
    if isinstance(x, ModP):
        return x.lift()
    if isinstance(x, QuadElement):
        if x.b:
            raise CharacterError("value %s is not rational" % x)
        x = x.a
    if isinstance(x, ModP):
        return x.lift()
    f = Fraction(x)
    if f.denominator != 1:
        raise CharacterError("value %s is not an integer" % x)
    return int(f)


def adjoint_value(A: ProjMatrix) -> int:
    """Trace of conjugation by A on trace-zero matrices: tr(A)^2/det(A) - 1."""
    return _to_integer(A.trace * A.trace / A.det - 1)


def adjoint_character(G: GroupData) -> ClassFunction:
    return ClassFunction(G, tuple(sympy.Integer(adjoint_value(c.representative)) for c in G.classes))


def trivial_character(G: GroupData) -> ClassFunction:
    return ClassFunction(G, tuple(sympy.Integer(1) for _ in G.classes))


def restrict(chi: ClassFunction, H: GroupData) -> ClassFunction:
    G = chi.group
    for A in H.group.elements:
        G.class_of(A)
    return ClassFunction(H, tuple(chi.values[G.class_of(c.representative)] for c in H.classes))


def v_character(G: GroupData) -> ClassFunction:
    """The 2-dimensional irreducible character of S4, restricted to G."""
    if G.name == "S4":
        return G.character("V")
    S4 = group_data("S4", G.group.field.spec)
    return restrict(S4.character("V"), G)


def decompose(chi: ClassFunction, G: GroupData | None = None) -> dict[str, int]:
    G = G or chi.group
    if len(chi.values) != len(G.classes):
        raise NotACharacter("expected %d values" % len(G.classes))
    out = {}
    for name, vals in G.irreducibles:
        m = G.inner(chi.values, vals)
        if not (m.is_integer and m >= 0):
            raise NotACharacter("multiplicity %s on %s" % (m, name))
        out[name] = int(m)
    return out


def recompose(mult: dict[str, int], G: GroupData) -> ClassFunction:
    vals = [sympy.Integer(0)] * len(G.classes)
    for name, m in mult.items():
        irr = G.character(name).values
        vals = [sympy.expand(v + m * x) for v, x in zip(vals, irr)]
    return ClassFunction(G, tuple(vals))
