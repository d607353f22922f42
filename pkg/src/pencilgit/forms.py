"""Binary forms, projective points and pencils of binary cubics.

A binary form of degree n is stored as its coefficient list (a_0, ..., a_n)
with f = sum a_i t0^(n-i) t1^i.  A pencil is a 2-dimensional subspace of
cubics, kept as its reduced row echelon basis; Plücker coordinates are the
2x2 minors in the order (p01, p02, p03, p12, p13, p23).

The free functions ``plucker_of_rows``, ``plucker_quadric`` and
``newstead_vector`` only use ring operations (plus division by 2 and 6
downstream), so they accept sympy expressions as well as field elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .fields import Field, PrimeField, Rationals

PLUCKER_INDEX = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


class FormError(ValueError):
    pass


class BothZero(FormError):
    pass


class DegreeMismatch(FormError):
    pass


class WrongDegree(FormError):
    pass


class ZeroForm(FormError):
    pass


class LinearlyDependent(FormError):
    pass


class NotOnPluckerQuadric(FormError):
    pass


class FieldMismatch(FormError):
    pass


class InternalError(AssertionError):
    pass


# ---------------------------------------------------------------------------
# binary forms


@dataclass(frozen=True)
class BinaryForm:
    field: Field
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.field(c) for c in self.coeffs))
        if not self.coeffs:
            raise FormError("a form needs at least one coefficient")

    @classmethod
    def of(cls, field: Field, coeffs: Sequence) -> "BinaryForm":
        return cls(field, tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        _check_same(self, other)
        return BinaryForm(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        _check_same(self, other)
        return BinaryForm(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "BinaryForm":
        c = self.field(c)
        return BinaryForm(self.field, tuple(c * a for a in self.coeffs))

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        if self.field != other.field:
            raise FieldMismatch("forms over %s and %s" % (self.field, other.field))
        out = [self.field.zero] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return BinaryForm(self.field, tuple(out))

    def d_t0(self) -> "BinaryForm":
        n = self.degree
        if n == 0:
            return BinaryForm(self.field, (self.field.zero,))
        return BinaryForm(self.field, tuple((n - i) * a for i, a in enumerate(self.coeffs[:-1])))

    def d_t1(self) -> "BinaryForm":
        n = self.degree
        if n == 0:
            return BinaryForm(self.field, (self.field.zero,))
        return BinaryForm(self.field, tuple((i + 1) * self.coeffs[i + 1] for i in range(n)))

    def monic(self) -> "BinaryForm":
        """Scale so the first nonzero coefficient is 1."""
        for c in self.coeffs:
            if c:
                return self.scale(self.field.one / c)
        raise ZeroForm("the zero form has no monic scaling")

    def __call__(self, t0, t1):
        n = self.degree
        return sum((a * t0 ** (n - i) * t1 ** i for i, a in enumerate(self.coeffs)), self.field.zero)

    def __str__(self):
        n = self.degree
        terms = []
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            mono = "*".join(
                x for x in (_power("t0", n - i), _power("t1", i)) if x
            )
            terms.append("%s*%s" % (a, mono) if mono else str(a))
        return " + ".join(terms) if terms else "0"


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else "%s^%d" % (var, e)


def _check_same(f: BinaryForm, g: BinaryForm) -> None:
    if f.field != g.field:
        raise FieldMismatch("forms over %s and %s" % (f.field, g.field))
    if f.degree != g.degree:
        raise DegreeMismatch("degrees %d and %d" % (f.degree, g.degree))


def linear_power_table(field: Field, l0: tuple, l1: tuple, n: int) -> list[list]:
    """Row i holds the coefficients of l0^(n-i) * l1^i, l0 and l1 linear forms.

    Substituting t0 -> l0, t1 -> l1 into sum a_i t0^(n-i) t1^i is then a
    vector-matrix product.
    """
    zero, one = field.zero, field.one

    def mul_linear(poly, lin):
        out = [zero] * (len(poly) + 1)
        for k, c in enumerate(poly):
            if c:
                out[k] = out[k] + c * lin[0]
                out[k + 1] = out[k + 1] + c * lin[1]
        return out

    p0 = [[one]]
    for _ in range(n):
        p0.append(mul_linear(p0[-1], l0))
    p1 = [[one]]
    for _ in range(n):
        p1.append(mul_linear(p1[-1], l1))
    rows = []
    for i in range(n + 1):
        a, b = p0[n - i], p1[i]
        out = [zero] * (n + 1)
        for x, u in enumerate(a):
            if u:
                for y, v in enumerate(b):
                    out[x + y] = out[x + y] + u * v
        rows.append(out)
    return rows


def substitute(f: BinaryForm, table: list[list]) -> BinaryForm:
    n = f.degree
    field = f.field
    out = [field.zero] * (n + 1)
    for i, a in enumerate(f.coeffs):
        if a:
            row = table[i]
            for k in range(n + 1):
                out[k] = out[k] + a * row[k]
    return BinaryForm(field, tuple(out))


# -- univariate helpers (coefficients low -> high degree) --------------------


def _trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a: list, b: list, field: Field):
    a = list(a)
    q = [field.zero] * max(len(a) - len(b) + 1, 1)
    inv = field.one / b[-1]
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] * inv
        q[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] = a[i + shift] - c * bc
        a.pop()
    return q, a


def _poly_gcd(a: list, b: list, field: Field) -> list:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _poly_divmod(a, b, field)
        a, b = b, _trim(r)
    if not a:
        return a
    inv = field.one / a[-1]
    return [c * inv for c in a]


def gcd_forms(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Greatest common divisor of two binary forms, first nonzero coefficient 1.

    Powers of t0 are split off first; the rest is dehomogenized at t0 = 1
    (x = t1/t0) and handled by the Euclidean algorithm.
    """
    if f.field != g.field:
        raise FieldMismatch("forms over %s and %s" % (f.field, g.field))
    if f.is_zero and g.is_zero:
        raise BothZero("gcd of two zero forms")
    field = f.field
    if f.is_zero:
        return g.monic()
    if g.is_zero:
        return f.monic()

    def split(h: BinaryForm):
        poly = _trim(list(h.coeffs))
        return h.degree - (len(poly) - 1), poly

    kf, pf = split(f)
    kg, pg = split(g)
    h = _poly_gcd(pf, pg, field)
    k = min(kf, kg)
    e = len(h) - 1
    # homogenize: t0^k * t0^e h(t1/t0)
    coeffs = list(h) + [field.zero] * k
    return BinaryForm(field, tuple(coeffs[: e + k + 1])).monic()


def divides(d: BinaryForm, f: BinaryForm) -> bool:
    """Exact divisibility of binary forms."""
    if d.is_zero:
        return f.is_zero
    if f.is_zero:
        return True
    field = f.field
    kd = d.degree - (len(_trim(list(d.coeffs))) - 1)
    kf = f.degree - (len(_trim(list(f.coeffs))) - 1)
    if kd > kf:
        return False
    _, r = _poly_divmod(_trim(list(f.coeffs)), _trim(list(d.coeffs)), field)
    return not _trim(r)


def jacobian(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """df/dt0 * dg/dt1 - df/dt1 * dg/dt0, a form of degree 2n-2."""
    if f.degree != g.degree:
        raise DegreeMismatch("degrees %d and %d" % (f.degree, g.degree))
    if f.degree < 1:
        raise DegreeMismatch("jacobian needs degree >= 1")
    return f.d_t0() * g.d_t1() - f.d_t1() * g.d_t0()


def hessian_coefficients(a: Sequence) -> tuple:
    """Hessian of a cubic divided by 4: coefficients of t0^2, t0 t1, t1^2."""
    a0, a1, a2, a3 = a
    return (3 * a0 * a2 - a1 * a1, 9 * a0 * a3 - a1 * a2, 3 * a1 * a3 - a2 * a2)


def is_perfect_cube(f: BinaryForm) -> bool:
    """f = L^3 over the algebraic closure iff its Hessian vanishes identically."""
    if f.degree != 3:
        raise WrongDegree("expected a cubic, got degree %d" % f.degree)
    if f.is_zero:
        raise ZeroForm("the zero form")
    return not any(hessian_coefficients(f.coeffs))


# ---------------------------------------------------------------------------
# projective points


@dataclass(frozen=True)
class ProjectivePoint:
    """Point of projective space; first nonzero coordinate scaled to 1."""

    field: Field
    coords: tuple

    def __post_init__(self):
        coords = tuple(self.field(c) for c in self.coords)
        for c in coords:
            if c:
                inv = self.field.one / c
                coords = tuple(x * inv for x in coords)
                break
        else:
            raise ZeroForm("all homogeneous coordinates vanish")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, field: Field, *coords) -> "ProjectivePoint":
        return cls(field, tuple(coords))

    @classmethod
    def affine(cls, field: Field, x) -> "ProjectivePoint":
        """(x : 1), or infinity for x is None."""
        if x is None:
            return cls(field, (field.one, field.zero))
        return cls(field, (field(x), field.one))

    @classmethod
    def infinity(cls, field: Field) -> "ProjectivePoint":
        return cls(field, (field.one, field.zero))

    @property
    def is_infinity(self) -> bool:
        return len(self.coords) == 2 and not self.coords[1]

    def value(self):
        """Affine coordinate x of (x : 1); None at infinity."""
        if len(self.coords) != 2:
            raise ValueError("value() is only defined on P^1")
        x, y = self.coords
        if not y:
            return None
        return x / y

    def integer_coords(self) -> tuple:
        """Primitive integer representative, for points over Q."""
        if not isinstance(self.field, Rationals):
            raise TypeError("integer form only exists over Q")
        from math import gcd, lcm

        den = 1
        for c in self.coords:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coords]
        g = 0
        for v in ints:
            g = gcd(g, v)
        ints = [v // g for v in ints]
        # sign: keep the first nonzero coordinate positive
        for v in ints:
            if v:
                if v < 0:
                    ints = [-w for w in ints]
                break
        return tuple(ints)

    def display(self) -> str:
        if isinstance(self.field, Rationals):
            return "(%s)" % ":".join(str(v) for v in self.integer_coords())
        return "(%s)" % ":".join(str(c) for c in self.coords)

    def __str__(self):
        return self.display()


def mobius(matrix: Sequence, point: ProjectivePoint) -> ProjectivePoint:
    """Apply ((a, b), (c, d)) to (x : y) as (a x + b y : c x + d y)."""
    (a, b), (c, d) = matrix
    x, y = point.coords
    return ProjectivePoint(point.field, (a * x + b * y, c * x + d * y))


# ---------------------------------------------------------------------------
# pencils


def plucker_of_rows(a: Sequence, b: Sequence) -> tuple:
    return tuple(a[i] * b[j] - a[j] * b[i] for i, j in PLUCKER_INDEX)


def plucker_quadric(q: Sequence):
    p01, p02, p03, p12, p13, p23 = q
    return p01 * p23 - p02 * p13 + p03 * p12


def newstead_vector(q: Sequence) -> tuple:
    """Raw Wronskian coefficients (p01, 2p02, 3p03 + p12, 2p13, p23).

    The fourth entry is often printed as -2 p31; p31 = -p13, same value.
    """
    p01, p02, p03, p12, p13, p23 = q
    return (p01, 2 * p02, 3 * p03 + p12, 2 * p13, p23)


def _rref(rows: list[list], field: Field) -> list[list]:
    rows = [list(r) for r in rows]
    ncols = len(rows[0])
    pivot_row = 0
    for col in range(ncols):
        if pivot_row == len(rows):
            break
        piv = next((r for r in range(pivot_row, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[pivot_row], rows[piv] = rows[piv], rows[pivot_row]
        inv = field.one / rows[pivot_row][col]
        rows[pivot_row] = [x * inv for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col]:
                c = rows[r][col]
                rows[r] = [x - c * y for x, y in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
    return rows


@dataclass(frozen=True, eq=False)
class Pencil:
    """A pencil of binary cubics, stored in reduced row echelon form."""

    field: Field
    rows: tuple

    def __post_init__(self):
        rows = _rref([list(r) for r in self.rows], self.field)
        if len(rows) != 2 or not any(rows[1]):
            raise LinearlyDependent("generators span less than a plane")
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))

    def __eq__(self, other):
        if not isinstance(other, Pencil):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    @property
    def generators(self) -> tuple[BinaryForm, BinaryForm]:
        return BinaryForm(self.field, self.rows[0]), BinaryForm(self.field, self.rows[1])

    def plucker(self) -> tuple:
        return plucker_of_rows(*self.rows)

    def contains(self, f: BinaryForm) -> bool:
        rows = _rref([list(self.rows[0]), list(self.rows[1]), list(f.coeffs)], self.field)
        return not any(rows[2])

    def __str__(self):
        f, g = self.generators
        return "<%s, %s>" % (f, g)


def make_pencil(f: BinaryForm, g: BinaryForm) -> Pencil:
    if f.field != g.field:
        raise FieldMismatch("forms over %s and %s" % (f.field, g.field))
    if f.degree != 3 or g.degree != 3:
        raise WrongDegree("pencils are spanned by two cubics")
    return Pencil(f.field, (f.coeffs, g.coeffs))


def pencil_from_coeffs(field: Field, a: Sequence, b: Sequence) -> Pencil:
    return make_pencil(BinaryForm(field, tuple(a)), BinaryForm(field, tuple(b)))


def pencil_from_plucker(field: Field, q: Sequence) -> Pencil:
    """Rebuild the plane from Plücker coordinates satisfying the quadric."""
    q = tuple(field(x) for x in q)
    if not any(q):
        raise ZeroForm("all Plücker coordinates vanish")
    if plucker_quadric(q):
        raise NotOnPluckerQuadric("p01 p23 - p02 p13 + p03 p12 != 0")
    full = {}
    for (i, j), v in zip(PLUCKER_INDEX, q):
        full[i, j] = v
        full[j, i] = -v
    for i in range(4):
        full[i, i] = field.zero
    i, j = next(PLUCKER_INDEX[k] for k, v in enumerate(q) if v)
    # a_i b - b_i a lies in the plane for each i; these two are independent
    u = tuple(full[i, k] for k in range(4))
    v = tuple(full[j, k] for k in range(4))
    return Pencil(field, (u, v))


def plucker(p: Pencil) -> tuple:
    return p.plucker()


def wronskian_point(p: Pencil) -> ProjectivePoint:
    vec = newstead_vector(p.plucker())
    if not any(vec):
        raise InternalError("Wronskian of a pencil of cubics cannot vanish")
    return ProjectivePoint(p.field, vec)


def weighted_quartic(raw: Sequence) -> tuple:
    """(c0, ..., c4) with raw = (c0, 4c1, 6c2, 4c3, c4)."""
    r0, r1, r2, r3, r4 = raw
    return (r0, r1 / 4, r2 / 6, r3 / 4, r4)


def raw_quartic(c: Sequence) -> tuple:
    c0, c1, c2, c3, c4 = c
    return (c0, 4 * c1, 6 * c2, 4 * c3, c4)


# ---------------------------------------------------------------------------
# cube members


@dataclass(frozen=True)
class CubeMembers:
    count: int
    points: tuple


def _binary_roots(h: BinaryForm, ext_field=None) -> list[ProjectivePoint]:
    """Distinct projective roots of a binary form of degree <= 2."""
    field = h.field
    e = h.degree
    if e == 0:
        return []
    if e == 1:
        a, b = h.coeffs
        # a t0 + b t1 = 0  ->  (t0 : t1) = (-b : a)
        return [ProjectivePoint(field, (-b, a))]
    if e != 2:
        raise FormError("degree > 2 not supported")
    a, b, c = h.coeffs
    if not a:
        # t1 (b t0 + c t1)
        roots = [ProjectivePoint(field, (field.one, field.zero))]
        if b:
            roots.append(ProjectivePoint(field, (-c, b)))
        return list(dict.fromkeys(roots))
    # a x^2 + b x + c with x = t0/t1
    disc = b * b - 4 * a * c
    if not disc:
        return [ProjectivePoint(field, (-b, 2 * a))]
    s = field.sqrt(disc)
    if s is None:
        if ext_field is None:
            return []
        K, s = ext_field(disc)
        a, b = K(a), K(b)
        return [ProjectivePoint(K, ((-b + s), 2 * a)), ProjectivePoint(K, ((-b - s), 2 * a))]
    return [ProjectivePoint(field, (-b + s, 2 * a)), ProjectivePoint(field, (-b - s, 2 * a))]


def _extension_with_root(field: Field):
    def build(disc):
        if isinstance(field, Rationals):
            K = field.quadratic_extension(disc)
            # disc = d * r^2 for the squarefree d defining K
            r = field.sqrt(disc / K.d)
            return K, K.make(0, r)
        K = field.quadratic_extension()
        r = field.sqrt(disc / K.d)
        return K, K.make(0, r)

    return build


def cube_members(p: Pencil, use_quadratic_extension: bool = False) -> CubeMembers:
    """Members (l : m) of the pencil with l f + m g a perfect cube.

    The three Hessian coefficients of l f + m g are binary quadratics in
    (l, m); cubes are their common roots, i.e. the roots of their gcd.
    """
    field = p.field
    (f, g) = p.rows
    # Hessian coefficient k as a binary quadratic in (l, m):
    # H_k(l f + m g) = l^2 H_k(f) + l m B_k(f, g) + m^2 H_k(g)
    hf = hessian_coefficients(f)
    hg = hessian_coefficients(g)
    hfg = hessian_coefficients(tuple(x + y for x, y in zip(f, g)))
    quads = [
        BinaryForm(field, (hf[k], hfg[k] - hf[k] - hg[k], hg[k])) for k in range(3)
    ]
    nonzero = [q for q in quads if not q.is_zero]
    if not nonzero:
        raise InternalError("every member of a pencil cannot be a cube")
    h = nonzero[0]
    for q in nonzero[1:]:
        h = gcd_forms(h, q)
    ext = None
    # a quadratic extension of an extension is not modelled; in-field roots only
    if use_quadratic_extension and (isinstance(field, (Rationals, PrimeField))):
        ext = _extension_with_root(field)
    roots = _binary_roots(h, ext)
    return CubeMembers(len(roots), tuple(roots))


def count_distinct_roots(h: BinaryForm) -> int:
    """Distinct roots over the algebraic closure of a binary form of degree <= 2."""
    e = h.degree
    if e <= 0:
        return 0
    if e == 1:
        return 1
    a, b, c = h.coeffs
    return 1 if not (b * b - 4 * a * c) else 2


def binomial_weights(n: int) -> tuple:
    return tuple(comb(n, i) for i in range(n + 1))
