"""Wall normal forms p_rho, the S4 action on the parameter rho, fibers of the
invariant map and of (B, rho) -> B . p_rho, and the orbit atlas.

p_rho = <t0^3 + rho t0 t1^2, rho t0^2 t1 + t1^3>, homogeneously
<s t0^3 + r t0 t1^2, r t0^2 t1 + s t1^3> for rho = (r : s).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

import sympy

from .fields import Field, ParseError, Rationals
from .forms import (
    NotOnPluckerQuadric,
    Pencil,
    ProjectivePoint,
    cube_members,
    gcd_forms,
    pencil_from_coeffs,
    pencil_from_plucker,
    plucker_of_rows,
    plucker_quadric,
)
from .groups import (
    ProjMatrix,
    act_pencil,
    pgl2_elements,
    require_finite,
    sigma2,
    sigma3,
    subgroup,
)
from .invariants import (
    SIX_CUBED,
    PencilInvariants,
    StabilityClass,
    classify_stability,
    newstead_point,
)


class AtlasError(ValueError):
    pass


class InfinityParam(AtlasError):
    pass


class PoleParam(AtlasError):
    pass


class NotInS4(AtlasError):
    pass


class NotSplit(AtlasError):
    def __init__(self, message: str, rational_roots=()):
        super().__init__(message)
        self.rational_roots = rational_roots


class NotStable(AtlasError):
    pass


class NotFoundOverThisField(AtlasError):
    pass


class UnclassifiableInput(AtlasError):
    pass


# ---------------------------------------------------------------------------
# parameters


@dataclass(frozen=True)
class WallParam:
    point: ProjectivePoint

    @classmethod
    def of(cls, field: Field, rho) -> "WallParam":
        """rho a field element (or int/Fraction), None for infinity."""
        return cls(ProjectivePoint.affine(field, rho))

    @classmethod
    def infinity(cls, field: Field) -> "WallParam":
        return cls(ProjectivePoint.infinity(field))

    @property
    def field(self) -> Field:
        return self.point.field

    @property
    def is_infinity(self) -> bool:
        return self.point.is_infinity

    def value(self):
        return self.point.value()

    @property
    def in_fwall(self) -> bool:
        if self.is_infinity:
            return True
        x = self.value()
        return x * (x * x - 1) * (x * x - 9) == 0

    def __str__(self):
        return "inf" if self.is_infinity else str(self.value())

    def sort_key(self):
        if self.is_infinity:
            return (1, 0)
        return (0, self.field.key(self.value()))


def _as_param(field: Field, rho) -> WallParam:
    if isinstance(rho, WallParam):
        return rho
    if isinstance(rho, ProjectivePoint):
        return WallParam(rho)
    return WallParam.of(field, rho)


def fwall(field: Field) -> list[WallParam]:
    """The six parameters 0, +-1, +-3, infinity (merged if they collide)."""
    out = {WallParam.of(field, x) for x in (0, 1, -1, 3, -3)}
    out.add(WallParam.infinity(field))
    return sorted(out, key=WallParam.sort_key)


def projective_line(field: Field) -> list[WallParam]:
    require_finite(field)
    pts = [WallParam.of(field, x) for x in field.elements()]
    pts.append(WallParam.infinity(field))
    return pts


# ---------------------------------------------------------------------------
# Wall pencils and closed forms


def wall_basis_rows(rho, field: Field | None = None) -> tuple:
    """Coefficient rows of (f_rho, g_rho) before row reduction."""
    if field is None:
        field = rho.field
    w = _as_param(field, rho)
    r, s = w.point.coords
    zero = field.zero
    return (s, zero, r, zero), (zero, r, zero, s)


def wall_pencil(rho, field: Field | None = None) -> Pencil:
    if field is None:
        field = rho.field
    return pencil_from_coeffs(field, *wall_basis_rows(rho, field))


def wall_closed_invariants(rho, field: Field | None = None) -> PencilInvariants:
    """(3 + rho^2, (rho^2-3)(rho^2-6rho-3)(rho^2+6rho-3)/216).

    These are the invariants at the basis (f_rho, g_rho); the row-reduced
    basis used by pencil_invariants differs from it by a scalar.
    """
    if field is None:
        field = rho.field if isinstance(rho, (WallParam, ProjectivePoint)) else Rationals()
    w = _as_param(field, rho)
    if w.is_infinity:
        raise InfinityParam("closed forms are affine in rho")
    x = w.value()
    x2 = x * x
    return PencilInvariants(3 + x2, (x2 - 3) * (x2 - 6 * x - 3) * (x2 + 6 * x - 3) / field(SIX_CUBED))


def wall_closed_invariants_homogeneous(rho, field: Field | None = None) -> PencilInvariants:
    """Closed forms in rho = (r : s) at the basis of wall_basis_rows:
    I' = r^2 + 3 s^2, J = (r^2-3s^2)(r^2-6rs-3s^2)(r^2+6rs-3s^2)/216.
    Defined at infinity as well."""
    if field is None:
        field = rho.field
    r, s = _as_param(field, rho).point.coords
    r2, s2, rs = r * r, s * s, r * s
    j = (r2 - 3 * s2) * (r2 - 6 * rs - 3 * s2) * (r2 + 6 * rs - 3 * s2) / field(SIX_CUBED)
    return PencilInvariants(r2 + 3 * s2, j)


# ---------------------------------------------------------------------------
# S4 acting on the parameter

# Coset representatives of D4 in S4 and the Moebius map each induces on rho
# under (A . f)(t) = f(A^-1 t).  D4 fixes every p_rho.
_COSET_MOBIUS = (
    ("e", ((1, 0), (0, 1))),
    ("sigma3", ((-1, -3), (1, -1))),
    ("sigma3^-1", ((1, -3), (1, 1))),
    ("sigma2", ((-1, 3), (1, 1))),
    ("sigma3*sigma2", ((1, 3), (1, -1))),
    ("sigma3^-1*sigma2", ((-1, 0), (0, 1))),
)


def coset_representatives(field: Field) -> dict[str, ProjMatrix]:
    s3, s2 = sigma3(field), sigma2(field)
    s3i = s3.inverse()
    return {
        "e": ProjMatrix.identity(field),
        "sigma3": s3,
        "sigma3^-1": s3i,
        "sigma2": s2,
        "sigma3*sigma2": s3 * s2,
        "sigma3^-1*sigma2": s3i * s2,
    }


_S4_CACHE: dict = {}


def _s4_data(field: Field):
    key = field.spec
    if key not in _S4_CACHE:
        s4 = subgroup("S4", field)
        d4 = subgroup("D4", field).as_set()
        reps = coset_representatives(field)
        mob = dict(_COSET_MOBIUS)
        table = {}
        for g in s4.elements:
            for name, r in reps.items():
                if (r.inverse() * g) in d4:
                    table[g] = (name, mob[name])
                    break
        _S4_CACHE[key] = (s4, table)
    return _S4_CACHE[key]


def s4_coset_name(sigma: ProjMatrix) -> str:
    _, table = _s4_data(sigma.field)
    if sigma not in table:
        raise NotInS4("matrix %s is not in the fixed S4" % sigma)
    return table[sigma][0]


def moebius_param(matrix, w: WallParam) -> WallParam:
    (a, b), (c, d) = matrix
    x, y = w.point.coords
    return WallParam(ProjectivePoint(w.field, (a * x + b * y, c * x + d * y)))


def s4_on_rho(sigma: ProjMatrix, rho) -> WallParam:
    field = sigma.field
    _, table = _s4_data(field)
    if sigma not in table:
        raise NotInS4("matrix %s is not in the fixed S4" % sigma)
    return moebius_param(table[sigma][1], _as_param(field, rho))


def s4_orbit_rho(rho, field: Field | None = None) -> set:
    """{rho, -rho, +-(rho+3)/(rho-1), +-(rho-3)/(rho+1)}; needs no sqrt(-1)."""
    if field is None:
        field = rho.field
    w = _as_param(field, rho)
    return {moebius_param(m, w) for _, m in _COSET_MOBIUS}


# ---------------------------------------------------------------------------
# fibers of the invariant map


def invariant_fiber_coeffs(x: ProjectivePoint) -> list:
    """Coefficients, low degree first in rho, of
    216 Y (3 + rho^2)^3 - X (rho^2-3)(rho^2-6rho-3)(rho^2+6rho-3) for x = (X : Y).
    The homogenized form has degree 6; missing top degree means roots at infinity.
    """
    field = x.field
    X, Y = x.coords
    rho = sympy.Symbol("rho")
    ip = sympy.Poly((3 + rho**2) ** 3, rho)
    jn = sympy.Poly((rho**2 - 3) * (rho**2 - 6 * rho - 3) * (rho**2 + 6 * rho - 3), rho)
    a = [field(int(c)) for c in reversed(ip.all_coeffs())]
    b = [field(int(c)) for c in reversed(jn.all_coeffs())]
    return [SIX_CUBED * Y * u - X * v for u, v in zip(a, b)]


def _eval_low_first(coeffs: list, x, zero):
    acc = zero
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _deflate(coeffs: list, root) -> list:
    """Divide by (rho - root); coefficients low degree first, exact division."""
    n = len(coeffs) - 1
    out = [None] * n
    carry = coeffs[n]
    for k in range(n - 1, -1, -1):
        out[k] = carry
        carry = coeffs[k] + carry * root
    return out


def _trim_top(coeffs: list) -> list:
    c = list(coeffs)
    while c and not c[-1]:
        c.pop()
    return c


def _root_multiplicity(coeffs: list, root, zero) -> int:
    m = 0
    c = _trim_top(coeffs)
    while len(c) > 1 and not _eval_low_first(c, root, zero):
        c = _deflate(c, root)
        m += 1
    return m


def invariant_fiber_rho(x: ProjectivePoint, field: Field | None = None) -> list[WallParam]:
    """Multiset of rho in P^1(field) with newstead_point(p_rho) = x."""
    field = field or x.field
    coeffs = invariant_fiber_coeffs(x)
    top = _trim_top(coeffs)
    out = []
    inf_mult = 6 - (len(top) - 1)
    if getattr(field, "order", None) is not None:
        for v in field.elements():
            m = _root_multiplicity(coeffs, v, field.zero)
            out.extend([WallParam.of(field, v)] * m)
    elif isinstance(field, Rationals):
        rho = sympy.Symbol("rho")
        poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(top)], rho)
        found = 0
        for fac, mult in poly.factor_list()[1]:
            if fac.degree() == 1:
                a, b = fac.all_coeffs()
                r = -b / a
                out.extend([WallParam.of(field, Fraction(int(r.p), int(r.q)))] * mult)
                found += mult
        if found != len(top) - 1:
            raise NotSplit("fiber over %s is not rational" % x, tuple(out))
    else:
        raise AtlasError("fiber root finding needs Q or a finite field")
    out.extend([WallParam.infinity(field)] * inf_mult)
    return sorted(out, key=WallParam.sort_key)


# ---------------------------------------------------------------------------
# fibers of (B, rho) -> B . p_rho


def _wall_rho_of(p: Pencil):
    """rho if the pencil is p_rho with rho not in {0, infinity}, else None."""
    (a0, a1, a2, a3), (b0, b1, b2, b3) = p.rows
    one = p.field.one
    if a0 == one and not a1 and not a3 and not b0 and b1 == one and not b2:
        if a2 and a2 * b3 == one:
            return a2
    return None


def _require_stable(p: Pencil) -> None:
    if classify_stability(p) is not StabilityClass.STABLE:
        raise NotStable("pencil is not stable")


def iter_wall_fiber(p: Pencil):
    """Yield (B, rho) with B . p_rho = p and rho outside F_Wall."""
    _require_stable(p)
    field = p.field
    require_finite(field)
    for B in pgl2_elements(field):
        q = act_pencil(B.inverse(), p)
        r = _wall_rho_of(q)
        if r is not None:
            w = WallParam.of(field, r)
            if not w.in_fwall:
                yield B, w


def phi_fiber(p: Pencil) -> list[tuple[ProjMatrix, WallParam]]:
    return list(iter_wall_fiber(p))


def wall_normal_form(p: Pencil) -> tuple[ProjMatrix, WallParam]:
    """Some (A, rho) with A . p_rho = p, rho a root of the invariant fiber."""
    _require_stable(p)
    require_finite(p.field)
    candidates = {w for w in invariant_fiber_rho(newstead_point(p)) if not w.in_fwall}
    if candidates:
        for B, w in iter_wall_fiber(p):
            if w in candidates:
                return B, w
    raise NotFoundOverThisField("no Wall form of this pencil is defined over %s" % p.field.spec)


# ---------------------------------------------------------------------------
# orbit atlas


NONSTABLE_LABELS = ("Z1", "Z2_0", "Z2_1", "Z2_2", "Z3_1", "Z3_2")

# Representative rows of each non-stable orbit.
REPRESENTATIVES = {
    "Z1": ((1, 0, 0, 0), (0, 1, 0, 0)),
    "Z2_0": ((1, 0, 0, 0), (0, 0, 1, 0)),
    "Z2_1": ((0, 0, 1, 0), (0, 1, 0, 0)),
    "Z2_2": ((1, 0, 0, 0), (0, 0, 0, 1)),
    "Z3_1": ((0, 0, 1, 0), (1, 1, 0, 0)),
    "Z3_2": ((1, 0, 0, 0), (0, 0, 1, 1)),
}

# Isotropy of each representative, and its number of points over F_q.
ISOTROPY = {
    "Z1": ("B2", lambda q: q * (q - 1)),
    "Z2_0": ("T", lambda q: q - 1),
    "Z2_1": ("N(T)", lambda q: 2 * (q - 1)),
    "Z2_2": ("N(T)", lambda q: 2 * (q - 1)),
    "Z3_1": ("Z/2", lambda q: 2),
    "Z3_2": ("Z/2", lambda q: 2),
}


def representative(label: str, field: Field) -> Pencil:
    if label not in REPRESENTATIVES:
        raise ParseError("unknown orbit label %r" % label)
    a, b = REPRESENTATIVES[label]
    return pencil_from_coeffs(field, a, b)


@dataclass(frozen=True)
class OrbitLabel:
    name: str
    point: ProjectivePoint | None = None

    def __str__(self):
        if self.name == "STABLE":
            return "STABLE%s" % self.point.display()
        return self.name

    @property
    def is_stable(self) -> bool:
        return self.name == "STABLE"


def classify_orbit(p: Pencil) -> OrbitLabel:
    field = p.field
    cls = classify_stability(p)
    if cls is StabilityClass.STABLE:
        return OrbitLabel("STABLE", newstead_point(p))
    f, g = p.generators
    if cls is StabilityClass.UNSTABLE:
        d = gcd_forms(f, g).degree
        if d == 2:
            return OrbitLabel("Z1")
        if d == 1:
            return OrbitLabel("Z2_0")
        raise UnclassifiableInput("unstable pencil whose generators have a common factor of degree %d" % d)
    if cls is StabilityClass.SEMISTABLE_PLUS:
        d = gcd_forms(f, g).degree
        if d == 2:
            return OrbitLabel("Z2_1")
        if d == 1:
            return OrbitLabel("Z3_1")
        raise UnclassifiableInput("point (216:1) with common factor of degree %d" % d)
    count = cube_members(p, use_quadratic_extension=True).count
    if count == 2:
        return OrbitLabel("Z2_2")
    if count == 1:
        return OrbitLabel("Z3_2")
    raise UnclassifiableInput("point (-216:1) with %d cube members over %s" % (count, field.spec))


# Relations cutting out the closures of Z2_2 and Z2_1, in Plücker coordinates.
def _z2_2_relations(q):
    p01, p02, p03, p12, p13, p23 = q
    return (
        p12 * (9 * p03 + p12) - 9 * p02 * p13,
        p12 * p12 - 9 * p01 * p23,
    )


def _z2_1_relations(q):
    p01, p02, p03, p12, p13, p23 = q
    return (
        p02 * p02 - p01 * p03 - p01 * p12,
        p02 * p03 - p01 * p13,
        p13 * p13 - p03 * p23 - p12 * p23,
        p03 * p13 - p02 * p23,
        p01 * p23 - p03 * p03,
    )


CLOSURE_RELATIONS = {"Z2_2": _z2_2_relations, "Z2_1": _z2_1_relations}


def closure_relation_values(label: str, q) -> tuple:
    if label not in CLOSURE_RELATIONS:
        raise ParseError("closure relations are listed for Z2_1 and Z2_2 only")
    if plucker_quadric(q):
        raise NotOnPluckerQuadric("p01 p23 - p02 p13 + p03 p12 != 0")
    return CLOSURE_RELATIONS[label](q)


def closure_predicates(label: str, q) -> bool:
    return not any(closure_relation_values(label, q))


# ---------------------------------------------------------------------------
# anharmonic parameter

ANHARMONIC = (
    ((1, 0), (0, 1)),
    ((-1, 1), (0, 1)),
    ((0, 1), (1, 0)),
    ((0, 1), (-1, 1)),
    ((1, -1), (1, 0)),
    ((1, 0), (1, -1)),
)


def anharmonic_lambda(rho, field: Field | None = None) -> ProjectivePoint:
    """lambda with 4 lambda - 2 = 3/rho - rho."""
    if field is None:
        field = rho.field if isinstance(rho, (WallParam, ProjectivePoint)) else Rationals()
    w = _as_param(field, rho)
    if w.is_infinity or not w.value():
        raise PoleParam("lambda has a pole at rho = 0 and rho = infinity")
    x = w.value()
    return ProjectivePoint.affine(field, (3 / x - x + 2) / field(4))


def anharmonic_orbit(lam: ProjectivePoint) -> set:
    from .forms import mobius

    return {mobius(m, lam) for m in ANHARMONIC}


# ---------------------------------------------------------------------------
# pencil text syntax


_LIST_RE = re.compile(r"^\[(.*)\]$")


def _parse_list(text: str, field: Field, n: int) -> tuple:
    m = _LIST_RE.match(text.strip())
    if not m:
        raise ParseError("expected a bracketed list, got %r" % text)
    items = [t.strip() for t in m.group(1).split(",")]
    if len(items) != n:
        raise ParseError("expected %d entries, got %d" % (n, len(items)))
    return tuple(field.parse(t) for t in items)


def parse_param(text: str, field: Field) -> WallParam:
    t = text.strip()
    if t.lower() in ("inf", "infinity", "oo", "∞"):
        return WallParam.infinity(field)
    return WallParam.of(field, field.parse(t))


def parse_pencil_with_plucker(text: str, field: Field) -> tuple[Pencil, tuple]:
    """The pencil and the Plücker vector of the basis exactly as written."""
    t = text.strip()
    try:
        if t.startswith("wall:"):
            w = parse_param(t[5:], field)
            if w.is_infinity:
                rows = wall_basis_rows(w, field)
            else:
                x, o, z = w.value(), field.one, field.zero
                rows = ((o, z, x, z), (z, x, z, o))
        elif t.startswith("rep:"):
            label = t[4:].strip()
            if label not in REPRESENTATIVES:
                raise ParseError("unknown orbit label %r" % label)
            rows = tuple(tuple(field(x) for x in r) for r in REPRESENTATIVES[label])
        elif t.startswith("plucker="):
            q = _parse_list(t[len("plucker="):], field, 6)
            return pencil_from_plucker(field, q), q
        else:
            parts = {}
            for part in t.split(";"):
                if part.strip():
                    if "=" not in part:
                        raise ParseError("expected f=[..];g=[..]")
                    k, v = part.split("=", 1)
                    parts[k.strip()] = v
            if set(parts) != {"f", "g"}:
                raise ParseError("expected f=[..];g=[..]")
            rows = (_parse_list(parts["f"], field, 4), _parse_list(parts["g"], field, 4))
        return pencil_from_coeffs(field, *rows), plucker_of_rows(*rows)
    except ParseError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError("cannot parse pencil %r: %s" % (text, exc)) from exc


def parse_pencil(text: str, field: Field) -> Pencil:
    """f=[..];g=[..] | plucker=[..] | wall:<rho> | rep:<label>."""
    return parse_pencil_with_plucker(text, field)[0]
