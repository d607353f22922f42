"""Finitely presented graded commutative rings over Z.

A presentation lists generators with positive degrees, homogeneous integer
relations, and relation families indexed by j >= start which are expanded up
to the degree being examined.  The degree-d piece is the cokernel of the
lattice spanned by (monomial x relation) products of degree d.

Polynomials are dicts {exponent tuple: int}.  The engine is plainly
commutative; this is exact for the presentations here because the only odd
cohomological generator nu' satisfies 2 nu' = 0.

Text format, one clause per ';':

    grading cohomology;              (optional, default chow)
    gen <name> <degree>;
    rel <integer polynomial>;
    family <template in j> j>=<start> degbound;
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import sympy

from .fields import ParseError
from .lattice import HermiteLattice, cokernel, solve_integer

DEFAULT_DEGREE_BOUND = 8


class ChowError(ValueError):
    pass


class UnknownName(ChowError):
    pass


class NotHomogeneous(ChowError):
    pass


class DegreeMismatch(ChowError):
    pass


class NoSolution(ChowError):
    pass


class NonUnique(ChowError):
    pass


# ---------------------------------------------------------------------------
# polynomial helpers

Poly = dict


def poly_add(a: Poly, b: Poly, c: int = 1) -> Poly:
    out = dict(a)
    for m, x in b.items():
        s = out.get(m, 0) + c * x
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for m1, x in a.items():
        for m2, y in b.items():
            m = tuple(i + j for i, j in zip(m1, m2))
            s = out.get(m, 0) + x * y
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return out


def poly_scale(a: Poly, c: int) -> Poly:
    return {m: c * x for m, x in a.items()} if c else {}


def poly_pow(a: Poly, n: int, nvars: int) -> Poly:
    out = {(0,) * nvars: 1}
    for _ in range(n):
        out = poly_mul(out, a)
    return out


def freeze(p: Poly) -> tuple:
    return tuple(sorted((m, x) for m, x in p.items() if x))


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class Family:
    template: str
    start: int = 1


@dataclass(frozen=True)
class GradedPresentation:
    name: str
    gens: tuple  # ((name, degree), ...)
    relations: tuple  # frozen polys
    families: tuple = ()
    grading: str = "chow"

    # -- basic data --------------------------------------------------------

    @property
    def names(self) -> tuple:
        return tuple(n for n, _ in self.gens)

    @property
    def degrees(self) -> tuple:
        return tuple(d for _, d in self.gens)

    @property
    def nvars(self) -> int:
        return len(self.gens)

    def one(self) -> Poly:
        return {(0,) * self.nvars: 1}

    def gen(self, name: str) -> Poly:
        if name not in self.names:
            raise UnknownName("no generator %r in %s" % (name, self.name))
        i = self.names.index(name)
        return {tuple(int(k == i) for k in range(self.nvars)): 1}

    def monomial_degree(self, m: tuple) -> int:
        return sum(e * d for e, d in zip(m, self.degrees))

    def degree_of(self, p: Poly) -> int | None:
        """Degree of a homogeneous polynomial; None for zero."""
        degs = {self.monomial_degree(m) for m, x in p.items() if x}
        if not degs:
            return None
        if len(degs) > 1:
            raise NotHomogeneous("mixed degrees %s in %s" % (sorted(degs), self.format(p)))
        return degs.pop()

    # -- parsing and printing ----------------------------------------------

    def parse(self, expr) -> Poly:
        if isinstance(expr, dict):
            return {m: x for m, x in expr.items() if x}
        if isinstance(expr, int):
            return poly_scale(self.one(), expr)
        return _parse_poly(str(expr), self.names)

    def format(self, p: Poly) -> str:
        return format_poly(p, self.names, self.degrees)

    # -- relations ---------------------------------------------------------

    def expand_family(self, fam: Family, bound: int) -> list[Poly]:
        out = []
        last = None
        j = fam.start
        while True:
            p = _parse_poly(fam.template, self.names, {"j": j})
            d = self.degree_of(p)
            if d is None:
                raise ChowError("family %r vanishes at j=%d" % (fam.template, j))
            if last is not None and d <= last:
                raise ChowError("family %r degree does not grow with j" % fam.template)
            if d > bound:
                return out
            out.append(p)
            last = d
            j += 1

    def relations_up_to(self, bound: int) -> list[Poly]:
        rels = [dict(r) for r in self.relations]
        for fam in self.families:
            rels.extend(self.expand_family(fam, bound))
        return rels

    def monomials(self, d: int) -> list[tuple]:
        return _monomials(self.degrees, d)

    def to_text(self) -> str:
        parts = []
        if self.grading != "chow":
            parts.append("grading %s" % self.grading)
        parts += ["gen %s %d" % g for g in self.gens]
        parts += ["rel %s" % self.format(dict(r)) for r in self.relations]
        parts += ["family %s j>=%d degbound" % (f.template, f.start) for f in self.families]
        return ";\n".join(parts) + ";"


def _sym_locals(names: Sequence[str], extra: Mapping | None = None) -> dict:
    loc = {n: sympy.Symbol(n) for n in names}
    if extra:
        loc.update({k: sympy.Integer(v) for k, v in extra.items()})
    return loc


def _parse_poly(text: str, names: Sequence[str], extra: Mapping | None = None) -> Poly:
    loc = _sym_locals(names, extra)
    try:
        expr = sympy.sympify(text, locals=loc)
    except (sympy.SympifyError, SyntaxError, TypeError) as exc:
        raise ParseError("cannot parse %r: %s" % (text, exc)) from exc
    unknown = expr.free_symbols - {loc[n] for n in names}
    if unknown:
        raise UnknownName("unknown symbols %s in %r" % (sorted(map(str, unknown)), text))
    if not names:
        if not expr.is_Integer:
            raise ParseError("expected an integer, got %r" % text)
        return {(): int(expr)} if expr else {}
    try:
        poly = sympy.Poly(expr, *[loc[n] for n in names], domain=sympy.ZZ)
    except (sympy.PolynomialError, sympy.polys.polyerrors.CoercionFailed) as exc:
        raise ParseError("%r is not an integer polynomial: %s" % (text, exc)) from exc
    return {tuple(int(e) for e in m): int(c) for m, c in poly.terms() if c}


def format_poly(p: Poly, names: Sequence[str], degrees: Sequence[int] | None = None) -> str:
    if not p:
        return "0"
    degrees = degrees or [1] * len(names)

    def key(item):
        m, _ = item
        return (sum(e * d for e, d in zip(m, degrees)), tuple(-e for e in m))

    pieces = []
    for m, c in sorted(p.items(), key=key):
        factors = []
        for n, e in zip(names, m):
            if e == 1:
                factors.append(n)
            elif e > 1:
                factors.append("%s^%d" % (n, e))
        mono = "*".join(factors)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = "%d*%s" % (abs(c), mono)
        sign = "-" if c < 0 else "+"
        pieces.append((sign, body))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += " %s %s" % (sign, body)
    return out


@functools.lru_cache(maxsize=None)
def _monomials(degrees: tuple, d: int) -> list[tuple]:
    if d < 0:
        return []
    out = []

    def rec(i, remaining, acc):
        if i == len(degrees):
            if remaining == 0:
                out.append(tuple(acc))
            return
        for e in range(remaining // degrees[i] + 1):
            acc.append(e)
            rec(i + 1, remaining - e * degrees[i], acc)
            acc.pop()

    rec(0, d, [])
    return sorted(out, reverse=True)


_CLAUSE_GEN = re.compile(r"^gen\s+([A-Za-z_][A-Za-z0-9_]*)\s+(\d+)$")
_CLAUSE_FAMILY = re.compile(r"^family\s+(.+?)\s+j\s*>=\s*(\d+)\s+degbound$")


def parse_presentation(text: str, name: str = "custom") -> GradedPresentation:
    gens = []
    rel_texts = []
    families = []
    grading = "chow"
    for raw in text.split(";"):
        clause = " ".join(raw.split())
        if not clause:
            continue
        if clause.startswith("grading "):
            grading = clause.split()[1]
            if grading not in ("chow", "cohomology"):
                raise ParseError("unknown grading %r" % grading)
            continue
        m = _CLAUSE_GEN.match(clause)
        if m:
            deg = int(m.group(2))
            if deg < 1:
                raise ParseError("generator degrees must be positive")
            gens.append((m.group(1), deg))
            continue
        if clause.startswith("rel "):
            rel_texts.append(clause[4:])
            continue
        m = _CLAUSE_FAMILY.match(clause)
        if m:
            families.append(Family(m.group(1), int(m.group(2))))
            continue
        raise ParseError("cannot parse clause %r" % clause)
    if len({g for g, _ in gens}) != len(gens):
        raise ParseError("duplicate generator names")
    base = GradedPresentation(name, tuple(gens), (), tuple(families), grading)
    rels = []
    for t in rel_texts:
        p = base.parse(t)
        base.degree_of(p)
        if p:
            rels.append(freeze(p))
    pres = GradedPresentation(name, tuple(gens), tuple(rels), tuple(families), grading)
    for fam in families:
        pres.expand_family(fam, fam.start)  # validates template and homogeneity
    return pres


# ---------------------------------------------------------------------------
# graded pieces


def relation_multiples(pres: GradedPresentation, d: int) -> tuple[list, list[dict]]:
    """Degree-d monomial basis and the sparse (monomial x relation) vectors."""
    monos = pres.monomials(d)
    index = {m: i for i, m in enumerate(monos)}
    vecs = []
    for rel in pres.relations_up_to(d):
        e = pres.degree_of(rel)
        if e is None or e > d:
            continue
        for m in pres.monomials(d - e):
            vec: dict = {}
            for rm, c in rel.items():
                k = index[tuple(a + b for a, b in zip(rm, m))]
                vec[k] = vec.get(k, 0) + c
            vecs.append({k: c for k, c in vec.items() if c})
    return monos, vecs


@functools.lru_cache(maxsize=512)
def _degree_lattice(pres: GradedPresentation, d: int) -> tuple:
    monos, vecs = relation_multiples(pres, d)
    index = {m: i for i, m in enumerate(monos)}
    lat = HermiteLattice(len(monos))
    for vec in vecs:
        lat.insert(vec)
    lat.finalize()
    return monos, index, lat


def _prime_power_split(n: int) -> list[int]:
    return [int(p) ** int(e) for p, e in sorted(sympy.factorint(n).items())]


@dataclass(frozen=True)
class GradedPiece:
    degree: int
    free_rank: int
    invariant_factors: tuple  # divisibility chain, all > 1
    monomials: tuple
    generators: tuple  # polynomials generating the cyclic summands (torsion first)
    presentation_name: str = ""

    @property
    def elementary_divisors(self) -> tuple:
        out = []
        for n in self.invariant_factors:
            out.extend(_prime_power_split(n))
        return tuple(sorted(out, key=lambda q: (min(sympy.factorint(q)), q)))

    @property
    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for n in self.invariant_factors:
            out *= n
        return out

    def describe(self, elementary: bool = True) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append("Z^%d" % self.free_rank)
        tors = self.elementary_divisors if elementary else self.invariant_factors
        for n, group in itertools.groupby(tors):
            k = len(list(group))
            parts.append("Z/%d" % n if k == 1 else "(Z/%d)^%d" % (n, k))
        return " + ".join(parts) if parts else "0"

    def __str__(self):
        return self.describe()


def _piece_cokernel(pres: GradedPresentation, d: int) -> tuple:
    monos, index, lat = _degree_lattice(pres, d)
    return monos, index, cokernel(lat)


def graded_piece(pres: GradedPresentation, d: int) -> GradedPiece:
    if d < 0:
        return GradedPiece(d, 0, (), (), (), pres.name)
    monos, _, cok = _piece_cokernel(pres, d)
    gens = tuple({monos[i]: c for i, c in g.items()} for g in cok.generators)
    return GradedPiece(d, cok.free, tuple(cok.torsion), tuple(monos), gens, pres.name)


def _vector(pres: GradedPresentation, p: Poly, d: int) -> dict:
    _, index, _ = _degree_lattice(pres, d)
    return {index[m]: c for m, c in p.items() if c}


def _homogeneous(pres: GradedPresentation, x, d: int | None) -> tuple[Poly, int | None]:
    p = pres.parse(x)
    deg = pres.degree_of(p)
    if d is not None and deg is not None and deg != d:
        raise NotHomogeneous("element has degree %d, expected %d" % (deg, d))
    return p, deg if deg is not None else d


def in_ideal(pres: GradedPresentation, x, d: int | None = None) -> bool:
    p, deg = _homogeneous(pres, x, d)
    if not p:
        return True
    _, _, lat = _degree_lattice(pres, deg)
    return lat.contains(_vector(pres, p, deg))


def normal_form(pres: GradedPresentation, x, d: int | None = None) -> Poly:
    """Canonical representative of x modulo the relations in its degree."""
    p, deg = _homogeneous(pres, x, d)
    if not p:
        return {}
    monos, _, lat = _degree_lattice(pres, deg)
    red = lat.reduce(_vector(pres, p, deg))
    return {monos[i]: c for i, c in red.items()}


def equal_in_ring(pres: GradedPresentation, x, y) -> bool:
    p, q = pres.parse(x), pres.parse(y)
    return in_ideal(pres, poly_add(p, q, -1))


def quotient(pres: GradedPresentation, extra: Iterable, name: str | None = None) -> GradedPresentation:
    rels = list(pres.relations)
    for x in extra:
        p = pres.parse(x)
        pres.degree_of(p)
        if p and freeze(p) not in rels:
            rels.append(freeze(p))
    return GradedPresentation(name or pres.name + "/extra", pres.gens, tuple(rels), pres.families, pres.grading)


def pieces_equal(a: GradedPresentation, b: GradedPresentation, bound: int) -> bool:
    return all(
        (graded_piece(a, d).free_rank, graded_piece(a, d).invariant_factors)
        == (graded_piece(b, d).free_rank, graded_piece(b, d).invariant_factors)
        for d in range(bound + 1)
    )


# ---------------------------------------------------------------------------
# ring maps


@dataclass(frozen=True)
class RingMap:
    source: GradedPresentation
    target: GradedPresentation
    images: tuple  # frozen polys in the target, one per source generator
    degree_scale: int = 1
    name: str = ""

    @classmethod
    def build(
        cls,
        source: GradedPresentation,
        target: GradedPresentation,
        images: Mapping[str, object],
        degree_scale: int = 1,
        name: str = "",
    ) -> "RingMap":
        extra = set(images) - set(source.names)
        if extra:
            raise UnknownName("no source generators %s" % sorted(extra))
        frozen = []
        for g in source.names:
            p = target.parse(images.get(g, 0))
            frozen.append(freeze(p))
        return cls(source, target, tuple(frozen), degree_scale, name)

    def check_degrees(self) -> None:
        for (g, deg), img in zip(self.source.gens, self.images):
            d = self.target.degree_of(dict(img))
            if d is not None and d != self.degree_scale * deg:
                raise DegreeMismatch(
                    "%s has degree %d but its image %s has degree %d"
                    % (g, deg, self.target.format(dict(img)), d)
                )

    def __call__(self, x) -> Poly:
        p = self.source.parse(x)
        imgs = [dict(i) for i in self.images]
        out: Poly = {}
        cache: dict = {}
        for m, c in p.items():
            term = self.target.one()
            for k, e in enumerate(m):
                if e:
                    key = (k, e)
                    if key not in cache:
                        cache[key] = poly_pow(imgs[k], e, self.target.nvars)
                    term = poly_mul(term, cache[key])
            out = poly_add(out, term, c)
        return out

    def failing_relations(self, bound: int = DEFAULT_DEGREE_BOUND) -> list[str]:
        self.check_degrees()
        bad = []
        for rel in self.source.relations_up_to(bound):
            img = self(rel)
            deg = self.source.degree_of(rel)
            if img and not in_ideal(self.target, img, deg * self.degree_scale):
                bad.append(self.source.format(rel))
        return bad


def verify_map(m: RingMap, bound: int = DEFAULT_DEGREE_BOUND) -> bool:
    return not m.failing_relations(bound)


def pushforward_projection(pres: GradedPresentation, y, phi_star_one) -> Poly:
    """phi_*(phi^* y) = y . phi_*(1)."""
    return poly_mul(pres.parse(y), pres.parse(phi_star_one))


def solve_by_pullbacks(
    source: GradedPresentation,
    d: int,
    basis: Sequence,
    constraints: Sequence[tuple],
) -> Poly:
    """The class x = sum c_i basis_i of degree d, unique modulo the relations,
    with m(x) = value in m.target for every (m, value) in constraints."""
    polys = [source.parse(b) for b in basis]
    for b in polys:
        deg = source.degree_of(b)
        if deg is not None and deg != d:
            raise NotHomogeneous("basis element of degree %d, expected %d" % (deg, d))
    k = len(polys)
    blocks = []
    for m, value in constraints:
        e = d * m.degree_scale
        monos, index, lat = _degree_lattice(m.target, e)
        v = m.target.parse(value)
        if m.target.degree_of(v) not in (None, e):
            raise NotHomogeneous("constraint value has the wrong degree")
        images = [m(b) for b in polys]
        lat_rows = [lat.rows[j] for j in sorted(lat.rows)]
        blocks.append((len(monos), index, images, lat_rows, v))
    nvars = k + sum(len(b[3]) for b in blocks)
    A, rhs = [], []
    offset = k
    for size, index, images, lat_rows, v in blocks:
        rows = [[0] * nvars for _ in range(size)]
        for i, img in enumerate(images):
            for mono, c in img.items():
                rows[index[mono]][i] += c
        for r, lrow in enumerate(lat_rows):
            for j, c in lrow.items():
                rows[j][offset + r] -= c
        b = [0] * size
        for mono, c in v.items():
            b[index[mono]] += c
        A.extend(rows)
        rhs.extend(b)
        offset += len(lat_rows)
    if not A:
        raise NonUnique("no constraints given")
    sol = solve_integer(A, rhs)
    if sol is None:
        raise NoSolution("constraints are inconsistent on the given basis")
    for kv in sol.kernel:
        diff: Poly = {}
        for c, b in zip(kv[:k], polys):
            diff = poly_add(diff, b, c)
        if diff and not in_ideal(source, diff, d):
            raise NonUnique("solution is not unique: %s is unconstrained" % source.format(diff))
    x: Poly = {}
    for c, b in zip(sol.particular[:k], polys):
        x = poly_add(x, b, c)
    return normal_form(source, x, d)


# ---------------------------------------------------------------------------
# built-in presentations and maps

_S4_PT_TEXT = """
gen alpha 1; gen nu 3; gen zeta1 2; gen eta 2;
rel 2*alpha; rel 2*nu; rel 4*zeta1; rel 3*eta;
family alpha*nu**j - alpha**(j+1)*(zeta1+alpha**2)**j j>=1 degbound;
"""

_S4_P1_TEXT = _S4_PT_TEXT + """
gen zeta 1; gen c1V 1; gen c2V 2;
rel zeta**2 + c1V*zeta + c2V;
"""

BUILTIN_TEXT = {
    "PGL2_PT": "gen c2 2; gen c3 3; rel 2*c3;",
    "S4_PT": _S4_PT_TEXT,
    "S4_COHOM": """
grading cohomology;
gen alpha_h 2; gen nu_h 3; gen zeta1_h 4; gen eta_h 4;
rel 2*alpha_h; rel 2*nu_h; rel 4*zeta1_h; rel 3*eta_h;
family alpha_h*nu_h**(2*j) - alpha_h**(j+1)*(zeta1_h+alpha_h**2)**j j>=1 degbound;
""",
    "D8_COHOM": """
grading cohomology;
gen alpha_d 2; gen beta_d 2; gen nu_d 3; gen zeta_d 4;
rel 2*alpha_d; rel 2*beta_d; rel 2*nu_d; rel 4*zeta_d;
rel alpha_d**2 - alpha_d*beta_d; rel nu_d**2 - beta_d*zeta_d;
""",
    "S4_P1": _S4_P1_TEXT,
    "S4_P1_MINUS_F": _S4_P1_TEXT + "rel 3*zeta; rel 3*c1V;",
    "FINAL": """
gen alpha 1; gen zeta1 2; gen zeta 1;
rel 2*alpha; rel 4*zeta1; rel 3*zeta; rel alpha**2;
""",
    "D8_P1_SUB": """
gen xi 1; gen beta_d 1; gen alpha_d 1; gen zeta_d 2;
rel 2*alpha_d; rel 2*beta_d; rel 4*zeta_d;
rel alpha_d**2 - alpha_d*beta_d; rel xi**2 + beta_d*xi;
""",
    # auxiliary targets for the pullback constraints
    "D8_PT": """
gen beta_d 1; gen alpha_d 1; gen zeta_d 2;
rel 2*alpha_d; rel 2*beta_d; rel 4*zeta_d; rel alpha_d**2 - alpha_d*beta_d;
""",
    "P1": "gen h 1; rel h**2;",
}

BUILTIN_NAMES = (
    "PGL2_PT",
    "S4_PT",
    "S4_COHOM",
    "D8_COHOM",
    "S4_P1",
    "S4_P1_MINUS_F",
    "FINAL",
    "D8_P1_SUB",
)


@functools.lru_cache(maxsize=None)
def _builtin_cached(name: str) -> GradedPresentation:
    return parse_presentation(BUILTIN_TEXT[name], name)


def builtin(name: str, overrides: Mapping | None = None) -> GradedPresentation:
    """Built-in presentation; overrides maps names to replacement text or
    presentations (used to inject corrupted data in harness tests)."""
    if overrides and name in overrides:
        o = overrides[name]
        return o if isinstance(o, GradedPresentation) else parse_presentation(o, name)
    if name not in BUILTIN_TEXT:
        raise UnknownName("unknown presentation %r; known: %s" % (name, ", ".join(BUILTIN_TEXT)))
    return _builtin_cached(name)


# (source, target, images, degree_scale)
BUILTIN_MAPS = {
    "PGL2_PT->FINAL": ("PGL2_PT", "FINAL", {"c2": "zeta1", "c3": "alpha*zeta1"}, 1),
    "S4_PT->D8_COHOM": (
        "S4_PT",
        "D8_COHOM",
        {"alpha": "alpha_d", "zeta1": "zeta_d + beta_d**2", "nu": "nu_d**2", "eta": 0},
        2,
    ),
    "S4_P1->D8_P1_SUB": (
        "S4_P1",
        "D8_P1_SUB",
        {
            "alpha": "alpha_d",
            "zeta1": "zeta_d + beta_d**2",
            "nu": "beta_d*zeta_d",
            "eta": 0,
            "zeta": "xi",
            "c1V": "beta_d",
            "c2V": 0,
        },
        1,
    ),
    "f1*": ("D8_P1_SUB", "D8_PT", {"xi": "-beta_d", "beta_d": "beta_d", "alpha_d": "alpha_d", "zeta_d": "zeta_d"}, 1),
    "f2*": ("D8_P1_SUB", "D8_PT", {"xi": 0, "beta_d": "beta_d", "alpha_d": "alpha_d", "zeta_d": "zeta_d"}, 1),
    "forget": ("D8_P1_SUB", "P1", {"xi": "h"}, 1),
}


def builtin_map(name: str, overrides: Mapping | None = None) -> RingMap:
    if name not in BUILTIN_MAPS:
        raise UnknownName("unknown map %r; known: %s" % (name, ", ".join(BUILTIN_MAPS)))
    src, tgt, images, scale = BUILTIN_MAPS[name]
    return RingMap.build(builtin(src, overrides), builtin(tgt, overrides), images, scale, name)
