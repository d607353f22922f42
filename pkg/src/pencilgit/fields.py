"""Exact fields: the rationals, prime fields F_p (p > 3) and quadratic extensions.

Rational elements are plain :class:`fractions.Fraction` values.  Prime-field
elements are :class:`ModP`, extension elements are :class:`QuadElement`
(``a + b*s`` with ``s**2 = d``).  Every field descriptor exposes the same small
surface (``zero``, ``one``, ``__call__`` for coercion, ``sqrt``, ``parse``,
``elements`` for finite fields) so the geometry code never branches on type.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt


class FieldError(ValueError):
    """Base class for malformed field specifications."""


class NotPrime(FieldError):
    pass


class CharTwoOrThree(FieldError):
    pass


class SquareDiscriminant(FieldError):
    pass


class ParseError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# element types


class ModP:
    __slots__ = ("v", "field")

    def __init__(self, v: int, field: "PrimeField"):
        self.v = v
        self.field = field

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.field.p != self.field.p:
                raise TypeError("mixing elements of different prime fields")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            p = self.field.p
            return other.numerator * pow(other.denominator, -1, p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ModP((self.v + o) % self.field.p, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ModP((self.v - o) % self.field.p, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ModP((o - self.v) % self.field.p, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ModP((self.v * o) % self.field.p, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP((-self.v) % self.field.p, self.field)

    def __pos__(self):
        return self

    def inverse(self) -> "ModP":
        if self.v == 0:
            raise ZeroDivisionError("inverse of zero in F_%d" % self.field.p)
        return ModP(pow(self.v, -1, self.field.p), self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.field.p
        if o % p == 0:
            raise ZeroDivisionError("division by zero in F_%d" % p)
        return ModP(self.v * pow(o, -1, p) % p, self.field)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ModP(o % self.field.p, self.field) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return ModP(pow(self.v, n, self.field.p), self.field)

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.field.p == other.field.p and self.v == other.v
        if isinstance(other, (int, Fraction)):
            o = self._coerce(other)
            return (self.v - o) % self.field.p == 0
        return NotImplemented

    def __hash__(self):
        return hash(("F", self.field.p, self.v))

    def __bool__(self):
        return self.v != 0

    def lift(self) -> int:
        """Symmetric integer representative in (-p/2, p/2]."""
        p = self.field.p
        return self.v - p if self.v > p // 2 else self.v

    def __repr__(self):
        return "%d (mod %d)" % (self.v, self.field.p)

    def __str__(self):
        return str(self.v)


class QuadElement:
    """``a + b*s`` over a base field, where ``s**2 = field.d``."""

    __slots__ = ("a", "b", "field")

    def __init__(self, a, b, field: "QuadraticExtension"):
        self.a = a
        self.b = b
        self.field = field

    def _coerce(self, other):
        if isinstance(other, QuadElement):
            if other.field != self.field:
                raise TypeError("mixing elements of different extensions")
            return other.a, other.b
        if isinstance(other, (int, Fraction, ModP)):
            return self.field.base(other), self.field.base.zero
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElement(self.a + o[0], self.b + o[1], self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElement(self.a - o[0], self.b - o[1], self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElement(o[0] - self.a, o[1] - self.b, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.a, self.b
        c, e = o
        d = self.field.d
        return QuadElement(a * c + d * b * e, a * e + b * c, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return QuadElement(-self.a, -self.b, self.field)

    def __pos__(self):
        return self

    def conjugate(self) -> "QuadElement":
        return QuadElement(self.a, -self.b, self.field)

    def norm(self):
        return self.a * self.a - self.field.d * self.b * self.b

    def inverse(self) -> "QuadElement":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in %s" % self.field)
        return QuadElement(self.a / n, -self.b / n, self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * QuadElement(o[0], o[1], self.field).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElement(o[0], o[1], self.field) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadElement):
            return other.field == self.field and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction, ModP)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash(("Q2", self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __repr__(self):
        return "QuadElement(%s)" % self

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return "%s*s" % (self.b,)
        b = str(self.b)
        sign = "" if b.startswith("-") else "+"
        return "%s%s%s*s" % (self.a, sign, b)


# ---------------------------------------------------------------------------
# field descriptors

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def _parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL.match(text):
        raise ParseError("not a rational number: %r" % text)
    value = Fraction(text)
    return value


class Field:
    """Shared behaviour of the concrete fields."""

    is_finite = False
    characteristic = 0
    order = None
    spec = ""

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return "Field(%r)" % self.spec

    def __str__(self):
        return self.spec

    def is_square(self, x) -> bool:
        return self.sqrt(x) is not None

    def elements(self):
        raise TypeError("%s is infinite" % self.spec)

    def to_json(self, x):
        return str(x)


class Rationals(Field):
    spec = "q"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError("cannot coerce %r into Q" % (x,))

    def contains(self, x) -> bool:
        return isinstance(x, (int, Fraction))

    def parse(self, text: str) -> Fraction:
        return _parse_rational(text)

    def sqrt(self, x):
        x = self(x)
        if x < 0:
            return None
        n, d = x.numerator, x.denominator
        rn, rd = isqrt(n), isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
        return None

    def quadratic_extension(self, disc=None) -> "QuadraticExtension":
        if disc is None:
            raise FieldError("Q has no designated quadratic extension; pass a discriminant")
        d = squarefree_part(self(disc))
        return QuadraticExtension(self, d)

    def key(self, x):
        return (x,)


def squarefree_part(x: Fraction) -> int:
    """Squarefree integer in the same square class as the nonzero rational x."""
    n = x.numerator * x.denominator
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    f = 2
    while f * f <= n:
        while n % (f * f) == 0:
            n //= f * f
        if n % f == 0:
            out *= f
            n //= f
        f += 1
    return sign * out * n


class PrimeField(Field):
    is_finite = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrime("%d is not prime" % p)
        if p in (2, 3):
            raise CharTwoOrThree("characteristic %d is excluded" % p)
        self.p = p
        self.characteristic = p
        self.order = p
        self.spec = "fp:%d" % p
        self.zero = ModP(0, self)
        self.one = ModP(1, self)
        self._elements = tuple(ModP(i, self) for i in range(p))

    def __call__(self, x) -> ModP:
        if isinstance(x, ModP):
            if x.field.p != self.p:
                raise TypeError("element of F_%d is not in F_%d" % (x.field.p, self.p))
            return x
        if isinstance(x, int):
            return self._elements[x % self.p]
        if isinstance(x, Fraction):
            return ModP(x.numerator * pow(x.denominator, -1, self.p) % self.p, self)
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError("cannot coerce %r into F_%d" % (x, self.p))

    def contains(self, x) -> bool:
        return isinstance(x, ModP) and x.field.p == self.p

    def parse(self, text: str) -> ModP:
        value = _parse_rational(text)
        if value.denominator % self.p == 0:
            raise ParseError("denominator divisible by %d" % self.p)
        return self(value)

    def elements(self):
        return self._elements

    def sqrt(self, x):
        """Square root with the smaller representative in {0, ..., (p-1)/2}."""
        x = self(x)
        r = _sqrt_mod(x.v, self.p)
        if r is None:
            return None
        r = min(r, self.p - r)
        return self._elements[r]

    def non_residue(self) -> int:
        for n in range(2, self.p):
            if pow(n, (self.p - 1) // 2, self.p) == self.p - 1:
                return n
        raise AssertionError("no quadratic non-residue")

    def quadratic_extension(self, disc=None) -> "QuadraticExtension":
        return QuadraticExtension(self, self(self.non_residue()))

    def key(self, x):
        return (x.v,)


def _sqrt_mod(a: int, p: int):
    """Tonelli-Shanks; returns some root or None."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


class QuadraticExtension(Field):
    """base(s) with s**2 = d, d a non-square in the base field."""

    def __init__(self, base: Field, d):
        if isinstance(base, QuadraticExtension):
            raise FieldError("towers of quadratic extensions are not supported")
        d = base(d)
        if base.sqrt(d) is not None:
            raise SquareDiscriminant("%s is a square in %s" % (d, base.spec))
        self.base = base
        self.d = d
        self.is_finite = base.is_finite
        self.characteristic = base.characteristic
        self.order = base.order ** 2 if base.is_finite else None
        if isinstance(base, PrimeField):
            self.spec = "fp:%d(sqrt:%s)" % (base.p, d)
        else:
            self.spec = "q(sqrt:%s)" % d
        self.zero = QuadElement(base.zero, base.zero, self)
        self.one = QuadElement(base.one, base.zero, self)
        self.gen = QuadElement(base.zero, base.one, self)
        self._elements = None

    def __call__(self, x) -> QuadElement:
        if isinstance(x, QuadElement):
            if x.field != self:
                raise TypeError("element of %s is not in %s" % (x.field, self))
            return x
        if isinstance(x, str):
            return self.parse(x)
        return QuadElement(self.base(x), self.base.zero, self)

    def make(self, a, b) -> QuadElement:
        return QuadElement(self.base(a), self.base(b), self)

    def contains(self, x) -> bool:
        return isinstance(x, QuadElement) and x.field == self

    def parse(self, text: str) -> QuadElement:
        """Parse ``a``, ``a/b``, ``c*s``, ``s``, ``a+c*s``, ``a-c*s``."""
        text = text.replace(" ", "")
        if not text:
            raise ParseError("empty element")
        terms = re.findall(r"[+-]?[^+-]+", text)
        if "".join(terms) != text:
            raise ParseError("cannot parse %r" % text)
        a, b = Fraction(0), Fraction(0)
        for term in terms:
            sign = -1 if term.startswith("-") else 1
            body = term.lstrip("+-")
            if body == "s":
                b += sign
            elif body.endswith("*s"):
                b += sign * _parse_rational(body[:-2])
            else:
                a += sign * _parse_rational(body)
        return self.make(a, b)

    def elements(self):
        if not self.is_finite:
            raise TypeError("%s is infinite" % self.spec)
        if self._elements is None:
            base = self.base.elements()
            self._elements = tuple(QuadElement(a, b, self) for a in base for b in base)
        return self._elements

    def sqrt(self, x):
        x = self(x)
        base = self.base
        if x.b == 0:
            r = base.sqrt(x.a)
            if r is not None:
                return self._pick(QuadElement(r, base.zero, self))
            r = base.sqrt(x.a / self.d)
            if r is not None:
                return self._pick(QuadElement(base.zero, r, self))
            return None
        n = base.sqrt(x.norm())
        if n is None:
            return None
        half = base(Fraction(1, 2))
        for cand in (n, -n):
            u2 = (x.a + cand) * half
            u = base.sqrt(u2)
            if u is not None and u != 0:
                v = x.b / (2 * u)
                return self._pick(QuadElement(u, v, self))
        return None

    def _pick(self, r: QuadElement) -> QuadElement:
        """Deterministic choice between r and -r."""
        if r.a == 0 and r.b == self.base.one:
            return r
        if r.a == 0 and r.b == -self.base.one:
            return -r
        return min(r, -r, key=self.key)

    def key(self, x):
        ka = self.base.key(x.a)
        kb = self.base.key(x.b)
        return ka + kb

    def quadratic_extension(self, disc=None):
        raise FieldError("towers of quadratic extensions are not supported")


_SPEC = re.compile(r"^(q|fp:(\d+))(\(sqrt:([+-]?\d+)\))?$")


def field_from_spec(spec: str) -> Field:
    """Build a field from ``q``, ``fp:<p>``, ``q(sqrt:<d>)`` or ``fp:<p>(sqrt:<d>)``."""
    m = _SPEC.match(spec.strip().replace(" ", ""))
    if not m:
        raise ParseError("unknown field spec %r" % spec)
    base = Rationals() if m.group(1) == "q" else PrimeField(int(m.group(2)))
    if m.group(3) is None:
        return base
    return QuadraticExtension(base, int(m.group(4)))


def sqrt_in_field(x, field: Field):
    return field.sqrt(x)
