"""Exact scalar fields.

Two fields are supported: the rationals (arbitrary-precision ``Fraction``
values, always in lowest terms with positive denominator) and small prime
fields GF(p) with p <= 251, used for exhaustive searches.  A run works over
exactly one field; mixing elements of different fields is an error.

Plain Python ints may appear as additive/multiplicative constants (0, 1, -1):
both element types absorb them, so generic code can write ``sum(...)`` or
``-x`` without knowing the field.
"""

from __future__ import annotations

import os
from fractions import Fraction


class InputError(ValueError):
    """Malformed user input: bad file, bad shape, bad coefficient string."""


class GFElement:
    """An element of GF(p), stored as the canonical representative 0..p-1."""

    __slots__ = ("p", "v")

    def __init__(self, p: int, v: int):
        self.p = p
        self.v = v % p

    def _coerce(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise InputError("mixed prime fields GF(%d) and GF(%d)" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return GFElement(self.p, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else GFElement(self.p, self.v + o.v)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else GFElement(self.p, self.v - o.v)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else GFElement(self.p, o.v - self.v)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else GFElement(self.p, self.v * o.v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return GFElement(self.p, self.v * pow(o.v, self.p - 2, self.p))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __neg__(self):
        return GFElement(self.p, -self.v)

    def __pos__(self):
        return self

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "GF%d(%d)" % (self.p, self.v)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Rationals:
    name = "rational"
    zero = Fraction(0)
    one = Fraction(1)
    enumerable = False

    def coerce(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise InputError("cannot coerce %r into the rational field" % (x,))

    def parse(self, s: str) -> Fraction:
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError("bad rational coefficient %r: %s" % (s, exc)) from exc

    def to_str(self, x) -> str:
        x = self.coerce(x)
        if x.denominator == 1:
            return str(x.numerator)
        return "%d/%d" % (x.numerator, x.denominator)

    def elements(self):
        raise InputError("the rational field is not enumerable; use a grid or fp<p>")

    def __repr__(self):
        return "Rationals()"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rational")


class PrimeField:
    enumerable = True

    def __init__(self, p: int):
        if not _is_prime(p) or p > 251:
            raise InputError("prime-field modulus must be a prime <= 251, got %r" % (p,))
        self.p = p
        self.name = "fp%d" % p
        self.zero = GFElement(p, 0)
        self.one = GFElement(p, 1)

    def coerce(self, x) -> GFElement:
        if isinstance(x, GFElement):
            if x.p != self.p:
                raise InputError("element of GF(%d) used in GF(%d)" % (x.p, self.p))
            return x
        if isinstance(x, int):
            return GFElement(self.p, x)
        raise InputError("cannot coerce %r into GF(%d)" % (x, self.p))

    def parse(self, s: str) -> GFElement:
        s = s.strip()
        if "/" in s:
            num, _, den = s.partition("/")
            try:
                n, d = int(num), int(den)
            except ValueError as exc:
                raise InputError("bad coefficient %r" % s) from exc
            return self.coerce(n) / self.coerce(d)
        try:
            return self.coerce(int(s))
        except ValueError as exc:
            raise InputError("bad coefficient %r" % s) from exc

    def to_str(self, x) -> str:
        return str(self.coerce(x).v)

    def elements(self):
        return [GFElement(self.p, k) for k in range(self.p)]

    def __repr__(self):
        return "PrimeField(%d)" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))


RATIONALS = Rationals()


def field_from_name(name: str):
    """Resolve 'rational' or 'fp<prime>' to a field object."""
    if name == "rational":
        return RATIONALS
    if name.startswith("fp"):
        try:
            p = int(name[2:])
        except ValueError as exc:
            raise InputError("bad field name %r" % name) from exc
        return PrimeField(p)
    raise InputError("unknown field %r (expected 'rational' or 'fp<prime>')" % name)


def field_from_env():
    """Scalar field selected by the ADW_FIELD environment variable."""
    return field_from_name(os.environ.get("ADW_FIELD", "rational"))
