"""Exact ground fields: the rationals and prime fields.

Scalars are either ``fractions.Fraction`` (rationals, always in lowest terms
with positive denominator) or ``FpElement`` (residues normalized to [0, p)).
Both support ordinary operator arithmetic, so the linear algebra layer never
needs to know which field it is working over; a ``Field`` object supplies
zero, one, parsing and formatting.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError


class FpElement:
    """A residue mod p.  Arithmetic coerces ints, rejects everything else."""

    __slots__ = ("val", "p")

    def __init__(self, val, p):
        self.val = val % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ParseError(f"mixed prime fields F_{self.p} and F_{other.p}")
            return other.val
        if isinstance(other, int):
            return other % self.p
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(self.val + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(self.val - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(v - self.val, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(self.val * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        if v % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return FpElement(self.val * pow(v, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        if self.val == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return FpElement(v * pow(self.val, self.p - 2, self.p), self.p)

    def __neg__(self):
        return FpElement(-self.val, self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash(self.val)

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return f"{self.val}"


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """Common interface of the two supported ground fields."""

    kind = None  # "q" or "fp"
    char = 0

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def from_int(self, n):
        raise NotImplementedError

    def parse(self, s):
        raise NotImplementedError

    def fmt(self, x):
        return str(x)

    def spec_string(self):
        raise NotImplementedError

    def __repr__(self):
        return self.spec_string()


class RationalField(Field):
    kind = "q"
    char = 0

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def parse(self, s):
        try:
            return Fraction(str(s))
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in scalar {s!r}")
        except ValueError:
            raise ParseError(f"not a rational scalar: {s!r}")

    def spec_string(self):
        return "q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("q")


class PrimeField(Field):
    kind = "fp"

    def __init__(self, p):
        if not isinstance(p, int) or not _is_prime(p):
            raise ParseError(f"prime field modulus must be prime, got {p!r}")
        self.p = p
        self.char = p

    @property
    def zero(self):
        return FpElement(0, self.p)

    @property
    def one(self):
        return FpElement(1, self.p)

    def from_int(self, n):
        return FpElement(n, self.p)

    def parse(self, s):
        s = str(s)
        try:
            n = int(s)
        except ValueError:
            raise ParseError(f"not an F_{self.p} scalar (decimal expected): {s!r}")
        return FpElement(n, self.p)

    def spec_string(self):
        return f"fp:{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))


QQ = RationalField()


def field_from_spec(spec):
    """Build a field from its declaration string: "q" or "fp:<p>"."""
    if spec == "q":
        return QQ
    if isinstance(spec, str) and spec.startswith("fp:"):
        try:
            p = int(spec[3:])
        except ValueError:
            raise ParseError(f"bad field spec {spec!r}")
        return PrimeField(p)
    raise ParseError(f"bad field spec {spec!r} (expected 'q' or 'fp:<p>')")
