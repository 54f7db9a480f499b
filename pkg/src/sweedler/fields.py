"""Exact scalar arithmetic over the rationals and over prime fields.

Scalars are plain ``fractions.Fraction`` values over Q and canonical ints in
``[0, p)`` over F_p; the :class:`Field` object supplies the operations.  No
floating point is used anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatch, ParseError, UnsupportedField

_INT_RE = re.compile(r"-?(0|[1-9][0-9]*)")
_FRACTION_RE = re.compile(r"(-?(?:0|[1-9][0-9]*))/([1-9][0-9]*)")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """``Field(0)`` is the rationals, ``Field(p)`` the prime field F_p."""

    char: int = 0

    def __post_init__(self):
        if self.char != 0 and not is_prime(self.char):
            raise ValueError(f"characteristic must be 0 or a prime, got {self.char}")

    @property
    def is_rational(self) -> bool:
        return self.char == 0

    def __str__(self) -> str:
        return "Q" if self.char == 0 else f"F{self.char}"

    # element constructors ------------------------------------------------

    def zero(self):
        return Fraction(0) if self.char == 0 else 0

    def one(self):
        return Fraction(1) if self.char == 0 else 1 % self.char

    def from_int(self, n: int):
        return Fraction(n) if self.char == 0 else n % self.char

    def coerce(self, x):
        """Bring an int or Fraction into canonical form for this field."""
        if self.char == 0:
            if isinstance(x, Fraction):
                return x
            if isinstance(x, int):
                return Fraction(x)
        else:
            if isinstance(x, int):
                return x % self.char
            if isinstance(x, Fraction) and x.denominator == 1:
                return x.numerator % self.char
        raise TypeError(f"cannot interpret {x!r} as an element of {self}")

    # arithmetic -----------------------------------------------------------

    def add(self, x, y):
        return x + y if self.char == 0 else (x + y) % self.char

    def sub(self, x, y):
        return x - y if self.char == 0 else (x - y) % self.char

    def neg(self, x):
        return -x if self.char == 0 else (-x) % self.char

    def mul(self, x, y):
        return x * y if self.char == 0 else (x * y) % self.char

    def inv(self, x):
        if self.char == 0:
            if x == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / x
        if x % self.char == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, self.char - 2, self.char)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def elements(self):
        """All field elements, in canonical order.  Finite fields only."""
        if self.char == 0:
            raise UnsupportedField("cannot enumerate the rationals")
        return range(self.char)

    # serialization --------------------------------------------------------

    def show(self, x) -> str:
        """Canonical token: reduced ``p/q`` (or ``n``) over Q, ``0..p-1`` over F_p."""
        if self.char == 0:
            if x.denominator == 1:
                return str(x.numerator)
            return f"{x.numerator}/{x.denominator}"
        return str(x)

    def parse(self, token: str):
        """Parse a canonical token; anything non-canonical is a ParseError."""
        if not isinstance(token, str):
            raise ParseError(f"scalar must be a string, got {token!r}")
        if self.char == 0:
            m = _FRACTION_RE.fullmatch(token)
            if m:
                num, den = int(m.group(1)), int(m.group(2))
                if den == 1:
                    raise ParseError(f"non-canonical rational {token!r}: write {num}")
                value = Fraction(num, den)
                if value.denominator != den:
                    raise ParseError(f"non-canonical rational {token!r}: not in lowest terms")
                return value
            m = _INT_RE.fullmatch(token)
            if m:
                if token == "-0":
                    raise ParseError("non-canonical zero '-0'")
                return Fraction(int(token))
            raise ParseError(f"malformed rational {token!r}")
        m = _INT_RE.fullmatch(token)
        if not m or token.startswith("-"):
            raise ParseError(f"malformed {self} element {token!r}")
        value = int(token)
        if value >= self.char:
            raise ParseError(f"{token!r} is not a canonical representative mod {self.char}")
        return value


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


def parse_field(name: str) -> Field:
    if name == "Q":
        return QQ
    m = re.fullmatch(r"F([1-9][0-9]*)", name)
    if m:
        p = int(m.group(1))
        if not is_prime(p):
            raise ParseError(f"field F{p} is not a prime field")
        return Field(p)
    raise ParseError(f"unknown field {name!r}")


def same_field(*fields: Field) -> Field:
    first = fields[0]
    for f in fields[1:]:
        if f != first:
            raise FieldMismatch(f"mixed fields {first} and {f}")
    return first
