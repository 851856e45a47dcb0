"""Exact coefficient fields: GF(2), GF(p) for small primes, and Q.

Field objects operate on plain Python values (ints for finite fields,
Fraction for Q) so callers never box scalars.  All arithmetic is exact;
there are no floats anywhere in the toolkit.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadParams


class Field:
    """Common interface.  Elements are ints (finite fields) or Fractions."""

    name: str
    char: int

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n: int):
        raise NotImplementedError

    def parse(self, token: str):
        raise NotImplementedError

    def show(self, a) -> str:
        return str(a)

    def __repr__(self):
        return f"<field {self.name}>"

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)


class GF2(Field):
    name = "gf2"
    char = 2

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return a ^ b

    sub = add

    def mul(self, a, b):
        return a & b

    def neg(self, a):
        return a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in gf2")
        return 1

    def from_int(self, n):
        return n & 1

    def parse(self, token):
        return int(token) % 2


class GFp(Field):
    char: int

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise BadParams(f"gf{p}: modulus must be prime")
        self.p = p
        self.char = p
        self.name = f"gf{p}"

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in gf{self.p}")
        return pow(a, self.p - 2, self.p)

    def from_int(self, n):
        return n % self.p

    def parse(self, token):
        return int(token) % self.p


class Rational(Field):
    name = "q"
    char = 0

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in q")
        return 1 / Fraction(a)

    def from_int(self, n):
        return Fraction(n)

    def parse(self, token):
        return Fraction(token)

    def show(self, a) -> str:
        f = Fraction(a)
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


GF2_FIELD = GF2()
Q_FIELD = Rational()


def field_from_name(name: str) -> Field:
    """Resolve a field token: gf2, gf3, gf5, ..., q (alias: rational)."""
    token = name.strip().lower()
    if token == "gf2":
        return GF2_FIELD
    if token in ("q", "rational"):
        return Q_FIELD
    if token.startswith("gf"):
        return GFp(int(token[2:]))
    raise BadParams(f"unknown field {name!r}")
