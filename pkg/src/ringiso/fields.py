"""Exact coefficient fields: the rationals and prime fields GF(p).

Rational coefficients are plain ``fractions.Fraction`` values (always in
lowest terms with positive denominator); GF(p) coefficients are
:class:`GFElement` residues.  Both support ``+ - * /`` and truthiness, so
polynomial code never needs to know which field it is working over.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import MismatchError, ValidationError


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


@dataclass(frozen=True, slots=True)
class GFElement:
    """A residue in GF(p), kept in the canonical range 0..p-1."""

    value: int
    p: int

    def _same_field(self, other: "GFElement") -> None:
        if self.p != other.p:
            raise MismatchError(f"mixed prime fields GF({self.p}) and GF({other.p})")

    def __add__(self, other: "GFElement") -> "GFElement":
        self._same_field(other)
        return GFElement((self.value + other.value) % self.p, self.p)

    def __sub__(self, other: "GFElement") -> "GFElement":
        self._same_field(other)
        return GFElement((self.value - other.value) % self.p, self.p)

    def __mul__(self, other: "GFElement") -> "GFElement":
        self._same_field(other)
        return GFElement((self.value * other.value) % self.p, self.p)

    def __truediv__(self, other: "GFElement") -> "GFElement":
        self._same_field(other)
        return self * other.inverse()

    def __neg__(self) -> "GFElement":
        return GFElement((-self.value) % self.p, self.p)

    def __bool__(self) -> bool:
        return self.value != 0

    def inverse(self) -> "GFElement":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        # Fermat: a^(p-2) = a^(-1) for prime p.
        return GFElement(pow(self.value, self.p - 2, self.p), self.p)

    def __str__(self) -> str:
        return str(self.value)


class RationalField:
    """The field of rational numbers; elements are Fraction values."""

    kind = "rational"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, k: int) -> Fraction:
        return Fraction(k)

    def ratio(self, num: int, den: int) -> Fraction:
        if den == 0:
            raise ValidationError("zero denominator")
        return Fraction(num, den)

    def contains(self, value) -> bool:
        return isinstance(value, Fraction)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("rational-field")

    def __repr__(self) -> str:
        return "QQ"


class PrimeField:
    """The prime field GF(p); elements are GFElement residues."""

    kind = "prime"

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise ValidationError(f"{p!r} is not a prime")
        self.p = p

    @property
    def zero(self) -> GFElement:
        return GFElement(0, self.p)

    @property
    def one(self) -> GFElement:
        return GFElement(1, self.p)

    def from_int(self, k: int) -> GFElement:
        return GFElement(k % self.p, self.p)

    def ratio(self, num: int, den: int) -> GFElement:
        if den % self.p == 0:
            raise ValidationError(f"denominator {den} is zero in GF({self.p})")
        return self.from_int(num) / self.from_int(den)

    def contains(self, value) -> bool:
        return isinstance(value, GFElement) and value.p == self.p

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("prime-field", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"


QQ = RationalField()

Field = Union[RationalField, PrimeField]
Coeff = Union[Fraction, GFElement]


def field_descriptor(field: Field):
    """JSON descriptor for a field: "rational" or {"prime": p}."""
    if isinstance(field, RationalField):
        return "rational"
    return {"prime": field.p}


def field_from_descriptor(desc) -> Field:
    if desc == "rational":
        return QQ
    if isinstance(desc, dict) and set(desc) == {"prime"}:
        return PrimeField(desc["prime"])
    raise ValidationError(f"unrecognized field descriptor: {desc!r}")
