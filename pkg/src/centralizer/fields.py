"""Exact coefficient fields: the rationals and prime fields F_p.

Elements are kept in canonical form at all times (reduced fractions with
positive denominator, or residues in [0, p)), so equality of values is
equality of representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import MixedFieldsError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: characteristic 0 means Q, a prime p means F_p."""

    characteristic: int

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not is_prime(p):
            raise ValueError(f"characteristic must be 0 or prime, got {p}")

    @property
    def is_rationals(self) -> bool:
        return self.characteristic == 0

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic != 0

    @property
    def is_perfect(self) -> bool:
        # Q has characteristic 0 and F_p is finite; both are perfect.
        return True

    def element(self, value) -> "FieldElement":
        """Canonicalize an int, Fraction, or FieldElement into this field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise MixedFieldsError(f"element of {value.field} used in {self}")
            return value
        return FieldElement(value, self)

    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def elements(self):
        """Iterate all field elements (prime fields only)."""
        if self.is_rationals:
            raise ValueError("cannot enumerate an infinite field")
        return (FieldElement(r, self) for r in range(self.characteristic))

    def __str__(self):
        return "Q" if self.is_rationals else f"F{self.characteristic}"


RATIONALS = FieldSpec(0)


def prime_field(p: int) -> FieldSpec:
    return FieldSpec(p)


class FieldElement:
    """A canonical element of a FieldSpec, with exact arithmetic."""

    __slots__ = ("value", "field")

    def __init__(self, value, field: FieldSpec):
        if field.characteristic == 0:
            value = value if isinstance(value, Fraction) else Fraction(value)
        else:
            if isinstance(value, Fraction):
                if value.denominator % field.characteristic == 0:
                    raise ZeroDivisionError("denominator vanishes in the prime field")
                value = value.numerator * pow(
                    value.denominator, -1, field.characteristic
                )
            value %= field.characteristic
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "field", field)

    def __setattr__(self, *args):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise MixedFieldsError(
                    f"cannot combine elements of {self.field} and {other.field}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement(other, self.field)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.value + o.value, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.value - o.value, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(o.value - self.value, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.value * o.value, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero field element")
        if self.field.characteristic == 0:
            return FieldElement(self.value / o.value, self.field)
        p = self.field.characteristic
        return FieldElement(self.value * pow(o.value, -1, p), self.field)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __neg__(self):
        return FieldElement(-self.value, self.field)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        if self.field.characteristic == 0:
            return FieldElement(self.value**e, self.field)
        return FieldElement(
            pow(self.value, e, self.field.characteristic), self.field
        )

    def inverse(self) -> "FieldElement":
        return self.field.one() / self

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self == FieldElement(other, self.field)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.characteristic, self.value))

    def sort_key(self):
        v = self.value
        if isinstance(v, Fraction):
            return (v.numerator, v.denominator)
        return (v, 1)

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"{self.value}:{self.field}"


def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Named dispatch over the four field operations."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown field operation {op!r}")
