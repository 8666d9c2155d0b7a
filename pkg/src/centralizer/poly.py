"""Dense univariate polynomials over an exact coefficient field.

Coefficients are stored lowest degree first with no trailing zeros; the zero
polynomial has an empty coefficient tuple and degree -inf.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import MixedFieldsError
from .fields import FieldElement, FieldSpec

NEG_INF = float("-inf")


class Polynomial:
    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Sequence, field: FieldSpec):
        norm = [field.element(c) for c in coeffs]
        while norm and not norm[-1]:
            norm.pop()
        object.__setattr__(self, "coeffs", tuple(norm))
        object.__setattr__(self, "field", field)

    def __setattr__(self, *args):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(field: FieldSpec) -> "Polynomial":
        return Polynomial((), field)

    @staticmethod
    def one(field: FieldSpec) -> "Polynomial":
        return Polynomial((1,), field)

    @staticmethod
    def x(field: FieldSpec) -> "Polynomial":
        return Polynomial((0, 1), field)

    @staticmethod
    def constant(value, field: FieldSpec) -> "Polynomial":
        return Polynomial((value,), field)

    @staticmethod
    def monomial(degree: int, field: FieldSpec, coeff=1) -> "Polynomial":
        return Polynomial([0] * degree + [coeff], field)

    # -- basic queries -------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one()

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    def leading_coefficient(self) -> FieldElement:
        if not self.coeffs:
            return self.field.zero()
        return self.coeffs[-1]

    def coefficient(self, k: int) -> FieldElement:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero()

    def _check_field(self, other: "Polynomial"):
        if self.field != other.field:
            raise MixedFieldsError(
                f"cannot combine polynomials over {self.field} and {other.field}"
            )

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_field(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out, self.field)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_field(other)
        n = max(len(self.coeffs), len(other.coeffs))
        zero = self.field.zero()
        out = [self.coefficient(i) - other.coefficient(i) for i in range(n)] or [zero]
        return Polynomial(out, self.field)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs], self.field)

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return self.scale(other)
        self._check_field(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial.zero(self.field)
        zero = self.field.zero()
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return Polynomial(out, self.field)

    def scale(self, c) -> "Polynomial":
        c = self.field.element(c)
        return Polynomial([a * c for a in self.coeffs], self.field)

    def shift(self, k: int) -> "Polynomial":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Polynomial((self.field.zero(),) * k + self.coeffs, self.field)

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "Polynomial"):
        self._check_field(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Polynomial.zero(self.field), self
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        quo = [self.field.zero()] * (dq + 1)
        inv_lead = other.coeffs[-1].inverse()
        db = len(other.coeffs) - 1
        for i in range(dq, -1, -1):
            c = rem[i + db]
            if not c:
                continue
            q = c * inv_lead
            quo[i] = q
            for j, b in enumerate(other.coeffs):
                rem[i + j] = rem[i + j] - q * b
        return Polynomial(quo, self.field), Polynomial(rem[:db] or (), self.field)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def divides(self, other: "Polynomial") -> bool:
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    # -- gcd, derivative, evaluation ------------------------------------

    def monic(self) -> "Polynomial":
        if self.is_zero() or self.is_monic():
            return self
        return self.scale(self.coeffs[-1].inverse())

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic greatest common divisor; gcd with 0 is the other argument."""
        self._check_field(other)
        a, b = self, other
        if a.is_zero() and b.is_zero():
            raise ValueError("gcd(0, 0) is undefined")
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def lcm(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(self.field)
        return (self * other).exact_div(self.gcd(other)).monic()

    def derivative(self) -> "Polynomial":
        out = [self.coeffs[i] * i for i in range(1, len(self.coeffs))]
        return Polynomial(out, self.field)

    def eval(self, point) -> FieldElement:
        a = self.field.element(point)
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """Substitute another polynomial for the variable (Horner scheme)."""
        self._check_field(inner)
        acc = Polynomial.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * inner + Polynomial.constant(c, self.field)
        return acc

    def pow_mod(self, e: int, modulus: "Polynomial") -> "Polynomial":
        result = Polynomial.one(self.field) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    # -- ordering, hashing, rendering -----------------------------------

    def sort_key(self):
        """Canonical total order: degree first, then coefficients from the top."""
        return (
            len(self.coeffs),
            tuple(c.sort_key() for c in reversed(self.coeffs)),
        )

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.characteristic, tuple(c.value for c in self.coeffs)))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            v = c.value
            sign = "-" if v < 0 else "+"
            mag = -v if v < 0 else v
            if k == 0:
                term = str(mag)
            else:
                xk = "x" if k == 1 else f"x^{k}"
                term = xk if mag == 1 else f"{mag}*{xk}"
            if not parts:
                parts.append(term if v > 0 else f"-{term}")
            else:
                parts.append(f"{sign} {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"<{self} over {self.field}>"


def poly_from_ints(field: FieldSpec, coeffs: Iterable) -> Polynomial:
    """Build a polynomial from plain numbers, lowest degree first."""
    return Polynomial(list(coeffs), field)


def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_divrem(f: Polynomial, g: Polynomial):
    return divmod(f, g)


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    return f.gcd(g)
