"""Exact scalars: residues of rationals and two quadratic number rings.

``Fraction`` from the standard library is the rational type throughout the
package; this module adds canonical residues modulo Z and 2Z, the field
Q(sqrt 5) used for A5 character values, and Q(zeta_3) with
zeta_3^2 = -1 - zeta_3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]


def as_fraction(x: RationalLike | str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_rational(q: RationalLike) -> str:
    """Render ``p/q``, or just ``p`` for integers."""
    q = as_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True, order=True)
class ResidueModZ:
    """A class in Q/Z, stored by its representative in [0, 1)."""

    representative: Fraction

    def __post_init__(self) -> None:
        r = as_fraction(self.representative)
        object.__setattr__(self, "representative", r - math.floor(r))

    def __add__(self, other: ResidueModZ) -> ResidueModZ:
        return ResidueModZ(self.representative + other.representative)

    def __neg__(self) -> ResidueModZ:
        return ResidueModZ(-self.representative)

    def __sub__(self, other: ResidueModZ) -> ResidueModZ:
        return self + (-other)

    def __str__(self) -> str:
        return format_rational(self.representative)


@dataclass(frozen=True, order=True)
class ResidueMod2Z:
    """A class in Q/2Z, stored by its representative in [0, 2)."""

    representative: Fraction

    def __post_init__(self) -> None:
        r = as_fraction(self.representative)
        object.__setattr__(self, "representative", r - 2 * math.floor(r / 2))

    def __add__(self, other: ResidueMod2Z) -> ResidueMod2Z:
        return ResidueMod2Z(self.representative + other.representative)

    def __neg__(self) -> ResidueMod2Z:
        return ResidueMod2Z(-self.representative)

    def __sub__(self, other: ResidueMod2Z) -> ResidueMod2Z:
        return self + (-other)

    def __str__(self) -> str:
        return format_rational(self.representative)


def reduce_mod_z(q: RationalLike | str) -> ResidueModZ:
    return ResidueModZ(as_fraction(q))


def reduce_mod_2z(q: RationalLike | str) -> ResidueMod2Z:
    return ResidueMod2Z(as_fraction(q))


def _coerce_pair(cls, other):
    if isinstance(other, cls):
        return other
    if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
        return cls(Fraction(other), Fraction(0))
    return NotImplemented


@dataclass(frozen=True)
class Sqrt5Number:
    """The number ``a + b*sqrt(5)`` with rational ``a`` and ``b``."""

    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "b", as_fraction(self.b))

    @classmethod
    def sqrt5(cls) -> Sqrt5Number:
        return cls(Fraction(0), Fraction(1))

    def __add__(self, other):
        other = _coerce_pair(Sqrt5Number, other)
        if other is NotImplemented:
            return other
        return Sqrt5Number(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> Sqrt5Number:
        return Sqrt5Number(-self.a, -self.b)

    def __sub__(self, other):
        other = _coerce_pair(Sqrt5Number, other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_pair(Sqrt5Number, other)
        if other is NotImplemented:
            return other
        return Sqrt5Number(
            self.a * other.a + 5 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_pair(Sqrt5Number, other)
        if other is NotImplemented:
            return other
        norm = other.norm()
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 5)")
        num = self * other.conjugate()
        return Sqrt5Number(num.a / norm, num.b / norm)

    def __eq__(self, other) -> bool:
        other = _coerce_pair(Sqrt5Number, other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def conjugate(self) -> Sqrt5Number:
        return Sqrt5Number(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 5 * self.b * self.b

    def is_rational(self) -> bool:
        return self.b == 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(5)

    def __str__(self) -> str:
        if self.b == 0:
            return format_rational(self.a)
        return f"{format_rational(self.a)} + {format_rational(self.b)}*sqrt5"


@dataclass(frozen=True)
class Zeta3Number:
    """The number ``a + b*zeta`` where zeta is a primitive cube root of unity."""

    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "b", as_fraction(self.b))

    @classmethod
    def zeta(cls) -> Zeta3Number:
        return cls(Fraction(0), Fraction(1))

    def __add__(self, other):
        other = _coerce_pair(Zeta3Number, other)
        if other is NotImplemented:
            return other
        return Zeta3Number(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> Zeta3Number:
        return Zeta3Number(-self.a, -self.b)

    def __sub__(self, other):
        other = _coerce_pair(Zeta3Number, other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_pair(Zeta3Number, other)
        if other is NotImplemented:
            return other
        # zeta^2 = -1 - zeta
        ac = self.a * other.a
        bd = self.b * other.b
        return Zeta3Number(ac - bd, self.a * other.b + self.b * other.a - bd)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Zeta3Number:
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = Zeta3Number(Fraction(1))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = _coerce_pair(Zeta3Number, other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b, "zeta3"))

    def is_rational(self) -> bool:
        return self.b == 0

    def to_rational(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self} is not rational")
        return self.a

    def __str__(self) -> str:
        if self.b == 0:
            return format_rational(self.a)
        return f"{format_rational(self.a)} + {format_rational(self.b)}*zeta3"
