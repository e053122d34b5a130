"""Exact arithmetic in the quadratic ring Z[tau], where tau^2 = tau + 1."""

from __future__ import annotations

import math
from dataclasses import dataclass

_TAU = (1.0 + math.sqrt(5.0)) / 2.0


@dataclass(frozen=True, eq=False)
class GoldenInt:
    """Ring element a + b*tau with integer coefficients.

    tau is the golden ratio, the fundamental unit needed for the Cartan data
    of the H family and the pentagonal dihedral group.  Mixed arithmetic with
    plain ints is supported, and a GoldenInt with b == 0 compares and hashes
    equal to the corresponding int so that coordinate tuples may mix both.
    """

    a: int
    b: int = 0

    def __add__(self, other: GoldenInt | int) -> GoldenInt:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GoldenInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> GoldenInt:
        return GoldenInt(-self.a, -self.b)

    def __sub__(self, other: GoldenInt | int) -> GoldenInt:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GoldenInt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other: GoldenInt | int) -> GoldenInt:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GoldenInt(other.a - self.a, other.b - self.b)

    def __mul__(self, other: GoldenInt | int) -> GoldenInt:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        # (a1 + b1 t)(a2 + b2 t) with t^2 = t + 1
        return GoldenInt(
            self.a * other.a + self.b * other.b,
            self.a * other.b + self.b * other.a + self.b * other.b,
        )

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GoldenInt):
            return self.a == other.a and self.b == other.b
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        # b == 0 must hash like the plain int for mixed-tuple dedup.
        return hash(self.a) if self.b == 0 else hash((self.a, self.b))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __float__(self) -> float:
        return self.a + self.b * _TAU

    def __repr__(self) -> str:
        return f"GoldenInt({self.a}, {self.b})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        tau = "tau" if abs(self.b) == 1 else f"{abs(self.b)}*tau"
        sign = "+" if self.b > 0 else "-"
        if self.a == 0:
            return tau if self.b > 0 else f"-{tau}"
        return f"{self.a}{sign}{tau}"


TAU = GoldenInt(0, 1)


def _coerce(value: object) -> GoldenInt | None:
    if isinstance(value, GoldenInt):
        return value
    if isinstance(value, int):
        return GoldenInt(value, 0)
    return None
