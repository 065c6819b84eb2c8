"""Closed intervals with exact rational endpoints.

Used wherever a quantity depending on an irrational is compared against a
threshold: the interval is the certificate.  Endpoints are `Fraction`s, so
all arithmetic here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


@dataclass(frozen=True)
class RealInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, value: Rational) -> "RealInterval":
        v = Fraction(value)
        return cls(v, v)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, value: Rational) -> bool:
        return self.lo <= value <= self.hi

    def encloses(self, other: "RealInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def overlaps(self, other: "RealInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def scale(self, factor: Rational) -> "RealInterval":
        f = Fraction(factor)
        if f < 0:
            return RealInterval(self.hi * f, self.lo * f)
        return RealInterval(self.lo * f, self.hi * f)

    def __mul__(self, other: "RealInterval") -> "RealInterval":
        # Both operands nonnegative in every use here; keep the general form.
        products = (self.lo * other.lo, self.lo * other.hi,
                    self.hi * other.lo, self.hi * other.hi)
        return RealInterval(min(products), max(products))

    def __repr__(self) -> str:
        return f"[{float(self.lo):.6g}, {float(self.hi):.6g}]"
