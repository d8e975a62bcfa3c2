"""Primitive Pythagorean triples: validation, canonical orientation, divisibility classes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class TripleError(ValueError):
    """Base class for invalid primitive-triple input."""


class NotATriple(TripleError):
    """The squares of the two smaller values do not sum to the square of the largest."""


class NotPrimitive(TripleError):
    """The sides share a common factor."""


class InvalidParity(TripleError):
    """The legs are not one odd, one even."""


class TClass(Enum):
    """Divisibility class of a primitive triple.

    Rows select which side carries the factor 5 (c, a, or b); columns select
    which leg carries the factor 3 (a or b).  Every primitive triple lands in
    exactly one class.
    """

    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    T5 = "T5"
    T6 = "T6"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class PPT:
    """A primitive Pythagorean triple in canonical orientation.

    `a` is the odd leg, `b` the even leg, `c` the hypotenuse.  All three are
    positive, pairwise coprime, and satisfy a^2 + b^2 = c^2.  Instances are
    immutable; use `make_ppt` to build one from sides in arbitrary order.
    """

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        for side in (self.a, self.b, self.c):
            if not isinstance(side, int) or side <= 0:
                raise TripleError(f"sides must be positive integers, got {side!r}")
        if self.a * self.a + self.b * self.b != self.c * self.c:
            raise NotATriple(f"{self.a}^2 + {self.b}^2 != {self.c}^2")
        if math.gcd(self.a, self.b) != 1:
            raise NotPrimitive(f"legs {self.a}, {self.b} share a common factor")
        if self.a % 2 == 0 or self.b % 2 == 1:
            raise InvalidParity(f"expected odd leg, even leg; got ({self.a}, {self.b})")

    def sides(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __str__(self) -> str:
        return f"[{self.a}, {self.b}, {self.c}]"


@dataclass(frozen=True)
class DivisibilityWitness:
    """Which sides carry the guaranteed factors 4, 3, and 5."""

    four_divides_b: bool
    three_divides: str  # "a" or "b"
    five_divides: str  # "a", "b", or "c"


def make_ppt(x: int, y: int, z: int) -> PPT:
    """Build a canonical PPT from three sides given in any leg order.

    The hypotenuse is recognized as the largest side; the legs are oriented
    odd-first.  Raises NotATriple, NotPrimitive, or InvalidParity when the
    input is not a primitive Pythagorean triple.
    """
    for side in (x, y, z):
        if not isinstance(side, int) or side <= 0:
            raise TripleError(f"sides must be positive integers, got {side!r}")
    s, m, c = sorted((x, y, z))
    if s * s + m * m != c * c:
        raise NotATriple(f"no leg assignment of ({x}, {y}, {z}) satisfies the triple equation")
    if math.gcd(math.gcd(x, y), z) != 1:
        raise NotPrimitive(f"({x}, {y}, {z}) has a common factor")
    odd_legs = [leg for leg in (s, m) if leg % 2 == 1]
    if len(odd_legs) != 1:
        raise InvalidParity(f"legs ({s}, {m}) must be one odd, one even")
    a = odd_legs[0]
    b = m if a == s else s
    return PPT(a, b, c)


def classify(t: PPT) -> TClass:
    """Assign the divisibility class: row by which side 5 divides, column by 3."""
    if t.c % 5 == 0:
        row = (TClass.T1, TClass.T2)
    elif t.a % 5 == 0:
        row = (TClass.T3, TClass.T4)
    else:
        row = (TClass.T5, TClass.T6)
    return row[0] if t.a % 3 == 0 else row[1]


def divisibility_witness(t: PPT) -> DivisibilityWitness:
    """Report the guaranteed factors: 4 divides b, 3 divides exactly one leg,
    5 divides exactly one side."""
    three = [name for name, v in (("a", t.a), ("b", t.b)) if v % 3 == 0]
    five = [name for name, v in (("a", t.a), ("b", t.b), ("c", t.c)) if v % 5 == 0]
    if len(three) != 1 or len(five) != 1 or t.b % 4 != 0:
        raise AssertionError(f"divisibility pattern violated for {t}")
    return DivisibilityWitness(True, three[0], five[0])


def altitude_kappa(t: PPT) -> Fraction:
    """Altitude to the hypotenuse, a*b/c, in lowest terms."""
    return Fraction(t.a * t.b, t.c)
