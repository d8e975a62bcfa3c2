"""Half-angle-tangent generators, key sequences, parametric triple constructions, radii."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .triple_core import PPT, TripleError

_FRACTION_RE = re.compile(r"^(\d+)/(\d+)$")
_KEY_SEQUENCE_RE = re.compile(r"^\[(\d+),(\d+),(\d+),(\d+)\]$")


class WrongParity(TripleError):
    """Fraction has the wrong numerator+denominator parity for the requested construction."""


def proper_fraction(numerator: int, denominator: int) -> Fraction:
    """A fraction strictly between 0 and 1, reduced at construction."""
    if denominator <= 0 or numerator <= 0:
        raise ValueError(f"need positive numerator and denominator, got {numerator}/{denominator}")
    if numerator >= denominator:
        raise ValueError(f"{numerator}/{denominator} is not a proper fraction")
    return Fraction(numerator, denominator)


def require_proper(f: Fraction) -> Fraction:
    if not 0 < f < 1:
        raise ValueError(f"expected a proper fraction, got {f}")
    return f


def parse_fraction(text: str) -> Fraction:
    """Parse the "q/p" wire format (ASCII digits, no spaces) into a proper fraction."""
    m = _FRACTION_RE.match(text)
    if not m:
        raise ValueError(f"malformed fraction {text!r}, expected q/p")
    return proper_fraction(int(m.group(1)), int(m.group(2)))


def format_fraction(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True)
class KeySequence:
    """Four positive integers [q2, q1, p1, p2] packaging both generators of a triple.

    The Fibonacci rule q2+q1 = p1, q1+p1 = p2 must hold, q2 must be odd, and
    q1, q2 must be coprime.  q1/p1 is the primary generator, q2/p2 the
    secondary.
    """

    q2: int
    q1: int
    p1: int
    p2: int

    def __post_init__(self) -> None:
        for v in (self.q2, self.q1, self.p1, self.p2):
            if not isinstance(v, int) or v <= 0:
                raise ValueError(f"key sequence entries must be positive integers, got {v!r}")
        if self.q2 + self.q1 != self.p1 or self.q1 + self.p1 != self.p2:
            raise ValueError(f"{self} violates the Fibonacci rule")
        if self.q2 % 2 == 0:
            raise ValueError(f"first entry of {self} must be odd")
        if math.gcd(self.q1, self.q2) != 1:
            raise ValueError(f"first two entries of {self} must be coprime")

    @property
    def primary(self) -> Fraction:
        return Fraction(self.q1, self.p1)

    @property
    def secondary(self) -> Fraction:
        return Fraction(self.q2, self.p2)

    def __str__(self) -> str:
        return f"[{self.q2},{self.q1},{self.p1},{self.p2}]"


def parse_key_sequence(text: str) -> KeySequence:
    """Parse the "[q2,q1,p1,p2]" wire format."""
    m = _KEY_SEQUENCE_RE.match(text)
    if not m:
        raise ValueError(f"malformed key sequence {text!r}, expected [q2,q1,p1,p2]")
    return KeySequence(*(int(g) for g in m.groups()))


@dataclass(frozen=True)
class Radii:
    """In-circle radius r1 and ex-circle radii r2, r3, r4 of a primitive triple.

    Always satisfies r1 + r2 + r3 = r4 and r1*r4 = r2*r3.
    """

    r1: int
    r2: int
    r3: int
    r4: int

    def __post_init__(self) -> None:
        if self.r1 + self.r2 + self.r3 != self.r4 or self.r1 * self.r4 != self.r2 * self.r3:
            raise ValueError(f"({self.r1}, {self.r2}, {self.r3}, {self.r4}) violates the radius identities")


def generators_of(t: PPT) -> tuple[Fraction, Fraction]:
    """Primary and secondary generators: the half-angle tangents b/(c+a) and a/(c+b)."""
    return Fraction(t.b, t.c + t.a), Fraction(t.a, t.c + t.b)


def key_sequence_from_fraction(f: Fraction) -> KeySequence:
    """Complete a proper fraction into the unique key sequence containing it.

    An even numerator+denominator sum places the fraction in the outer slots
    (secondary), an odd sum in the inner slots (primary).
    """
    require_proper(f)
    q, p = f.numerator, f.denominator
    if (q + p) % 2 == 0:
        return KeySequence(q, (p - q) // 2, (p + q) // 2, p)
    return KeySequence(p - q, q, p, p + q)


def key_sequence_of(t: PPT) -> KeySequence:
    """The key sequence whose inner pair is the primary generator and outer pair the secondary."""
    t1, t2 = generators_of(t)
    return KeySequence(t2.numerator, t1.numerator, t1.denominator, t2.denominator)


def triple_from_key(k: KeySequence) -> PPT:
    """Mixed-form construction: a = p2*q2, b = 2*p1*q1, c = p1*p2 - q1*q2."""
    return PPT(k.p2 * k.q2, 2 * k.p1 * k.q1, k.p1 * k.p2 - k.q1 * k.q2)


def triple_from_primary(f: Fraction) -> PPT:
    """The triple (p^2 - q^2, 2pq, p^2 + q^2) generated by a primary fraction q/p."""
    require_proper(f)
    q, p = f.numerator, f.denominator
    if (q + p) % 2 == 0:
        raise WrongParity(f"{f} has even numerator+denominator sum; it is a secondary generator")
    return PPT(p * p - q * q, 2 * p * q, p * p + q * q)


def triple_from_secondary(f: Fraction) -> PPT:
    """The triple (pq, (p^2 - q^2)/2, (p^2 + q^2)/2) generated by a secondary fraction q/p."""
    require_proper(f)
    q, p = f.numerator, f.denominator
    if (q + p) % 2 == 1:
        raise WrongParity(f"{f} has odd numerator+denominator sum; it is a primary generator")
    return PPT(p * q, (p * p - q * q) // 2, (p * p + q * q) // 2)


def radii(k: KeySequence) -> Radii:
    """The four tangent-circle radii as pairwise products of the key sequence."""
    return Radii(k.q1 * k.q2, k.q1 * k.p2, k.q2 * k.p1, k.p1 * k.p2)
