"""Inscribed-square identities and the major/minor derivative calculus on triples."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from numbers import Rational

from .triple_core import PPT, TClass, TripleError, classify, make_ppt
from .generators import generators_of


class DerivativeKind(Enum):
    MAJOR = "major"
    MINOR = "minor"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SquarePair:
    """Sides of the two inscribed squares of a right triangle: h against a leg
    corner, s against the hypotenuse.  Satisfies c > h > s and the reciprocal
    identity 1/c^2 + 1/h^2 = 1/s^2."""

    h: Fraction
    s: Fraction


def _is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


@dataclass(frozen=True)
class QuadraticSurd:
    """Exact value (u + sign*sqrt(d))/v with integer u, d and positive v.

    Normalized at construction: a perfect-square radicand collapses to a plain
    rational (d = 0, sign = +1, u/v reduced), and a common factor g with
    g | u, g | v, g^2 | d is divided out.  The radicand may be negative.
    """

    u: int
    d: int
    v: int
    sign: int = 1

    def __post_init__(self) -> None:
        u, d, v, sign = self.u, self.d, self.v, self.sign
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        if v == 0:
            raise ValueError("zero denominator")
        if v < 0:
            u, v = -u, -v
        if _is_square(d):
            u += sign * math.isqrt(d)
            d, sign = 0, 1
        if d == 0:
            g = math.gcd(u, v)
        else:
            g = 1
            for cand in range(math.gcd(abs(u), v), 1, -1):
                if u % cand == 0 and v % cand == 0 and d % (cand * cand) == 0:
                    g = cand
                    break
        object.__setattr__(self, "u", u // g)
        object.__setattr__(self, "d", d // (g * g))
        object.__setattr__(self, "v", v // g)
        object.__setattr__(self, "sign", sign)

    @property
    def is_rational(self) -> bool:
        return self.d == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.u, self.v)

    def __str__(self) -> str:
        if self.is_rational:
            return str(Fraction(self.u, self.v))
        op = "+" if self.sign == 1 else "-"
        return f"({self.u} {op} sqrt({self.d}))/{self.v}"


@dataclass(frozen=True)
class AntiDerivative:
    """Exact preimage of a triple under one derivative kind.

    The roots encode the preimage legs: for the major kind they are the legs
    themselves, for the minor kind they are (larger leg, -smaller leg).  When
    the preimage is a genuine primitive triple it appears in `integral`,
    otherwise the roots are irrational (or complex) surds.
    """

    kind: DerivativeKind
    roots: tuple[QuadraticSurd, QuadraticSurd]
    hypotenuse: int
    integral: PPT | None


def harmonic_sum(alpha: Rational, beta: Rational) -> Fraction:
    """Exact harmonic sum alpha*beta/(alpha + beta)."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha <= 0 or beta <= 0:
        raise ValueError("harmonic sum requires positive operands")
    return alpha * beta / (alpha + beta)


def inscribed_squares(t: PPT) -> SquarePair:
    """Sides of the leg-corner square ab/(a+b) and the hypotenuse square abc/(ab + c^2)."""
    a, b, c = t.sides()
    return SquarePair(Fraction(a * b, a + b), Fraction(a * b * c, a * b + c * c))


@dataclass(frozen=True)
class IntegerSquareScale:
    """Smallest integer multiple of a triple whose inscribed squares are integers."""

    scale: int
    scaled: tuple[int, int, int]
    h: int
    s: int


def integer_square_scale(t: PPT) -> IntegerSquareScale:
    """Scale a triple by the least factor making both inscribed squares integral."""
    sq = inscribed_squares(t)
    lam = math.lcm(sq.h.denominator, sq.s.denominator)
    return IntegerSquareScale(
        lam,
        (lam * t.a, lam * t.b, lam * t.c),
        int(lam * sq.h),
        int(lam * sq.s),
    )


def reciprocal_triple(t: PPT) -> tuple[Fraction, Fraction, Fraction]:
    """The rational right triangle (1/h, 1/c, 1/s): two legs and hypotenuse."""
    sq = inscribed_squares(t)
    return 1 / sq.h, Fraction(1, t.c), 1 / sq.s


def trivial_reciprocal_solution(t: PPT) -> tuple[int, int, int]:
    """Integer solution (bc, ac, ab) of 1/x^2 + 1/y^2 = 1/z^2."""
    a, b, c = t.sides()
    return b * c, a * c, a * b


def major_derivative(t: PPT) -> PPT:
    """The triple (c(a+b), ab, c^2 + ab), canonically oriented."""
    a, b, c = t.sides()
    return make_ppt(c * (a + b), a * b, c * c + a * b)


def minor_derivative(t: PPT) -> PPT:
    """The triple (c|a-b|, ab, c^2 - ab), canonically oriented."""
    a, b, c = t.sides()
    return make_ppt(c * abs(a - b), a * b, c * c - a * b)


def derivative(t: PPT, kind: DerivativeKind) -> PPT:
    return major_derivative(t) if kind is DerivativeKind.MAJOR else minor_derivative(t)


def corollary_generators(t: PPT, kind: DerivativeKind) -> tuple[Fraction, Fraction]:
    """Primary and secondary generators of the chosen derivative, read directly off t.

    Major: T = ab/((c+a)(c+b)), T' = c/(a+b).  Minor: T = ab/((c-a)(c+b)),
    T' = (b-a)/c, evaluated with the legs ordered smaller-first so both
    fractions come out proper.
    """
    a, b, c = t.sides()
    if kind is DerivativeKind.MAJOR:
        return Fraction(a * b, (c + a) * (c + b)), Fraction(c, a + b)
    lo, hi = min(a, b), max(a, b)
    return Fraction(lo * hi, (c - lo) * (c + hi)), Fraction(hi - lo, c)


def anti_derivative(t: PPT, kind: DerivativeKind) -> AntiDerivative:
    """Invert a derivative exactly.

    With Q/P the primary generator of t, the major preimage legs are the roots
    of x^2 - (P+Q)x + 2PQ and its hypotenuse is P-Q; the minor preimage has
    hypotenuse P+Q and root pair ((P-Q) +- sqrt((P-Q)^2 + 8PQ))/2, read as
    (larger leg, -smaller leg).  Roots are returned as exact surds; `integral`
    is set only when they collapse to the legs of a primitive triple whose
    derivative reproduces t.
    """
    t1, _ = generators_of(t)
    q, p = t1.numerator, t1.denominator
    if kind is DerivativeKind.MAJOR:
        u, hyp = p + q, p - q
        disc = u * u - 8 * p * q
    else:
        u, hyp = p - q, p + q
        disc = u * u + 8 * p * q
    roots = (QuadraticSurd(u, disc, 2, 1), QuadraticSurd(u, disc, 2, -1))
    integral: PPT | None = None
    if _is_square(disc):
        m = math.isqrt(disc)
        legs = ((u + m) // 2, (u - m) // 2) if kind is DerivativeKind.MAJOR else ((u + m) // 2, (m - u) // 2)
        if legs[0] > 0 and legs[1] > 0:
            try:
                candidate = make_ppt(legs[0], legs[1], hyp)
            except TripleError:
                candidate = None
            if candidate is not None and derivative(candidate, kind) == t:
                integral = candidate
    return AntiDerivative(kind, roots, hyp, integral)


def is_derivative(t: PPT, kind: DerivativeKind) -> PPT | None:
    """The integral anti-derivative of t under `kind`, or None when there is none."""
    return anti_derivative(t, kind).integral


def factor_class_transition(t: PPT) -> tuple[TClass, TClass]:
    """Class of t and the shared class of both its derivatives (T4 from T1/T2, else T6)."""
    original = classify(t)
    expected = TClass.T4 if original in (TClass.T1, TClass.T2) else TClass.T6
    got_major = classify(major_derivative(t))
    got_minor = classify(minor_derivative(t))
    if not (got_major == got_minor == expected):
        raise AssertionError(
            f"derivative classes of {t} diverge: major {got_major}, minor {got_minor}, expected {expected}"
        )
    return original, expected
