"""Navigation of the Barning-Hall ternary tree of primitive Pythagorean triples.

Every PPT appears exactly once in the tree rooted at [3,4,5].  Nodes are
addressed by path codes over the letters A (down-left), B (straight down),
C (down-right); the same steps act on primary generators as fraction maps,
which is how everything here is computed.  Path codes are held run-length
compressed because the closed-form locations of some family derivatives
contain runs far too long to materialize letter by letter.
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterator
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .triple_core import PPT, TripleError, make_ppt
from .generators import (
    KeySequence,
    format_fraction,
    key_sequence_of,
    require_proper,
    triple_from_key,
    triple_from_primary,
)
from .symphonic import DerivativeKind


class SecondaryRoot(TripleError):
    """The generator 1/3 roots the even-sum companion tree and has no parent here."""


class NotInPrimaryTree(TripleError):
    """Regression from the given fraction bottoms out at 1/3, not at the root 1/2."""


class DegenerateIndex(TripleError):
    """A closed-form location would need a negative run length at this index."""


class Root:
    """Marker returned by parent() at the top of the tree (generator 1/2)."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "Root"


ROOT = Root()

ROOT_GENERATOR = Fraction(1, 2)

_TOKEN_RE = re.compile(r"([ABC])(?:\^(\d+))?")

# Longest code printed letter-by-letter; anything longer renders run-length.
_MAX_EXPANDED_LETTERS = 10_000


@dataclass(frozen=True)
class PathCode:
    """A word over {A, B, C}, stored as maximal (letter, count) runs.

    The empty code addresses the root.  Counts are exact integers, so codes
    like C^129858761423 are first-class values; only printing and letters()
    care about materializability.
    """

    runs: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        merged: list[tuple[str, int]] = []
        for letter, count in self.runs:
            if letter not in ("A", "B", "C"):
                raise ValueError(f"path letter must be A, B or C, got {letter!r}")
            if count < 0:
                raise ValueError(f"negative run length {count} for {letter}")
            if count == 0:
                continue
            if merged and merged[-1][0] == letter:
                merged[-1] = (letter, merged[-1][1] + count)
            else:
                merged.append((letter, count))
        object.__setattr__(self, "runs", tuple(merged))

    @classmethod
    def parse(cls, text: str) -> "PathCode":
        """Parse letters with optional run-length tokens: 'AACAA', 'C^13', 'AA C^16 B'."""
        runs = []
        pos, end = 0, len(text)
        while pos < end:
            if text[pos].isspace():
                pos += 1
                continue
            match = _TOKEN_RE.match(text, pos)
            if match is None:
                raise ValueError(f"invalid path code {text!r} at position {pos}")
            runs.append((match.group(1), int(match.group(2)) if match.group(2) else 1))
            pos = match.end()
        return cls(tuple(runs))

    def __len__(self) -> int:
        return sum(count for _, count in self.runs)

    def __add__(self, other: "PathCode") -> "PathCode":
        return PathCode(self.runs + other.runs)

    def __mul__(self, times: int) -> "PathCode":
        if times < 0:
            raise ValueError(f"cannot repeat a path code {times} times")
        return PathCode(self.runs * times)

    def letters(self) -> str:
        """The fully expanded word; refuses codes too long to materialize."""
        if len(self) > _MAX_EXPANDED_LETTERS:
            raise ValueError(f"path code of length {len(self)} is too long to expand")
        return "".join(letter * count for letter, count in self.runs)

    def compact(self) -> str:
        """Run-length rendering, e.g. 'B C^3 B A^9'; parse() accepts it back."""
        if not self.runs:
            return ""
        return " ".join(
            letter if count == 1 else f"{letter}^{count}" for letter, count in self.runs
        )

    def __str__(self) -> str:
        if len(self) <= _MAX_EXPANDED_LETTERS:
            return self.letters()
        return self.compact()


def step(f: Fraction, letter: str) -> Fraction:
    """One child step on a primary generator: A, B or C."""
    require_proper(f)
    q, p = f.numerator, f.denominator
    if letter == "A":
        return Fraction(q, p + 2 * q)
    if letter == "B":
        return Fraction(p, 2 * p + q)
    if letter == "C":
        return Fraction(p, 2 * p - q)
    raise ValueError(f"step letter must be A, B or C, got {letter!r}")


def parent(f: Fraction) -> tuple[Fraction, str] | Root:
    """Invert one step: the parent generator and the letter that reached f.

    Returns ROOT for 1/2.  The quotient q/(p-2q) decides the letter: a proper
    value means A, an improper one B (take the reciprocal), a negative one C
    (negate and take the reciprocal).
    """
    require_proper(f)
    q, p = f.numerator, f.denominator
    if q == 1 and p == 2:
        return ROOT
    if q == 1 and p == 3:
        raise SecondaryRoot("1/3 roots the secondary tree and has no parent here")
    d = p - 2 * q
    if d > q:
        return Fraction(q, d), "A"
    if d > 0:
        return Fraction(d, q), "B"
    return Fraction(-d, q), "C"


def locate(f: Fraction) -> PathCode:
    """Path code from the root 1/2 down to the generator f.

    Regression runs whole runs at a time: stripping A subtracts 2q from the
    denominator with the numerator fixed, and stripping C subtracts the
    invariant d = p - q from both parts, so run lengths come from a division
    instead of a loop.  B steps shrink the pair geometrically and are taken
    singly.
    """
    require_proper(f)
    q, p = f.numerator, f.denominator
    reversed_runs: list[tuple[str, int]] = []
    while not (q == 1 and p == 2):
        if q == 1 and p == 3:
            raise NotInPrimaryTree(
                f"{format_fraction(f)} regresses to 1/3; it generates no triple"
            )
        d = p - 2 * q
        if d > q:
            count = (p - q - 1) // (2 * q)
            reversed_runs.append(("A", count))
            p -= 2 * count * q
        elif d > 0:
            reversed_runs.append(("B", 1))
            q, p = d, q
        else:
            delta = p - q
            count = (q - 1) // delta
            reversed_runs.append(("C", count))
            q -= count * delta
            p -= count * delta
    return PathCode(tuple(reversed(reversed_runs)))


def _b_run(q: int, p: int, count: int) -> tuple[int, int]:
    # (q, p) -> (p, q + 2p) iterated `count` times, via 2x2 matrix power.
    xa, xb, xc, xd = 1, 0, 0, 1
    ya, yb, yc, yd = 0, 1, 1, 2
    while count:
        if count & 1:
            xa, xb, xc, xd = (
                xa * ya + xb * yc,
                xa * yb + xb * yd,
                xc * ya + xd * yc,
                xc * yb + xd * yd,
            )
        ya, yb, yc, yd = (
            ya * ya + yb * yc,
            ya * yb + yb * yd,
            yc * ya + yd * yc,
            yc * yb + yd * yd,
        )
        count >>= 1
    return xa * q + xb * p, xc * q + xd * p


def apply_path(f: Fraction, code: PathCode) -> Fraction:
    """Follow a path code downward from f, one whole run at a time."""
    require_proper(f)
    q, p = f.numerator, f.denominator
    for letter, count in code.runs:
        if letter == "A":
            p += 2 * count * q
        elif letter == "C":
            delta = p - q
            q += count * delta
            p += count * delta
        else:
            q, p = _b_run(q, p, count)
    return Fraction(q, p)


_ROOT_KEY = KeySequence(1, 1, 2, 3)


def _complete(q2: int, q1: int) -> KeySequence:
    return KeySequence(q2, q1, q1 + q2, 2 * q1 + q2)


def _key_children(key: KeySequence) -> tuple[KeySequence, KeySequence, KeySequence]:
    return (
        _complete(key.p2, key.q1),
        _complete(key.p2, key.p1),
        _complete(key.q2, key.p1),
    )


def children(t: PPT) -> tuple[PPT, PPT, PPT]:
    """The left, middle and right successors of a triple."""
    left, middle, right = _key_children(key_sequence_of(t))
    return triple_from_key(left), triple_from_key(middle), triple_from_key(right)


def enumerate_level(n: int) -> list[PPT]:
    """All 3^n triples of tree level n, in left-to-right order."""
    if n < 0:
        raise ValueError(f"tree level must be nonnegative, got {n}")
    keys = [_ROOT_KEY]
    for _ in range(n):
        keys = [child for key in keys for child in _key_children(key)]
    return [triple_from_key(key) for key in keys]


def walk(max_depth: int) -> Iterator[PPT]:
    """Breadth-first triples, level by level, through depth max_depth."""
    if max_depth < 0:
        raise ValueError(f"depth must be nonnegative, got {max_depth}")
    keys = [_ROOT_KEY]
    for depth in itertools.count():
        for key in keys:
            yield triple_from_key(key)
        if depth == max_depth:
            return
        keys = [child for key in keys for child in _key_children(key)]


def iter_by_hypotenuse(bound: int) -> Iterator[PPT]:
    """Every PPT with hypotenuse <= bound, in unspecified order.

    Depth-first over the tree; children never shrink the hypotenuse, so
    subtrees above the bound are pruned whole.
    """
    if bound < 5:
        return
    stack = [_ROOT_KEY]
    while stack:
        key = stack.pop()
        yield triple_from_key(key)
        for child in _key_children(key):
            if child.p1 * child.p2 - child.q1 * child.q2 <= bound:
                stack.append(child)


def derive_generator(f: Fraction, kind: DerivativeKind) -> Fraction:
    """Primary generator of the major/minor derivative, straight from f = q/p.

    Major sends q/p to q(p-q)/(p(p+q)).  Minor sends it to q(p+q)/(p(p-q)),
    which can come out improper; an improper result is read as the generator
    with numerator and denominator exchanged.
    """
    require_proper(f)
    q, p = f.numerator, f.denominator
    if kind is DerivativeKind.MAJOR:
        return Fraction(q * (p - q), p * (p + q))
    numerator, denominator = q * (p + q), p * (p - q)
    if numerator > denominator:
        numerator, denominator = denominator, numerator
    return Fraction(numerator, denominator)


@dataclass(frozen=True)
class PellPair:
    """n-th terms of the twin Pell sequences 1,2,5,12,29,... and 1,3,7,17,41,...

    Both follow next = 2*current + previous.  Consecutive pairs assemble into
    the key sequences [q(n), p(n), p(n+1), q(n+1)] of the straight-down family.
    """

    index: int
    p: int
    q: int


def pell(n: int) -> PellPair:
    if n < 1:
        raise ValueError(f"Pell index must be positive, got {n}")
    p_prev, p_cur = 0, 1
    q_prev, q_cur = 1, 1
    for _ in range(n - 1):
        p_prev, p_cur = p_cur, 2 * p_cur + p_prev
        q_prev, q_cur = q_cur, 2 * q_cur + q_prev
    return PellPair(n, p_cur, q_cur)


class FamilyLine(Enum):
    """The three classical one-parameter families, one per pure-letter path."""

    PLATONIC = "platonic"
    PYTHAGOREAN = "pythagorean"
    FERMAT = "fermat"

    def __str__(self) -> str:
        return self.value


_FAMILY_LETTER = {
    FamilyLine.PLATONIC: "A",
    FamilyLine.PYTHAGOREAN: "C",
    FamilyLine.FERMAT: "B",
}


@dataclass(frozen=True)
class Family:
    """The n-th member of a classical family (1-based)."""

    line: FamilyLine
    index: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"family index must be positive, got {self.index}")

    @property
    def path_code(self) -> PathCode:
        return PathCode(((_FAMILY_LETTER[self.line], self.index - 1),))


def family_generator(fam: Family) -> Fraction:
    """Primary generator of the n-th family member.

    Platonic members sit at 1/(2n), Pythagorean at n/(n+1), and the Fermat
    family at ratios p(n)/p(n+1) of consecutive Pell numbers.
    """
    n = fam.index
    if fam.line is FamilyLine.PLATONIC:
        return Fraction(1, 2 * n)
    if fam.line is FamilyLine.PYTHAGOREAN:
        return Fraction(n, n + 1)
    return Fraction(pell(n).p, pell(n + 1).p)


def family_member(fam: Family) -> PPT:
    """The n-th member triple of the family."""
    return triple_from_primary(family_generator(fam))


def derivative_location(fam: Family, kind: DerivativeKind) -> PathCode:
    """Closed-form tree address of a family member's major/minor derivative.

    Each family/kind pairing has a fixed-shape code whose run lengths are
    linear in the index (Pell-sized for the straight-down minor).  Indices
    where a run length would go negative raise DegenerateIndex instead of
    guessing.
    """
    n = fam.index
    if fam.line is FamilyLine.PYTHAGOREAN:
        if kind is DerivativeKind.MAJOR:
            return PathCode((("C", n - 1), ("A", n + 1)))
        return PathCode((("C", n), ("A", n - 1)))
    if fam.line is FamilyLine.FERMAT:
        if kind is DerivativeKind.MAJOR:
            return PathCode((("A", 2),)) + PathCode((("C", 1), ("A", 2))) * (n - 1)
        k = (pell(2 * n + 1).p - 1) // 2
        return PathCode((("C", k - 1),))
    if n == 1:
        raise DegenerateIndex(
            f"no closed form for the first Platonic member's {kind} derivative"
        )
    half = n // 2
    if kind is DerivativeKind.MAJOR:
        lead = "C" if n % 2 == 0 else "B"
        return PathCode(((lead, 1), ("A", half - 1), ("B", 1), ("A", n)))
    if n % 2 == 0:
        return PathCode((("B", 1), ("A", half - 1), ("B", 1), ("A", n - 2)))
    return PathCode((("C", 1), ("A", half), ("B", 1), ("A", n - 2)))


def square_triangle_triple(i: int) -> PPT:
    """The i-th triple with consecutive legs, from square triangular numbers.

    The squares among the triangular numbers have sides 1, 6, 35, 204, ...
    (next = 6*current - previous); a consecutive pair (x, y) of those gives
    hypotenuse y - x and legs splitting x + y into two consecutive integers.
    """
    if i < 1:
        raise ValueError(f"index must be positive, got {i}")
    x, y = 1, 6
    for _ in range(i - 1):
        x, y = y, 6 * y - x
    return make_ppt((x + y) // 2, (x + y + 1) // 2, y - x)
