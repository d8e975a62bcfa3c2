"""Shared fixtures and an independent brute-force enumeration oracle."""

import math

import pytest
from hypothesis import settings

from pptalgebra import PPT, walk

settings.register_profile("suite", deadline=None, max_examples=100)
settings.load_profile("suite")


def brute_force_ppts(max_c: int) -> list[PPT]:
    """Every PPT with hypotenuse <= max_c, found by scanning leg pairs.

    Deliberately ignorant of generators and the tree so it can act as an
    oracle for both.
    """
    found = []
    for a in range(3, max_c, 2):
        if a * a + 16 > max_c * max_c:
            break
        for b in range(4, max_c, 2):
            c2 = a * a + b * b
            if c2 > max_c * max_c:
                break
            c = math.isqrt(c2)
            if c * c == c2 and math.gcd(a, b) == 1:
                found.append(PPT(a, b, c))
    return sorted(found)


@pytest.fixture(scope="session")
def brute_force():
    return brute_force_ppts


@pytest.fixture(scope="session")
def corpus() -> list[PPT]:
    """All 9841 triples through tree depth 8, breadth-first."""
    return list(walk(8))


@pytest.fixture(scope="session")
def small_corpus() -> list[PPT]:
    """All 1093 triples through tree depth 6."""
    return list(walk(6))
