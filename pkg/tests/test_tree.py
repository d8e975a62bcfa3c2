"""Tree navigation: path codes, parent/child steps, families, closed-form locations."""

import math
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from pptalgebra import (
    ROOT,
    ROOT_GENERATOR,
    DegenerateIndex,
    DerivativeKind,
    Family,
    FamilyLine,
    NotInPrimaryTree,
    PathCode,
    Root,
    SecondaryRoot,
    apply_path,
    children,
    derivative_location,
    derive_generator,
    enumerate_level,
    family_generator,
    family_member,
    generators_of,
    iter_by_hypotenuse,
    locate,
    major_derivative,
    make_ppt,
    minor_derivative,
    parent,
    pell,
    square_triangle_triple,
    step,
    triple_from_primary,
    walk,
)
from pptalgebra.generators import KeySequence


@st.composite
def primary_fraction(draw, max_den: int = 5000):
    p = draw(st.integers(min_value=2, max_value=max_den))
    q = draw(st.integers(min_value=1, max_value=p - 1))
    assume(math.gcd(p, q) == 1)
    assume((p + q) % 2 == 1)
    return Fraction(q, p)


def naive_locate(f: Fraction) -> str:
    """Single-step regression; the letter-by-letter oracle for locate()."""
    letters = []
    while True:
        up = parent(f)
        if isinstance(up, Root):
            return "".join(reversed(letters))
        f, letter = up
        letters.append(letter)


def naive_apply(f: Fraction, letters: str) -> Fraction:
    for letter in letters:
        f = step(f, letter)
    return f


# ---------------------------------------------------------------- path codes


def test_parse_letters_and_run_length():
    assert PathCode.parse("AACAA").runs == (("A", 2), ("C", 1), ("A", 2))
    assert PathCode.parse("C^13") == PathCode((("C", 13),))
    assert PathCode.parse("AA C^16 B") == PathCode((("A", 2), ("C", 16), ("B", 1)))
    assert PathCode.parse("") == PathCode()
    assert PathCode.parse("  ") == PathCode()


def test_adjacent_runs_merge():
    assert PathCode((("A", 2), ("A", 3))) == PathCode((("A", 5),))
    assert PathCode.parse("A^2A^3") == PathCode.parse("A^5")
    assert (PathCode.parse("AAC") + PathCode.parse("CCB")).runs == (("A", 2), ("C", 3), ("B", 1))


def test_zero_runs_vanish():
    assert PathCode((("A", 0), ("B", 1))) == PathCode.parse("B")


def test_repeat():
    assert PathCode.parse("CAA") * 3 == PathCode.parse("CAACAACAA")
    assert PathCode.parse("CAA") * 0 == PathCode()
    with pytest.raises(ValueError):
        PathCode.parse("A") * -1


def test_length_and_str():
    code = PathCode.parse("BCCCB A^9")
    assert len(code) == 14
    assert str(code) == "BCCCBAAAAAAAAA"
    assert str(PathCode()) == ""
    assert PathCode.parse(str(code)) == code


def test_huge_codes_stay_compact():
    huge = PathCode((("C", 129858761422),))
    assert len(huge) == 129858761422
    assert str(huge) == "C^129858761422"
    assert PathCode.parse(str(huge)) == huge
    with pytest.raises(ValueError):
        huge.letters()


def test_compact_rendering():
    assert PathCode.parse("BCCCBAAAAAAAAA").compact() == "B C^3 B A^9"
    assert PathCode.parse("ABC").compact() == "A B C"


def test_invalid_codes_rejected():
    for bad in ("AD", "a", "A^", "^3", "A^-2", "A 3"):
        with pytest.raises(ValueError):
            PathCode.parse(bad)
    with pytest.raises(ValueError):
        PathCode((("A", -1),))
    with pytest.raises(ValueError):
        PathCode((("D", 1),))


# ------------------------------------------------------------- single steps


def test_step_goldens():
    assert step(Fraction(1, 2), "A") == Fraction(1, 4)
    assert step(Fraction(1, 2), "B") == Fraction(2, 5)
    assert step(Fraction(1, 2), "C") == Fraction(2, 3)
    assert naive_apply(Fraction(1, 4), "CAA") == Fraction(4, 23)


def test_step_rejects_bad_letter():
    with pytest.raises(ValueError):
        step(Fraction(1, 2), "D")


def test_parent_goldens():
    assert parent(Fraction(6, 35)) == (Fraction(6, 23), "A")
    assert parent(Fraction(6, 11)) == (Fraction(1, 6), "C")
    assert parent(Fraction(2, 5)) == (Fraction(1, 2), "B")
    assert isinstance(parent(Fraction(1, 2)), Root)


def test_parent_of_secondary_root():
    with pytest.raises(SecondaryRoot):
        parent(Fraction(1, 3))


@given(primary_fraction(max_den=2000), st.sampled_from("ABC"))
def test_parent_inverts_step(f, letter):
    assert parent(step(f, letter)) == (f, letter)


def test_parent_inverts_step_over_corpus(corpus):
    for t in corpus:
        f = generators_of(t)[0]
        for letter in "ABC":
            assert parent(step(f, letter)) == (f, letter)


# ------------------------------------------------------------------- locate


def test_locate_goldens():
    assert locate(Fraction(6, 35)) == PathCode.parse("AACAA")
    assert locate(Fraction(1, 2)) == PathCode()
    assert locate(Fraction(4, 23)) == PathCode.parse("ACAA")


def test_locate_rejects_even_sum_fractions():
    with pytest.raises(NotInPrimaryTree):
        locate(Fraction(1, 3))
    with pytest.raises(NotInPrimaryTree):
        locate(Fraction(3, 7))
    with pytest.raises(ValueError):
        locate(Fraction(7, 3))


@given(primary_fraction())
def test_locate_matches_naive_regression(f):
    assert locate(f).letters() == naive_locate(f)


@given(primary_fraction())
def test_apply_path_inverts_locate(f):
    assert apply_path(ROOT_GENERATOR, locate(f)) == f


@given(st.lists(st.tuples(st.sampled_from("ABC"), st.integers(1, 5)), max_size=12))
def test_apply_path_matches_naive_stepping(runs):
    code = PathCode(tuple(runs))
    assert apply_path(ROOT_GENERATOR, code) == naive_apply(ROOT_GENERATOR, code.letters())


def test_apply_path_batches_are_exact():
    # One run of each letter, long enough that batching must be used.
    for text, expected in (
        ("A^1000", Fraction(1, 2002)),
        ("C^1000", Fraction(1001, 1002)),
    ):
        assert apply_path(ROOT_GENERATOR, PathCode.parse(text)) == expected
    b_run = apply_path(ROOT_GENERATOR, PathCode.parse("B^20"))
    assert b_run == Fraction(pell(21).p, pell(22).p)


def test_locate_is_fast_on_astronomical_runs():
    k = (pell(31).p - 1) // 2
    f = Fraction(k, k + 1)
    code = locate(f)
    assert code == PathCode((("C", k - 1),))
    assert apply_path(ROOT_GENERATOR, code) == f


# ----------------------------------------------------------------- children


LEVEL_TWO = [
    (35, 12, 37),
    (65, 72, 97),
    (33, 56, 65),
    (77, 36, 85),
    (119, 120, 169),
    (39, 80, 89),
    (45, 28, 53),
    (55, 48, 73),
    (7, 24, 25),
]


def test_children_goldens():
    assert children(make_ppt(3, 4, 5)) == (
        make_ppt(15, 8, 17),
        make_ppt(21, 20, 29),
        make_ppt(5, 12, 13),
    )
    assert children(make_ppt(15, 8, 17)) == (
        make_ppt(35, 12, 37),
        make_ppt(65, 72, 97),
        make_ppt(33, 56, 65),
    )
    assert children(make_ppt(5, 12, 13)) == (
        make_ppt(45, 28, 53),
        make_ppt(55, 48, 73),
        make_ppt(7, 24, 25),
    )


def test_children_commute_with_generator_steps(small_corpus):
    for t in small_corpus:
        f = generators_of(t)[0]
        left, middle, right = children(t)
        assert generators_of(left)[0] == step(f, "A")
        assert generators_of(middle)[0] == step(f, "B")
        assert generators_of(right)[0] == step(f, "C")


def test_levels():
    assert enumerate_level(0) == [make_ppt(3, 4, 5)]
    assert enumerate_level(1) == [make_ppt(15, 8, 17), make_ppt(21, 20, 29), make_ppt(5, 12, 13)]
    assert [t.sides() for t in enumerate_level(2)] == LEVEL_TWO
    with pytest.raises(ValueError):
        enumerate_level(-1)


def test_levels_match_fraction_stepping():
    # Key-sequence completion and fraction stepping must build the same levels.
    generators = [ROOT_GENERATOR]
    for depth in range(5):
        assert enumerate_level(depth) == [triple_from_primary(g) for g in generators]
        generators = [step(g, letter) for g in generators for letter in "ABC"]


def test_level_sizes_and_uniqueness():
    seen = set()
    for depth in range(6):
        level = enumerate_level(depth)
        assert len(level) == 3**depth
        seen.update(level)
    assert len(seen) == (3**6 - 1) // 2


def test_walk_covers_levels(corpus):
    assert len(corpus) == 9841
    assert len(set(corpus)) == 9841
    assert corpus[:4] == enumerate_level(0) + enumerate_level(1)


def test_every_small_triple_has_exactly_one_position(corpus, brute_force):
    everyone = set(corpus)
    for t in brute_force(120):
        assert t in everyone
        assert len(locate(generators_of(t)[0])) <= 8


def test_iter_by_hypotenuse_matches_brute_force(brute_force):
    assert sorted(iter_by_hypotenuse(300)) == brute_force(300)
    assert list(iter_by_hypotenuse(4)) == []


# ------------------------------------------------- generator-level derivatives


def test_derive_generator_goldens():
    assert derive_generator(Fraction(1, 2), DerivativeKind.MAJOR) == Fraction(1, 6)
    assert derive_generator(Fraction(1, 2), DerivativeKind.MINOR) == Fraction(2, 3)
    assert derive_generator(Fraction(2, 5), DerivativeKind.MAJOR) == Fraction(6, 35)


def test_derive_generator_commutes_with_triples(small_corpus):
    for t in small_corpus:
        f = generators_of(t)[0]
        assert triple_from_primary(derive_generator(f, DerivativeKind.MAJOR)) == major_derivative(t)
        assert triple_from_primary(derive_generator(f, DerivativeKind.MINOR)) == minor_derivative(t)


# ----------------------------------------------------------- Pell & families


def test_pell_goldens():
    assert (pell(1).p, pell(1).q) == (1, 1)
    assert (pell(3).p, pell(3).q) == (5, 7)
    assert (pell(5).p, pell(5).q) == (29, 41)
    with pytest.raises(ValueError):
        pell(0)


def test_pell_recurrence_and_key_property():
    for n in range(1, 30):
        a, b = pell(n), pell(n + 1)
        assert pell(n + 2).p == 2 * b.p + a.p
        assert pell(n + 2).q == 2 * b.q + a.q
        # consecutive pairs assemble into a valid key sequence
        KeySequence(a.q, a.p, b.p, b.q)


def test_family_generators_and_members():
    assert family_generator(Family(FamilyLine.PLATONIC, 2)) == Fraction(1, 4)
    assert family_generator(Family(FamilyLine.PYTHAGOREAN, 2)) == Fraction(2, 3)
    assert family_generator(Family(FamilyLine.FERMAT, 2)) == Fraction(2, 5)
    assert family_member(Family(FamilyLine.PLATONIC, 2)) == make_ppt(15, 8, 17)
    assert family_member(Family(FamilyLine.FERMAT, 2)) == make_ppt(21, 20, 29)
    for n in (1, 2, 3):
        assert family_member(Family(FamilyLine.PYTHAGOREAN, n)).sides()[2] - family_member(
            Family(FamilyLine.PYTHAGOREAN, n)
        ).sides()[1] == 1


def test_family_index_validation():
    with pytest.raises(ValueError):
        Family(FamilyLine.PLATONIC, 0)


def test_family_paths_reach_family_generators():
    for line in FamilyLine:
        for n in range(1, 13):
            fam = Family(line, n)
            assert apply_path(ROOT_GENERATOR, fam.path_code) == family_generator(fam)


def test_platonic_members_are_the_one_over_even_family():
    for n in range(1, 10):
        t = family_member(Family(FamilyLine.PLATONIC, n))
        assert t.sides() == (4 * n * n - 1, 4 * n, 4 * n * n + 1)


# --------------------------------------------------- derivative location law


KNOWN_MAJOR_CODES = {
    (3, 4, 5): "AA",
    (15, 8, 17): "CBAA",
    (21, 20, 29): "AACAA",
    (5, 12, 13): "CAAA",
}

KNOWN_MINOR_CODES = {
    (3, 4, 5): "C",
    (15, 8, 17): "BB",
    (21, 20, 29): "C^13",
    (5, 12, 13): "CCA",
}


@pytest.mark.parametrize("table,kind", [
    (KNOWN_MAJOR_CODES, DerivativeKind.MAJOR),
    (KNOWN_MINOR_CODES, DerivativeKind.MINOR),
])
def test_known_derivative_locations(table, kind):
    for sides, code in table.items():
        t = make_ppt(*sides)
        derived = major_derivative(t) if kind is DerivativeKind.MAJOR else minor_derivative(t)
        assert locate(generators_of(derived)[0]) == PathCode.parse(code)


def test_closed_forms_for_level_one_members():
    assert derivative_location(Family(FamilyLine.PYTHAGOREAN, 1), DerivativeKind.MAJOR) == PathCode.parse("AA")
    assert derivative_location(Family(FamilyLine.PYTHAGOREAN, 1), DerivativeKind.MINOR) == PathCode.parse("C")
    assert derivative_location(Family(FamilyLine.FERMAT, 1), DerivativeKind.MAJOR) == PathCode.parse("AA")
    assert derivative_location(Family(FamilyLine.FERMAT, 1), DerivativeKind.MINOR) == PathCode.parse("C")
    assert derivative_location(Family(FamilyLine.PLATONIC, 2), DerivativeKind.MAJOR) == PathCode.parse("CBAA")
    assert derivative_location(Family(FamilyLine.PLATONIC, 2), DerivativeKind.MINOR) == PathCode.parse("BB")


@pytest.mark.parametrize("line", list(FamilyLine))
@pytest.mark.parametrize("kind", list(DerivativeKind))
def test_closed_forms_match_actual_locations(line, kind):
    for n in range(2, 16):
        fam = Family(line, n)
        actual = locate(derive_generator(family_generator(fam), kind))
        assert derivative_location(fam, kind) == actual


def test_degenerate_indices():
    for kind in DerivativeKind:
        with pytest.raises(DegenerateIndex):
            derivative_location(Family(FamilyLine.PLATONIC, 1), kind)


# -------------------------------------------------------- square triangles


def test_square_triangle_goldens():
    assert square_triangle_triple(1) == make_ppt(3, 4, 5)
    assert square_triangle_triple(2) == make_ppt(21, 20, 29)
    assert square_triangle_triple(3) == make_ppt(119, 120, 169)
    with pytest.raises(ValueError):
        square_triangle_triple(0)


def test_square_triangle_relation():
    # The square-sides sequence: squares among the triangular numbers.
    x, y = 1, 6
    for i in range(1, 11):
        t = square_triangle_triple(i)
        low, high = sorted((t.a, t.b))
        assert high - low == 1
        assert 2 * x * x == (t.c - high) * (t.c - low)
        x, y = y, 6 * y - x
