"""Rotations, conjugacy classes, palindrome counts, tightness conditions."""

import pytest
import reference as ref
from hypothesis import given
from hypothesis import strategies as st

from gridpal import (
    Word2D,
    check_tightness_conditions,
    column_words,
    conjugacy_class,
    conjugate,
    is_hv_palindrome,
    is_palindrome_2d,
    is_reversal_palindrome,
    max_pal_conjugates_bound,
    pal_conjugates,
    rotate_cols,
    rotate_rows,
    row_words,
)

EXAMPLE_4X3 = Word2D(("abc", "cbb", "bbc", "cba"))
EXAMPLE_4X4 = Word2D(("abba", "aaaa", "aaaa", "abba"))

words = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(
            st.text(alphabet="ab", min_size=n, max_size=n), min_size=m, max_size=m
        ).map(lambda rows: Word2D(tuple(rows)))
    )
)


class TestRotations:
    def test_rotate_cols(self):
        w = Word2D(("abc", "def"))
        assert rotate_cols(w, 1) == Word2D(("cab", "fde"))
        assert rotate_cols(w, 3) == w
        assert rotate_cols(w, 4) == rotate_cols(w, 1)
        assert rotate_cols(w, -1) == rotate_cols(w, 2)

    def test_rotate_rows(self):
        w = Word2D(("abc", "def", "ghi"))
        assert rotate_rows(w, 1) == Word2D(("ghi", "abc", "def"))
        assert rotate_rows(w, 3) == w

    def test_conjugate_composition(self):
        w = EXAMPLE_4X3
        assert conjugate(w, 2, 3) == rotate_rows(rotate_cols(w, 2), 3)

    @given(words, st.integers(0, 8), st.integers(0, 8))
    def test_rotations_commute(self, w, i, j):
        assert rotate_rows(rotate_cols(w, i), j) == rotate_cols(rotate_rows(w, j), i)

    @given(words, st.integers(0, 8))
    def test_rotation_inverse(self, w, k):
        assert rotate_cols(rotate_cols(w, k), w.cols - k % w.cols) == w


class TestConjugacyClass:
    def test_example_class_size(self):
        assert len(conjugacy_class(EXAMPLE_4X3)) == 12

    def test_matches_reference(self):
        for w in (EXAMPLE_4X3, EXAMPLE_4X4, Word2D(("ab", "ba"))):
            assert {v.lines for v in conjugacy_class(w)} == ref.conj_class(w.lines)

    @given(words)
    def test_class_size_divides_mn(self, w):
        assert (w.rows * w.cols) % len(conjugacy_class(w)) == 0

    @given(words)
    def test_membership_is_symmetric(self, w):
        v = conjugate(w, 1, 1)
        assert conjugacy_class(v) == conjugacy_class(w)


class TestPalConjugates:
    def test_pinned_4x3_example(self):
        rep = pal_conjugates(EXAMPLE_4X3)
        assert rep.class_size == 12
        assert rep.pal_count == 2
        assert rep.hv_count == 0

    def test_pinned_4x4_example(self):
        rep = pal_conjugates(EXAMPLE_4X4)
        assert rep.class_size == 16
        assert rep.pal_count == 4
        assert rep.hv_count == 4
        assert sorted(rep.witness_rotations.values()) == [
            (0, 0), (0, 2), (2, 0), (2, 2),
        ]

    def test_witness_rotations_reproduce_members(self):
        rep = pal_conjugates(EXAMPLE_4X3)
        for member, (i, j) in rep.witness_rotations.items():
            assert conjugate(EXAMPLE_4X3, i, j) == member

    def test_parity_bound_values(self):
        assert max_pal_conjugates_bound(2, 4) == 4
        assert max_pal_conjugates_bound(3, 5) == 1
        assert max_pal_conjugates_bound(2, 3) == 2
        assert max_pal_conjugates_bound(3, 2) == 2
        with pytest.raises(ValueError):
            max_pal_conjugates_bound(0, 2)

    @given(words)
    def test_members_classified_correctly(self, w):
        rep = pal_conjugates(w)
        assert rep.pal_members == {
            v for v in rep.class_members if is_palindrome_2d(v)
        }
        assert rep.hv_members == {v for v in rep.pal_members if is_hv_palindrome(v)}
        assert rep.pal_count <= max_pal_conjugates_bound(*w.shape)


class TestTightness:
    # Attainment of the parity cap versus the corner-block criterion.  The
    # even/even criterion is not a biconditional: both directions fail on
    # concrete words, so the report carries criterion_matches instead of
    # asserting it.  These sets pin the exact binary failure cases.
    FAILURES_2X4 = {("abba", "abba"), ("baab", "baab")}
    FAILURES_4X4 = {
        ("aaaa", "bbbb", "bbbb", "aaaa"),
        ("abba", "abba", "abba", "abba"),
        ("abba", "baab", "baab", "abba"),
        ("baab", "abba", "abba", "baab"),
        ("baab", "baab", "baab", "baab"),
        ("bbbb", "aaaa", "aaaa", "bbbb"),
    }

    @staticmethod
    def hv_words(m, n):
        return [Word2D(w) for w in ref.all_words("ab", m, n) if ref.is_hv(w)]

    def test_odd_odd_always_attains(self):
        for w in self.hv_words(3, 3):
            rep = check_tightness_conditions(w)
            assert rep.cap == 1 and rep.attains_cap
            assert rep.condition_holds is None

    @pytest.mark.parametrize("shape", [(2, 3), (3, 2), (2, 5), (3, 4), (4, 3)])
    def test_mixed_parity_criterion_exact(self, shape):
        # one even and one odd extent: the criterion is a biconditional,
        # over every binary 2D palindrome of the shape
        for rows in ref.pal_carriers("ab", *shape):
            rep = check_tightness_conditions(Word2D(rows))
            assert rep.cap == 2
            assert rep.criterion_matches, (rows, rep)

    @pytest.mark.parametrize(
        "shape,failures", [((2, 4), FAILURES_2X4), ((4, 4), FAILURES_4X4)]
    )
    def test_even_even_criterion_failure_set_pinned(self, shape, failures):
        got = {
            w.lines
            for w in self.hv_words(*shape)
            if not check_tightness_conditions(w).criterion_matches
        }
        assert got == failures

    def test_even_even_on_2x2_is_exact(self):
        for w in self.hv_words(2, 2):
            assert check_tightness_conditions(w).criterion_matches

    @pytest.mark.xfail(
        strict=True,
        reason="the even/even corner-block criterion is not a biconditional;"
        " the failure sets pinned above are genuine counterexamples, which is"
        " why check_tightness_conditions reports instead of asserting",
    )
    def test_even_even_criterion_as_biconditional(self):
        for w in self.hv_words(4, 4):
            assert check_tightness_conditions(w).criterion_matches

    def test_rejects_non_palindrome(self):
        with pytest.raises(ValueError):
            check_tightness_conditions(Word2D(("ab", "cd")))


class TestReadings:
    def test_row_and_column_words(self):
        w = Word2D(("abc", "def"))
        assert row_words(w) == ("abc", "def")
        assert column_words(w) == ("ad", "be", "cf")

    @given(words)
    def test_column_reading_reversal_palindrome_iff_pal2d(self, w):
        # reading the word as its column sequence, with letter mirroring
        # acting as string reversal, gives back exactly 2D palindromicity
        assert is_reversal_palindrome(column_words(w)) == is_palindrome_2d(w)

    def test_plain_sequence_reading_is_weaker(self):
        # ab over ba: the column words (ab, ba) form a reversal palindrome
        # but not a plain one, which is why the mirroring matters
        w = Word2D(("ab", "ba"))
        cols = column_words(w)
        assert is_reversal_palindrome(cols)
        assert cols != tuple(reversed(cols))
