"""Bound formulas, palindrome generators, extremal constructions."""

import math

import pytest
import reference as ref

from gridpal import (
    BudgetExceededError,
    FAMILIES,
    Word2D,
    construct_binary_min_word,
    construct_q3_nontrivial_word,
    construct_q_min_word,
    construct_q_nontrivial_word,
    count_palindromes_formula,
    default_alphabet,
    enumerate_palindromic_factors,
    evaluate_bound,
    generate_all_palindromes,
    is_hv_palindrome,
    is_palindrome_2d,
    max_hv_bound,
    max_hv_in_hv_bound,
    max_pal_in_2row,
    max_pal_in_3row_palindrome,
    max_pal_in_palindrome_bound,
    min_hv_infinite,
    resolve_budget,
    transpose,
)

TABLE_SHAPES = [(3, 2), (3, 3), (3, 4), (3, 5), (3, 6), (4, 2), (4, 3), (4, 4)]


def hv_count(w: Word2D) -> int:
    return enumerate_palindromic_factors(w, "hv").count


class TestCountingFormula:
    def test_pinned_binary_2x2(self):
        assert count_palindromes_formula(2, 2, 2, "pal2d") == 4
        assert count_palindromes_formula(2, 2, 2, "hv") == 2

    def test_unary(self):
        assert count_palindromes_formula(1, 5, 7, "pal2d") == 1
        assert count_palindromes_formula(1, 5, 7, "hv") == 1

    def test_pinned_ternary(self):
        assert count_palindromes_formula(3, 2, 3, "pal2d") == 27

    def test_arbitrary_precision(self):
        v = count_palindromes_formula(10, 20, 20, "pal2d")
        assert v == 10**200

    def test_domain(self):
        with pytest.raises(ValueError):
            count_palindromes_formula(0, 2, 2)
        with pytest.raises(ValueError):
            count_palindromes_formula(2, 0, 2)
        with pytest.raises(ValueError):
            count_palindromes_formula(2, 2, 2, "diagonal")

    @pytest.mark.parametrize("q", [1, 2, 3])
    @pytest.mark.parametrize("m,n", [(1, 1), (1, 4), (2, 2), (2, 3), (3, 3), (3, 4)])
    def test_matches_brute_force(self, q, m, n):
        letters = default_alphabet(q)
        pal = sum(1 for w in ref.all_words(letters, m, n) if ref.is_pal(w))
        hv = sum(1 for w in ref.all_words(letters, m, n) if ref.is_hv(w))
        assert count_palindromes_formula(q, m, n, "pal2d") == pal
        assert count_palindromes_formula(q, m, n, "hv") == hv


class TestGenerator:
    def test_pinned_2x2_sets(self):
        got = {w.lines for w in generate_all_palindromes("ab", 2, 2, "pal2d")}
        assert got == {("aa", "aa"), ("ab", "ba"), ("ba", "ab"), ("bb", "bb")}
        hv = {w.lines for w in generate_all_palindromes("ab", 2, 2, "hv")}
        assert hv == {("aa", "aa"), ("bb", "bb")}

    def test_single_letter(self):
        assert [w.lines for w in generate_all_palindromes("a", 3, 3, "hv")] == [
            ("aaa", "aaa", "aaa")
        ]

    @pytest.mark.parametrize("kind", ["pal2d", "hv"])
    @pytest.mark.parametrize("q", [1, 2, 3])
    @pytest.mark.parametrize("m,n", [(1, 3), (2, 2), (2, 3), (3, 2), (3, 3), (4, 3)])
    def test_stream_is_exact(self, kind, q, m, n):
        letters = default_alphabet(q)
        seen = list(generate_all_palindromes(letters, m, n, kind))
        check = ref.is_pal if kind == "pal2d" else ref.is_hv
        # every element satisfies the predicate, no duplicates, formula length
        assert all(check(w.lines) for w in seen)
        assert len({w.lines for w in seen}) == len(seen)
        assert len(seen) == count_palindromes_formula(q, m, n, kind)

    def test_budget_enforced(self):
        with pytest.raises(BudgetExceededError):
            list(generate_all_palindromes("ab", 7, 8, "pal2d"))
        # raised eagerly, before the first yield
        gen = generate_all_palindromes("ab", 7, 8, "pal2d")
        with pytest.raises(BudgetExceededError):
            next(gen)

    def test_budget_override(self):
        few = list(generate_all_palindromes("ab", 2, 2, "pal2d", budget=4))
        assert len(few) == 4
        with pytest.raises(BudgetExceededError):
            list(generate_all_palindromes("ab", 2, 2, "pal2d", budget=3))

    def test_alphabet_validation(self):
        with pytest.raises(ValueError):
            list(generate_all_palindromes([], 2, 2))
        with pytest.raises(ValueError):
            list(generate_all_palindromes(["ab"], 2, 2))


class TestBudgetResolution:
    def test_default(self):
        assert resolve_budget() == 2**24

    def test_explicit_wins(self, monkeypatch):
        monkeypatch.setenv("GRIDPAL_BUDGET", "100")
        assert resolve_budget(7) == 7

    def test_env_var(self, monkeypatch):
        monkeypatch.setenv("GRIDPAL_BUDGET", "4096")
        assert resolve_budget() == 4096

    def test_env_var_invalid(self, monkeypatch):
        monkeypatch.setenv("GRIDPAL_BUDGET", "lots")
        with pytest.raises(ValueError):
            resolve_budget()
        monkeypatch.setenv("GRIDPAL_BUDGET", "0")
        with pytest.raises(ValueError):
            resolve_budget()


class TestMaxHVBound:
    def test_table_values(self):
        assert [max_hv_bound(m, n) for m, n in TABLE_SHAPES] == [
            6, 10, 14, 18, 22, 8, 14, 20,
        ]

    def test_two_rows(self):
        for n in range(2, 9):
            assert max_hv_bound(2, n) == 2 * n

    def test_domain(self):
        with pytest.raises(ValueError):
            max_hv_bound(1, 4)
        with pytest.raises(ValueError):
            max_hv_bound(4, 1)


class TestPalInPalindromeBound:
    def test_base_case_two_columns(self):
        # at n = 2 the bound collapses to 2m for both parities of m
        for m in range(2, 8):
            assert max_pal_in_palindrome_bound(m, 2) == 2 * m

    def test_three_column_base(self):
        # at (3, 3) the bound agrees with the 3-row formula 3n + n//2 - 1
        assert max_pal_in_palindrome_bound(3, 3) == max_pal_in_3row_palindrome(3) == 9

    def test_pinned_3x5(self):
        assert max_pal_in_palindrome_bound(3, 5) == 19

    def test_dominates_achieved_max_over_ternary_3x5(self):
        # exhaustive over all ternary 3x5 palindromic carriers: the best
        # carrier holds 16 distinct 2D-palindromic factors, below the bound
        best = max(
            len(ref.pal_factors(w)) for w in ref.pal_carriers("abc", 3, 5)
        )
        assert best == 16
        assert best <= max_pal_in_palindrome_bound(3, 5)

    def test_domain(self):
        with pytest.raises(ValueError):
            max_pal_in_palindrome_bound(2, 1)


class TestHVInHVBound:
    def test_pinned_values(self):
        assert max_hv_in_hv_bound(3, 3) == 9
        assert max_hv_in_hv_bound(3, 4) == 14
        assert max_hv_in_hv_bound(4, 4) == 20

    def test_even_columns_equal_unrestricted_bound(self):
        for m in range(2, 7):
            for n in range(2, 8, 2):
                assert max_hv_in_hv_bound(m, n) == max_hv_bound(m, n)

    def test_odd_columns_strictly_below(self):
        for m in range(3, 7):
            for n in range(3, 8, 2):
                assert max_hv_in_hv_bound(m, n) < max_hv_bound(m, n)

    def test_three_rows_odd_width_not_collapsed_to_3n(self):
        # the true maximum at (3, n) is 3n (see the acceptance suite); the
        # closed form stays above it for n >= 5 and meets it at n = 3
        assert max_hv_in_hv_bound(3, 3) == 9
        assert max_hv_in_hv_bound(3, 5) == 17 >= 15


class TestTwoAndThreeRowFormulas:
    def test_general_2row(self):
        assert [max_pal_in_2row(n) for n in (2, 3, 4)] == [4, 6, 9]

    def test_palindromic_2row(self):
        assert max_pal_in_2row(4, palindromic=True) == 8

    def test_achieved_maxima_match(self):
        # brute force over all binary 2-row words
        for n in (2, 3, 4):
            best = max(
                len(ref.pal_factors(w)) for w in ref.all_words("ab", 2, n)
            )
            assert best == max_pal_in_2row(n)
            best_pal = max(
                len(ref.pal_factors(w)) for w in ref.pal_carriers("ab", 2, n)
            )
            assert best_pal == max_pal_in_2row(n, palindromic=True)

    def test_width_one_rejected(self):
        # the closed form gives 1 at n = 1 but the true maximum is 2, so
        # width 1 is outside the formula's domain
        best = max(len(ref.pal_factors(w)) for w in ref.all_words("ab", 2, 1))
        assert best == 2
        with pytest.raises(ValueError):
            max_pal_in_2row(1)

    def test_3row_palindrome(self):
        assert max_pal_in_3row_palindrome(3) == 9
        assert max_pal_in_3row_palindrome(4) == 13
        best = max(len(ref.pal_factors(w)) for w in ref.pal_carriers("ab", 3, 3))
        assert best <= max_pal_in_3row_palindrome(3)


class TestMinHVInfinite:
    def test_values(self):
        assert min_hv_infinite(1) == math.inf
        assert min_hv_infinite(2) == 14
        assert min_hv_infinite(3) == 3
        assert min_hv_infinite(7) == 7

    def test_nontrivial_values(self):
        assert min_hv_infinite(3, nontrivial_required=True) == 5
        assert min_hv_infinite(4, nontrivial_required=True) == 5
        assert min_hv_infinite(5, nontrivial_required=True) == 6

    def test_nontrivial_small_q_refused(self):
        with pytest.raises(ValueError):
            min_hv_infinite(1, nontrivial_required=True)
        with pytest.raises(ValueError):
            min_hv_infinite(2, nontrivial_required=True)

    def test_domain(self):
        with pytest.raises(ValueError):
            min_hv_infinite(0)


class TestBinaryMinConstruction:
    PALS = ("a", "b", "aa", "bb", "aba", "bab", "abba", "baab")
    EXPECTED = {(p,) for p in PALS} | {tuple(p) for p in PALS}

    def test_factor_set_is_the_14_set(self):
        w = construct_binary_min_word(2, 2)
        got = {f.lines for f in enumerate_palindromic_factors(w, "hv").members}
        assert got == self.EXPECTED
        assert len(got) == 14

    def test_block_shape(self):
        assert construct_binary_min_word(1, 1).shape == (6, 6)
        assert construct_binary_min_word(3, 2).shape == (18, 12)

    def test_first_rows_are_cyclic_shifts(self):
        w = construct_binary_min_word(1, 1)
        rows = w.lines
        assert rows[0] == "ababba"
        for i in range(5):
            assert rows[i + 1] == rows[i][1:] + rows[i][0]

    def test_stabilization(self):
        counts = {
            periods: hv_count(construct_binary_min_word(*periods))
            for periods in [(1, 1), (2, 2), (3, 3), (4, 4)]
        }
        assert counts[(2, 2)] == counts[(4, 4)] == 14
        assert counts[(1, 1)] <= 14


class TestQMinConstruction:
    @pytest.mark.parametrize("q", [3, 4, 5])
    def test_exactly_q_trivial_factors(self, q):
        w = construct_q_min_word(q)
        fs = enumerate_palindromic_factors(w, "hv")
        assert fs.count == q
        assert all(f.shape == (1, 1) for f in fs.members)

    def test_stabilization(self):
        assert hv_count(construct_q_min_word(3, 3, 3)) == 3
        assert hv_count(construct_q_min_word(3, 4, 4)) == 3

    def test_domain(self):
        with pytest.raises(ValueError):
            construct_q_min_word(2)


class TestQ3NontrivialConstruction:
    def test_factor_set(self):
        w = construct_q3_nontrivial_word(2, 2)
        got = {f.lines for f in enumerate_palindromic_factors(w, "hv").members}
        assert got == {("a",), ("b",), ("c",), ("aa",), ("a", "b", "a")}

    def test_stabilization(self):
        assert hv_count(construct_q3_nontrivial_word(4, 4)) == 5
        assert hv_count(construct_q3_nontrivial_word(2, 2)) == 5

    def test_pal2d_factors_also_five(self):
        # the non-HV palindromic census of this word happens to coincide
        w = construct_q3_nontrivial_word(2, 2)
        assert enumerate_palindromic_factors(w, "pal2d").count == 5

    def test_shape(self):
        w = construct_q3_nontrivial_word(2, 2)
        assert w.shape == (7, 7)


class TestQNontrivialConstruction:
    @pytest.mark.parametrize("q,expected", [(4, 5), (5, 6), (6, 7)])
    def test_q_plus_one_factors(self, q, expected):
        w = construct_q_nontrivial_word(q)
        fs = enumerate_palindromic_factors(w, "hv")
        assert fs.count == expected
        nontrivial = {f.lines for f in fs.members if f.shape != (1, 1)}
        assert nontrivial == {("a", "a")}

    def test_stabilization(self):
        assert hv_count(construct_q_nontrivial_word(4, 3, 3)) == 5
        assert hv_count(construct_q_nontrivial_word(4, 4, 4)) == 5

    def test_block_shape(self):
        assert construct_q_nontrivial_word(5, 1, 1).shape == (5, 4)

    def test_domain(self):
        with pytest.raises(ValueError):
            construct_q_nontrivial_word(3)
        with pytest.raises(ValueError):
            construct_q_nontrivial_word(4, 0, 1)


class TestConstructionsAreValidWords:
    @pytest.mark.parametrize(
        "make",
        [
            lambda: construct_binary_min_word(2, 2),
            lambda: construct_q_min_word(4, 2, 2),
            lambda: construct_q3_nontrivial_word(2, 2),
            lambda: construct_q_nontrivial_word(5, 2, 2),
        ],
    )
    def test_not_palindromic_themselves(self, make):
        # the extremal words avoid large palindromes; in particular the
        # materialized prefixes are not palindromes
        w = make()
        assert not is_palindrome_2d(w)
        assert not is_hv_palindrome(w)

    def test_transpose_symmetry_of_binary_min_census(self):
        w = construct_binary_min_word(2, 2)
        got = {f.lines for f in enumerate_palindromic_factors(w, "hv").members}
        assert got == {transpose(Word2D(f)).lines for f in got}


class TestFamiliesRegistry:
    def test_all_families_present(self):
        assert sorted(FAMILIES) == [
            "count-hv",
            "count-pal2d",
            "max-hv",
            "max-hv-in-hv",
            "max-pal-conjugates",
            "max-pal-in-2row",
            "max-pal-in-3row-palindrome",
            "max-pal-in-palindrome",
            "min-hv-infinite",
        ]

    def test_evaluate(self):
        assert evaluate_bound("max-hv", m=3, n=4) == 14
        assert evaluate_bound("count-pal2d", q=2, m=2, n=2) == 4
        assert evaluate_bound("min-hv-infinite", q=1) == math.inf
        assert evaluate_bound("max-pal-in-2row", n=4, palindromic=True) == 8
        assert evaluate_bound("max-pal-conjugates", m=4, n=4) == 4

    def test_unknown_family_and_params(self):
        with pytest.raises(ValueError):
            evaluate_bound("max-diag", m=2, n=2)
        with pytest.raises(ValueError):
            evaluate_bound("max-hv", m=2, n=2, q=3)

    def test_default_alphabet(self):
        assert default_alphabet(3) == "abc"
        assert len(default_alphabet(62)) == 62
        with pytest.raises(ValueError):
            default_alphabet(0)
        with pytest.raises(ValueError):
            default_alphabet(63)
