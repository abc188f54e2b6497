"""Palindromic structure of two-dimensional words.

A 2D word is a rectangular array of symbols.  This package provides the
word algebra (concatenation, reversal, factors, borders, conjugates), the
two palindrome notions (2D palindromes and HV-palindromes) with their
structure theory, closed-form bounds on palindromic-factor counts, the
extremal periodic constructions attaining them, and an exhaustive-search
harness for exact extremal values at desk scale.
"""

from .bounds import (
    BudgetExceededError,
    BoundFormula,
    DEFAULT_BUDGET,
    FAMILIES,
    construct_binary_min_word,
    construct_q3_nontrivial_word,
    construct_q_min_word,
    construct_q_nontrivial_word,
    count_palindromes_formula,
    default_alphabet,
    evaluate_bound,
    generate_all_palindromes,
    max_hv_bound,
    max_hv_in_hv_bound,
    max_pal_in_2row,
    max_pal_in_3row_palindrome,
    max_pal_in_palindrome_bound,
    min_hv_infinite,
    resolve_budget,
)
from .conjugacy import (
    ConjugacyReport,
    TightnessReport,
    check_tightness_conditions,
    column_words,
    conjugacy_class,
    conjugate,
    is_reversal_palindrome,
    max_pal_conjugates_bound,
    pal_conjugates,
    rotate_cols,
    rotate_rows,
    row_words,
)
from .palindromes import (
    FactorSet,
    HVDecomposition,
    KINDS,
    PatternOccurrence,
    check_row_col_symmetry,
    compose_xyx,
    enumerate_palindromic_factors,
    find_forbidden_pattern,
    hv_decompose,
    hv_factorize,
    hv_recompose,
    is_hv_palindrome,
    is_non_hv_palindromic_factor_present,
    is_palindrome_1d,
    is_palindrome_2d,
    shrink,
)
from .search import (
    SearchResult,
    TABLE1_EXPECTED,
    TABLE1_SHAPES,
    TableReport,
    TableRow,
    exhaustive_extremum,
    exhaustive_extremum_restricted,
    verify_table,
)
from .word2d import (
    EMPTY,
    CenterLocus,
    ShapeError,
    Word2D,
    alph,
    borders,
    center,
    col_concat,
    col_power,
    is_prefix,
    is_suffix,
    iter_cells,
    reverse,
    row_concat,
    row_power,
    subarray,
    transpose,
)

__version__ = "0.1.0"

__all__ = [
    "BoundFormula",
    "BudgetExceededError",
    "CenterLocus",
    "ConjugacyReport",
    "DEFAULT_BUDGET",
    "EMPTY",
    "FAMILIES",
    "FactorSet",
    "HVDecomposition",
    "KINDS",
    "PatternOccurrence",
    "SearchResult",
    "ShapeError",
    "TABLE1_EXPECTED",
    "TABLE1_SHAPES",
    "TableReport",
    "TableRow",
    "TightnessReport",
    "Word2D",
    "alph",
    "borders",
    "center",
    "check_row_col_symmetry",
    "check_tightness_conditions",
    "col_concat",
    "col_power",
    "column_words",
    "compose_xyx",
    "conjugacy_class",
    "conjugate",
    "construct_binary_min_word",
    "construct_q3_nontrivial_word",
    "construct_q_min_word",
    "construct_q_nontrivial_word",
    "count_palindromes_formula",
    "default_alphabet",
    "enumerate_palindromic_factors",
    "evaluate_bound",
    "exhaustive_extremum",
    "exhaustive_extremum_restricted",
    "find_forbidden_pattern",
    "generate_all_palindromes",
    "hv_decompose",
    "hv_factorize",
    "hv_recompose",
    "is_hv_palindrome",
    "is_non_hv_palindromic_factor_present",
    "is_palindrome_1d",
    "is_palindrome_2d",
    "is_prefix",
    "is_reversal_palindrome",
    "is_suffix",
    "iter_cells",
    "max_hv_bound",
    "max_hv_in_hv_bound",
    "max_pal_conjugates_bound",
    "max_pal_in_2row",
    "max_pal_in_3row_palindrome",
    "max_pal_in_palindrome_bound",
    "min_hv_infinite",
    "pal_conjugates",
    "resolve_budget",
    "reverse",
    "rotate_cols",
    "rotate_rows",
    "row_concat",
    "row_power",
    "row_words",
    "shrink",
    "subarray",
    "transpose",
    "verify_table",
]
