"""Closed-form bounds, palindrome generators, and extremal constructions.

Counting results live here in three groups: exact counts of palindromes of a
given size over q symbols, upper bounds on how many distinct palindromic
factors a word (or a palindromic word) of size (m, n) can carry, and the
least number of HV-palindromic factors an infinite word must carry together
with periodic words attaining it.

Infinite words are represented by finite periodic prefixes; the period
arguments control how many copies of the defining block are materialized.
The factor census of such a prefix stabilizes once the periods are large
enough, which the test suite checks by doubling.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Iterator

from .conjugacy import max_pal_conjugates_bound
from .word2d import Word2D

DEFAULT_BUDGET = 2**24
BUDGET_ENV_VAR = "GRIDPAL_BUDGET"

_LETTERS = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"


class BudgetExceededError(ValueError):
    """A generation or scan would visit more words than the budget allows."""


def resolve_budget(budget: int | None = None) -> int:
    """Explicit budget, else the GRIDPAL_BUDGET variable, else the default."""
    if budget is not None:
        if budget < 1:
            raise ValueError(f"budget must be positive, got {budget}")
        return budget
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{BUDGET_ENV_VAR} must be positive, got {value}")
    return value


def default_alphabet(q: int) -> str:
    """The first q symbols of a..z, A..Z, 0..9."""
    if not 1 <= q <= len(_LETTERS):
        raise ValueError(f"alphabet size must be in 1..{len(_LETTERS)}, got {q}")
    return _LETTERS[:q]


def _normalize_alphabet(alphabet: Iterable[str]) -> tuple[str, ...]:
    letters = sorted(set(alphabet))
    if not letters:
        raise ValueError("alphabet must be non-empty")
    for a in letters:
        if len(a) != 1:
            raise ValueError(f"alphabet symbols must be single characters, got {a!r}")
    return tuple(letters)


def count_palindromes_formula(q: int, m: int, n: int, kind: str = "pal2d") -> int:
    """Number of distinct (m, n) words over q symbols that are palindromes.

    ``pal2d``: q^ceil(mn/2).  ``hv``: q^(ceil(m/2) * ceil(n/2)).  Exact for
    all q, m, n >= 1; the exponent counts the freely choosable cells.
    """
    if q < 1:
        raise ValueError(f"alphabet size must be positive, got {q}")
    if m < 1 or n < 1:
        raise ValueError(f"dimensions must be positive, got ({m}, {n})")
    if kind == "pal2d":
        return q ** ((m * n + 1) // 2)
    if kind == "hv":
        return q ** (((m + 1) // 2) * ((n + 1) // 2))
    raise ValueError(f"kind must be 'pal2d' or 'hv', got {kind!r}")


def generate_all_palindromes(
    alphabet: Iterable[str],
    m: int,
    n: int,
    kind: str = "pal2d",
    budget: int | None = None,
) -> Iterator[Word2D]:
    """Stream every (m, n) palindrome of the kind exactly once.

    Free cells are filled in row-major lexicographic order and the rest of
    the word is completed by symmetry: for ``pal2d`` the free region is the
    first ceil(mn/2) cells and cell t mirrors cell mn-1-t; for ``hv`` it is
    the top-left (ceil(m/2), ceil(n/2)) block, each row mirrors around its
    middle, and row i copies row m-1-i.  Raises BudgetExceededError before
    yielding anything if the stream would exceed the word budget.
    """
    letters = _normalize_alphabet(alphabet)
    if m < 1 or n < 1:
        raise ValueError(f"dimensions must be positive, got ({m}, {n})")
    if kind not in ("pal2d", "hv"):
        raise ValueError(f"kind must be 'pal2d' or 'hv', got {kind!r}")
    limit = resolve_budget(budget)
    total = count_palindromes_formula(len(letters), m, n, kind)
    if total > limit:
        raise BudgetExceededError(
            f"{total} {kind} palindromes of size ({m}, {n}) over "
            f"{len(letters)} symbols exceed the budget of {limit}"
        )
    if kind == "pal2d":
        mn = m * n
        free = (mn + 1) // 2
        mirror = mn - free
        for fill in product(letters, repeat=free):
            cells = fill + tuple(reversed(fill[:mirror]))
            yield Word2D._wrap(
                tuple("".join(cells[i * n : (i + 1) * n]) for i in range(m))
            )
    else:
        qr, qc = (m + 1) // 2, (n + 1) // 2
        half = n // 2
        for fill in product(letters, repeat=qr * qc):
            quad = ["".join(fill[i * qc : (i + 1) * qc]) for i in range(qr)]
            top = tuple(p + p[:half][::-1] for p in quad)
            yield Word2D._wrap(tuple(top[min(i, m - 1 - i)] for i in range(m)))


def _require_at_least(value: int, floor: int, name: str) -> None:
    if value < floor:
        raise ValueError(f"{name} must be at least {floor}, got {value}")


def max_hv_bound(m: int, n: int) -> int:
    """Upper bound on distinct HV-palindromic factors of any (m, n) word.

    Even m: (m/2)((m/2 + 1)n - m + 2).  Odd m: (n - 2)((m + 1)/2)^2 + 2m.
    At m = 2 this is 2n, which is attained.
    """
    _require_at_least(m, 2, "m")
    _require_at_least(n, 2, "n")
    if m % 2 == 0:
        h = m // 2
        return h * ((h + 1) * n - m + 2)
    return (n - 2) * ((m + 1) // 2) ** 2 + 2 * m


def max_pal_in_palindrome_bound(m: int, n: int) -> int:
    """Upper bound on distinct 2D-palindromic factors of an (m, n) word that
    is itself a 2D palindrome (or HV-palindrome).

    Four parity cases; the per-two-columns growth term is m(m+1)/2 plus
    (m/2)(m/2 + 1) for even m or ((m + 1)/2)^2 for odd m.
    """
    _require_at_least(m, 2, "m")
    _require_at_least(n, 2, "n")
    if m % 2 == 0:
        h = m // 2
        step = m * (m + 1) // 2 + h * (h + 1)
    else:
        step = m * (m + 1) // 2 + ((m + 1) // 2) ** 2
    if n % 2 == 0:
        return 2 * m + (n - 2) // 2 * step
    return 3 * m + (n - 3) // 2 * step + m // 2 - 1


def max_hv_in_hv_bound(m: int, n: int) -> int:
    """Upper bound on distinct HV-palindromic (equivalently 2D-palindromic)
    factors of an (m, n) HV-palindrome.

    Four parity cases with per-two-columns growth 2 * sum(ceil(l/2)); equals
    max_hv_bound for even n and is strictly smaller for odd n >= 3, m >= 3.
    """
    _require_at_least(m, 2, "m")
    _require_at_least(n, 2, "n")
    if m % 2 == 0:
        h = m // 2
        step = 2 * h * (h + 1)
    else:
        step = 2 * ((m + 1) // 2) ** 2
    if n % 2 == 0:
        return 2 * m + (n - 2) // 2 * step
    return 3 * m + (n - 3) // 2 * step


def max_pal_in_2row(n: int, palindromic: bool = False) -> int:
    """Maximum distinct 2D-palindromic factors of a 2-row word of width n.

    General words: 2n + floor(n/2) - 1.  Words that are themselves 2D
    palindromes: 2n.  Exact (attained) in both regimes for n >= 2; the
    general formula undercounts at n = 1, so width 1 is rejected.
    """
    _require_at_least(n, 2, "n")
    if palindromic:
        return 2 * n
    return 2 * n + n // 2 - 1


def max_pal_in_3row_palindrome(n: int) -> int:
    """Maximum distinct 2D-palindromic factors of a 3-row 2D palindrome of
    width n: 3n + floor(n/2) - 1 (n >= 2)."""
    _require_at_least(n, 2, "n")
    return 3 * n + n // 2 - 1


def min_hv_infinite(q: int, nontrivial_required: bool = False) -> int | float:
    """Least number of distinct HV-palindromic factors of an infinite 2D
    word using exactly q symbols.

    Unconstrained: infinity for q = 1, 14 for q = 2, q for q >= 3.  When at
    least one non-trivial (multi-cell) HV-palindrome is required: 5 for
    q = 3 and q + 1 for q > 3; q in {1, 2} is rejected because the single
    unconstrained minimum there already forces non-trivial factors and no
    separate value exists.
    """
    if q < 1:
        raise ValueError(f"alphabet size must be positive, got {q}")
    if nontrivial_required:
        if q < 3:
            raise ValueError(
                "the non-trivial variant is defined only for q >= 3"
            )
        return 5 if q == 3 else q + 1
    if q == 1:
        return math.inf
    if q == 2:
        return 14
    return q


def _tile(block: tuple[str, ...], periods_rows: int, periods_cols: int) -> Word2D:
    _require_at_least(periods_rows, 1, "periods_rows")
    _require_at_least(periods_cols, 1, "periods_cols")
    return Word2D(tuple(r * periods_cols for r in block) * periods_rows)


def construct_binary_min_word(periods_rows: int = 2, periods_cols: int = 2) -> Word2D:
    """Periodic binary word attaining the minimum of 14 HV-palindromic
    factors.

    The defining 6x6 block stacks u1 = ababba and its successive 1-cyclic
    left shifts; for periods >= 2 the factor set is exactly {p, transpose(p)
    : p in {a, b, aa, bb, aba, bab, abba, baab}}.
    """
    rows = ["ababba"]
    for _ in range(5):
        prev = rows[-1]
        rows.append(prev[1:] + prev[0])
    return _tile(tuple(rows), periods_rows, periods_cols)


def construct_q_min_word(
    q: int, periods_rows: int = 2, periods_cols: int = 2
) -> Word2D:
    """Periodic word over q >= 3 symbols attaining the minimum of q
    HV-palindromic factors (all trivial).

    The defining q x q block has row i reading the alphabet cyclically from
    its i-th symbol, so no row or column repeats a symbol within distance 2.
    """
    _require_at_least(q, 3, "q")
    letters = default_alphabet(q)
    block = tuple(
        "".join(letters[(i + j) % q] for j in range(q)) for i in range(q)
    )
    return _tile(block, periods_rows, periods_cols)


def construct_q3_nontrivial_word(
    periods_rows: int = 2, periods_cols: int = 2
) -> Word2D:
    """Periodic ternary word with a non-trivial HV-palindrome and only 5
    HV-palindromic factors in total: {a, b, c, aa, a over b over a}.

    The first row reads a followed by abc repeated; the body tiles the
    block bca over abc over cab.  The first row's period (3, offset by one
    cell) differs from the body's, which is what creates aa and the
    vertical aba while blocking everything longer.
    """
    _require_at_least(periods_rows, 1, "periods_rows")
    _require_at_least(periods_cols, 1, "periods_cols")
    ncols = 3 * periods_cols + 1
    body = tuple(
        (r * (periods_cols + 2))[:ncols] for r in ("bca", "abc", "cab")
    ) * periods_rows
    first = ("a" + "abc" * (periods_cols + 1))[:ncols]
    return Word2D((first,) + body)


def construct_q_nontrivial_word(
    q: int, periods_rows: int = 2, periods_cols: int = 2
) -> Word2D:
    """Periodic word over q >= 4 symbols with exactly q + 1 HV-palindromic
    factors: the q trivial ones plus the vertical square a1 over a1.

    The defining q x (q-1) block has first row a1..a_{q-1} and row i >= 2
    starting with a_{i-1} and then reading a_{i+1}, a_{i+2}, ... cyclically,
    so a1 repeats vertically once and nothing else mirrors.
    """
    _require_at_least(q, 4, "q")
    letters = default_alphabet(q)
    rows = [letters[: q - 1]]
    for i in range(2, q + 1):
        rows.append(
            letters[i - 2]
            + "".join(letters[(i + j - 2) % q] for j in range(2, q))
        )
    return _tile(tuple(rows), periods_rows, periods_cols)


@dataclass(frozen=True)
class BoundFormula:
    """A named closed-form bound with its parameter names."""

    name: str
    params: tuple[str, ...]
    fn: Callable[..., int | float]
    description: str

    def evaluate(self, **kwargs: object) -> int | float:
        unknown = set(kwargs) - set(self.params)
        if unknown:
            raise ValueError(
                f"{self.name} takes parameters {self.params}, "
                f"not {sorted(unknown)}"
            )
        return self.fn(**kwargs)


FAMILIES: dict[str, BoundFormula] = {
    f.name: f
    for f in (
        BoundFormula(
            "max-hv",
            ("m", "n"),
            max_hv_bound,
            "max distinct HV-palindromic factors of any (m, n) word",
        ),
        BoundFormula(
            "max-pal-in-palindrome",
            ("m", "n"),
            max_pal_in_palindrome_bound,
            "max distinct 2D-palindromic factors of an (m, n) 2D palindrome",
        ),
        BoundFormula(
            "max-hv-in-hv",
            ("m", "n"),
            max_hv_in_hv_bound,
            "max distinct HV-palindromic factors of an (m, n) HV-palindrome",
        ),
        BoundFormula(
            "max-pal-in-2row",
            ("n", "palindromic"),
            max_pal_in_2row,
            "max distinct 2D-palindromic factors of a 2-row word of width n",
        ),
        BoundFormula(
            "max-pal-in-3row-palindrome",
            ("n",),
            max_pal_in_3row_palindrome,
            "max distinct 2D-palindromic factors of a 3-row 2D palindrome",
        ),
        BoundFormula(
            "min-hv-infinite",
            ("q", "nontrivial"),
            lambda q, nontrivial=False: min_hv_infinite(q, nontrivial),
            "least HV-palindromic factors of an infinite word over q symbols",
        ),
        BoundFormula(
            "count-pal2d",
            ("q", "m", "n"),
            lambda q, m, n: count_palindromes_formula(q, m, n, "pal2d"),
            "number of (m, n) 2D palindromes over q symbols",
        ),
        BoundFormula(
            "count-hv",
            ("q", "m", "n"),
            lambda q, m, n: count_palindromes_formula(q, m, n, "hv"),
            "number of (m, n) HV-palindromes over q symbols",
        ),
        BoundFormula(
            "max-pal-conjugates",
            ("m", "n"),
            max_pal_conjugates_bound,
            "max 2D-palindromic members of an (m, n) conjugacy class",
        ),
    )
}


def evaluate_bound(name: str, **params: object) -> int | float:
    """Evaluate a registered bound family by name."""
    try:
        formula = FAMILIES[name]
    except KeyError:
        raise ValueError(
            f"unknown bound family {name!r}; known: {', '.join(sorted(FAMILIES))}"
        ) from None
    return formula.evaluate(**params)
