"""Palindromicity predicates, structure decompositions, and factor census.

Two notions of symmetry coexist for a 2D word w:

* ``w`` is a *2D palindrome* when it equals its own 180-degree rotation.
* ``w`` is an *HV-palindrome* when every row and every column is a 1D
  palindrome.

Every HV-palindrome is a 2D palindrome; ``ab`` over ``ba`` shows the converse
fails.  The forbidden-pattern scan below characterizes exactly when a word
carries a 2D-palindromic factor that is not an HV-palindrome.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .word2d import (
    EMPTY,
    ShapeError,
    Word2D,
    col_concat,
    col_power,
    reverse,
    row_concat,
    row_power,
    subarray,
)

KINDS = ("pal2d", "hv", "horizontal", "vertical", "trivial")


def is_palindrome_1d(s: str | Sequence[str]) -> bool:
    """True iff the sequence reads the same in both directions."""
    return s == s[::-1]


def _rev_rows(rows: tuple[str, ...]) -> tuple[str, ...]:
    return tuple(r[::-1] for r in reversed(rows))


def _is_pal_rows(rows: tuple[str, ...]) -> bool:
    # w = w^R iff row i mirrors row m-i+1; checking half the rows suffices.
    m = len(rows)
    for t in range((m + 1) // 2):
        if rows[t] != rows[m - 1 - t][::-1]:
            return False
    return True


def _is_hv_rows(rows: tuple[str, ...]) -> bool:
    # Mirror rows must be equal and every row a palindrome; palindromicity
    # of the lower half follows from the equalities.
    m = len(rows)
    for t in range(m // 2):
        if rows[t] != rows[m - 1 - t]:
            return False
    for t in range((m + 1) // 2):
        r = rows[t]
        if r != r[::-1]:
            return False
    return True


def is_palindrome_2d(w: Word2D) -> bool:
    """True iff w equals reverse(w).  The empty word qualifies."""
    return _is_pal_rows(w.lines)


def is_hv_palindrome(w: Word2D) -> bool:
    """True iff every row and every column of w is a 1D palindrome."""
    return _is_hv_rows(w.lines)


def check_row_col_symmetry(w: Word2D) -> bool:
    """Row/column mirror test: row i = row m-i+1 and col j = col n-j+1.

    Implemented literally on whole rows and columns; the test suite checks
    that it always agrees with :func:`is_hv_palindrome`.
    """
    if not w:
        raise ValueError("symmetry check needs a non-empty word")
    m, n = w.shape
    rows = w.lines
    for i in range(m // 2):
        if rows[i] != rows[m - 1 - i]:
            return False
    cols = ["".join(r[j] for r in rows) for j in range(n)]
    for j in range(n // 2):
        if cols[j] != cols[n - 1 - j]:
            return False
    return True


@dataclass(frozen=True)
class HVDecomposition:
    """The determining pieces of an HV-palindrome of size (m, n).

    u is the top-left quadrant of size (floor(m/2), floor(n/2)); p1 is the
    top half of the middle column (present iff n is odd), p2 the left half
    of the middle row (present iff m is odd), and x the center symbol
    (present iff both are odd).  Pieces whose extent is zero are stored as
    the empty word.  The remaining quadrants are mirror images of u and are
    never stored.
    """

    u: Word2D
    p1: Word2D | None
    p2: Word2D | None
    x: str | None
    parity: tuple[int, int]
    shape: tuple[int, int]


def hv_decompose(w: Word2D) -> HVDecomposition:
    """Split an HV-palindrome into its determining quadrant and cross pieces."""
    if not is_hv_palindrome(w):
        raise ValueError("hv_decompose needs an HV-palindrome")
    m, n = w.shape
    mh, nh = m // 2, n // 2
    u = subarray(w, 1, mh, 1, nh) if mh and nh else EMPTY
    p1 = None
    if n % 2:
        p1 = subarray(w, 1, mh, nh + 1, nh + 1) if mh else EMPTY
    p2 = None
    if m % 2:
        p2 = subarray(w, mh + 1, mh + 1, 1, nh) if nh else EMPTY
    x = w.cell(mh + 1, nh + 1) if (m % 2 and n % 2) else None
    return HVDecomposition(u=u, p1=p1, p2=p2, x=x, parity=(m % 2, n % 2), shape=(m, n))


def _flip_rows_lr(w: Word2D) -> Word2D:
    """Reverse each row, keeping row order (the derived quadrant v)."""
    return Word2D._wrap(tuple(r[::-1] for r in w.lines))


def hv_recompose(d: HVDecomposition) -> Word2D:
    """Rebuild the HV-palindrome determined by a decomposition.

    Shape checks are strict; the symbol content is unconstrained, and the
    result is an HV-palindrome for any well-shaped pieces.
    """
    m, n = d.shape
    if m < 0 or n < 0 or (m == 0) != (n == 0):
        raise ShapeError(f"invalid target shape {d.shape}")
    if d.parity != (m % 2, n % 2):
        raise ShapeError(f"parity {d.parity} does not match shape {d.shape}")
    mh, nh = m // 2, n // 2

    def expect(piece: Word2D, want: tuple[int, int], name: str) -> None:
        want = want if 0 not in want else (0, 0)
        if piece.shape != want:
            raise ShapeError(f"{name} has size {piece.shape}, expected {want}")

    expect(d.u, (mh, nh), "u")
    if (d.p1 is not None) != bool(n % 2):
        raise ShapeError("p1 must be present exactly when the column count is odd")
    if (d.p2 is not None) != bool(m % 2):
        raise ShapeError("p2 must be present exactly when the row count is odd")
    if (d.x is not None) != bool(m % 2 and n % 2):
        raise ShapeError("x must be present exactly when both extents are odd")
    if d.p1 is not None:
        expect(d.p1, (mh, 1), "p1")
    if d.p2 is not None:
        expect(d.p2, (1, nh), "p2")
    if d.x is not None and len(d.x) != 1:
        raise ShapeError(f"x must be a single symbol, got {d.x!r}")

    v = _flip_rows_lr(d.u)
    top = d.u
    if d.p1 is not None:
        top = col_concat(top, d.p1)
    top = col_concat(top, v)

    middle = EMPTY
    if d.p2 is not None:
        middle = d.p2
        if d.x is not None:
            middle = col_concat(middle, Word2D((d.x,)))
        middle = col_concat(middle, reverse(d.p2))
    elif d.x is not None:
        middle = Word2D((d.x,))

    bottom = reverse(v)
    if d.p1 is not None:
        bottom = col_concat(bottom, reverse(d.p1))
    bottom = col_concat(bottom, reverse(d.u))

    return row_concat(row_concat(top, middle), bottom)


def shrink(w: Word2D, k: int, r: int) -> Word2D:
    """Peel k outer row pairs and r outer column pairs off a 2D palindrome.

    The result w[k+1..m-k, r+1..n-r] is again a palindrome of the same kind;
    it must stay non-degenerate (at least one row and column).
    """
    if not is_palindrome_2d(w):
        raise ValueError("shrink needs a 2D palindrome")
    m, n = w.shape
    if k < 0 or r < 0:
        raise ValueError(f"shrink offsets must be non-negative, got ({k}, {r})")
    if m - 2 * k < 1 or n - 2 * r < 1:
        raise ValueError(
            f"shrink by ({k}, {r}) degenerates a word of size {w.shape}"
        )
    return subarray(w, k + 1, m - k, r + 1, n - r)


def compose_xyx(x: Word2D, y: Word2D, i: int, axis: str) -> Word2D:
    """Build (x+y)^i + x along the chosen axis from HV-palindromic pieces.

    For ``axis="cols"`` the result is i copies of x|y side by side followed
    by a final x; ``axis="rows"`` stacks instead.  The result is always an
    HV-palindrome.
    """
    if axis not in ("rows", "cols"):
        raise ValueError(f"axis must be 'rows' or 'cols', got {axis!r}")
    if i < 1:
        raise ValueError(f"repetition count must be at least 1, got {i}")
    if not x:
        raise ValueError("x must be non-empty")
    if not is_hv_palindrome(x):
        raise ValueError("x must be an HV-palindrome")
    if y and not is_hv_palindrome(y):
        raise ValueError("y must be empty or an HV-palindrome")
    cat, pow_ = (col_concat, col_power) if axis == "cols" else (row_concat, row_power)
    return cat(pow_(cat(x, y), i), x)


def hv_factorize(w: Word2D, axis: str) -> tuple[Word2D, Word2D]:
    """Split an HV-palindrome as x + y + x along the chosen axis.

    x is the first row (or column) and y the middle block, possibly empty;
    ``compose_xyx(x, y, 1, axis)`` rebuilds w.  The extent along the axis
    must be at least 2.
    """
    if axis not in ("rows", "cols"):
        raise ValueError(f"axis must be 'rows' or 'cols', got {axis!r}")
    if not is_hv_palindrome(w):
        raise ValueError("hv_factorize needs an HV-palindrome")
    m, n = w.shape
    extent = m if axis == "rows" else n
    if extent < 2:
        raise ValueError(f"extent along {axis} is {extent}, need at least 2")
    if axis == "rows":
        x = subarray(w, 1, 1, 1, n)
        y = subarray(w, 2, m - 1, 1, n) if m > 2 else EMPTY
    else:
        x = subarray(w, 1, m, 1, 1)
        y = subarray(w, 1, m, 2, n - 1) if n > 2 else EMPTY
    return x, y


@dataclass(frozen=True)
class PatternOccurrence:
    """A factor w[i1..i2, j1..j2] witnessing a non-HV 2D-palindromic factor.

    The factor is a 2D palindrome of size at least 2x2 whose top corners x
    and y differ, which forces its first row to be a non-palindrome.
    """

    i1: int
    i2: int
    j1: int
    j2: int
    x: str
    y: str


def find_forbidden_pattern(w: Word2D) -> PatternOccurrence | None:
    """First factor (by i1, j1, i2, j2) that is a 2D palindrome with
    mismatched top corners, or None.

    Such a factor exists iff the word carries a 2D-palindromic factor of
    size >= 2x2 that is not an HV-palindrome; the equivalence with
    :func:`is_non_hv_palindromic_factor_present` is exercised by the tests.
    """
    rows = w.lines
    m, n = w.shape
    for i1 in range(m - 1):
        for j1 in range(n - 1):
            for i2 in range(i1 + 1, m):
                band = rows[i1 : i2 + 1]
                for j2 in range(j1 + 1, n):
                    if band[0][j1] == band[0][j2]:
                        continue
                    sub = tuple(r[j1 : j2 + 1] for r in band)
                    if _is_pal_rows(sub):
                        return PatternOccurrence(
                            i1=i1 + 1,
                            i2=i2 + 1,
                            j1=j1 + 1,
                            j2=j2 + 1,
                            x=sub[0][0],
                            y=sub[0][-1],
                        )
    return None


def _matches_pattern_shape(rows: tuple[str, ...]) -> bool:
    """Literal shape test for the forbidden pattern, kept as a cross-check.

    Conditions: top corners differ, the last row is the reverse of the
    first, the right column is the reverse of the left, and the inner block
    is a 2D palindrome.
    """
    r, s = len(rows), len(rows[0]) if rows else 0
    if r < 2 or s < 2:
        return False
    if rows[0][0] == rows[0][-1]:
        return False
    if rows[-1] != rows[0][::-1]:
        return False
    left = "".join(row[0] for row in rows)
    right = "".join(row[-1] for row in rows)
    if right != left[::-1]:
        return False
    inner = tuple(row[1:-1] for row in rows[1:-1])
    return not inner or _is_pal_rows(inner)


def is_non_hv_palindromic_factor_present(w: Word2D) -> bool:
    """True iff some factor of size >= 2x2 is a 2D palindrome but not an
    HV-palindrome."""
    rows = w.lines
    m, n = w.shape
    for i1 in range(m - 1):
        for i2 in range(i1 + 1, m):
            band = rows[i1 : i2 + 1]
            for j1 in range(n - 1):
                for j2 in range(j1 + 1, n):
                    sub = tuple(r[j1 : j2 + 1] for r in band)
                    if _is_pal_rows(sub) and not _is_hv_rows(sub):
                        return True
    return False


@dataclass(frozen=True)
class FactorSet:
    """A deduplicated census of palindromic factors of one kind."""

    kind: str
    members: frozenset[Word2D]

    @property
    def count(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list[Word2D]:
        return sorted(self.members, key=lambda f: (f.rows, f.cols, f.lines))

    def to_report(self) -> str:
        """One stanza per factor (size header plus grid) and a summary line."""
        parts: list[str] = []
        for f in self.sorted_members():
            parts.append(f"size {f.rows}x{f.cols}")
            parts.extend(f.lines)
            parts.append("")
        parts.append(f"kind={self.kind} count={self.count}")
        return "\n".join(parts)


def _factor_passes(rows: tuple[str, ...], kind: str) -> bool:
    if kind == "pal2d":
        return _is_pal_rows(rows)
    if kind == "hv":
        return _is_hv_rows(rows)
    if kind == "horizontal":
        return len(rows) == 1 and rows[0] == rows[0][::-1]
    if kind == "vertical":
        if len(rows) < 2 or len(rows[0]) != 1:
            return False
        col = "".join(rows)
        return col == col[::-1]
    if kind == "trivial":
        return len(rows) == 1 and len(rows[0]) == 1
    raise ValueError(f"unknown factor kind {kind!r}; expected one of {KINDS}")


def enumerate_palindromic_factors(w: Word2D, kind: str = "pal2d") -> FactorSet:
    """All distinct palindromic factors of w of the given kind.

    Kinds: ``pal2d`` (2D palindromes of any size), ``hv`` (HV-palindromes),
    ``horizontal`` (palindromic single-row factors), ``vertical``
    (palindromic single-column factors of height >= 2), ``trivial`` (1x1
    factors).  Factors equal as words are counted once.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown factor kind {kind!r}; expected one of {KINDS}")
    rows = w.lines
    m, n = w.shape
    found: set[tuple[str, ...]] = set()
    if kind == "trivial":
        found.update((ch,) for r in rows for ch in r)
    elif kind == "horizontal":
        for r in rows:
            for j1 in range(n):
                for j2 in range(j1, n):
                    s = r[j1 : j2 + 1]
                    if s == s[::-1]:
                        found.add((s,))
    elif kind == "vertical":
        cols = ["".join(r[j] for r in rows) for j in range(n)]
        for c in cols:
            for i1 in range(m):
                for i2 in range(i1 + 1, m):
                    s = c[i1 : i2 + 1]
                    if s == s[::-1]:
                        found.add(tuple(s))
    else:
        test = _is_pal_rows if kind == "pal2d" else _is_hv_rows
        for i1 in range(m):
            for i2 in range(i1, m):
                band = rows[i1 : i2 + 1]
                for j1 in range(n):
                    for j2 in range(j1, n):
                        sub = tuple(r[j1 : j2 + 1] for r in band)
                        if test(sub):
                            found.add(sub)
    members = frozenset(Word2D._wrap(f) for f in found)
    return FactorSet(kind=kind, members=members)
