"""Rectangular words over single-character alphabets.

A 2D word of size (m, n) is an m-row, n-column array of symbols.  The only
degenerate word is the empty word of size (0, 0); shapes (m, 0) and (0, n)
with m, n > 0 are not representable.  Rows and columns are indexed from 1 in
the public API, matching the usual combinatorics-on-words convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class ShapeError(ValueError):
    """Operand shapes are incompatible for the requested operation."""


class Word2D:
    """An immutable rectangular array of single-character symbols.

    Construct from an iterable of equal-length row strings:

    >>> w = Word2D(("aba", "bcb", "aba"))
    >>> w.shape
    (3, 3)
    >>> w.cell(2, 2)
    'c'
    >>> Word2D(()) == EMPTY
    True

    Equality and hashing are by content, so two words are equal exactly when
    they have the same shape and the same symbol in every cell.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[str] = ()) -> None:
        rows = tuple(rows)
        if rows:
            n = len(rows[0])
            for k, row in enumerate(rows, start=1):
                if not isinstance(row, str):
                    raise TypeError(f"row {k}: expected str, got {type(row).__name__}")
                if len(row) != n or n == 0:
                    raise ValueError(
                        f"row {k}: length {len(row)}, expected {max(n, 1)} "
                        "(rows must be non-empty and equal length)"
                    )
                for ch in row:
                    if ch.isspace() or not ch.isprintable():
                        raise ValueError(
                            f"row {k}: symbol {ch!r} is not a printable "
                            "non-whitespace character"
                        )
        self._rows = rows

    @classmethod
    def _wrap(cls, rows: tuple[str, ...]) -> "Word2D":
        """Wrap an already-validated row tuple without re-checking it."""
        w = object.__new__(cls)
        w._rows = rows
        return w

    @classmethod
    def from_text(cls, text: str) -> "Word2D":
        """Parse grid text: one row per line, one character per symbol.

        Trailing newlines are ignored; text containing only whitespace
        parses as the empty word.

        >>> Word2D.from_text("ab\\nba\\n").lines
        ('ab', 'ba')
        """
        lines = text.splitlines()
        while lines and lines[-1] == "":
            lines.pop()
        if not lines or all(line.strip() == "" for line in lines):
            return EMPTY
        n = len(lines[0])
        for k, line in enumerate(lines, start=1):
            if len(line) != n:
                raise ValueError(f"line {k}: length {len(line)}, expected {n}")
        return cls(lines)

    def to_text(self) -> str:
        """Grid text form; inverse of :meth:`from_text` for non-empty words."""
        return "\n".join(self._rows) + ("\n" if self._rows else "")

    @property
    def rows(self) -> int:
        """Number of rows m."""
        return len(self._rows)

    @property
    def cols(self) -> int:
        """Number of columns n."""
        return len(self._rows[0]) if self._rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def lines(self) -> tuple[str, ...]:
        """Rows as strings, top to bottom."""
        return self._rows

    @property
    def cells(self) -> str:
        """All symbols concatenated in row-major order."""
        return "".join(self._rows)

    def cell(self, i: int, j: int) -> str:
        """Symbol at row i, column j (1-based)."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"cell ({i},{j}) outside word of size {self.shape}")
        return self._rows[i - 1][j - 1]

    def row(self, i: int) -> str:
        if not 1 <= i <= self.rows:
            raise IndexError(f"row {i} outside word of size {self.shape}")
        return self._rows[i - 1]

    def col(self, j: int) -> str:
        if not 1 <= j <= self.cols:
            raise IndexError(f"column {j} outside word of size {self.shape}")
        return "".join(r[j - 1] for r in self._rows)

    def __bool__(self) -> bool:
        return bool(self._rows)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Word2D):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"Word2D({self._rows!r})"

    def __str__(self) -> str:
        return "\n".join(self._rows)


#: The empty word, the identity of both concatenations.
EMPTY = Word2D(())


@dataclass(frozen=True)
class CenterLocus:
    """Center of a word along each axis.

    Each coordinate is the 1-based index of the middle cell when the extent
    is odd, and the pair (k, k+1) of indices the center falls between when
    the extent is even.
    """

    row: int | tuple[int, int]
    col: int | tuple[int, int]

    def __str__(self) -> str:
        def side(name: str, v: int | tuple[int, int]) -> str:
            if isinstance(v, tuple):
                return f"between {name}s {v[0]} and {v[1]}"
            return f"{name} {v}"

        return f"{side('row', self.row)}, {side('column', self.col)}"


def col_concat(u: Word2D, v: Word2D) -> Word2D:
    """Place v to the right of u.  Requires equal row counts; the empty word
    is the identity on either side."""
    if not u:
        return v
    if not v:
        return u
    if u.rows != v.rows:
        raise ShapeError(
            f"column concatenation needs equal row counts, got {u.rows} and {v.rows}"
        )
    return Word2D._wrap(tuple(a + b for a, b in zip(u.lines, v.lines)))


def row_concat(u: Word2D, v: Word2D) -> Word2D:
    """Place v below u.  Requires equal column counts; the empty word is the
    identity on either side."""
    if not u:
        return v
    if not v:
        return u
    if u.cols != v.cols:
        raise ShapeError(
            f"row concatenation needs equal column counts, got {u.cols} and {v.cols}"
        )
    return Word2D._wrap(u.lines + v.lines)


def col_power(w: Word2D, k: int) -> Word2D:
    """k copies of w side by side; k = 0 gives the empty word."""
    if k < 0:
        raise ValueError(f"power must be non-negative, got {k}")
    if k == 0 or not w:
        return EMPTY
    return Word2D._wrap(tuple(r * k for r in w.lines))


def row_power(w: Word2D, k: int) -> Word2D:
    """k copies of w stacked top to bottom; k = 0 gives the empty word."""
    if k < 0:
        raise ValueError(f"power must be non-negative, got {k}")
    if k == 0 or not w:
        return EMPTY
    return Word2D._wrap(w.lines * k)


def reverse(w: Word2D) -> Word2D:
    """The 180-degree rotation: result[i][j] = w[m-i+1][n-j+1]."""
    return Word2D._wrap(tuple(r[::-1] for r in reversed(w.lines)))


def transpose(w: Word2D) -> Word2D:
    """Mirror across the main diagonal: result[j][i] = w[i][j]."""
    if not w:
        return EMPTY
    return Word2D._wrap(tuple("".join(col) for col in zip(*w.lines)))


def subarray(w: Word2D, i1: int, i2: int, j1: int, j2: int) -> Word2D:
    """The factor w[i1..i2, j1..j2], 1-based and inclusive on both ends."""
    if not (1 <= i1 <= i2 <= w.rows and 1 <= j1 <= j2 <= w.cols):
        raise ValueError(
            f"subarray ({i1}..{i2}, {j1}..{j2}) outside word of size {w.shape}"
        )
    return Word2D._wrap(tuple(r[j1 - 1 : j2] for r in w.lines[i1 - 1 : i2]))


def is_prefix(v: Word2D, u: Word2D) -> bool:
    """True iff v is a corner block u[1..i, 1..j] (the empty word always is)."""
    if not v:
        return True
    if v.rows > u.rows or v.cols > u.cols:
        return False
    return all(u.lines[i][: v.cols] == v.lines[i] for i in range(v.rows))


def is_suffix(v: Word2D, u: Word2D) -> bool:
    """True iff v is a corner block u[m-i+1..m, n-j+1..n]."""
    if not v:
        return True
    if v.rows > u.rows or v.cols > u.cols:
        return False
    off = u.rows - v.rows
    return all(u.lines[off + i][u.cols - v.cols :] == v.lines[i] for i in range(v.rows))


def borders(w: Word2D) -> set[Word2D]:
    """All non-empty borders of w: blocks that are both a prefix and a suffix.

    Distinct contents are counted once; w itself is always a border, so the
    set is non-empty.
    """
    if not w:
        raise ValueError("the empty word has no borders")
    m, n = w.shape
    rows = w.lines
    out: set[Word2D] = set()
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            pre = tuple(r[:j] for r in rows[:i])
            suf = tuple(r[n - j :] for r in rows[m - i :])
            if pre == suf:
                out.add(Word2D._wrap(pre))
    return out


def center(w: Word2D) -> CenterLocus:
    """Center locus of a non-empty word; see :class:`CenterLocus`."""
    if not w:
        raise ValueError("the empty word has no center")
    m, n = w.shape
    r = (m + 1) // 2 if m % 2 else (m // 2, m // 2 + 1)
    c = (n + 1) // 2 if n % 2 else (n // 2, n // 2 + 1)
    return CenterLocus(row=r, col=c)


def alph(w: Word2D) -> set[str]:
    """The set of symbols occurring in w."""
    out: set[str] = set()
    for r in w.lines:
        out.update(r)
    return out


def iter_cells(w: Word2D) -> Iterator[tuple[int, int, str]]:
    """Yield (i, j, symbol) in row-major order, 1-based."""
    for i, r in enumerate(w.lines, start=1):
        for j, ch in enumerate(r, start=1):
            yield i, j, ch
