"""Exhaustive search over all (m, n) words for extremal palindrome counts.

The scan enumerates every word of a shape over a q-symbol alphabet in
row-major base-q counter order, counts its distinct palindromic factors of
one kind, and reports the extremum with a bounded list of witnesses.  The
counter space can be partitioned into contiguous ranges and scanned by
worker processes; each worker reduces to a local (optimum, witnesses) pair
and a final associative merge yields a result independent of the split.

Budgets cap the number of words visited, never wall-clock time, so runs are
machine-independent.
"""

from __future__ import annotations

import time
from bisect import insort
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .bounds import (
    BudgetExceededError,
    count_palindromes_formula,
    default_alphabet,
    generate_all_palindromes,
    max_hv_bound,
    resolve_budget,
)
from .word2d import Word2D

TABLE1_SHAPES: tuple[tuple[int, int], ...] = (
    (3, 2),
    (3, 3),
    (3, 4),
    (3, 5),
    (3, 6),
    (4, 2),
    (4, 3),
    (4, 4),
)

# Exhaustively computed maxima of distinct HV-palindromic factors over all
# binary words of each shape.
TABLE1_EXPECTED: dict[tuple[int, int], int] = {
    (3, 2): 6,
    (3, 3): 10,
    (3, 4): 13,
    (3, 5): 17,
    (3, 6): 20,
    (4, 2): 8,
    (4, 3): 13,
    (4, 4): 19,
}


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one scan: the extremal factor count and who attains it.

    ``witnesses`` holds up to the requested number of achievers, the
    smallest ones in row-content order.  ``words_scanned`` is the full size
    of the scanned space; for restricted scans that space is the carrier
    stream, recorded in ``restricted_to``.
    """

    q: int
    shape: tuple[int, int]
    kind: str
    objective: str
    optimum: int
    witnesses: tuple[Word2D, ...]
    words_scanned: int
    elapsed_seconds: float
    restricted_to: str | None = None


class _FactorCounter:
    """Distinct palindromic-factor counter for words sharing one row pool.

    Every factor ever seen is assigned a bit; per-row and per-row-pair
    contributions are cached as bit masks keyed by the row strings, so a
    word's census reduces to OR-ing a handful of integers.  Factors spanning
    three or more rows are found through span masks: bit s of a row mask
    says whether column span s of that row (pair) satisfies the local
    palindrome (mirror) condition, and AND-ing masks over a row window
    leaves exactly the spans that form factors.
    """

    __slots__ = (
        "kind",
        "spans",
        "full_mask",
        "_slices",
        "_pal_mask",
        "_h1_bits",
        "_pair_mask",
        "_h2_bits",
        "_key_bits",
    )

    def __init__(self, n: int, kind: str):
        if kind not in ("pal2d", "hv"):
            raise ValueError(f"kind must be 'pal2d' or 'hv', got {kind!r}")
        self.kind = kind
        self.spans = [(j1, j2) for j1 in range(n) for j2 in range(j1 + 1, n + 1)]
        self.full_mask = (1 << len(self.spans)) - 1
        self._slices: dict[str, tuple[str, ...]] = {}
        self._pal_mask: dict[str, int] = {}
        self._h1_bits: dict[str, int] = {}
        self._pair_mask: dict[tuple[str, str], int] = {}
        self._h2_bits: dict[tuple[str, str], int] = {}
        self._key_bits: dict[tuple[str, ...], int] = {}

    def _bit(self, key: tuple[str, ...]) -> int:
        bit = self._key_bits.get(key)
        if bit is None:
            bit = 1 << len(self._key_bits)
            self._key_bits[key] = bit
        return bit

    def _row(self, r: str) -> tuple[str, ...]:
        cached = self._slices.get(r)
        if cached is not None:
            return cached
        subs = tuple(r[j1:j2] for j1, j2 in self.spans)
        pal = 0
        h1 = 0
        for s, sub in enumerate(subs):
            if sub == sub[::-1]:
                pal |= 1 << s
                h1 |= self._bit((sub,))
        self._slices[r] = subs
        self._pal_mask[r] = pal
        self._h1_bits[r] = h1
        return subs

    def _pair(self, a: str, b: str) -> int:
        """Span mask for adjacent rows a above b, plus the h=2 factor bits."""
        key = (a, b)
        mask = self._pair_mask.get(key)
        if mask is not None:
            return mask
        asubs = self._row(a)
        bsubs = self._row(b)
        mask = 0
        bits = 0
        if self.kind == "hv":
            # rows must match and be palindromic
            pal = self._pal_mask[a]
            for s, (x, y) in enumerate(zip(asubs, bsubs)):
                if x == y:
                    mask |= 1 << s
                    if pal >> s & 1:
                        bits |= self._bit((x, y))
        else:
            # top row must be the reverse of the bottom row
            for s, (x, y) in enumerate(zip(asubs, bsubs)):
                if x == y[::-1]:
                    mask |= 1 << s
                    bits |= self._bit((x, y))
        self._pair_mask[key] = mask
        self._h2_bits[key] = bits
        return mask

    def count(self, rows: Sequence[str]) -> int:
        """Number of distinct palindromic factors of the word, all shapes."""
        m = len(rows)
        acc = 0
        h1 = self._h1_bits
        for r in rows:
            got = h1.get(r)
            if got is None:
                self._row(r)
                got = h1[r]
            acc |= got
        pair = self._pair
        h2 = self._h2_bits
        for i in range(m - 1):
            pair(rows[i], rows[i + 1])
            acc |= h2[(rows[i], rows[i + 1])]
        hv = self.kind == "hv"
        pal_mask = self._pal_mask
        slices = self._slices
        for i1 in range(m - 2):
            for i2 in range(i1 + 2, m):
                h = i2 - i1 + 1
                mask = self.full_mask
                if hv:
                    for t in range(h // 2):
                        mask &= pair(rows[i1 + t], rows[i2 - t])
                        if not mask:
                            break
                    if mask:
                        for t in range((h + 1) // 2):
                            mask &= pal_mask[rows[i1 + t]]
                            if not mask:
                                break
                else:
                    for t in range(h // 2):
                        mask &= pair(rows[i1 + t], rows[i2 - t])
                        if not mask:
                            break
                    if mask and h % 2:
                        mid = rows[i1 + h // 2]
                        self._row(mid)
                        mask &= pal_mask[mid]
                while mask:
                    low = mask & -mask
                    s = low.bit_length() - 1
                    key = tuple(slices[r][s] for r in rows[i1 : i2 + 1])
                    acc |= self._bit(key)
                    mask ^= low
        return acc.bit_count()


def _row_pool(q: int, n: int) -> list[str]:
    letters = default_alphabet(q)
    return ["".join(t) for t in product(letters, repeat=n)]


def _iter_range(
    pool: Sequence[str], m: int, start: int, stop: int
) -> Iterator[tuple[str, ...]]:
    """Words with row-major counter values in [start, stop).

    The counter reads the word as an m-digit base-len(pool) number with the
    first row as the most significant digit.
    """
    base = len(pool)
    digits = []
    x = start
    for _ in range(m):
        digits.append(x % base)
        x //= base
    digits.reverse()
    rows = [pool[d] for d in digits]
    last = m - 1
    for _ in range(start, stop):
        yield tuple(rows)
        pos = last
        while pos >= 0:
            d = digits[pos] + 1
            if d < base:
                digits[pos] = d
                rows[pos] = pool[d]
                break
            digits[pos] = 0
            rows[pos] = pool[0]
            pos -= 1


def _reduce_range(
    pool: Sequence[str],
    m: int,
    counter: _FactorCounter,
    objective: str,
    start: int,
    stop: int,
    max_witnesses: int,
) -> tuple[int | None, list[tuple[str, ...]]]:
    """Local extremum and sorted witness list over one counter range."""
    maximize = objective == "max"
    best: int | None = None
    wits: list[tuple[str, ...]] = []
    count = counter.count
    for rows in _iter_range(pool, m, start, stop):
        v = count(rows)
        if best is None or (v > best if maximize else v < best):
            best = v
            wits = [rows] if max_witnesses else []
        elif v == best and max_witnesses:
            if len(wits) < max_witnesses:
                insort(wits, rows)
            elif rows < wits[-1]:
                insort(wits, rows)
                wits.pop()
    return best, wits


def _scan_worker(
    args: tuple[int, int, int, str, str, int, int, int],
) -> tuple[int | None, list[tuple[str, ...]]]:
    q, m, n, kind, objective, start, stop, max_witnesses = args
    pool = _row_pool(q, n)
    counter = _FactorCounter(n, kind)
    return _reduce_range(pool, m, counter, objective, start, stop, max_witnesses)


def exhaustive_extremum(
    q: int,
    m: int,
    n: int,
    kind: str = "hv",
    objective: str = "max",
    budget: int | None = None,
    max_witnesses: int = 4,
    threads: int = 1,
) -> SearchResult:
    """Extremal count of distinct palindromic factors over all (m, n) words
    using q symbols.

    Scans the whole q^(mn) space; raises BudgetExceededError first if that
    exceeds the budget.  Deterministic for fixed parameters, including the
    witness list (the smallest achievers in row-content order), regardless
    of the worker count.
    """
    if m < 1 or n < 1:
        raise ValueError(f"dimensions must be positive, got ({m}, {n})")
    if objective not in ("max", "min"):
        raise ValueError(f"objective must be 'max' or 'min', got {objective!r}")
    if max_witnesses < 0:
        raise ValueError(f"witness limit must be non-negative, got {max_witnesses}")
    if threads < 1:
        raise ValueError(f"thread count must be positive, got {threads}")
    if kind not in ("pal2d", "hv"):
        raise ValueError(f"kind must be 'pal2d' or 'hv', got {kind!r}")
    default_alphabet(q)
    limit = resolve_budget(budget)
    total = q ** (m * n)
    if total > limit:
        raise BudgetExceededError(
            f"scanning all ({m}, {n}) words over {q} symbols requires "
            f"{total} evaluations, exceeding the budget of {limit}"
        )
    started = time.perf_counter()
    threads = min(threads, total)
    if threads == 1:
        pool = _row_pool(q, n)
        counter = _FactorCounter(n, kind)
        partials = [_reduce_range(pool, m, counter, objective, 0, total, max_witnesses)]
    else:
        cuts = [total * i // threads for i in range(threads + 1)]
        tasks = [
            (q, m, n, kind, objective, cuts[i], cuts[i + 1], max_witnesses)
            for i in range(threads)
        ]
        with ProcessPoolExecutor(max_workers=threads) as pool_exec:
            partials = list(pool_exec.map(_scan_worker, tasks))
    maximize = objective == "max"
    values = [b for b, _ in partials if b is not None]
    best = max(values) if maximize else min(values)
    merged = sorted(w for b, ws in partials if b == best for w in ws)
    witnesses = tuple(Word2D._wrap(w) for w in merged[:max_witnesses])
    elapsed = time.perf_counter() - started
    return SearchResult(
        q=q,
        shape=(m, n),
        kind=kind,
        objective=objective,
        optimum=best,
        witnesses=witnesses,
        words_scanned=total,
        elapsed_seconds=elapsed,
    )


_RESTRICTIONS = {"palindromes_only": "pal2d", "hv_only": "hv"}


def exhaustive_extremum_restricted(
    q: int,
    m: int,
    n: int,
    kind: str = "pal2d",
    objective: str = "max",
    restrict: str = "hv_only",
    budget: int | None = None,
    max_witnesses: int = 4,
) -> SearchResult:
    """Extremal factor count with the scan restricted to palindromic
    carriers.

    ``restrict`` chooses the carrier stream: ``palindromes_only`` scans all
    (m, n) 2D palindromes, ``hv_only`` all HV-palindromes.  The factor kind
    counted inside each carrier is independent of the restriction.
    """
    if restrict not in _RESTRICTIONS:
        raise ValueError(
            f"restrict must be one of {sorted(_RESTRICTIONS)}, got {restrict!r}"
        )
    if objective not in ("max", "min"):
        raise ValueError(f"objective must be 'max' or 'min', got {objective!r}")
    if max_witnesses < 0:
        raise ValueError(f"witness limit must be non-negative, got {max_witnesses}")
    carrier_kind = _RESTRICTIONS[restrict]
    letters = default_alphabet(q)
    started = time.perf_counter()
    counter = _FactorCounter(n, kind)
    maximize = objective == "max"
    best: int | None = None
    wits: list[tuple[str, ...]] = []
    scanned = 0
    for w in generate_all_palindromes(letters, m, n, carrier_kind, budget):
        scanned += 1
        rows = w.lines
        v = counter.count(rows)
        if best is None or (v > best if maximize else v < best):
            best = v
            wits = [rows] if max_witnesses else []
        elif v == best and max_witnesses:
            if len(wits) < max_witnesses:
                insort(wits, rows)
            elif rows < wits[-1]:
                insort(wits, rows)
                wits.pop()
    elapsed = time.perf_counter() - started
    assert best is not None and scanned == count_palindromes_formula(
        q, m, n, carrier_kind
    )
    return SearchResult(
        q=q,
        shape=(m, n),
        kind=kind,
        objective=objective,
        optimum=best,
        witnesses=tuple(Word2D._wrap(w) for w in wits),
        words_scanned=scanned,
        elapsed_seconds=elapsed,
        restricted_to=restrict,
    )


@dataclass(frozen=True)
class TableRow:
    """One verified shape: achieved maximum, formula bound, and the match
    against the pinned expected value (None when the shape has no pin)."""

    shape: tuple[int, int]
    achieved: int
    bound: int
    gap: int
    expected: int | None
    matches: bool | None


@dataclass(frozen=True)
class TableReport:
    rows: tuple[TableRow, ...]
    elapsed_seconds: float

    @property
    def ok(self) -> bool:
        return all(r.matches is not False and r.gap >= 0 for r in self.rows)


def verify_table(
    shapes: Sequence[tuple[int, int]] | None = None,
    budget: int | None = None,
    threads: int = 1,
) -> TableReport:
    """Scan binary words at the given shapes (default: all eight pinned
    ones) for the maximum HV-palindromic factor count, against the bound
    formula and the pinned values."""
    if shapes is None:
        shapes = TABLE1_SHAPES
    started = time.perf_counter()
    out = []
    for m, n in shapes:
        res = exhaustive_extremum(
            2, m, n, kind="hv", objective="max", budget=budget, threads=threads
        )
        bound = max_hv_bound(m, n)
        expected = TABLE1_EXPECTED.get((m, n))
        out.append(
            TableRow(
                shape=(m, n),
                achieved=res.optimum,
                bound=bound,
                gap=bound - res.optimum,
                expected=expected,
                matches=None if expected is None else res.optimum == expected,
            )
        )
    return TableReport(rows=tuple(out), elapsed_seconds=time.perf_counter() - started)
