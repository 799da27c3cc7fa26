"""Combinatorics of run-length-limited binary words.

A word is admissible for order m when no run of equal symbols reaches
length m.  Everything here is pure and operates on immutable values.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

MIN_ORDER = 3

LESS = "less"
GREATER = "greater"
EQUAL_SO_FAR = "equal-so-far"


class CapacityError(Exception):
    """Enumeration would materialize more words than the caller allows."""


class InadmissibleWordError(ValueError):
    """An operation that requires an admissible word received one that is not."""


def _check_symbols(s: str) -> None:
    if s.strip("01") != "":
        raise ValueError(f"word symbols must be '0'/'1', got {s!r}")


def _check_order(m: int) -> None:
    if m < MIN_ORDER:
        raise ValueError(f"constraint order must be >= {MIN_ORDER}, got {m}")


@dataclass(frozen=True)
class Word:
    """A finite binary word together with its constraint order."""

    symbols: str
    order: int

    def __post_init__(self):
        _check_order(self.order)
        _check_symbols(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return self.symbols


@dataclass(frozen=True)
class SequenceWindow:
    """A finite prefix standing in for an (unspecified) infinite sequence.

    Predicates on windows must stay three-valued: anything the prefix is
    too short to decide is reported as undetermined, never guessed.
    """

    prefix: str
    declared_infinite: bool = True

    def __post_init__(self):
        _check_symbols(self.prefix)

    def __len__(self) -> int:
        return len(self.prefix)


@dataclass(frozen=True)
class OccurrenceReport:
    """Positions whose digit can be flipped keeping the prefix admissible."""

    set0: tuple[int, ...]
    set1: tuple[int, ...]
    n0: int
    n1: int


@dataclass(frozen=True)
class MetricValue:
    """A d2 value: exact, or an upper bound when the windows never differ."""

    value: Fraction
    exact: bool


def symbols_of(x) -> str:
    """Accept a Word, SequenceWindow or raw '0'/'1' string."""
    if isinstance(x, Word):
        return x.symbols
    if isinstance(x, SequenceWindow):
        return x.prefix
    if isinstance(x, str):
        _check_symbols(x)
        return x
    raise TypeError(f"expected Word, SequenceWindow or str, got {type(x)!r}")


def max_run(s: str) -> int:
    """Length of the longest run of equal symbols (0 for the empty word)."""
    best = run = 0
    prev = None
    for c in s:
        run = run + 1 if c == prev else 1
        prev = c
        if run > best:
            best = run
    return best


def is_admissible_symbols(m: int, s: str) -> bool:
    _check_order(m)
    return max_run(s) < m


def is_admissible(w: Word) -> bool:
    """True iff every maximal run in w has length <= m-1."""
    return is_admissible_symbols(w.order, w.symbols)


def count_words(m: int, n: int) -> int:
    """Number of admissible words of length n, by run-state dynamic programming."""
    _check_order(m)
    if n < 1:
        raise ValueError(f"length must be >= 1, got {n}")
    # state: (digit, current run length), counts are exact integers
    counts = {(0, 1): 1, (1, 1): 1}
    for _ in range(n - 1):
        nxt: dict[tuple[int, int], int] = {}
        for (d, r), c in counts.items():
            if r < m - 1:
                key = (d, r + 1)
                nxt[key] = nxt.get(key, 0) + c
            key = (1 - d, 1)
            nxt[key] = nxt.get(key, 0) + c
        counts = nxt
    return sum(counts.values())


def enumerate_words(m: int, n: int, cap: int = 1 << 21) -> list[Word]:
    """All admissible words of length n in lexicographic order.

    Raises CapacityError when the list would exceed `cap` entries; use
    count_words for sizes beyond that.
    """
    total = count_words(m, n)
    if total > cap:
        raise CapacityError(
            f"{total} words of length {n} exceed the cap {cap}; use count_words"
        )
    out: list[Word] = []
    buf: list[str] = []

    def extend(last: str, run: int) -> None:
        if len(buf) == n:
            out.append(Word("".join(buf), m))
            return
        for sym in "01":
            nrun = run + 1 if sym == last else 1
            if nrun >= m:
                continue
            buf.append(sym)
            extend(sym, nrun)
            buf.pop()

    extend("", 0)
    return out


def occurrence_counts(m: int, s: str) -> tuple[int, int]:
    """(n0, n1) of the occurrence report, by the local run characterization.

    Position k with s_k = 0 counts for n0 iff the run of 1's immediately
    before position k is shorter than m-1 (so flipping to 1 keeps the
    prefix admissible); n1 symmetric.
    """
    n0 = n1 = 0
    prev = ""
    run = 0  # run of `prev` ending just before the current position
    for c in s:
        if c == "0":
            if not (prev == "1" and run >= m - 1):
                n0 += 1
        else:
            if not (prev == "0" and run >= m - 1):
                n1 += 1
        run = run + 1 if c == prev else 1
        prev = c
    return n0, n1


def occurrence_report(w: Word) -> OccurrenceReport:
    """Flip-admissible positions of w (1-based), for an admissible word."""
    if not is_admissible(w):
        raise InadmissibleWordError(f"{w.symbols!r} is not admissible for m={w.order}")
    m = w.order
    set0: list[int] = []
    set1: list[int] = []
    prev = ""
    run = 0
    for k, c in enumerate(w.symbols, start=1):
        if c == "0":
            if not (prev == "1" and run >= m - 1):
                set0.append(k)
        else:
            if not (prev == "0" and run >= m - 1):
                set1.append(k)
        run = run + 1 if c == prev else 1
        prev = c
    return OccurrenceReport(tuple(set0), tuple(set1), len(set0), len(set1))


def complement(x):
    """Symbolwise flip; an involution that preserves admissibility."""
    flipped = symbols_of(x).translate(str.maketrans("01", "10"))
    if isinstance(x, Word):
        return Word(flipped, x.order)
    if isinstance(x, SequenceWindow):
        return SequenceWindow(flipped, x.declared_infinite)
    return flipped


def pi2(x) -> Fraction:
    """Projection to [0,1]: sum of w_n / 2^n over the finite word."""
    s = symbols_of(x)
    if not s:
        return Fraction(0)
    return Fraction(int(s, 2), 2 ** len(s))


def d2(w, v) -> MetricValue:
    """Metric 2^{-inf{k>=0: w_{k+1} != v_{k+1}}} on finite windows.

    Exact when the windows differ within the common length L; otherwise an
    upper-bound sentinel (value 2^{-L}, exact=False).  Callers must branch
    on `exact`.
    """
    a, b = symbols_of(w), symbols_of(v)
    if not a or not b:
        raise ValueError("d2 requires non-empty windows")
    common = min(len(a), len(b))
    for i in range(common):
        if a[i] != b[i]:
            return MetricValue(Fraction(1, 2**i), True)
    return MetricValue(Fraction(1, 2**common), False)


def lex_compare(w, v) -> str:
    """Strict lexicographic verdict on the common window, or equal-so-far."""
    a, b = symbols_of(w), symbols_of(v)
    common = min(len(a), len(b))
    for i in range(common):
        if a[i] != b[i]:
            return LESS if a[i] < b[i] else GREATER
    return EQUAL_SO_FAR
