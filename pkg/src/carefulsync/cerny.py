"""The binary family C(n, c) generalizing the classical Cerny automata.

Symbol ``a`` advances the low states and wraps n to 1 but is undefined just
below the top; ``b`` idles on the low states and climbs the top ones.  For
c = 0 this is exactly the Cerny sequence.  The reset threshold of every
member has a closed form driven by the pawn race solution, evaluated here
three ways and scanned for the family-wide optima.
"""

from dataclasses import dataclass

import numpy as np

from .pfa import Pfa, Word
from . import pawnrace

STAR_SYMBOLS = ("a", "ã", "b̃")


def build_cerny(n: int, c: int) -> Pfa:
    """The n-state family member with cost parameter c (requires n >= c+2)."""
    if c < 0 or n < c + 2:
        raise ValueError(f"need n >= c + 2 and c >= 0, got n={n}, c={c}")
    rows = []
    for q in range(1, n + 1):
        if q <= n - c - 1:
            rows.append((q + 1, q))
        elif q <= n - 1:
            rows.append((None, q + 1))
        else:
            rows.append((1, 1))
    return Pfa(n=n, symbols=("a", "b"), delta=tuple(rows))


def build_cerny_star(m: int) -> Pfa:
    """The 3-symbol auxiliary automaton the family reduces to.

    Both ``a`` and ``ã`` rotate q to q+1, except that ``a`` is undefined on
    the top state while ``ã`` wraps it to 1; ``b̃`` fixes everything except
    the top state, which it sends to 1.
    """
    if m < 2:
        raise ValueError(f"need at least 2 states, got {m}")
    rows = []
    for q in range(1, m):
        rows.append((q + 1, q + 1, q))
    rows.append((None, 1, 1))
    return Pfa(n=m, symbols=STAR_SYMBOLS, delta=tuple(rows))


def expand_star_word(word: Word, c: int) -> tuple[Word, int]:
    """Substitute ã -> b^c a and b̃ -> b^(c+1) and report the weighted length.

    Applying the expansion on the n-state family member agrees with applying
    the original word on the (n-c)-state auxiliary automaton.
    """
    if c < 0:
        raise ValueError("cost parameter must be >= 0")
    out = []
    for letter in word:
        if letter == 0:
            out.append(0)
        elif letter == 1:
            out.extend([1] * c)
            out.append(0)
        elif letter == 2:
            out.extend([1] * (c + 1))
        else:
            raise ValueError(f"symbol index {letter} outside the 3-letter alphabet")
    return Word(tuple(out)), len(out)


def rt_formula(n: int, c: int) -> int:
    """Reset threshold of the family member, in closed form.

    With n' = n - c - 1 this is n'(n'-1) + c + 1 + f_c(n'), the race cost
    coming from the closed form (f_0(n') = n' - 1).
    """
    if c < 0 or n < c + 2:
        raise ValueError(f"need n >= c + 2 and c >= 0, got n={n}, c={c}")
    npr = n - c - 1
    return npr * (npr - 1) + c + 1 + pawnrace.f_closed(npr, c)


def optimal_c(n: int) -> tuple[int, set[int]]:
    """Maximum reset threshold over all c, with every maximizing c."""
    if n < 2:
        raise ValueError("need n >= 2")
    best = -1
    argmax: set[int] = set()
    for c in range(n - 1):
        value = rt_formula(n, c)
        if value > best:
            best = value
            argmax = {c}
        elif value == best:
            argmax.add(c)
    return best, argmax


def local_optima(n: int) -> list[tuple[int, int]]:
    """Interior c whose threshold is >= both neighbours, with values."""
    if n < 4:
        return []
    row = [rt_formula(n, c) for c in range(n - 1)]
    return [
        (c, row[c])
        for c in range(1, n - 2)
        if row[c] >= row[c - 1] and row[c] >= row[c + 1]
    ]


@dataclass(frozen=True)
class DropEvent:
    """The largest optimal c decreased from one n to the next."""

    n_before: int
    n_after: int
    c_before: int
    c_after: int
    r_before: int
    r_after: int

    def __post_init__(self):
        if self.n_after != self.n_before + 1:
            raise ValueError("drop events connect consecutive n")
        if self.c_after >= self.c_before:
            raise ValueError("not a drop")

    @property
    def gap(self) -> int:
        return self.c_before - self.c_after


def _sequence_terms(c: int, limit: int) -> np.ndarray:
    """Split-sequence terms through the first one exceeding ``limit``.

    Transient int64 companion to the exact caches: scans sweep thousands of
    c values and must not pin a big-integer cache per c.  Values stay far
    below 2^63 for every limit a scan can reach.
    """
    arr = np.ones(2 * c, dtype=np.int64)
    while arr[-1] <= limit:
        size = arr.size
        block = arr[size - c - 1: size - 1] + arr[size - c: size]
        arr = np.concatenate((arr, block))
    return arr


def _column(c: int, n_max: int) -> np.ndarray:
    """Thresholds of all members with this c, indexed by n' = n - c - 1.

    Entry j (0-based) is the threshold for n = c + 2 + j.  Uses one
    twinverse sweep plus a cumulative sum instead of per-n queries.
    """
    count = n_max - c - 1
    nprime = np.arange(1, count + 1, dtype=np.int64)
    if c == 0:
        f = nprime - 1
    else:
        terms = _sequence_terms(c, count)
        m = np.searchsorted(terms, nprime, side="right") + 1
        f = np.concatenate(([0], np.cumsum(m[:-1])))
    return nprime * (nprime - 1) + c + 1 + f


def scan_optimal(n_max: int, prune_half: bool = False) -> tuple[np.ndarray, np.ndarray]:
    """Per-n maximum threshold and largest maximizing c, for 2 <= n <= n_max.

    Returns int64 arrays indexed by n (entries below n=2 are -1).  With
    ``prune_half`` only c <= n/2 is scanned, which is safe because every
    local maximum lies strictly below n/2.
    """
    if n_max < 2:
        raise ValueError("need n_max >= 2")
    best = np.full(n_max + 1, -1, dtype=np.int64)
    best_c = np.full(n_max + 1, -1, dtype=np.int64)
    for c in range(n_max - 1):
        column = _column(c, n_max)
        n_lo = c + 2
        if prune_half and 2 * c > n_lo:
            column = column[2 * c - n_lo:]
            n_lo = 2 * c
        if column.size == 0:
            continue
        window_best = best[n_lo:]
        window_c = best_c[n_lo:]
        better = column >= window_best  # ties move to the larger c
        np.maximum(window_best, column, out=window_best)
        window_c[better] = c
    return best, best_c


def scan_drops(n_max: int, prune_half: bool = False) -> list[DropEvent]:
    """All drops of the largest optimal c between consecutive n up to n_max."""
    best, best_c = scan_optimal(n_max, prune_half)
    events = []
    for n in range(2, n_max):
        if best_c[n + 1] < best_c[n]:
            events.append(
                DropEvent(
                    n_before=n,
                    n_after=n + 1,
                    c_before=int(best_c[n]),
                    c_after=int(best_c[n + 1]),
                    r_before=int(best[n]),
                    r_after=int(best[n + 1]),
                )
            )
    return events


def rt_table(n_max: int) -> np.ndarray:
    """Dense (n, c) threshold table with -1 in the invalid corner."""
    table = np.full((n_max + 1, max(n_max - 1, 1)), -1, dtype=np.int64)
    for c in range(n_max - 1):
        table[c + 2:, c] = _column(c, n_max)
    return table


def greedy_factorization(text: str, c: int) -> list[str] | None:
    """Split a word (after its b^(c+1) prefix) into a, b^c a, b^(c+1) blocks.

    Returns the block list, or None if the text does not factor.  Every
    minimum-length word between subsets of the family decomposes this way.
    The decomposition of each maximal b-run is unique: a run of length L
    works iff L = 0 or L = c modulo c+1, the latter only directly before an
    a, which then completes the b^c a block.
    """
    if c < 0:
        raise ValueError("cost parameter must be >= 0")
    blocks = []
    i = 0
    while i < len(text):
        if text[i] == "a":
            blocks.append("a")
            i += 1
            continue
        if text[i] != "b":
            return None
        run = 0
        while i + run < len(text) and text[i + run] == "b":
            run += 1
        full, rest = divmod(run, c + 1)
        if rest == 0:
            blocks.extend(["b" * (c + 1)] * full)
            i += run
        elif rest == c and i + run < len(text) and text[i + run] == "a":
            blocks.extend(["b" * (c + 1)] * full)
            blocks.append("b" * c + "a")
            i += run + 1
        else:
            return None
    return blocks
