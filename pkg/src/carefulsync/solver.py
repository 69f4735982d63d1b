"""Exact shortest careful synchronizing words via subset BFS.

The search runs forward from the full state set over the subsets actually
reachable, never materializing all 2^n of them.  Expansion order is fixed
(frontier in discovery order, symbols in index order), which makes the
reported word the lexicographically least shortest one and the whole result
independent of hashing or threading.
"""

from dataclasses import dataclass

from .pfa import Pfa, Word


@dataclass(frozen=True)
class SolveLimits:
    """Caps on the search; exceeding either aborts loudly, never silently."""

    max_subsets: int = 1 << 24
    max_length: int = 10**6

    def __post_init__(self):
        if self.max_subsets < 1 or self.max_length < 1:
            raise ValueError("limits must be positive")


@dataclass(frozen=True)
class SolveResult:
    threshold: int
    word: Word
    explored: int
    levels: int


class NotSynchronizing(Exception):
    """The reachable subset graph contains no singleton."""

    def __init__(self, explored: int, levels: int):
        super().__init__(f"no synchronizing word exists (explored {explored} subsets)")
        self.explored = explored
        self.levels = levels


class LimitExceeded(Exception):
    """A resource cap was hit; carries the partial statistics."""

    def __init__(self, what: str, explored: int, levels: int):
        super().__init__(f"{what} exceeded after {explored} subsets / {levels} levels")
        self.what = what
        self.explored = explored
        self.levels = levels


def _tables(pfa: Pfa):
    # per symbol: bit mask of states where it is defined, plus target list
    masks = []
    targets = []
    for s in range(len(pfa.symbols)):
        mask = 0
        col = [0] * pfa.n
        for q in range(1, pfa.n + 1):
            t = pfa.delta[q - 1][s]
            if t is not None:
                mask |= 1 << (q - 1)
                col[q - 1] = 1 << (t - 1)
        masks.append(mask)
        targets.append(col)
    return masks, targets


def _image(bits: int, mask: int, col) -> int | None:
    if bits & ~mask:
        return None
    image = 0
    rest = bits
    while rest:
        low = rest & -rest
        image |= col[low.bit_length() - 1]
        rest ^= low
    return image


def _search(pfa: Pfa, limits: SolveLimits, count_paths: bool):
    masks, targets = _tables(pfa)
    nsym = len(pfa.symbols)
    full = (1 << pfa.n) - 1

    if pfa.n == 1:
        return 0, [], 1, 0, 1

    parents = {full: None}
    frontier = [full]
    counts = {full: 1}
    level = 0
    while frontier:
        if level >= limits.max_length:
            raise LimitExceeded("max_length", len(parents), level)
        next_frontier = []
        next_counts = {}
        hit = None
        for bits in frontier:
            c = counts[bits] if count_paths else 0
            for s in range(nsym):
                image = _image(bits, masks[s], targets[s])
                if image is None:
                    continue
                if image not in parents:
                    parents[image] = (bits, s)
                    if len(parents) > limits.max_subsets:
                        raise LimitExceeded("max_subsets", len(parents), level + 1)
                    next_frontier.append(image)
                    if count_paths:
                        next_counts[image] = c
                    if image.bit_count() == 1:
                        if hit is None:
                            hit = image
                        if not count_paths:
                            # first discovery in this level is the lex-least word
                            return level + 1, _backtrack(parents, image), len(parents), level + 1, 1
                elif count_paths and image in next_counts:
                    next_counts[image] += c
        level += 1
        if hit is not None:
            total = sum(v for k, v in next_counts.items() if k.bit_count() == 1)
            return level, _backtrack(parents, hit), len(parents), level, total
        frontier = next_frontier
        counts = next_counts
    raise NotSynchronizing(len(parents), level)


def _backtrack(parents, bits):
    letters = []
    while parents[bits] is not None:
        bits, s = parents[bits]
        letters.append(s)
    letters.reverse()
    return letters


def solve(pfa: Pfa, limits: SolveLimits = SolveLimits()) -> SolveResult:
    """Shortest careful synchronizing word, its length, and search statistics.

    Raises :class:`NotSynchronizing` when the automaton has none, and
    :class:`LimitExceeded` when a cap is hit.
    """
    threshold, letters, explored, levels, _ = _search(pfa, limits, count_paths=False)
    return SolveResult(threshold, Word(tuple(letters)), explored, levels)


def count_shortest(pfa: Pfa, limits: SolveLimits = SolveLimits()) -> tuple[int, int]:
    """Reset threshold plus the exact number of distinct shortest words.

    Counts shortest paths from the full set to every singleton reached at the
    minimal BFS level; the count is an arbitrary-precision integer.
    """
    threshold, _, _, _, total = _search(pfa, limits, count_paths=True)
    return threshold, total
