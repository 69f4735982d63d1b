"""Partial finite automata with careful-synchronization semantics.

States are numbered 1..n.  A transition may be undefined; applying a word
to a set of states yields ``None`` as soon as any member would take an
undefined transition.  All values here are immutable and hashable, so they
can be shared freely between threads.
"""

import json
from dataclasses import dataclass, field


class FormatError(ValueError):
    """Raised when a serialized automaton document is malformed."""


@dataclass(frozen=True)
class Pfa:
    """A partial deterministic automaton.

    ``delta[q-1][s]`` is the target of state ``q`` under symbol index ``s``,
    or ``None`` when the transition is undefined.  ``labels``, when given,
    supplies one distinct display name per state (used by DOT/JSON output).
    """

    n: int
    symbols: tuple[str, ...]
    delta: tuple[tuple[int | None, ...], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need at least one state, got n={self.n}")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("symbols must be distinct")
        if len(self.delta) != self.n:
            raise ValueError(f"delta has {len(self.delta)} rows, expected {self.n}")
        for q, row in enumerate(self.delta, start=1):
            if len(row) != len(self.symbols):
                raise ValueError(f"delta row for state {q} has wrong arity")
            for s, target in enumerate(row):
                if target is not None and not 1 <= target <= self.n:
                    raise ValueError(
                        f"delta[{q}][{self.symbols[s]}] = {target} out of range 1..{self.n}"
                    )
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise ValueError(f"expected {self.n} labels, got {len(self.labels)}")
            if len(set(self.labels)) != self.n:
                raise ValueError("labels must be distinct")

    def step(self, q: int, s: int) -> int | None:
        """Target of state ``q`` (1-based) under symbol index ``s``."""
        if not 0 <= s < len(self.symbols):
            raise ValueError(f"symbol index {s} out of range")
        return self.delta[q - 1][s]

    def label(self, q: int) -> str:
        return self.labels[q - 1] if self.labels else str(q)

    def defined_count(self) -> int:
        return sum(t is not None for row in self.delta for t in row)


@dataclass(frozen=True)
class StateSet:
    """A subset of the states 1..n, stored as a bit vector.

    Bit ``q-1`` of ``bits`` is set iff state ``q`` is a member.  Supports
    carriers of any size (Python integers are unbounded).
    """

    bits: int
    n: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError("members out of carrier range")

    @classmethod
    def full(cls, n: int) -> "StateSet":
        return cls((1 << n) - 1, n)

    @classmethod
    def of(cls, members, n: int) -> "StateSet":
        bits = 0
        for q in members:
            if not 1 <= q <= n:
                raise ValueError(f"state {q} out of range 1..{n}")
            bits |= 1 << (q - 1)
        return cls(bits, n)

    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def __iter__(self):
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length()
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, q: int) -> bool:
        return 1 <= q <= self.n and self.bits >> (q - 1) & 1 == 1

    def __or__(self, other: "StateSet") -> "StateSet":
        self._check_carrier(other)
        return StateSet(self.bits | other.bits, self.n)

    def __and__(self, other: "StateSet") -> "StateSet":
        self._check_carrier(other)
        return StateSet(self.bits & other.bits, self.n)

    def __sub__(self, other: "StateSet") -> "StateSet":
        self._check_carrier(other)
        return StateSet(self.bits & ~other.bits, self.n)

    def _check_carrier(self, other):
        if self.n != other.n:
            raise ValueError("state sets over different carriers")

    def only(self) -> int:
        """The single member of a singleton set."""
        if len(self) != 1:
            raise ValueError("not a singleton")
        return self.bits.bit_length()


@dataclass(frozen=True)
class Word:
    """A sequence of symbol indices into some automaton's symbol list."""

    letters: tuple[int, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __iter__(self):
        return iter(self.letters)


def parse_word(pfa: Pfa, text: str) -> Word:
    """Parse a word from text over the automaton's symbol labels.

    Whitespace separates symbols when present; otherwise symbols are matched
    greedily (longest label first), so multi-character labels work too.
    """
    index = {label: i for i, label in enumerate(pfa.symbols)}
    if any(ch.isspace() for ch in text):
        tokens = text.split()
    else:
        tokens = []
        by_length = sorted(index, key=len, reverse=True)
        pos = 0
        while pos < len(text):
            for label in by_length:
                if text.startswith(label, pos):
                    tokens.append(label)
                    pos += len(label)
                    break
            else:
                raise ValueError(f"cannot match a symbol at position {pos} of {text!r}")
    try:
        return Word(tuple(index[t] for t in tokens))
    except KeyError as exc:
        raise ValueError(f"unknown symbol {exc.args[0]!r}") from None


def format_word(pfa: Pfa, word: Word, pretty: bool = False) -> str:
    """Render a word as a plain string, or run-length compressed (``b^3 a^2``)."""
    labels = [pfa.symbols[s] for s in word.letters]
    for s in word.letters:
        if not 0 <= s < len(pfa.symbols):
            raise ValueError(f"symbol index {s} out of range")
    if not pretty:
        return "".join(labels)
    parts = []
    i = 0
    while i < len(labels):
        j = i
        while j < len(labels) and labels[j] == labels[i]:
            j += 1
        run = j - i
        parts.append(labels[i] if run == 1 else f"{labels[i]}^{run}")
        i = j
    return " ".join(parts)


def apply_word(pfa: Pfa, s: StateSet, w: Word) -> StateSet | None:
    """Image of a state set under a word; ``None`` if any step is undefined.

    The empty set maps to the empty set.  A symbol index outside the
    automaton's alphabet is a usage error, distinct from an undefined image.
    """
    if s.n != pfa.n:
        raise ValueError(f"state set over {s.n} states fed to a {pfa.n}-state automaton")
    nsym = len(pfa.symbols)
    bits = s.bits
    delta = pfa.delta
    for sym in w:
        if not 0 <= sym < nsym:
            raise ValueError(f"symbol index {sym} out of range")
        image = 0
        rest = bits
        while rest:
            low = rest & -rest
            target = delta[low.bit_length() - 1][sym]
            if target is None:
                return None
            image |= 1 << (target - 1)
            rest ^= low
        bits = image
    return StateSet(bits, pfa.n)


def is_sync_word(pfa: Pfa, w: Word) -> bool:
    """True iff the word is defined on every state and merges all of them."""
    image = apply_word(pfa, StateSet.full(pfa.n), w)
    return image is not None and len(image) == 1


def to_json(pfa: Pfa) -> str:
    doc = {
        "n": pfa.n,
        "symbols": list(pfa.symbols),
        "delta": [list(row) for row in pfa.delta],
    }
    if pfa.labels is not None:
        doc["labels"] = list(pfa.labels)
    return json.dumps(doc, ensure_ascii=False)


def from_json(text: str) -> Pfa:
    """Parse an automaton document, naming the offending field on error."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise FormatError("document: expected an object")
    n = doc.get("n")
    if not isinstance(n, int) or n < 1:
        raise FormatError("n: expected a positive integer")
    symbols = doc.get("symbols")
    if (
        not isinstance(symbols, list)
        or not symbols
        or any(not isinstance(x, str) for x in symbols)
    ):
        raise FormatError("symbols: expected a nonempty list of strings")
    if len(set(symbols)) != len(symbols):
        raise FormatError("symbols: duplicate entries")
    delta = doc.get("delta")
    if not isinstance(delta, list) or len(delta) != n:
        raise FormatError(f"delta: expected {n} rows")
    rows = []
    for qi, row in enumerate(delta):
        if not isinstance(row, list) or len(row) != len(symbols):
            raise FormatError(f"delta[{qi}]: expected {len(symbols)} entries")
        for si, target in enumerate(row):
            if target is None:
                continue
            if not isinstance(target, int) or isinstance(target, bool) or not 1 <= target <= n:
                raise FormatError(f"delta[{qi}][{si}]: target {target!r} not in 1..{n}")
        rows.append(tuple(row))
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or any(not isinstance(x, str) for x in labels):
            raise FormatError("labels: expected a list of strings")
        if len(labels) != n:
            raise FormatError(f"labels: expected {n} entries, got {len(labels)}")
        if len(set(labels)) != n:
            raise FormatError("labels: duplicate entries")
        labels = tuple(labels)
    return Pfa(n=n, symbols=tuple(symbols), delta=tuple(rows), labels=labels)


def to_dot(pfa: Pfa) -> str:
    """Render as a DOT digraph: one edge per defined transition."""
    def quote(s: str) -> str:
        return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'

    lines = ["digraph pfa {", "  rankdir=LR;", "  node [shape=circle];"]
    for q in range(1, pfa.n + 1):
        lines.append(f"  {quote(pfa.label(q))};")
    for q in range(1, pfa.n + 1):
        for s, label in enumerate(pfa.symbols):
            target = pfa.delta[q - 1][s]
            if target is not None:
                lines.append(
                    f"  {quote(pfa.label(q))} -> {quote(pfa.label(target))} [label={quote(label)}];"
                )
    lines.append("}")
    return "\n".join(lines) + "\n"


def strongly_connected(pfa: Pfa) -> bool:
    """True iff every state is reachable from every other along defined edges."""
    edges = [[] for _ in range(pfa.n + 1)]
    redges = [[] for _ in range(pfa.n + 1)]
    for q in range(1, pfa.n + 1):
        for s in range(len(pfa.symbols)):
            t = pfa.delta[q - 1][s]
            if t is not None:
                edges[q].append(t)
                redges[t].append(q)

    def reach(adj):
        seen = {1}
        stack = [1]
        while stack:
            for t in adj[stack.pop()]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return len(seen) == pfa.n

    return reach(edges) and reach(redges)
