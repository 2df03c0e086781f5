"""Permutations, dashed patterns and the occurrence engine.

Positions and values are 1-based at every public boundary. Internally the
engine works on plain tuples with 0-based positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

Occurrence = tuple[int, ...]


class ParseError(ValueError):
    """Raised when permutation or pattern text does not follow the grammar."""


def _is_permutation(values: Sequence[int]) -> bool:
    n = len(values)
    return sorted(values) == list(range(1, n + 1))


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of {1..n} in one-line notation."""

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in values):
            raise ValueError(f"permutation entries must be integers: {values!r}")
        if not _is_permutation(values):
            raise ValueError(f"not a permutation of 1..{len(values)}: {values!r}")
        object.__setattr__(self, "values", values)

    @classmethod
    def _trusted(cls, values: tuple[int, ...]) -> Permutation:
        # skips validation; callers guarantee ``values`` is a permutation tuple
        obj = object.__new__(cls)
        object.__setattr__(obj, "values", values)
        return obj

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __str__(self) -> str:
        return render_permutation(self)

    def value_at(self, position: int) -> int:
        if not 1 <= position <= len(self.values):
            raise IndexError(f"position {position} out of range for length {len(self.values)}")
        return self.values[position - 1]

    def position_of(self, value: int) -> int:
        return self.values.index(value) + 1


@dataclass(frozen=True)
class VincularPattern:
    """A pattern permutation with adjacency requirements.

    ``glued[i]`` is true when letters ``i`` and ``i+1`` (0-based) have no dash
    between them, i.e. they must be matched by adjacent host positions.
    """

    letters: tuple[int, ...]
    glued: tuple[bool, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        glued = tuple(bool(g) for g in self.glued)
        if not letters:
            raise ValueError("pattern must have at least one letter")
        if not _is_permutation(letters):
            raise ValueError(f"pattern letters are not a permutation: {letters!r}")
        if len(glued) != len(letters) - 1:
            raise ValueError(f"expected {len(letters) - 1} glue flags, got {len(glued)}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "glued", glued)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return render_pattern(self)

    def blocks(self) -> list[tuple[int, ...]]:
        """Maximal glued runs of letters, left to right."""
        out = [[self.letters[0]]]
        for letter, g in zip(self.letters[1:], self.glued):
            if g:
                out[-1].append(letter)
            else:
                out.append([letter])
        return [tuple(b) for b in out]


@dataclass(frozen=True)
class PatternSet:
    name: str
    patterns: tuple[VincularPattern, ...]

    def __post_init__(self):
        patterns = tuple(self.patterns)
        if not patterns:
            raise ValueError("a pattern set needs at least one pattern")
        object.__setattr__(self, "patterns", patterns)

    def __iter__(self) -> Iterator[VincularPattern]:
        return iter(self.patterns)

    def __len__(self) -> int:
        return len(self.patterns)

    @classmethod
    def from_strings(cls, name: str, texts: Sequence[str]) -> PatternSet:
        return cls(name, tuple(parse_pattern(t) for t in texts))


# ---------------------------------------------------------------------------
# Text grammar


def parse_permutation(text: str) -> Permutation:
    """Parse compact (``31542``) or comma (``10,2,1,...``) one-line notation.

    The empty string is the empty permutation.
    """
    text = text.strip()
    if not text:
        return Permutation(())
    if "," in text:
        values = []
        for token in text.split(","):
            token = token.strip()
            if not token:
                raise ParseError(f"empty token in {text!r}")
            if not token.isdigit():
                raise ParseError(f"bad token {token!r} in {text!r}")
            values.append(int(token))
    else:
        if not text.isdigit():
            raise ParseError(f"mixed or unknown grammar: {text!r}")
        if "0" in text:
            raise ParseError(f"compact notation only allows digits 1-9: {text!r}")
        values = [int(ch) for ch in text]
    if not _is_permutation(values):
        raise ParseError(f"not a permutation of 1..{len(values)}: {text!r}")
    return Permutation(tuple(values))


def render_permutation(perm: Permutation) -> str:
    """Compact digits when n <= 9, comma-separated otherwise."""
    if len(perm) <= 9:
        return "".join(str(v) for v in perm.values)
    return ",".join(str(v) for v in perm.values)


def parse_pattern(text: str) -> VincularPattern:
    """Parse dashed notation such as ``1-32-4``."""
    if not text:
        raise ParseError("empty pattern")
    if text[0] == "-" or text[-1] == "-":
        raise ParseError(f"leading or trailing dash: {text!r}")
    letters: list[int] = []
    glued: list[bool] = []
    pending_dash = False
    for ch in text:
        if ch == "-":
            if pending_dash:
                raise ParseError(f"consecutive dashes: {text!r}")
            pending_dash = True
        elif ch in "123456789":
            if letters:
                glued.append(not pending_dash)
            letters.append(int(ch))
            pending_dash = False
        else:
            raise ParseError(f"unexpected character {ch!r} in {text!r}")
    if not _is_permutation(letters):
        raise ParseError(f"pattern letters are not a permutation of 1..{len(letters)}: {text!r}")
    return VincularPattern(tuple(letters), tuple(glued))


def render_pattern(pattern: VincularPattern) -> str:
    parts = [str(pattern.letters[0])]
    for letter, g in zip(pattern.letters[1:], pattern.glued):
        if not g:
            parts.append("-")
        parts.append(str(letter))
    return "".join(parts)


PATTERN_SET_A = PatternSet.from_strings("A", ["1-32-4", "1-42-3", "2-31-4", "2-41-3"])
PATTERN_SET_B = PatternSet.from_strings("B", ["1-3-2-4", "1-4-2-3", "2-3-1-4", "2-4-1-3"])

_BUILTINS = {"A": PATTERN_SET_A, "B": PATTERN_SET_B}


def builtin_set(name: str) -> PatternSet:
    try:
        return _BUILTINS[name.upper()]
    except KeyError:
        raise KeyError(f"unknown built-in pattern set {name!r}; choose from {sorted(_BUILTINS)}") from None


# ---------------------------------------------------------------------------
# Matching engine


@dataclass(frozen=True)
class _Plan:
    k: int
    block_start: tuple[bool, ...]
    # index of the earlier letter holding the nearest smaller / larger value, or -1
    below: tuple[int, ...]
    above: tuple[int, ...]


@lru_cache(maxsize=None)
def _plan(pattern: VincularPattern) -> _Plan:
    letters = pattern.letters
    k = len(letters)
    below, above = [], []
    for j in range(k):
        lo = hi = -1
        for i in range(j):
            if letters[i] < letters[j] and (lo < 0 or letters[i] > letters[lo]):
                lo = i
            if letters[i] > letters[j] and (hi < 0 or letters[i] < letters[hi]):
                hi = i
        below.append(lo)
        above.append(hi)
    block_start = (True,) + tuple(not g for g in pattern.glued)
    return _Plan(k, block_start, tuple(below), tuple(above))


def _search(values: Sequence[int], plan: _Plan) -> Iterator[tuple[int, ...]]:
    """Yield 0-based position tuples of occurrences in lexicographic order.

    Blocks are placed left to right; a glued letter is forced onto the next
    host position. Each new letter only has to sit between the host values of
    its nearest smaller and nearest larger predecessor letters, which is
    enough for order-isomorphism.
    """
    n, k = len(values), plan.k
    if k > n:
        return
    block_start, below, above = plan.block_start, plan.below, plan.above
    pos = [0] * k

    def place(j: int, start: int) -> Iterator[tuple[int, ...]]:
        if j == k:
            yield tuple(pos)
            return
        last = n - (k - j)
        if start > last:
            return
        candidates = range(start, last + 1) if block_start[j] else (start,)
        lo, hi = below[j], above[j]
        for p in candidates:
            v = values[p]
            if lo >= 0 and values[pos[lo]] > v:
                continue
            if hi >= 0 and values[pos[hi]] < v:
                continue
            pos[j] = p
            yield from place(j + 1, p + 1)

    yield from place(0, 0)


def find_occurrences(host: Permutation, pattern: VincularPattern) -> list[Occurrence]:
    """All occurrences of ``pattern`` in ``host`` as sorted 1-based position tuples."""
    plan = _plan(pattern)
    return [tuple(p + 1 for p in occ) for occ in _search(host.values, plan)]


def _contains_values(values: Sequence[int], pattern: VincularPattern) -> bool:
    return next(_search(values, _plan(pattern)), None) is not None


def contains(host: Permutation, pattern: VincularPattern) -> bool:
    return _contains_values(host.values, pattern)


def avoids_all(host: Permutation, patterns: PatternSet) -> bool:
    values = host.values
    return not any(_contains_values(values, p) for p in patterns)


# ---------------------------------------------------------------------------
# Index-arithmetic characterizations of the sets A and B


def _quadruple(host: Permutation, occ: Occurrence) -> tuple[int, int, int, int]:
    if len(occ) != 4:
        raise ValueError(f"expected four positions, got {occ!r}")
    a, b, c, d = occ
    if not a < b < c < d:
        raise ValueError(f"positions must be strictly increasing: {occ!r}")
    if a < 1 or d > len(host):
        raise ValueError(f"positions {occ!r} out of range for length {len(host)}")
    return a, b, c, d


def check_b_characterization(host: Permutation, occ: Occurrence) -> bool:
    """max(pi_a, pi_c) < min(pi_b, pi_d)."""
    a, b, c, d = _quadruple(host, occ)
    v = host.values
    return max(v[a - 1], v[c - 1]) < min(v[b - 1], v[d - 1])


def check_a_characterization(host: Permutation, occ: Occurrence) -> bool:
    """c = b + 1 and max(pi_a, pi_c) < min(pi_b, pi_d)."""
    a, b, c, d = _quadruple(host, occ)
    return c == b + 1 and check_b_characterization(host, occ)


def standardize(values: Sequence[int]) -> tuple[int, ...]:
    """Replace values by their ranks 1..k."""
    ranks = {v: r for r, v in enumerate(sorted(values), start=1)}
    return tuple(ranks[v] for v in values)
