"""The recurrence a_n = 4 a_{n-1} - 2 a_{n-2} and OEIS b-file handling.

Paper indexing starts at a_1 = 1, a_2 = 2. OEIS A006012 lists the same
values from index 0.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Iterable, TextIO

OFFSETS = {"paper": 1, "oeis": 0}


@dataclass(frozen=True)
class SequenceTable:
    offset: int
    terms: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, index: int) -> int:
        i = index - self.offset
        if not 0 <= i < len(self.terms):
            raise IndexError(f"index {index} outside {self.offset}..{self.last}")
        return self.terms[i]

    @property
    def last(self) -> int:
        return self.offset + len(self.terms) - 1

    @property
    def indices(self) -> range:
        return range(self.offset, self.offset + len(self.terms))

    def items(self) -> Iterable[tuple[int, int]]:
        return zip(self.indices, self.terms)

    def to_bfile(self) -> str:
        return "".join(f"{i} {v}\n" for i, v in self.items())


def recurrence_terms(count: int, offset_mode: str = "paper") -> SequenceTable:
    if count < 1:
        raise ValueError("count must be positive")
    try:
        offset = OFFSETS[offset_mode]
    except KeyError:
        raise ValueError(f"offset_mode must be one of {sorted(OFFSETS)}") from None
    terms = [1, 2]
    while len(terms) < count:
        terms.append(4 * terms[-1] - 2 * terms[-2])
    return SequenceTable(offset, tuple(terms[:count]))


class BFileError(ValueError):
    pass


def parse_bfile(source: str | TextIO) -> SequenceTable:
    """Read ``index value`` lines; ``#`` comments and blank lines are skipped."""
    stream = io.StringIO(source) if isinstance(source, str) else source
    offset = None
    terms: list[int] = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(f"line {lineno}: expected 'index value', got {raw!r}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileError(f"line {lineno}: non-integer field in {raw!r}") from None
        if value < 0:
            raise BFileError(f"line {lineno}: negative value {value}")
        if offset is None:
            offset = index
        elif index != offset + len(terms):
            raise BFileError(f"line {lineno}: expected index {offset + len(terms)}, got {index}")
        terms.append(value)
    if offset is None:
        raise BFileError("b-file has no data lines")
    return SequenceTable(offset, tuple(terms))


@dataclass(frozen=True)
class ComparisonReport:
    start: int
    stop: int  # inclusive
    mismatches: tuple[int, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.mismatches

    @property
    def first_mismatch(self) -> int | None:
        return self.mismatches[0] if self.mismatches else None

    def __len__(self) -> int:
        return self.stop - self.start + 1


def compare_tables(computed: SequenceTable, reference: SequenceTable) -> ComparisonReport:
    start = max(computed.offset, reference.offset)
    stop = min(computed.last, reference.last)
    if start > stop:
        raise ValueError(
            f"index ranges {computed.offset}..{computed.last} and "
            f"{reference.offset}..{reference.last} do not overlap"
        )
    bad = tuple(i for i in range(start, stop + 1) if computed[i] != reference[i])
    return ComparisonReport(start, stop, bad)
