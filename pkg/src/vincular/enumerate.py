"""Brute-force enumeration of Av_n(S): every length-n permutation is tested.

Work is split by first value. Each slice is scanned in lexicographic order,
so concatenating slices in first-value order keeps the output sorted no
matter how many workers ran.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from vincular.core import PatternSet, Permutation, _contains_values

DEFAULT_CUTOFF = 10


class CutoffError(ValueError):
    """Requested length exceeds the factorial-blowup guard."""


@dataclass(frozen=True)
class AvoiderLevel:
    n: int
    set_name: str
    members: tuple[Permutation, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.members)

    def __contains__(self, perm: object) -> bool:
        return perm in self._lookup

    @property
    def _lookup(self) -> frozenset:
        cached = self.__dict__.get("_lookup_cache")
        if cached is None:
            cached = frozenset(self.members)
            object.__setattr__(self, "_lookup_cache", cached)
        return cached


def _slice(n: int, first: int) -> Iterator[tuple[int, ...]]:
    """Permutations of 1..n starting with ``first``, in lexicographic order."""
    rest = [v for v in range(1, n + 1) if v != first]
    head = (first,)
    for tail in permutations(rest):
        yield head + tail


def _avoids(values: tuple[int, ...], patterns: PatternSet) -> bool:
    for p in patterns.patterns:
        if _contains_values(values, p):
            return False
    return True


def _scan_slice(args: tuple[int, int, PatternSet, bool]):
    n, first, patterns, keep = args
    if keep:
        return [v for v in _slice(n, first) if _avoids(v, patterns)]
    return sum(1 for v in _slice(n, first) if _avoids(v, patterns))


def _check(n: int, cutoff: int | None) -> None:
    if n < 0:
        raise ValueError(f"length must be nonnegative, got {n}")
    limit = DEFAULT_CUTOFF if cutoff is None else cutoff
    if n > limit:
        raise CutoffError(f"n={n} exceeds the enumeration cutoff {limit}; raise the cutoff to force it")


def _run(n: int, patterns: PatternSet, keep: bool, workers: int):
    jobs = [(n, first, patterns, keep) for first in range(1, n + 1)]
    if workers <= 1 or n <= 6:
        return [_scan_slice(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves job order, which is what keeps the merge sorted
        return list(pool.map(_scan_slice, jobs))


def enumerate_avoiders(
    n: int, patterns: PatternSet, *, cutoff: int | None = None, workers: int = 1
) -> AvoiderLevel:
    """Every length-n permutation avoiding all of ``patterns``, sorted."""
    _check(n, cutoff)
    if n == 0:
        return AvoiderLevel(0, patterns.name, (Permutation(()),))
    chunks = _run(n, patterns, True, workers)
    members = tuple(Permutation._trusted(v) for chunk in chunks for v in chunk)
    return AvoiderLevel(n, patterns.name, members)


def count_avoiders(n: int, patterns: PatternSet, *, cutoff: int | None = None, workers: int = 1) -> int:
    """|Av_n(patterns)| without keeping the members around."""
    _check(n, cutoff)
    if n == 0:
        return 1
    return sum(_run(n, patterns, False, workers))
