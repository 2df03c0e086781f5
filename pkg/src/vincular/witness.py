"""Turn an occurrence of a B pattern into an occurrence of an A pattern.

Given positions a < b < c < d with max(pi_a, pi_c) < min(pi_b, pi_d), take
e as the last position before c whose value beats max(pi_a, pi_c). Then
(a, e, e+1, d) satisfies the A-characterization.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from vincular.core import (
    PATTERN_SET_A,
    Occurrence,
    Permutation,
    VincularPattern,
    check_a_characterization,
    check_b_characterization,
    standardize,
)


class NotABOccurrence(ValueError):
    pass


@dataclass(frozen=True)
class WitnessResult:
    e: int
    occurrence: Occurrence


def transform_occurrence(host: Permutation, occ: Occurrence) -> WitnessResult:
    if not check_b_characterization(host, occ):
        raise NotABOccurrence(f"{occ} is not an occurrence of a B pattern in {host}")
    a, _, c, d = occ
    v = host.values
    threshold = max(v[a - 1], v[c - 1])
    e = max(i for i in range(1, c) if v[i - 1] > threshold)
    return WitnessResult(e, (a, e, e + 1, d))


def first_b_occurrence(host: Permutation) -> Occurrence | None:
    """Lexicographically first quadruple meeting the B-characterization."""
    for occ in combinations(range(1, len(host) + 1), 4):
        if check_b_characterization(host, occ):
            return occ
    return None


def matching_a_pattern(host: Permutation, occ: Occurrence) -> VincularPattern | None:
    """The member of A that ``occ`` is an occurrence of, if any."""
    if not check_a_characterization(host, occ):
        return None
    shape = standardize([host.values[p - 1] for p in occ])
    for pattern in PATTERN_SET_A:
        if pattern.letters == shape:
            return pattern
    return None
