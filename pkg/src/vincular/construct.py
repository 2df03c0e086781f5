"""Building Av_n(B) from Av_{n-1}(B) with four insertion maps.

Every map shifts all values up by one and then places a new 1:

* ``f_before``  puts 1 immediately before the new 2
* ``f_after``   puts 1 immediately after the new 2
* ``f_end_one`` appends 1
* ``f_end_two`` turns the new 2 into 1 and appends 2

The maps accept any permutation, not just avoiders, so membership of the
images can be tested as a genuine property.
"""

from __future__ import annotations

import enum
from collections import Counter
from typing import Iterator

import numpy as np

from vincular.core import Permutation
from vincular.enumerate import AvoiderLevel


class MapTag(enum.Enum):
    BEFORE = "f_be"
    AFTER = "f_af"
    END_ONE = "f_en"
    END_TWO = "f_bu"


def _shift(p: Permutation, delta: int) -> list[int]:
    return [v + delta for v in p.values]


def _require_nonempty(p: Permutation, name: str) -> None:
    if not p.values:
        raise ValueError(f"{name} needs a nonempty permutation")


def f_before(p: Permutation) -> Permutation:
    _require_nonempty(p, "f_before")
    q = _shift(p, 1)
    q.insert(q.index(2), 1)
    return Permutation._trusted(tuple(q))


def f_after(p: Permutation) -> Permutation:
    _require_nonempty(p, "f_after")
    q = _shift(p, 1)
    q.insert(q.index(2) + 1, 1)
    return Permutation._trusted(tuple(q))


def f_end_one(p: Permutation) -> Permutation:
    return Permutation._trusted(tuple(_shift(p, 1)) + (1,))


def f_end_two(p: Permutation) -> Permutation:
    _require_nonempty(p, "f_end_two")
    q = _shift(p, 1)
    q[q.index(2)] = 1
    q.append(2)
    return Permutation._trusted(tuple(q))


MAPS = {
    MapTag.BEFORE: f_before,
    MapTag.AFTER: f_after,
    MapTag.END_ONE: f_end_one,
    MapTag.END_TWO: f_end_two,
}


def classify(p: Permutation) -> frozenset[MapTag]:
    """Tags of every map whose image shape ``p`` has."""
    v = p.values
    if len(v) < 2:
        raise ValueError("classify needs length >= 2")
    i1, i2 = v.index(1), v.index(2)
    tags = set()
    if i2 == i1 + 1:
        tags.add(MapTag.BEFORE)
    if i1 == i2 + 1:
        tags.add(MapTag.AFTER)
    if v[-1] == 1:
        tags.add(MapTag.END_ONE)
    if v[-1] == 2:
        tags.add(MapTag.END_TWO)
    return frozenset(tags)


def strip_one(p: Permutation) -> Permutation:
    """Remove the 1 and decrement what is left.

    Left inverse of ``f_before``, ``f_after`` and ``f_end_one``.
    """
    _require_nonempty(p, "strip_one")
    return Permutation._trusted(tuple(v - 1 for v in p.values if v != 1))


def strip_one_swap_two(p: Permutation) -> Permutation:
    """Left inverse of ``f_end_two``: drop the trailing 2, move it into the 1's slot, decrement."""
    v = p.values
    if len(v) < 2 or v[-1] != 2:
        raise ValueError(f"strip_one_swap_two needs a permutation ending in 2, got {p}")
    return Permutation._trusted(tuple(1 if x == 1 else x - 1 for x in v[:-1]))


def g_reduce(p: Permutation) -> Permutation:
    """Remove the values 1 and 2 and lower the rest by 2."""
    if len(p) < 2:
        raise ValueError("g_reduce needs length >= 2")
    return Permutation._trusted(tuple(v - 2 for v in p.values if v > 2))


def inverse_for(tag: MapTag):
    return strip_one_swap_two if tag is MapTag.END_TWO else strip_one


def images(prev: AvoiderLevel) -> dict[MapTag, list[Permutation]]:
    """The four image lists, duplicates across maps kept."""
    return {tag: [fn(p) for p in prev.members] for tag, fn in MAPS.items()}


def generate_level(prev: AvoiderLevel) -> AvoiderLevel:
    """Av_n(B) as the sorted, deduplicated union of the images of Av_{n-1}(B)."""
    if prev.n < 1:
        raise ValueError("generation starts from Av_1 = {1}")
    union = set()
    for image in images(prev).values():
        union.update(image)
    return AvoiderLevel(prev.n + 1, prev.set_name, tuple(sorted(union)))


def first_level(set_name: str = "B") -> AvoiderLevel:
    return AvoiderLevel(1, set_name, (Permutation((1,)),))


def iterate_levels(max_n: int, set_name: str = "B") -> Iterator[AvoiderLevel]:
    """Yield Av_1, Av_2, ..., Av_max_n by repeated generation."""
    level = first_level(set_name)
    while level.n <= max_n:
        yield level
        if level.n == max_n:
            return
        level = generate_level(level)


def double_counted(level: AvoiderLevel) -> list[Permutation]:
    """Members whose last two values are 1 and 2 in some order."""
    if level.n < 2:
        raise ValueError("double_counted needs n >= 2")
    return [p for p in level.members if set(p.values[-2:]) == {1, 2}]


def multiplicity(level: AvoiderLevel) -> Counter:
    """How often each member of ``level`` is hit by g_reduce on the double-counted part."""
    return Counter(g_reduce(p) for p in double_counted(level))


# ---------------------------------------------------------------------------
# Array fast path: a level is an (m, n) uint8 array, one permutation per row.
# Rows pack into uint64 at 4 bits per entry, so n is limited to 16.

PACKED_MAX_N = 16


def _insert_column(q: np.ndarray, at: np.ndarray, value: int) -> np.ndarray:
    m, n = q.shape
    cols = np.arange(n + 1)[None, :]
    at = at[:, None]
    src = np.where(cols > at, cols - 1, cols).clip(max=n - 1)
    out = np.take_along_axis(q, src, axis=1)
    out[cols == at] = value
    return out.astype(np.uint8)


def image_arrays(prev: np.ndarray) -> dict[MapTag, np.ndarray]:
    """Row-wise images of the four maps."""
    m, n = prev.shape
    if n < 1:
        raise ValueError("array generation starts from length 1")
    q = prev.astype(np.uint8) + 1
    where_two = np.argmax(q == 2, axis=1)
    end_two = q.copy()
    end_two[end_two == 2] = 1
    return {
        MapTag.BEFORE: _insert_column(q, where_two, 1),
        MapTag.AFTER: _insert_column(q, where_two + 1, 1),
        MapTag.END_ONE: np.hstack([q, np.ones((m, 1), np.uint8)]),
        MapTag.END_TWO: np.hstack([end_two, np.full((m, 1), 2, np.uint8)]),
    }


def pack_rows(rows: np.ndarray) -> np.ndarray:
    m, n = rows.shape
    if n > PACKED_MAX_N:
        raise ValueError(f"packing supports n <= {PACKED_MAX_N}")
    out = np.zeros(m, np.uint64)
    for j in range(n):
        out = (out << np.uint64(4)) | (rows[:, j].astype(np.uint64) - np.uint64(1))
    return out


def unpack_rows(packed: np.ndarray, n: int) -> np.ndarray:
    out = np.empty((len(packed), n), np.uint8)
    for j in range(n - 1, -1, -1):
        out[:, j] = (packed & np.uint64(15)).astype(np.uint8) + 1
        packed = packed >> np.uint64(4)
    return out


def generate_level_array(prev: np.ndarray) -> np.ndarray:
    """Array counterpart of generate_level; rows come back sorted and unique."""
    m, n = prev.shape
    if n + 1 > PACKED_MAX_N:
        raise ValueError(f"array generation supports n <= {PACKED_MAX_N}")
    packed = np.concatenate([pack_rows(img) for img in image_arrays(prev).values()])
    return unpack_rows(np.unique(packed), n + 1)


def iterate_level_arrays(max_n: int) -> Iterator[np.ndarray]:
    """Av_1(B), ..., Av_max_n(B) as arrays, with no brute force involved."""
    level = np.ones((1, 1), np.uint8)
    while True:
        yield level
        if level.shape[1] >= max_n:
            return
        level = generate_level_array(level)


def level_from_array(rows: np.ndarray, set_name: str = "B") -> AvoiderLevel:
    members = tuple(Permutation._trusted(tuple(int(v) for v in row)) for row in rows)
    return AvoiderLevel(rows.shape[1], set_name, members)


def count_double_counted_rows(rows: np.ndarray) -> int:
    """Rows whose last two entries are 1 and 2 in either order."""
    if rows.shape[1] < 2:
        raise ValueError("double counting needs n >= 2")
    tail = rows[:, -2:].astype(np.int64)
    return int(np.count_nonzero(tail.sum(axis=1) == 3))
