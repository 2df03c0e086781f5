"""Vincular (dashed) permutation patterns and the A006012 avoidance class."""

from vincular.core import (
    PATTERN_SET_A,
    PATTERN_SET_B,
    Occurrence,
    PatternSet,
    Permutation,
    VincularPattern,
    avoids_all,
    builtin_set,
    check_a_characterization,
    check_b_characterization,
    contains,
    find_occurrences,
    parse_pattern,
    parse_permutation,
    render_pattern,
    render_permutation,
)
from vincular.enumerate import AvoiderLevel, count_avoiders, enumerate_avoiders
from vincular.sequence import (
    ComparisonReport,
    SequenceTable,
    compare_tables,
    parse_bfile,
    recurrence_terms,
)

__all__ = [
    "PATTERN_SET_A",
    "PATTERN_SET_B",
    "AvoiderLevel",
    "ComparisonReport",
    "Occurrence",
    "PatternSet",
    "Permutation",
    "SequenceTable",
    "VincularPattern",
    "avoids_all",
    "builtin_set",
    "check_a_characterization",
    "check_b_characterization",
    "compare_tables",
    "contains",
    "count_avoiders",
    "enumerate_avoiders",
    "find_occurrences",
    "parse_bfile",
    "parse_pattern",
    "parse_permutation",
    "recurrence_terms",
    "render_pattern",
    "render_permutation",
]
