"""Command-line front end.

Exit status: 0 success, 1 verification mismatch, 2 usage or parse error.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from importlib import resources
from itertools import combinations, permutations
from typing import TextIO

from vincular import construct
from vincular.core import (
    PATTERN_SET_A,
    PATTERN_SET_B,
    PatternSet,
    Permutation,
    avoids_all,
    builtin_set,
    check_a_characterization,
    check_b_characterization,
    find_occurrences,
    parse_permutation,
    render_pattern,
    render_permutation,
)
from vincular.enumerate import DEFAULT_CUTOFF, count_avoiders, enumerate_avoiders
from vincular.sequence import compare_tables, parse_bfile, recurrence_terms
from vincular.witness import first_b_occurrence, matching_a_pattern, transform_occurrence

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

CUTOFF_ENV = "VINCULAR_CUTOFF"
WITNESS_AUDIT_MAX_N = 7


class UsageError(Exception):
    pass


def comma(perm: Permutation) -> str:
    return ",".join(str(v) for v in perm.values)


def bundled_bfile() -> str:
    return resources.files("vincular").joinpath("data/b006012.txt").read_text()


def pattern_set(selector: str) -> PatternSet:
    """Built-in name (A, B) or comma-separated dashed patterns."""
    if selector.upper() in ("A", "B"):
        return builtin_set(selector)
    return PatternSet.from_strings("custom", [s.strip() for s in selector.split(",")])


@dataclass
class Emitter:
    out: TextIO
    fmt: str

    def record(self, obj: dict, text: str) -> None:
        if self.fmt == "json":
            self.out.write(json.dumps(obj) + "\n")
        else:
            self.out.write(text + "\n")


def _cutoff(args) -> int:
    if args.cutoff is not None:
        return args.cutoff
    env = os.environ.get(CUTOFF_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{CUTOFF_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_CUTOFF


# ---------------------------------------------------------------------------
# subcommands


def cmd_avoids(args, em: Emitter) -> int:
    perm = parse_permutation(args.perm)
    patterns = pattern_set(args.set)
    ok = avoids_all(perm, patterns)
    em.record(
        {"perm": render_permutation(perm), "set": patterns.name, "avoids": ok},
        "avoids" if ok else "contains",
    )
    return EXIT_OK


def cmd_occurrences(args, em: Emitter) -> int:
    perm = parse_permutation(args.perm)
    patterns = pattern_set(args.set)
    for pattern in patterns:
        name = render_pattern(pattern)
        for occ in find_occurrences(perm, pattern):
            values = [perm.values[p - 1] for p in occ]
            em.record(
                {"pattern": name, "positions": list(occ), "values": values},
                f"{name}\t{','.join(map(str, occ))}\t{','.join(map(str, values))}",
            )
    return EXIT_OK


def cmd_count(args, em: Emitter) -> int:
    patterns = pattern_set(args.set)
    total = count_avoiders(args.n, patterns, cutoff=_cutoff(args), workers=args.workers)
    em.record({"set": patterns.name, "n": args.n, "count": total}, str(total))
    return EXIT_OK


def _emit_level(level, em: Emitter) -> None:
    for perm in level:
        em.record({"n": level.n, "set": level.set_name, "perm": list(perm.values)}, comma(perm))


def cmd_enumerate(args, em: Emitter) -> int:
    patterns = pattern_set(args.set)
    _emit_level(enumerate_avoiders(args.n, patterns, cutoff=_cutoff(args), workers=args.workers), em)
    return EXIT_OK


def cmd_generate(args, em: Emitter) -> int:
    if args.set.upper() != "B":
        raise UsageError("constructive generation is only defined for the set B")
    if args.n < 1:
        raise UsageError("generate needs n >= 1")
    if args.n <= construct.PACKED_MAX_N:
        *_, rows = construct.iterate_level_arrays(args.n)
        level = construct.level_from_array(rows)
    else:
        *_, level = construct.iterate_levels(args.n)
    _emit_level(level, em)
    return EXIT_OK


def cmd_witness(args, em: Emitter) -> int:
    perm = parse_permutation(args.perm)
    occ = first_b_occurrence(perm)
    if occ is None:
        em.record({"perm": render_permutation(perm), "avoids_b": True}, "avoids B")
        return EXIT_OK
    result = transform_occurrence(perm, occ)
    pattern = matching_a_pattern(perm, result.occurrence)
    if pattern is None:
        em.record({"perm": render_permutation(perm), "error": "witness failed"}, "witness failed")
        return EXIT_MISMATCH
    em.record(
        {
            "perm": render_permutation(perm),
            "avoids_b": False,
            "b_occurrence": list(occ),
            "e": result.e,
            "a_occurrence": list(result.occurrence),
            "a_pattern": render_pattern(pattern),
        },
        f"B-occurrence {','.join(map(str, occ))}\n"
        f"e = {result.e}\n"
        f"A-occurrence {','.join(map(str, result.occurrence))} of {render_pattern(pattern)}",
    )
    return EXIT_OK


def cmd_sequence(args, em: Emitter) -> int:
    if args.terms < 1:
        raise UsageError("--terms must be positive")
    table = recurrence_terms(args.terms, args.offset)
    for i, v in table.items():
        em.record({"index": i, "value": v}, f"{i} {v}")
    return EXIT_OK


def cmd_bfile_check(args, em: Emitter) -> int:
    if args.file:
        with open(args.file) as fh:
            reference = parse_bfile(fh)
    else:
        reference = parse_bfile(bundled_bfile())
    computed = recurrence_terms(args.terms, args.offset)
    report = compare_tables(computed, reference)
    em.record(
        {
            "start": report.start,
            "stop": report.stop,
            "ok": report.ok,
            "mismatches": list(report.mismatches),
        },
        f"indices {report.start}..{report.stop}: "
        + ("all match" if report.ok else f"mismatch at {', '.join(map(str, report.mismatches))}"),
    )
    return EXIT_OK if report.ok else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# audits


def witness_audit(n: int) -> bool:
    """Every B-occurrence in every length-n permutation yields a valid A-witness."""
    for values in permutations(range(1, n + 1)):
        host = Permutation._trusted(values)
        for occ in combinations(range(1, n + 1), 4):
            if not check_b_characterization(host, occ):
                continue
            a, b, c, d = occ
            res = transform_occurrence(host, occ)
            e = res.e
            if not (a < b <= e < e + 1 <= c < d and check_a_characterization(host, res.occurrence)):
                return False
    return True


def verify_rows(max_n: int, cutoff: int = DEFAULT_CUTOFF, workers: int = 1) -> list[dict]:
    """One row per n = 1..max_n checking both propositions against brute force."""
    seq = recurrence_terms(max_n, "paper")
    levels = {lvl.n: lvl for lvl in construct.iterate_levels(max_n)}
    rows = []
    for n in range(1, max_n + 1):
        av_a = enumerate_avoiders(n, PATTERN_SET_A, cutoff=cutoff, workers=workers)
        av_b = enumerate_avoiders(n, PATTERN_SET_B, cutoff=cutoff, workers=workers)
        row = {
            "n": n,
            "a_n": seq[n],
            "av_a": len(av_a),
            "av_b": len(av_b),
            "counts_match": len(av_a) == len(av_b) == seq[n],
            "sets_equal": av_a.members == av_b.members,
            "generated_equal": levels[n].members == av_b.members,
            "double_count": None,
            "g_two_to_one": None,
            "witness": witness_audit(n) if n <= WITNESS_AUDIT_MAX_N else None,
        }
        if n >= 3:
            dc = construct.double_counted(levels[n])
            row["double_count"] = len(dc) == 2 * seq[n - 2] and 4 * seq[n - 1] - len(dc) == seq[n]
            hits = construct.multiplicity(levels[n])
            row["g_two_to_one"] = set(hits) == set(levels[n - 2].members) and all(
                c == 2 for c in hits.values()
            )
        rows.append(row)
    return rows


def row_passed(row: dict) -> bool:
    return all(v is not False for v in row.values())


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "ok" if v else "FAIL"
    return str(v)


def cmd_verify(args, em: Emitter) -> int:
    if args.max_n < 1:
        raise UsageError("--max-n must be at least 1")
    cutoff = _cutoff(args)
    if args.max_n > cutoff:
        raise UsageError(f"--max-n {args.max_n} exceeds the enumeration cutoff {cutoff}")
    rows = verify_rows(args.max_n, cutoff=cutoff, workers=args.workers)
    columns = list(rows[0])
    if em.fmt == "text":
        em.out.write("\t".join(columns + ["result"]) + "\n")
    for row in rows:
        passed = row_passed(row)
        em.record(
            {**row, "passed": passed},
            "\t".join(_cell(row[c]) for c in columns) + ("\tPASS" if passed else "\tFAIL"),
        )
    return EXIT_OK if all(row_passed(r) for r in rows) else EXIT_MISMATCH


def cmd_verify_recurrence(args, em: Emitter) -> int:
    """Level sizes by generation only, with the double-count audit."""
    if not 1 <= args.n <= construct.PACKED_MAX_N:
        raise UsageError(f"--n must be between 1 and {construct.PACKED_MAX_N}")
    seq = recurrence_terms(args.n, "paper")
    ok = True
    sizes: dict[int, int] = {}
    for rows in construct.iterate_level_arrays(args.n):
        n = rows.shape[1]
        sizes[n] = len(rows)
        row = {"n": n, "size": sizes[n], "a_n": seq[n], "double_counted": None, "passed": sizes[n] == seq[n]}
        if n >= 3:
            dc = construct.count_double_counted_rows(rows)
            row["double_counted"] = dc
            row["passed"] = row["passed"] and dc == 2 * sizes[n - 2] and 4 * sizes[n - 1] - dc == sizes[n]
        ok = ok and row["passed"]
        em.record(
            row,
            f"n={n}\tsize={row['size']}\ta_n={row['a_n']}\tdouble_counted={_cell(row['double_counted'])}\t"
            + ("PASS" if row["passed"] else "FAIL"),
        )
    return EXIT_OK if ok else EXIT_MISMATCH


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--workers", type=int, default=1, help="processes for brute-force enumeration")
    common.add_argument(
        "--cutoff", type=int, default=None, help=f"largest n to brute force (default {DEFAULT_CUTOFF}, env {CUTOFF_ENV})"
    )

    parser = argparse.ArgumentParser(prog="vincular", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("avoids", parents=[common], help="test one permutation against a pattern set")
    p.add_argument("--perm", required=True)
    p.add_argument("--set", default="B", help="A, B, or comma-separated dashed patterns")
    p.set_defaults(func=cmd_avoids)

    p = sub.add_parser("occurrences", parents=[common], help="list every occurrence")
    p.add_argument("--perm", required=True)
    p.add_argument("--set", "--pattern", dest="set", required=True)
    p.set_defaults(func=cmd_occurrences)

    for name, func, helptext in (
        ("count", cmd_count, "count Av_n(S) by brute force"),
        ("enumerate", cmd_enumerate, "list Av_n(S) by brute force"),
        ("generate", cmd_generate, "build Av_n(B) with the insertion maps"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--set", default="B")
        p.add_argument("--n", type=int, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("witness", parents=[common], help="turn a B-occurrence into an A-occurrence")
    p.add_argument("--perm", required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("sequence", parents=[common], help="terms of a_n = 4a_{n-1} - 2a_{n-2}")
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--offset", choices=("paper", "oeis"), default="paper")
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("bfile-check", parents=[common], help="compare the recurrence with an OEIS b-file")
    p.add_argument("--file", help="b-file path (default: bundled A006012 fixture)")
    p.add_argument("--terms", type=int, default=20)
    p.add_argument("--offset", choices=("paper", "oeis"), default="oeis")
    p.set_defaults(func=cmd_bfile_check)

    p = sub.add_parser("verify", parents=[common], help="full audit table up to max-n")
    p.add_argument("--max-n", type=int, default=8)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-recurrence", parents=[common], help="generation-only counts and double-count audit")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_verify_recurrence)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, Emitter(out, args.format))
    except (UsageError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"vincular: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
