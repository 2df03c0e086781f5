import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import (
    SET_A,
    SET_B,
    all_patterns,
    all_perms,
    indexed_occurrences,
    naive_occurrences,
    pattern_text,
    subsets_by_shape,
)
from vincular.core import (
    PATTERN_SET_A,
    PATTERN_SET_B,
    ParseError,
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
    standardize,
)

P = parse_permutation


# --- parsing ---------------------------------------------------------------

@pytest.mark.parametrize(
    "text, values",
    [
        ("31542", (3, 1, 5, 4, 2)),
        ("1", (1,)),
        ("10,2,1,3,4,5,6,7,8,9", (10, 2, 1, 3, 4, 5, 6, 7, 8, 9)),
        ("", ()),
        ("2,1", (2, 1)),
    ],
)
def test_parse_permutation(text, values):
    assert parse_permutation(text).values == values


@pytest.mark.parametrize("text", ["112", "1,,2", "1,2,", "3,1", "0", "12a", "1 2", "-1,2", "10"])
def test_parse_permutation_rejects(text):
    with pytest.raises(ParseError):
        parse_permutation(text)


def test_render_permutation_switches_grammar_above_nine():
    assert render_permutation(P("21")) == "21"
    assert render_permutation(P("10,2,1,3,4,5,6,7,8,9")) == "10,2,1,3,4,5,6,7,8,9"
    assert render_permutation(P("")) == ""
    # comma input of a short permutation renders compact
    assert render_permutation(P("2,3,1")) == "231"


@pytest.mark.parametrize(
    "text, letters, glued",
    [
        ("1-32-4", (1, 3, 2, 4), (False, True, False)),
        ("1-3-2-4", (1, 3, 2, 4), (False, False, False)),
        ("12", (1, 2), (True,)),
        ("1", (1,), ()),
    ],
)
def test_parse_pattern(text, letters, glued):
    pat = parse_pattern(text)
    assert pat.letters == letters
    assert pat.glued == glued
    assert render_pattern(pat) == text


@pytest.mark.parametrize("text", ["", "-12", "12-", "1--2", "13", "1-1", "1 2", "1,2", "0"])
def test_parse_pattern_rejects(text):
    with pytest.raises(ParseError):
        parse_pattern(text)


@pytest.mark.parametrize("letters, glued", all_patterns(4))
def test_pattern_round_trip_all_layouts(letters, glued):
    text = pattern_text(letters, glued)
    pat = parse_pattern(text)
    assert (pat.letters, pat.glued) == (letters, glued)
    assert render_pattern(pat) == text


@given(st.integers(0, 14).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_permutation_round_trip(values):
    perm = Permutation(tuple(values))
    assert parse_permutation(render_permutation(perm)) == perm
    assert parse_permutation(",".join(map(str, values))) == perm


def test_types_validate():
    with pytest.raises(ValueError):
        Permutation((1, 3))
    with pytest.raises(ValueError):
        VincularPattern((1, 2), ())
    with pytest.raises(ValueError):
        VincularPattern((2, 2), (True,))
    with pytest.raises(ValueError):
        PatternSet("empty", ())


def test_builtin_sets():
    assert [render_pattern(p) for p in PATTERN_SET_A] == ["1-32-4", "1-42-3", "2-31-4", "2-41-3"]
    assert [render_pattern(p) for p in PATTERN_SET_B] == ["1-3-2-4", "1-4-2-3", "2-3-1-4", "2-4-1-3"]
    assert builtin_set("a") is PATTERN_SET_A
    with pytest.raises(KeyError):
        builtin_set("C")


def test_blocks():
    assert parse_pattern("1-32-4").blocks() == [(1,), (3, 2), (4,)]
    assert parse_pattern("3142").blocks() == [(3, 1, 4, 2)]


def test_permutation_accessors():
    p = P("31542")
    assert p.value_at(1) == 3 and p.value_at(5) == 2
    assert p.position_of(5) == 3
    with pytest.raises(IndexError):
        p.value_at(0)


# --- matching --------------------------------------------------------------

def test_first_worked_example():
    occs = find_occurrences(P("251346"), parse_pattern("3-1-24"))
    assert (2, 3, 5, 6) in occs
    assert contains(P("251346"), parse_pattern("3-1-24"))


def test_second_worked_example():
    assert find_occurrences(P("251346"), parse_pattern("32-1-4")) == []
    assert not contains(P("251346"), parse_pattern("32-1-4"))


def test_identity_host():
    assert find_occurrences(P("1234"), parse_pattern("1-2-3-4")) == [(1, 2, 3, 4)]


def test_host_shorter_than_pattern():
    for host in all_perms(3):
        assert not contains(Permutation(host), parse_pattern("1-3-2-4"))
        assert find_occurrences(Permutation(host), parse_pattern("1234")) == []


def test_empty_host():
    assert find_occurrences(P(""), parse_pattern("1")) == []
    assert avoids_all(P(""), PATTERN_SET_A)


@pytest.mark.parametrize("host, pset, expected", [
    ("31542", PATTERN_SET_B, True),
    ("1324", PATTERN_SET_B, False),
    ("21", PATTERN_SET_A, True),
])
def test_avoids_all_examples(host, pset, expected):
    assert avoids_all(P(host), pset) is expected


PATTERNS_4 = all_patterns(4)


@pytest.mark.parametrize("n", range(0, 7))
def test_matcher_matches_naive_exhaustive(n):
    for host in all_perms(n):
        perm = Permutation(host)
        for letters, glued in PATTERNS_4:
            got = find_occurrences(perm, VincularPattern(letters, glued))
            assert got == naive_occurrences(host, letters, glued), (host, letters, glued)


@pytest.mark.slow
def test_matcher_matches_subset_index_length_seven():
    for host in all_perms(7):
        perm = Permutation(host)
        index = {k: subsets_by_shape(host, k) for k in range(1, 5)}
        for letters, glued in PATTERNS_4:
            pat = VincularPattern(letters, glued)
            got = find_occurrences(perm, pat)
            assert got == indexed_occurrences(index[len(letters)], letters, glued), (host, letters, glued)
            assert contains(perm, pat) == bool(got)


@pytest.mark.parametrize("n", range(0, 7))
def test_occurrences_satisfy_definition(n):
    for host in all_perms(n):
        perm = Permutation(host)
        for letters, glued in PATTERNS_4:
            pat = VincularPattern(letters, glued)
            occs = find_occurrences(perm, pat)
            assert occs == sorted(occs)
            assert contains(perm, pat) == bool(occs)
            for occ in occs:
                assert len(occ) == len(letters)
                assert all(x < y for x, y in zip(occ, occ[1:]))
                assert all(occ[i + 1] == occ[i] + 1 for i, g in enumerate(glued) if g)
                assert standardize([host[p - 1] for p in occ]) == letters


# --- characterizations -----------------------------------------------------

def test_check_a_characterization_examples():
    # values 5,3,4,6: c = b+1 but max{5,4} = 5 is not below min{3,6} = 3
    assert check_a_characterization(P("251346"), (2, 4, 5, 6)) is False
    assert not any((2, 4, 5, 6) in find_occurrences(P("251346"), p) for p in PATTERN_SET_A)
    assert check_a_characterization(P("1324"), (1, 2, 3, 4)) is True
    assert check_a_characterization(P("1342"), (1, 2, 3, 4)) is False


@pytest.mark.parametrize("occ", [(1, 2, 3), (2, 1, 3, 4), (1, 2, 3, 5), (0, 1, 2, 3)])
def test_characterization_rejects_bad_positions(occ):
    with pytest.raises(ValueError):
        check_a_characterization(P("1324"), occ)


@pytest.mark.parametrize("n", range(4, 8))
def test_characterizations_agree_with_matcher(n):
    from itertools import combinations

    for host in all_perms(n):
        perm = Permutation(host)
        in_a = {o for l, g in SET_A for o in naive_occurrences(host, l, g)}
        in_b = {o for l, g in SET_B for o in naive_occurrences(host, l, g)}
        assert in_a == {o for p in PATTERN_SET_A for o in find_occurrences(perm, p)}
        for occ in combinations(range(1, n + 1), 4):
            assert check_a_characterization(perm, occ) == (occ in in_a)
            assert check_b_characterization(perm, occ) == (occ in in_b)
