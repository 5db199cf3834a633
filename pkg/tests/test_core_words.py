import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dejean.core_words import (
    RepetitionReport,
    ReportKind,
    Word,
    find_forbidden_factor,
    format_binary,
    format_ratio,
    format_word,
    has_suffix_violation,
    is_free,
    letter_counts,
    letters_of,
    max_exponent,
    minimal_period,
    parse_binary,
    parse_ratio,
    parse_word,
    periods,
    repetition_threshold,
    word,
)

# ---------------------------------------------------------------- oracles


def oracle_periods(s):
    k = len(s)
    return [p for p in range(1, k + 1) if all(s[i + p] == s[i] for i in range(k - p))]


def oracle_find(s, num, den, strict):
    """Enumerate every factor and every period; compare by cross-multiplication.

    Returns (start, length, min_period) of the leftmost-then-shortest factor
    having some exponent >= num/den (> if strict), else None.
    """
    k = len(s)
    for start in range(k):
        for length in range(1, k - start + 1):
            f = s[start : start + length]
            ps = oracle_periods(f)
            hit = any(
                (length * den > num * p) if strict else (length * den >= num * p)
                for p in ps
            )
            if hit:
                return (start + 1, length, ps[0])
    return None


def all_words(alphabet, max_len):
    for k in range(max_len + 1):
        yield from itertools.product(range(1, alphabet + 1), repeat=k)


# ---------------------------------------------------------------- frozen values


def test_periods_examples():
    assert periods("1213121") == [4, 6, 7]
    assert periods("1111") == [1, 2, 3, 4]
    assert periods("") == []
    assert periods("1") == [1]
    assert periods("1212") == [2, 4]


def test_max_exponent_examples():
    assert max_exponent("1213121") == Fraction(7, 4)
    assert max_exponent("11") == Fraction(2)
    assert max_exponent("121") == Fraction(3, 2)
    assert max_exponent("123") == Fraction(1)
    with pytest.raises(ValueError):
        max_exponent("")


def test_find_forbidden_factor_examples():
    rep = find_forbidden_factor("1212", Fraction(7, 4), strict=True)
    assert rep == RepetitionReport(1, 4, 2, Fraction(2), ReportKind.PLAIN)
    assert find_forbidden_factor("121", Fraction(7, 4), strict=True) is None
    # exponent exactly 2 is allowed under a strict bound of 2
    assert find_forbidden_factor("11", Fraction(2), strict=True) is None
    assert find_forbidden_factor("11", Fraction(2), strict=False) is not None


def test_repetition_threshold_table():
    assert repetition_threshold(2) == Fraction(2)
    assert repetition_threshold(3) == Fraction(7, 4)
    assert repetition_threshold(4) == Fraction(7, 5)
    assert repetition_threshold(5) == Fraction(5, 4)
    assert repetition_threshold(27) == Fraction(27, 26)
    with pytest.raises(ValueError):
        repetition_threshold(1)


def test_letter_counts():
    w = parse_word("1213121", 3)
    assert letter_counts(w) == {1: 4, 2: 2, 3: 1}
    assert letter_counts("11", alphabet_size=4) == {1: 2, 2: 0, 3: 0, 4: 0}


def test_word_validation_and_formats():
    with pytest.raises(ValueError):
        word([0], 3)
    with pytest.raises(ValueError):
        word([4], 3)
    w = parse_word("1213", 3)
    assert format_word(w) == "1213"
    big = word([1, 12, 27], 27)
    assert format_word(big) == "1,12,27"
    assert parse_word("1,12,27", 27) == big
    assert parse_word("", 3).letters == ()
    b = parse_binary("0110")
    assert b.letters == (1, 2, 2, 1)
    assert format_binary(b) == "0110"
    with pytest.raises(ValueError):
        parse_binary("012")


def test_ratio_roundtrip():
    assert parse_ratio("7/4") == Fraction(7, 4)
    assert format_ratio(Fraction(2)) == "2/1"
    assert format_ratio(Fraction(30, 29)) == "30/29"


def test_report_invariant_enforced():
    with pytest.raises(ValueError):
        RepetitionReport(1, 4, 2, Fraction(3), ReportKind.PLAIN)


# ---------------------------------------------------------------- properties

BOUNDS = [
    (Fraction(7, 4), True),
    (Fraction(7, 4), False),
    (Fraction(2), True),
    (Fraction(3, 2), False),
    (Fraction(27, 26), True),
]


def check_against_oracle(s, r, strict):
    rep = find_forbidden_factor(s, r, strict)
    expect = oracle_find(s, r.numerator, r.denominator, strict)
    if expect is None:
        assert rep is None
    else:
        assert rep is not None
        assert (rep.start, rep.length, rep.period) == expect
        assert rep.exponent == Fraction(rep.length, rep.period)


def test_find_matches_oracle_exhaustive_ternary():
    for s in all_words(3, 7):
        for r, strict in BOUNDS:
            check_against_oracle(s, r, strict)


@settings(max_examples=150, deadline=None)
@given(
    st.lists(st.integers(1, 3), max_size=14).map(tuple),
    st.sampled_from(BOUNDS),
)
def test_find_matches_oracle_sampled(s, bound):
    check_against_oracle(s, *bound)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=12).map(tuple))
def test_periods_match_oracle_and_square_exponent(s):
    assert periods(s) == oracle_periods(s)
    assert len(s) in periods(s)
    assert max_exponent(s) >= 1
    assert max_exponent(s + s) >= 2


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.integers(1, 3), min_size=1, max_size=6).map(tuple),
    st.integers(2, 4),
)
def test_factors_inherit_periods(seed, reps):
    w = (seed * reps)[: len(seed) * reps]
    p = len(seed)
    for i in range(len(w)):
        for j in range(i + p, len(w) + 1):
            assert p in periods(w[i:j])


def test_free_implies_plus_free_exhaustive():
    r = Fraction(7, 4)
    for s in all_words(3, 7):
        if find_forbidden_factor(s, r, strict=False) is None:
            assert find_forbidden_factor(s, r, strict=True) is None


def incremental_is_free(s, r, strict):
    for k in range(1, len(s) + 1):
        if has_suffix_violation(s[:k], r, strict):
            return False
    return True


def test_incremental_soundness_exhaustive_ternary():
    r = Fraction(7, 4)
    for s in all_words(3, 8):
        assert incremental_is_free(s, r, True) == is_free(s, r, True)


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.integers(1, 3), max_size=12).map(tuple),
    st.sampled_from(BOUNDS),
)
def test_incremental_soundness_sampled(s, bound):
    r, strict = bound
    assert incremental_is_free(s, r, strict) == is_free(s, r, strict)


def test_minimal_period_and_letters_of():
    assert minimal_period("1213121") == 4
    assert letters_of("1213") == (1, 2, 1, 3)
    assert letters_of(Word((1, 2), 2)) == (1, 2)
    assert letters_of([3, 1]) == (3, 1)
