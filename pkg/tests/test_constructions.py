"""Tests for the source-word families.

The factor-language oracle below iterates the window map level by level and
stops only when two consecutive window sets are equal; monotonicity then
certifies the fixpoint, so it is a complete reference for the engine.  Plain
level enumeration is also used where it is provably complete (short lengths).
"""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dejean.carpi import in_psi_kernel
from dejean.constructions import (
    G_RULE,
    Z4Language,
    alpha_prefix,
    beta_prefix,
    free_positions,
    g_apply,
    g_branch_count,
    g_expand,
    g_level,
    level_letter_counts,
    z4_factors,
    z4_is_factor,
    z4_language,
    zm_count,
    zm_enumerate,
    zm_is_member,
    zm_sample,
    zm_samples,
)

# ---------------------------------------------------------------- oracles


def oracle_factors_upto(max_len, max_levels=40):
    """Factors of every iteration level, by certified window fixpoint."""
    win = -(-max_len // 3) + 1
    level_words, k = {"1"}, 0
    harvested = set(level_words)
    while len(next(iter(level_words))) < win:
        level_words = g_apply(level_words)
        k += 1
        harvested |= level_words
        assert k <= 5
    windows = {w[i : i + win] for w in level_words for i in range(len(w) - win + 1)}
    rounds = 0
    while True:
        new_windows = set()
        rounds += 1
        assert rounds < max_levels
        for x in windows:
            for bw in g_expand(x):
                L = len(bw)
                for i in range(L - max_len + 1):
                    harvested.add(bw[i : i + max_len])
                for i in range(L - win + 1):
                    new_windows.add(bw[i : i + win])
        assert new_windows >= windows
        if new_windows == windows:
            break
        windows = new_windows
    out = {ln: set() for ln in range(1, max_len + 1)}
    for p in harvested:
        for ln in range(1, max_len + 1):
            for i in range(len(p) - ln + 1):
                out[ln].add(p[i : i + ln])
    return out


def level_factors(level, length):
    return {
        w[i : i + length] for w in g_level(level) for i in range(len(w) - length + 1)
    }


# ---------------------------------------------------------------- beta/alpha


def test_beta_prefix_frozen():
    assert beta_prefix(9) == "121122121"
    assert beta_prefix(0) == ""
    assert beta_prefix(1) == "1"


def test_beta_recursion_and_base():
    b = beta_prefix(243)
    for i in range(1, 244):
        if i % 3 == 1:
            assert b[i - 1] == "1"
        elif i % 3 == 2:
            assert b[i - 1] == "2"
        else:
            assert b[i - 1] == b[i // 3 - 1]


@given(st.integers(0, 200), st.integers(0, 200))
def test_beta_prefix_coherent(j, k):
    lo, hi = sorted((j, k))
    assert beta_prefix(hi)[:lo] == beta_prefix(lo)


def test_alpha_prefix_frozen():
    assert alpha_prefix(4, 8) == "12231213"
    assert alpha_prefix(4, 16) == "1223121322231224"
    assert alpha_prefix(5, 2) == "12"
    assert alpha_prefix(5, 16) == alpha_prefix(4, 16)
    # the cap first matters at position 64, where the valuation pushes past 4
    assert alpha_prefix(4, 64)[63] == "4"
    assert alpha_prefix(5, 64)[63] == "5"


def test_alpha_prefix_validation():
    with pytest.raises(ValueError):
        alpha_prefix(3, 5)
    with pytest.raises(ValueError):
        alpha_prefix(4, -1)


def test_alpha_positions():
    m, k = 5, 300
    a = alpha_prefix(m, k)
    b = beta_prefix((k + 1) // 2)
    for i in range(1, k + 1):
        if i % 2 == 1:
            assert a[i - 1] == b[(i + 1) // 2 - 1]
        else:
            v, x = 0, i
            while x % 4 == 0:
                x //= 4
                v += 1
            assert a[i - 1] == str(min(m, v + 2))


# ---------------------------------------------------------------- Z_m


def test_free_positions():
    assert free_positions(10) == [2, 6, 10]
    for k in range(0, 60):
        assert len(free_positions(k)) == (k + 2) // 4


def test_zm_membership():
    a = alpha_prefix(5, 40)
    assert zm_is_member(5, a)
    flipped = list(a)
    flipped[1] = "1"  # free slot, letter in {1, 2}
    assert zm_is_member(5, "".join(flipped))
    flipped[1] = "3"  # free slot but letter outside {1, 2}
    assert not zm_is_member(5, "".join(flipped))
    wrong = list(a)
    wrong[2] = "1" if wrong[2] != "1" else "2"  # constrained slot
    assert not zm_is_member(5, "".join(wrong))


def test_zm_enumerate_frozen():
    assert zm_enumerate(5, 4) == ["1123", "1223"]
    assert zm_enumerate(5, 1) == ["1"]
    assert zm_enumerate(5, 0) == [""]


def test_zm_enumerate_counts_and_order():
    for k in range(0, 11):
        members = zm_enumerate(5, k)
        assert len(members) == zm_count(k) == 2 ** ((k + 2) // 4)
        assert members == sorted(members)
        assert len(set(members)) == len(members)
        assert all(zm_is_member(5, w) for w in members)


def test_zm_enumerate_limit():
    full = zm_enumerate(4, 16)
    assert len(full) == 16
    assert zm_enumerate(4, 16, limit=5) == full[:5]
    assert zm_enumerate(4, 16, limit=0) == []


def test_zm_count_frozen():
    assert [zm_count(k) for k in (0, 1, 2, 4, 6, 16)] == [1, 1, 2, 2, 4, 16]


def test_zm_sampling_deterministic():
    a = zm_samples(5, 80, 5, seed=7)
    b = zm_samples(5, 80, 5, seed=7)
    assert a == b
    assert all(zm_is_member(5, w) and len(w) == 80 for w in a)
    rng = random.Random(7)
    assert [zm_sample(5, 80, rng) for _ in range(5)] == a


# ---------------------------------------------------------------- g levels


def test_g_rule_shape():
    assert G_RULE[1] == ("112",)
    assert G_RULE[2] == ("114",)
    assert G_RULE[3] == ("113",)
    assert G_RULE[4] == ("123", "213")
    assert all(len(img) == 3 for imgs in G_RULE.values() for img in imgs)


def test_g_expand_order_and_count():
    assert list(g_expand("4")) == ["123", "213"]
    assert list(g_expand("14")) == ["112123", "112213"]
    assert list(g_expand("")) == [""]
    assert g_branch_count("44214") == 8
    assert len(list(g_expand("44"))) == 4


def test_g_level_sizes():
    assert [len(g_level(k)) for k in range(6)] == [1, 1, 1, 2, 8, 1024]
    with pytest.raises(ValueError):
        g_level(6)
    with pytest.raises(ValueError):
        g_level(-1)


def test_g_level_letter_counts():
    assert level_letter_counts(3) == (17, 7, 1, 2)
    assert level_letter_counts(4) == (52, 19, 3, 7)
    assert level_letter_counts(5) == (155, 59, 10, 19)
    for k in range(6):
        want = level_letter_counts(k)
        for w in g_level(k):
            got = tuple(w.count(c) for c in "1234")
            assert got == want


def test_g_level_prefix_monotone():
    for k in range(5):
        nxt = g_level(k + 1)
        for w in g_level(k):
            assert any(v.startswith(w) for v in nxt)


def test_g_level_alignment_rigidity():
    # third letter of every image block is 2, 3 or 4; the first two are 1 or 2
    for k in range(5):
        for w in g_level(k):
            for i, c in enumerate(w):
                assert c in ("234" if i % 3 == 2 else "12")


def test_g_level_stationary_frequencies():
    counts = level_letter_counts(5)
    total = sum(counts)
    for got, want in zip(counts, (0.64, 0.24, 0.04, 0.08)):
        assert abs(got / total - want) < 0.005


def test_kernel_membership_lifts_through_g():
    # exhaustive over A_4 words of length <= 5
    stack = [""]
    while stack:
        w = stack.pop()
        for bw in g_expand(w):
            assert in_psi_kernel(bw) == in_psi_kernel(w), w
        if len(w) < 5:
            stack.extend(w + c for c in "1234")


# ---------------------------------------------------------------- Z4 engine


def test_engine_matches_certified_oracle():
    oracle = oracle_factors_upto(12)
    eng = Z4Language(12)
    for ln in range(1, 13):
        assert set(eng.factors(ln)) == oracle[ln], ln


def test_engine_factor_counts_frozen():
    eng = Z4Language(12)
    assert [len(eng.factors(ln)) for ln in range(1, 13)] == [
        4, 9, 15, 21, 27, 33, 40, 48, 58, 68, 79, 90,
    ]


def test_engine_vs_plain_level_enumeration_short():
    # level 5 is exhaustive for factors up to length 7 (not beyond: deeper
    # levels contribute new length-8 factors)
    eng = Z4Language(12)
    for ln in range(1, 8):
        assert set(eng.factors(ln)) == level_factors(5, ln)
    assert set(eng.factors(8)) > level_factors(5, 8)


def test_engine_is_factor_consistent_with_enumeration():
    eng = Z4Language(8)
    for ln in (1, 2, 3, 8):
        listed = set(eng.factors(ln))
        stack = [""]
        while stack:
            w = stack.pop()
            if len(w) == ln:
                assert eng.is_factor(w) == (w in listed), w
            else:
                stack.extend(w + c for c in "1234")


def test_engine_known_non_factors():
    eng = Z4Language(12)
    for w in ("111", "44", "33", "241", "341", "424"):
        assert not eng.is_factor(w), w
    for w in ("", "1", "112112114", "4112", "31121", "22", "131"):
        assert eng.is_factor(w), w


def test_engine_probe_length_guard():
    eng = Z4Language(5)
    with pytest.raises(ValueError):
        eng.is_factor("1" * 6)
    with pytest.raises(ValueError):
        eng.factors(6)
    with pytest.raises(ValueError):
        eng.factors(0)
    with pytest.raises(ValueError):
        Z4Language(0)


def test_engine_deterministic():
    assert Z4Language(12)._haystack == Z4Language(12)._haystack
    assert Z4Language(12).pieces == Z4Language(12).pieces


def test_z4_language_cache_reuse():
    big = z4_language(13)
    assert z4_language(11) is big
    assert z4_language(13) is big
    assert big.max_factor_length >= 13


def test_z4_factor_helpers():
    eng = Z4Language(6)
    listing = z4_factors(3, eng)
    assert listing == eng.factors(1) + eng.factors(2) + eng.factors(3)
    assert listing[:4] == ["1", "2", "3", "4"]
    assert z4_is_factor("112", eng)
    assert not z4_is_factor("441", eng)


def test_engine_seed_parameters():
    eng = Z4Language(12)
    assert eng.window_length == 5
    assert eng.seed_level == 2
    assert Z4Language(157).window_length == 54
