"""Source-word families fed into the permutation encoding.

Two families live here, both given as plain digit strings so they interoperate
with letters_of and the scanners.

Family one is deterministic with controlled freedom: a recursive binary word
(beta_prefix), an interleaving over A_m driven by 4-adic valuations
(alpha_prefix), and the language Z_m of words agreeing with that interleaving
except at positions congruent to 2 mod 4, which range freely over {1, 2}.

Family two is the factor language of iterating a nondeterministic substitution
g on A_4 (images of length 3; the letter 4 has two images).  Members of
interest are factors of g^k(1) for some k.  Direct iteration is exponential in
branch count, so the Z4Language engine computes all factors up to a requested
length by a window fixpoint: a factor of length t in the image of a word lies
in the image of a factor of length ceil(t/3)+1, so the set of short windows
closed under (apply g, take windows) determines every factor set below the
cutoff.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Iterable, Iterator, Optional

from .core_words import WordLike, letters_of

# ---------------------------------------------------------------- family one


def beta_prefix(k: int) -> str:
    """First k letters of the binary word with b_i = 1, 2, b_{i/3} according
    to i mod 3 = 1, 2, 0."""
    if k < 0:
        raise ValueError("length must be nonnegative")
    b = [0] * (k + 1)
    for i in range(1, k + 1):
        r = i % 3
        if r == 1:
            b[i] = 1
        elif r == 2:
            b[i] = 2
        else:
            b[i] = b[i // 3]
    return "".join(str(x) for x in b[1:])


def _even_position_letter(m: int, i: int) -> int:
    # valuation: largest a with 4^a dividing i, capped so letters stay in A_m
    v = 0
    while i % 4 == 0:
        i //= 4
        v += 1
    return min(m, v + 2)


def alpha_prefix(m: int, k: int) -> str:
    """First k letters over A_m: odd positions follow beta, even position i
    carries min(m, v + 2) where v is the number of times 4 divides i."""
    if m < 4:
        raise ValueError("alphabet size must be at least 4")
    if k < 0:
        raise ValueError("length must be nonnegative")
    beta = beta_prefix((k + 1) // 2)
    out = []
    for i in range(1, k + 1):
        if i % 2 == 1:
            out.append(beta[(i + 1) // 2 - 1])
        else:
            out.append(str(_even_position_letter(m, i)))
    return "".join(out)


def free_positions(k: int) -> list[int]:
    """1-based positions congruent to 2 mod 4, the slots left open in Z_m."""
    return list(range(2, k + 1, 4))


def zm_is_member(m: int, w: WordLike) -> bool:
    """Does w agree with the alpha word except at the free slots, where any
    letter of {1, 2} is allowed?"""
    s = letters_of(w)
    alpha = alpha_prefix(m, len(s))
    for i, a in enumerate(s, start=1):
        if i % 4 == 2:
            if a not in (1, 2):
                return False
        elif str(a) != alpha[i - 1]:
            return False
    return True


def zm_count(k: int) -> int:
    """Number of members of length k: one binary choice per free slot."""
    if k < 0:
        raise ValueError("length must be nonnegative")
    return 2 ** ((k + 2) // 4)


def zm_enumerate(m: int, k: int, limit: Optional[int] = None) -> list[str]:
    """Members of length k in lexicographic order, optionally truncated."""
    base = list(alpha_prefix(m, k))
    slots = [i - 1 for i in free_positions(k)]
    total = 2 ** len(slots)
    if limit is not None:
        total = min(total, limit)
    out = []
    for mask in range(total):
        for bit, j in enumerate(reversed(slots)):
            base[j] = "2" if (mask >> bit) & 1 else "1"
        out.append("".join(base))
    return out


def zm_sample(m: int, k: int, rng: random.Random) -> str:
    """One member of length k with free slots drawn uniformly from rng."""
    base = list(alpha_prefix(m, k))
    for j in free_positions(k):
        base[j - 1] = rng.choice("12")
    return "".join(base)


def zm_samples(m: int, k: int, count: int, seed: int = 0) -> list[str]:
    rng = random.Random(seed)
    return [zm_sample(m, k, rng) for _ in range(count)]


# ---------------------------------------------------------------- family two


G_RULE: dict[int, tuple[str, ...]] = {
    1: ("112",),
    2: ("114",),
    3: ("113",),
    4: ("123", "213"),
}


def g_expand(w: WordLike) -> Iterator[str]:
    """All branch words of g(w), in image-table order."""
    choices = [G_RULE[a] for a in letters_of(w)]
    for combo in product(*choices):
        yield "".join(combo)


def g_apply(words: Iterable[WordLike]) -> set[str]:
    out: set[str] = set()
    for w in words:
        out.update(g_expand(w))
    return out


def g_branch_count(w: WordLike) -> int:
    """2 to the number of occurrences of the branching letter 4."""
    return 2 ** sum(1 for a in letters_of(w) if a == 4)


_LEVEL_COUNT_CAP = 5  # |g^6(1)| is about 5.4e8 words; refuse beyond this


def g_level(k: int) -> list[str]:
    """The set g^k(1), sorted.  Levels past 5 are astronomically large and
    rejected; use Z4Language for factor questions at any depth."""
    if k < 0:
        raise ValueError("level must be nonnegative")
    if k > _LEVEL_COUNT_CAP:
        raise ValueError(f"level {k} has too many branch words to enumerate")
    words = {"1"}
    for _ in range(k):
        words = g_apply(words)
    return sorted(words)


def level_letter_counts(k: int) -> tuple[int, int, int, int]:
    """Letter counts shared by every word of g^k(1), via the count transform
    (c1, c2, c3, c4) -> (2(c1+c2+c3)+c4, c1+c4, c3+c4, c2)."""
    c = (1, 0, 0, 0)
    for _ in range(k):
        c1, c2, c3, c4 = c
        c = (2 * (c1 + c2 + c3) + c4, c1 + c4, c3 + c4, c2)
    return c


class Z4Language:
    """All factors of union_k g^k(1) up to a fixed length.

    The constructor runs the window fixpoint: seed with every window of length
    ceil(L/3)+1 of the first level long enough to contain one, then repeatedly
    apply g to known windows, harvesting length-L factors of the branch words
    and any new windows, until nothing new appears.  Whole level words shorter
    than the seed level are kept as extra pieces so short factors are covered
    without leaning on the prefix structure of the levels.
    """

    def __init__(self, max_factor_length: int):
        if max_factor_length < 1:
            raise ValueError("factor length cutoff must be positive")
        self.max_factor_length = L = max_factor_length
        self.window_length = win = -(-L // 3) + 1
        k0 = 0
        size = 1
        while size < win:
            size *= 3
            k0 += 1
        if k0 > _LEVEL_COUNT_CAP:
            raise ValueError("factor length cutoff too large for the seed level")
        self.seed_level = k0

        pieces: set[str] = set()
        for k in range(k0 + 1):
            pieces.update(g_level(k))
        frontier = set()
        for w in g_level(k0):
            for i in range(len(w) - win + 1):
                frontier.add(w[i : i + win])
        seen = set(frontier)
        while frontier:
            x = frontier.pop()
            for bw in g_expand(x):
                for i in range(len(bw) - L + 1):
                    pieces.add(bw[i : i + L])
                for i in range(len(bw) - win + 1):
                    y = bw[i : i + win]
                    if y not in seen:
                        seen.add(y)
                        frontier.add(y)
        self.pieces: frozenset[str] = frozenset(pieces)
        self._haystack = "#".join(sorted(pieces))

    def is_factor(self, w: WordLike) -> bool:
        s = "".join(str(a) for a in letters_of(w))
        if len(s) > self.max_factor_length:
            raise ValueError(
                f"probe of length {len(s)} exceeds cutoff {self.max_factor_length}"
            )
        return s in self._haystack

    def factors(self, length: int) -> list[str]:
        if not 0 < length <= self.max_factor_length:
            raise ValueError("length out of range")
        out = set()
        for p in self.pieces:
            for i in range(len(p) - length + 1):
                out.add(p[i : i + length])
        return sorted(out)


_Z4_CACHE: dict[int, Z4Language] = {}


def z4_language(max_factor_length: int) -> Z4Language:
    """Cached engine able to answer factor queries up to the given length."""
    best = None
    for built, engine in _Z4_CACHE.items():
        if built >= max_factor_length and (best is None or built < best):
            best = built
    if best is not None:
        return _Z4_CACHE[best]
    engine = Z4Language(max_factor_length)
    _Z4_CACHE[max_factor_length] = engine
    return engine


def z4_is_factor(w: WordLike, engine: Optional[Z4Language] = None) -> bool:
    s = letters_of(w)
    if engine is None:
        engine = z4_language(max(len(s), 1))
    return engine.is_factor(s)


def z4_factors(max_length: int, engine: Optional[Z4Language] = None) -> list[str]:
    """Every factor of length 1..max_length, sorted by length then value."""
    if engine is None:
        engine = z4_language(max_length)
    out: list[str] = []
    for length in range(1, max_length + 1):
        out.extend(engine.factors(length))
    return out
