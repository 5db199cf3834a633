"""Exhaustive and sampled checks over the source-word languages.

The heavy searches all reduce to one primitive: within a string, find the
position pairs (i, i + q) whose running letter-count signatures (mod 4) agree.
Such a pair marks a factor starting at i with kernel period q, extendable as
far as positions keep matching q steps back.  Scanning the factor engine's
piece set with this primitive covers every factor of the language up to the
engine cutoff, since any short factor occurs inside some piece together with
its period structure.

Each check returns a VerificationReport: a status string plus a payload of
counts and verbatim witnesses, so results can be pinned by golden files.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from ._util import parallel_map, split_chunks
from .carpi import (
    MorphismTable,
    apply_morphism,
    find_psi_kernel_repetition,
    in_psi_kernel,
    min_psi_repetition_length,
)
from .constructions import Z4Language, g_expand, z4_language, zm_is_member, zm_samples
from .core_words import WordLike, letters_of
from .pansiot import shortest_k_stabilizing_factor


@dataclass(frozen=True)
class MaximalKernelRepetition:
    """A factor of the A_4 language with a kernel period, unextendable on
    either side without breaking the period or leaving the language."""

    word: str
    kernel_period: int

    def __post_init__(self) -> None:
        p = self.kernel_period
        if not 0 < p <= len(self.word):
            raise ValueError("kernel period out of range")
        if any(self.word[i] != self.word[i + p] for i in range(len(self.word) - p)):
            raise ValueError("stated period does not hold")
        if not in_psi_kernel(self.word[:p]):
            raise ValueError("length-p prefix is not a kernel word")

    @property
    def tail_length(self) -> int:
        return len(self.word) - self.kernel_period

    def to_payload(self) -> dict:
        return {
            "word": self.word,
            "kernel_period": self.kernel_period,
            "length": len(self.word),
            "tail_length": self.tail_length,
        }


@dataclass
class VerificationReport:
    name: str
    status: str  # "pass", "fail" or "unavailable"
    payload: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_payload(self) -> dict:
        return {"name": self.name, "status": self.status, **self.payload}


# ------------------------------------------------------------ scan core


def _int_sigs(s: str) -> list[int]:
    """Prefix letter counts mod 4, packed two bits per digit letter."""
    sig = 0
    out = [0]
    append = out.append
    for ch in s:
        sh = (ord(ch) - 49) * 2
        sig = (sig & ~(3 << sh)) | ((((sig >> sh) + 1) & 3) << sh)
        append(sig)
    return out


def _tail_candidates(s: str, cap: int):
    """Yield (start, kernel_period, max_length) for factors of s with a
    kernel period q and length up to min(q + 3, cap, extension run)."""
    sigs = _int_sigs(s)
    groups: dict[int, list[int]] = {}
    for i, sg in enumerate(sigs):
        groups.setdefault(sg, []).append(i)
    L = len(s)
    for g in groups.values():
        for a in range(len(g) - 1):
            i = g[a]
            for b in range(a + 1, len(g)):
                q = g[b] - i
                if q > cap:
                    break
                e = i + q
                while e < L and s[e] == s[e - q]:
                    e += 1
                yield i, q, min(e - i, q + 3, cap)


def _max_kernel_period_run(s: str, period: int) -> int:
    """Length of the longest factor of s with the given kernel period, or 0."""
    L = len(s)
    if period > L:
        return 0
    sigs = _int_sigs(s)
    runlen = [0] * (L + 1)
    for x in range(L - 1, period - 1, -1):
        runlen[x] = runlen[x + 1] + 1 if s[x] == s[x - period] else 0
    best = 0
    for i in range(L - period + 1):
        if sigs[i] == sigs[i + period]:
            ln = period + runlen[i + period]
            if ln > best:
                best = ln
    return best


# ------------------------------------------------------------ elimination


def _elimination_chunk(args: tuple) -> set:
    pieces, max_length, orders = args
    found = set()
    for piece in pieces:
        for i, q, lmax in _tail_candidates(piece, max_length):
            for n in orders:
                if (n - 1) * (lmax + 1) >= n * q - 3:
                    found.add((piece[i : i + lmax], q, lmax, n))
    return found


def verify_short_elimination(
    max_length: int = 130,
    orders: Iterable[int] = range(27, 33),
    engine: Optional[Z4Language] = None,
    extra_pieces: Iterable[str] = (),
    jobs: int = 1,
) -> VerificationReport:
    """Search every factor of length at most max_length for a kernel period
    q >= length - 3 making it a psi-kernel repetition at any of the orders.

    The length condition grows with the factor, so only the longest extension
    of each (start, period) pair is tested.  extra_pieces lets a test inject
    strings that must be flagged.
    """
    if engine is None:
        engine = z4_language(max_length)
    orders = list(orders)
    pieces = sorted(engine.pieces) + list(extra_pieces)
    chunks = split_chunks(pieces, jobs)
    found: set = set()
    for part in parallel_map(
        _elimination_chunk, [(c, max_length, orders) for c in chunks], jobs
    ):
        found |= part
    violations = [
        {"word": w, "kernel_period": q, "length": ln, "order": n}
        for w, q, ln, n in sorted(found)
    ]
    status = "pass" if not violations else "fail"
    return VerificationReport(
        "short-elimination",
        status,
        {
            "max_length": max_length,
            "orders": orders,
            "pieces_scanned": len(pieces),
            "violations": violations,
        },
    )


# ------------------------------------------------------------ the W set


def _w_candidate_chunk(args: tuple) -> set:
    pieces, max_length, bound_filter = args
    cands = set()
    for piece in pieces:
        for i, q, lmax in _tail_candidates(piece, max_length):
            if q > 152:
                continue
            for ln in range(q, lmax + 1):
                if bound_filter and q > 31 * (ln - q + 2):
                    continue
                cands.add((piece[i : i + ln], q))
    return cands


def compute_W(
    max_length: int = 155,
    engine: Optional[Z4Language] = None,
    bound_filter: bool = True,
    jobs: int = 1,
) -> list[MaximalKernelRepetition]:
    """All maximal kernel repetitions (v, q) in the A_4 factor language with
    |v| <= max_length, |v| - q <= 3, q <= 152 and, unless disabled,
    q <= 31(|v| - q + 2).

    Maximality is single-letter and two-sided: the unique letters that would
    extend the period (v[q-1] on the left, v[|v|-q] on the right) must yield
    words outside the language.  Sorted by length, then value, then period.
    """
    if engine is None:
        engine = z4_language(max_length + 2)
    if engine.max_factor_length < max_length + 1:
        raise ValueError("engine cutoff too small for the extension probes")
    pieces = sorted(engine.pieces)
    cands: set = set()
    for part in parallel_map(
        _w_candidate_chunk,
        [(c, max_length, bound_filter) for c in split_chunks(pieces, jobs)],
        jobs,
    ):
        cands |= part
    out = []
    for v, q in cands:
        if engine.is_factor(v[q - 1] + v):
            continue
        if engine.is_factor(v + v[len(v) - q]):
            continue
        out.append(MaximalKernelRepetition(word=v, kernel_period=q))
    out.sort(key=lambda r: (len(r.word), r.word, r.kernel_period))
    return out


def w_breakdown(w_set: Iterable[MaximalKernelRepetition]) -> dict[tuple[int, int], int]:
    """Histogram of (kernel_period, length) pairs."""
    out: dict[tuple[int, int], int] = {}
    for r in w_set:
        key = (r.kernel_period, len(r.word))
        out[key] = out.get(key, 0) + 1
    return out


# ------------------------------------------------------------ E_w check


def _ew_single(args: tuple) -> dict:
    word, p, contexts = args
    period = 3 * p
    q_w = 0
    for s in contexts:
        for bw in g_expand(s):
            run = _max_kernel_period_run(bw, period)
            if run > q_w:
                q_w = run
    margin = 3 * p - 31 * (q_w - 3 * p + 2)
    return {
        "word": word,
        "p": p,
        "q": q_w,
        "margin": margin,
        "contexts": len(contexts),
    }


def verify_Ew(
    w_set: Sequence[MaximalKernelRepetition],
    engine: Optional[Z4Language] = None,
    jobs: int = 1,
) -> VerificationReport:
    """For each maximal repetition w with kernel period p, scan every image
    g(awb) with awb in the language, find the longest factor with kernel
    period 3p (q_w, or 0 if none), and require 3p > 31(q_w - 3p + 2)."""
    if engine is None:
        top = max((len(r.word) for r in w_set), default=1) + 2
        engine = z4_language(top)
    tasks = []
    for r in w_set:
        contexts = [
            a + r.word + b
            for a in "1234"
            for b in "1234"
            if engine.is_factor(a + r.word + b)
        ]
        tasks.append((r.word, r.kernel_period, contexts))
    entries = parallel_map(_ew_single, tasks, jobs)
    failures = [e for e in entries if e["margin"] <= 0]
    status = "pass" if not failures else "fail"
    return VerificationReport(
        "ew-inequality",
        status,
        {
            "checked": len(entries),
            "entries": entries,
            "failures": failures,
        },
    )


# ------------------------------------------------------------ binary search


def binary_avoidance_longest(
    n: int = 26,
    depth_cap: int = 64,
    length_rule: Optional[Callable[[int, int], int]] = None,
) -> tuple[int, str]:
    """Depth-first search over {1, 2}* for the longest word with no factor
    that is a psi-kernel repetition at order n; returns (length, witness).

    Reaching depth_cap without hitting a repetition raises, since the search
    can no longer certify the language is finite.
    """
    if n < 9:
        raise ValueError("order must be at least 9")
    rule = length_rule or min_psi_repetition_length

    s: list[str] = []
    sigs = [0]
    best = [0, ""]

    def suffix_repetition() -> bool:
        L = len(s)
        for q in range(4, L + 1, 4):
            r = 0
            while r < L - q and s[L - 1 - r] == s[L - 1 - r - q]:
                r += 1
            lo = max(q, rule(n, q))
            for ln in range(lo, q + r + 1):
                if sigs[L - ln] == sigs[L - ln + q]:
                    return True
        return False

    def dfs() -> None:
        depth = len(s)
        if depth > best[0]:
            best[0], best[1] = depth, "".join(s)
        if depth >= depth_cap:
            raise RuntimeError(
                f"clean word of length {depth_cap} found; raise the depth cap "
                "or accept that the language may be infinite"
            )
        for c in "12":
            s.append(c)
            sh = (ord(c) - 49) * 2
            sig = sigs[-1]
            sigs.append((sig & ~(3 << sh)) | ((((sig >> sh) + 1) & 3) << sh))
            if not suffix_repetition():
                dfs()
            s.pop()
            sigs.pop()

    dfs()
    return best[0], best[1]


def binary_avoidance_max_length(n: int = 26, depth_cap: int = 64) -> int:
    return binary_avoidance_longest(n, depth_cap)[0]


# ------------------------------------------------------------ desk checks


def check_lemma6(m: int, z: WordLike, exhaustive_factors: bool = True) -> VerificationReport:
    """Every kernel factor of a member of Z_m must have length divisible by
    4^(m-1).  Kernel factors are located as signature-equal position pairs;
    with exhaustive_factors off, only prefix factors are examined."""
    if m < 5:
        raise ValueError("alphabet size must be at least 5")
    if not zm_is_member(m, z):
        raise ValueError("word is not a member of the language")
    s = "".join(str(a) for a in letters_of(z))
    sigs = _int_sigs(s)
    modulus = 4 ** (m - 1)
    lengths: set[int] = set()
    violations: list[dict] = []
    pairs = 0
    if exhaustive_factors:
        groups: dict[int, list[int]] = {}
        for i, sg in enumerate(sigs):
            groups.setdefault(sg, []).append(i)
        for g in groups.values():
            for a in range(len(g) - 1):
                for b in range(a + 1, len(g)):
                    pairs += 1
                    ln = g[b] - g[a]
                    lengths.add(ln)
                    if ln % modulus:
                        violations.append({"start": g[a] + 1, "length": ln})
    else:
        for j in range(1, len(sigs)):
            if sigs[j] == 0:
                pairs += 1
                lengths.add(j)
                if j % modulus:
                    violations.append({"start": 1, "length": j})
    return VerificationReport(
        "kernel-factor-divisibility",
        "pass" if not violations else "fail",
        {
            "m": m,
            "modulus": modulus,
            "word_length": len(s),
            "kernel_factors": pairs,
            "kernel_lengths": sorted(lengths),
            "violations": violations,
        },
    )


def check_prop7_desk(
    m: int,
    n: int,
    length: Optional[int] = None,
    samples: Optional[int] = None,
    seed: int = 0,
    words: Optional[Sequence[WordLike]] = None,
) -> VerificationReport:
    """Spot check: members of Z_m carry no psi-kernel repetition at order n.
    Free slots are drawn from a seeded generator unless words are supplied."""
    if m < 5:
        raise ValueError("alphabet size must be at least 5")
    if (n - 3) // 6 != m and n < 33:
        raise ValueError("order inconsistent with the alphabet size")
    if words is None:
        if length is None or samples is None:
            raise ValueError("need either explicit words or length and samples")
        words = zm_samples(m, length, samples, seed)
    else:
        for w in words:
            if not zm_is_member(m, w):
                raise ValueError("supplied word is not a member of the language")
    findings = []
    for w in words:
        rep = find_psi_kernel_repetition(n, w)
        if rep is not None:
            findings.append(
                {"word": "".join(str(a) for a in letters_of(w)), **rep.to_payload()}
            )
    return VerificationReport(
        "sampled-repetition-absence",
        "pass" if not findings else "fail",
        {
            "m": m,
            "n": n,
            "samples": len(words),
            "length": length,
            "seed": seed,
            "findings": findings,
        },
    )


# ------------------------------------------------------------ order 26


def stabilizing_witness_scan(
    table: MorphismTable, w: WordLike, k: int, max_length: int
):
    """Shortest k-stabilizing factor of the image of w, length-bounded."""
    image = apply_morphism(table, w)
    return shortest_k_stabilizing_factor(table.n, image, k, max_length=max_length)


def n26_stabilizing_check(table: Optional[MorphismTable] = None) -> VerificationReport:
    """With a user-supplied order-26 morphism table, confirm that the image
    of each two-letter word a3 contains a 15-stabilizing factor of length
    350 < 15 * 25.  Without a table the check is reported unavailable."""
    if table is None:
        return VerificationReport(
            "n26-stabilizing",
            "unavailable",
            {"reason": "no order-26 morphism table supplied"},
        )
    if table.n != 26:
        raise ValueError("table order must be 26")
    k, bound, expected = 15, 15 * 25, 350
    witnesses = {}
    ok = True
    for a in (1, 2, 3):
        rep = stabilizing_witness_scan(table, (a, 3), k, max_length=bound - 1)
        witnesses[str(a)] = None if rep is None else rep.length
        ok = ok and rep is not None and rep.length == expected
    return VerificationReport(
        "n26-stabilizing",
        "pass" if ok else "fail",
        {"k": k, "length_bound": bound, "expected": expected, "witnesses": witnesses},
    )
