"""Brute-force enumerators that serve as ground truth for the closed forms."""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass
from functools import cache
from itertools import combinations

from .numtheory import binomial, divisors

HARD_MAX_ORACLE_M = 30
MAX_NECKLACE_M = 24


def max_oracle_m() -> int:
    """Subset-enumeration bound; CYCPART_MAX_ORACLE_M may change it, capped at 30."""
    raw = os.environ.get("CYCPART_MAX_ORACLE_M")
    if not raw:
        return HARD_MAX_ORACLE_M
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"CYCPART_MAX_ORACLE_M must be an integer, got {raw!r}") from None
    return max(1, min(value, HARD_MAX_ORACLE_M))


@dataclass(frozen=True)
class SubsetSumTally:
    m: int
    t: int
    table: tuple[int, ...]

    def __post_init__(self):
        assert sum(self.table) == (binomial(self.m, self.t) if self.t >= 0 else 0)


def enumerate_subset_sums(m: int, t: int) -> SubsetSumTally:
    """Count the t-subsets of {0, ..., m-1} by their sum modulo ``m``."""
    bound = max_oracle_m()
    if not 1 <= m <= bound:
        raise ValueError(f"m must lie in [1, {bound}] for enumeration, got {m}")
    table = [0] * m
    if 0 <= t <= m:
        for subset in combinations(range(m), t):
            table[sum(subset) % m] += 1
    return SubsetSumTally(m, t, tuple(table))


@dataclass(frozen=True, order=True)
class NecklaceWord:
    """A binary necklace in least-rotation form; '1' is a black bead."""

    beads: str
    frequency: int

    @property
    def canonical(self) -> bool:
        return self.beads == canonical_rotation(self.beads)

    @property
    def black_count(self) -> int:
        return self.beads.count("1")

    @property
    def period(self) -> int:
        return len(self.beads) // self.frequency


def canonical_rotation(word: str) -> str:
    return min(word[i:] + word[:i] for i in range(len(word))) if word else word


def minimal_period(word: str) -> int:
    m = len(word)
    for p in divisors(m):
        if all(word[i] == word[(i + p) % m] for i in range(m)):
            return p
    return m  # pragma: no cover - p == m always matches


def frequency(word: str) -> int:
    """Number of identical segments the necklace splits into."""
    return len(word) // minimal_period(word)


def enumerate_necklaces(m: int, t: int) -> list[NecklaceWord]:
    """One least-rotation representative per necklace with ``t`` black beads.

    Sorted lexicographically by bead string.
    """
    if not 1 <= m <= MAX_NECKLACE_M:
        raise ValueError(f"m must lie in [1, {MAX_NECKLACE_M}], got {m}")
    if not 0 <= t <= m:
        raise ValueError(f"t must lie in [0, {m}], got {t}")
    out = []
    for black in combinations(range(m), t):
        beads = ["0"] * m
        for i in black:
            beads[i] = "1"
        word = "".join(beads)
        if word == canonical_rotation(word):
            out.append(NecklaceWord(word, frequency(word)))
    out.sort()
    return out


def frequency_histogram(m: int, t: int) -> dict[int, int]:
    """Map frequency -> number of necklaces, by enumeration."""
    hist: dict[int, int] = {}
    for neck in enumerate_necklaces(m, t):
        hist[neck.frequency] = hist.get(neck.frequency, 0) + 1
    return hist


sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))


@cache
def q_recursive(m: int, t: int, n: int) -> int:
    """Partitions of the integer ``n`` into ``t`` distinct parts, each at most ``m``."""
    if m < 0 or t < 0 or n < 0:
        return 0
    base = 1 if n == m == t == 0 else 0
    return q_recursive(m - 1, t - 1, n - t) + q_recursive(m - 1, t, n - t) + base
