"""Counting bi-color necklaces by frequency, and their correspondence with
partitions of residues into distinct parts.

A necklace of m beads, t of them black, has frequency u when it splits into
u identical segments and no more. Frequency 1 means aperiodic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .numtheory import (
    binomial,
    divisors,
    gcd,
    mobius,
    ramanujan_sum,
    v2,
)
from .partitions import _exact_div, q_mod


def _check_mt(m: int, t: int) -> None:
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if not 0 <= t <= m:
        raise ValueError(f"t must lie in [0, {m}], got {t}")


def count_aperiodic(m: int, t: int) -> int:
    """Number of aperiodic necklaces with m beads, t black."""
    _check_mt(m, t)
    total = sum(mobius(d) * binomial(m // d, t // d) for d in divisors(gcd(m, t)))
    return _exact_div(total, m, f"aperiodic({m},{t})")


def count_exact_frequency(m: int, t: int, u: int) -> int:
    """Number of necklaces (m beads, t black) whose frequency is exactly ``u``."""
    _check_mt(m, t)
    if u < 1 or gcd(m, t) % u:
        return 0
    return count_aperiodic(m // u, t // u)


def count_freq_dividing(m: int, t: int, n: int) -> int:
    """Number of necklaces (m beads, t black) whose frequency divides ``n``."""
    _check_mt(m, t)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    total = sum(binomial(m // d, t // d) * ramanujan_sum(d, n) for d in divisors(gcd(m, t)))
    return _exact_div(total, m, f"N_{{{m},{t},<{n}>}}")


def count_freq_dividing_by_cutting(m: int, t: int, n: int) -> int:
    """Same count as :func:`count_freq_dividing`, summed over aperiodic pieces."""
    _check_mt(m, t)
    return sum(count_aperiodic(m // d, t // d) for d in divisors(gcd(m, t, n)))


class SelectorMode(Enum):
    DIVISORS_OF = "divisors_of"
    EXPLICIT_SET = "explicit_set"
    SCALED = "scaled"


@dataclass(frozen=True)
class FreqSelector:
    """A set of allowed necklace frequencies."""

    mode: SelectorMode
    n: int = 0
    members: frozenset[int] = field(default_factory=frozenset)
    factor: int = 1
    inner: FreqSelector | None = None

    @classmethod
    def divisors_of(cls, n: int) -> FreqSelector:
        if n < 1:
            raise ValueError(f"<n> needs n >= 1, got {n}")
        return cls(SelectorMode.DIVISORS_OF, n=n)

    @classmethod
    def explicit(cls, members) -> FreqSelector:
        return cls(SelectorMode.EXPLICIT_SET, members=frozenset(members))

    @classmethod
    def scaled(cls, factor: int, inner: FreqSelector) -> FreqSelector:
        return cls(SelectorMode.SCALED, factor=factor, inner=inner)

    def contains(self, u: int) -> bool:
        if self.mode is SelectorMode.DIVISORS_OF:
            return self.n % u == 0
        if self.mode is SelectorMode.EXPLICIT_SET:
            return u in self.members
        return u % self.factor == 0 and self.inner.contains(u // self.factor)

    def effective(self, m: int, t: int) -> tuple[int, ...]:
        """Allowed frequencies that can actually occur for (m, t)."""
        return tuple(u for u in divisors(gcd(m, t)) if self.contains(u))

    def count(self, m: int, t: int) -> int:
        return sum(count_aperiodic(m // u, t // u) for u in self.effective(m, t))

    def __str__(self) -> str:
        if self.mode is SelectorMode.DIVISORS_OF:
            return f"<{self.n}>"
        if self.mode is SelectorMode.EXPLICIT_SET:
            return "{" + ",".join(map(str, sorted(self.members))) + "}"
        return f"{self.factor}{self.inner}"


@dataclass(frozen=True)
class Theorem3Case:
    case_id: int
    selector: FreqSelector
    count: int


def correspondence_case(m: int, t: int, n: int) -> tuple[int, FreqSelector]:
    """Pick the frequency filter under which necklaces count Q_{m,t}(n)."""
    _check_mt(m, t)
    n %= m
    vm, vt, vn = v2(m), v2(t), v2(n)
    if not vm >= vt >= 1:
        # <0> is never built; frequencies are capped by gcd(m, t) anyway
        return 1, FreqSelector.divisors_of(n if n else gcd(m, t))
    if vn < vt - 1:
        return 2, FreqSelector.divisors_of(n)
    if vn == vt - 1:
        return 3, FreqSelector.divisors_of(2 * n)
    return 4, FreqSelector.divisors_of(gcd(t, n) // 2)


def theorem3_dispatch(m: int, t: int, n: int) -> Theorem3Case:
    """Count Q_{m,t}(n) as necklaces; asserts agreement with the closed form."""
    case_id, selector = correspondence_case(m, t, n)
    count = selector.count(m, t)
    expected = q_mod(m, t, n)
    assert count == expected, (
        f"necklace count {count} != Q_{{{m},{t}}}({n}) = {expected} (case {case_id}, {selector})"
    )
    return Theorem3Case(case_id, selector, count)


def subtraction_identity_rhs(m: int, t: int, n: int) -> int:
    """Necklace-side expression for Q_{m,t}(n) when v2(m) >= v2(t) >= 1 and n >= 1.

    |N_{m,t,<n>}| - c_{2^v}(n) / 2^(v-1) * |N_{M,T,<N>}|, with t = 2^v T,
    m = 2^v M and N the odd part of n.
    """
    v = v2(t)
    if not (t >= 1 and v2(m) >= v >= 1 and n >= 1):
        raise ValueError("needs v2(m) >= v2(t) >= 1 and n >= 1")
    big_m, big_t, odd_n = m >> v, t >> v, n >> v2(n)
    coeff = _exact_div(ramanujan_sum(2**v, n), 2 ** (v - 1), "c_2^v(n) / 2^(v-1)")
    return count_freq_dividing(m, t, n) - coeff * count_freq_dividing(big_m, big_t, odd_n)


@dataclass(frozen=True)
class IdentityAudit:
    m: int
    partition_total: int
    necklace_total: int
    excluded: tuple[tuple[int, int, int], ...]  # (t, frequency, count)

    @property
    def excluded_total(self) -> int:
        return sum(c for _, _, c in self.excluded)

    @property
    def balanced(self) -> bool:
        return self.partition_total == self.necklace_total - self.excluded_total


def identity_audit(m: int) -> IdentityAudit:
    """Compare subsets of Z/mZ summing to 0 against all m-bead necklaces.

    For each t with v2(m) >= v2(t) >= 1 the necklaces whose frequency has the
    same 2-adic valuation as t are listed as excluded (zero counts omitted).
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    partition_total = sum(q_mod(m, t, 0) for t in range(m + 1))
    necklace_total = 0
    excluded = []
    for t in range(m + 1):
        freqs = divisors(gcd(m, t))
        necklace_total += sum(count_exact_frequency(m, t, u) for u in freqs)
        if t and v2(m) >= v2(t) >= 1:
            for u in freqs:
                c = count_exact_frequency(m, t, u)
                if v2(u) == v2(t) and c:
                    excluded.append((t, u, c))
    return IdentityAudit(m, partition_total, necklace_total, tuple(excluded))
