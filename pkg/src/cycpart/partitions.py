"""Closed-form counts of partitions of residues mod m into t distinct parts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .numtheory import (
    binomial,
    divisors,
    gcd,
    mobius,
    ramanujan_sum,
    sign_exponent_parity,
    v2,
)
from .oracle import q_recursive


def _exact_div(total: int, m: int, what: str) -> int:
    q, r = divmod(total, m)
    assert r == 0, f"{what}: divisor sum {total} is not a multiple of {m}"
    return q


@cache
def _q_by_divisor(m: int, t: int) -> tuple[tuple[int, int], ...]:
    # (d, signed binomial) pairs; only n enters through c_d(n).
    return tuple(
        (d, sign_exponent_parity(t, d) * binomial(m // d, t // d))
        for d in divisors(gcd(m, t))
    )


def q_mod(m: int, t: int, n: int) -> int:
    """Number of t-element subsets of Z/mZ summing to n mod m."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if t < 0 or t > m:
        return 0
    total = sum(w * ramanujan_sum(d, n) for d, w in _q_by_divisor(m, t))
    return _exact_div(total, m, f"Q_{{{m},{t}}}({n})")


@dataclass(frozen=True)
class CountTable:
    m: int
    t: int
    values: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.values)

    def __getitem__(self, n: int) -> int:
        return self.values[n % self.m]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return self.m


def q_table(m: int, t: int) -> CountTable:
    # values only depend on gcd(n, t, m), so compute each class once
    cache_by_gcd: dict[int, int] = {}
    values = []
    for n in range(m):
        g = gcd(n, t, m)
        if g not in cache_by_gcd:
            cache_by_gcd[g] = q_mod(m, t, n)
        values.append(cache_by_gcd[g])
    return CountTable(m, t, tuple(values))


def q_star(m: int, t: int, n: int) -> int:
    """Like :func:`q_mod` but with the part 0 mod m forbidden."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if t < 0:
        return 0
    residue = n % m
    top = t * (m - 1)
    return sum(q_recursive(m - 1, t, k) for k in range(residue, top + 1, m))


def q_split_check(m: int, t: int, n: int) -> bool:
    return q_mod(m, t, n) == q_star(m, t - 1, n) + q_star(m, t, n)


def ddot_q_direct(m: int, t: int, s: int, n: int) -> int:
    """Sum of Q_{m,u}(n) over 0 <= u <= m with u = t (mod s)."""
    return sum(q_mod(m, u, n) for u in range(m + 1) if (u - t) % s == 0)


def ddot_q(m: int, t: int, s: int, n: int) -> int:
    """Sum of Q_{m,u}(n) over u = t (mod s), via the Ramanujan-sum double sum."""
    if m < 1 or s < 1:
        raise ValueError("m and s must be positive")
    total = 0
    for d in divisors(m):
        inner = 0
        for j in range(0, m + 1, d):
            if (j - t) % s == 0:
                inner += sign_exponent_parity(j, d) * binomial(m // d, j // d)
        if inner:
            total += ramanujan_sum(d, n) * inner
    return _exact_div(total, m, f"Qdd_{{{m},{t},{s}}}({n})")


def ddot_q_star_direct(m: int, t: int, s: int, n: int) -> int:
    return sum(q_star(m, u, n) for u in range(m + 1) if (u - t) % s == 0)


@cache
def a_coeff(m: int, t: int) -> int:
    """Möbius-weighted coefficient A(m, t); equals Q_{m,t}(1)."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if t < 0 or t > m:
        return 0
    total = sum(
        sign_exponent_parity(t, d) * mobius(d) * binomial(m // d, t // d)
        for d in divisors(gcd(m, t))
    )
    value = _exact_div(total, m, f"A({m},{t})")
    assert value >= 0, f"A({m},{t}) = {value} is negative"
    return value


def q_via_a(m: int, t: int, n: int) -> int:
    if t < 0 or t > m:
        return 0
    return sum(
        sign_exponent_parity(t, d) * a_coeff(m // d, t // d)
        for d in divisors(gcd(n, t, m))
    )


def binomial_via_a_check(m: int, t: int) -> bool:
    if t < 0 or t > m:
        return True
    rhs = sum(
        sign_exponent_parity(t, d) * (m // d) * a_coeff(m // d, t // d)
        for d in divisors(gcd(m, t))
    )
    return binomial(m, t) == rhs


def _check_t(m: int, t: int) -> None:
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if not 0 <= t <= m:
        raise ValueError(f"t must lie in [0, {m}], got {t}")


@dataclass(frozen=True)
class MaximizerReport:
    m: int
    t: int
    case_id: int
    witness_gcd: int
    maximizing_residues: tuple[int, ...]
    max_value: int


def maximizers(m: int, t: int) -> MaximizerReport:
    """Residues n at which Q_{m,t}(n) is largest, classified by gcd(n, t, m)."""
    _check_t(m, t)
    g = gcd(t, m)
    if g % 2:
        case_id, witness = 1, g
    elif v2(g) < v2(t):
        case_id, witness = 2, g
    else:
        case_id, witness = 3, g // 2
    residues = tuple(n for n in range(m) if gcd(n, t, m) == witness)
    return MaximizerReport(m, t, case_id, witness, residues, q_mod(m, t, residues[0]))


@dataclass(frozen=True)
class UrnDistribution:
    m: int
    t: int
    probabilities: tuple[Fraction, ...]


def urn_distribution(m: int, t: int) -> UrnDistribution:
    """Law of (sum of t labels drawn from {0..m-1}) mod m."""
    _check_t(m, t)
    total = binomial(m, t)
    probs = tuple(Fraction(v, total) for v in q_table(m, t))
    assert sum(probs) == 1
    return UrnDistribution(m, t, probs)


@dataclass(frozen=True)
class Diagram:
    m: int
    t: int
    heights: tuple[int, ...]

    @property
    def boxes(self) -> int:
        return sum(self.heights)

    def ascii(self) -> str:
        top = max(self.heights, default=0)
        rows = [
            "".join("#" if h >= level else "." for h in self.heights)
            for level in range(top, 0, -1)
        ]
        return "\n".join(rows) + ("\n" if rows else "")

    def svg(self, scale: int = 4) -> str:
        top = max(self.heights, default=0)
        width, height = self.m * scale, max(top, 1) * scale
        rects = [
            f'  <rect x="{n * scale}" y="{(top - level) * scale}" '
            f'width="{scale}" height="{scale}" fill="black" stroke="white" stroke-width="0.5"/>'
            for n, h in enumerate(self.heights)
            for level in range(1, h + 1)
        ]
        return "\n".join(
            [
                '<?xml version="1.0" encoding="UTF-8"?>',
                f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
                f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
                f"  <title>Q_{{{self.m},{self.t}}}(n) wall diagram</title>",
                *rects,
                "</svg>",
                "",
            ]
        )


def diagram(m: int, t: int) -> Diagram:
    """Bottom-justified column chart of n -> Q_{m,t}(n)."""
    return Diagram(m, t, q_table(m, t).values)


# Identities stated for arbitrary functions X; used by the verification sweeps.


def signed_divisor_transform(x, m: int, t: int):
    """Y(m, t) = sum_{d | (m,t)} sign(t, d) * (m/d) * X(m/d, t/d)."""
    return sum(
        sign_exponent_parity(t, d) * (m // d) * x(m // d, t // d) for d in divisors(gcd(m, t))
    )


def signed_mobius_inverse(y, m: int, t: int) -> Fraction:
    """X(m, t) = (1/m) sum_{d | (m,t)} sign(t, d) * mu(d) * Y(m/d, t/d)."""
    total = sum(
        sign_exponent_parity(t, d) * mobius(d) * y(m // d, t // d) for d in divisors(gcd(m, t))
    )
    return Fraction(total, m)


def ramanujan_expansion(x, m: int, n: int, u: int, v: int) -> Fraction:
    """(1/(muv)) sum_{d | m} c_d(n) X(mu/d, dv)."""
    total = sum(ramanujan_sum(d, n) * x(m * u // d, d * v) for d in divisors(m))
    return Fraction(total, m * u * v)


def ramanujan_expansion_by_pairs(x, m: int, n: int, u: int, v: int) -> Fraction:
    """The same quantity as a double sum over d1*d2 | m with d1 | n."""
    total = Fraction(0)
    for e in divisors(m):
        for d1 in divisors(e):
            if n % d1:
                continue
            d2 = e // d1
            mu = mobius(d2)
            if mu:
                total += Fraction(d1 * mu * x(m * u // e, e * v), m * u * v)
    return total
