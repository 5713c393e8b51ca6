"""Exact elementary number theory: gcd, valuations, divisors, Möbius, totient,
Ramanujan sums and binomials.

Everything here returns Python ints, so no result is ever rounded.
"""

from __future__ import annotations

import math
from functools import cache

INFINITY = math.inf
"""Valuation of zero. Compares greater than every finite valuation."""


def gcd(*args: int) -> int:
    """Greatest common divisor of any number of integers; gcd(0, g) == |g|."""
    return math.gcd(*args)


def v2(n: int) -> int | float:
    """2-adic valuation of ``n``, with ``v2(0) == INFINITY``."""
    if n == 0:
        return INFINITY
    n = abs(n)
    return (n & -n).bit_length() - 1


def _check_positive(n: int, name: str = "n") -> None:
    if n <= 0:
        raise ValueError(f"{name} must be a positive integer, got {n}")


@cache
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n >= 1`` by trial division, as (p, e) pairs."""
    _check_positive(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@cache
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of ``n`` in ascending order."""
    _check_positive(n)
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def mobius(n: int) -> int:
    _check_positive(n)
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def totient(n: int) -> int:
    _check_positive(n)
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def ramanujan_sum(d: int, n: int) -> int:
    """Ramanujan's sum c_d(n) via Hölder's closed form.

    c_d(n) = mu(d/g) * phi(d) / phi(d/g) with g = gcd(d, n). Depends only on
    n mod d.
    """
    _check_positive(d, "d")
    g = gcd(d, n)
    q = d // g
    mu = mobius(q)
    if mu == 0:
        return 0
    return mu * (totient(d) // totient(q))


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def sign_exponent_parity(t: int, d: int) -> int:
    """(-1)**(t*(d+1)/d) for d | t, evaluated as the parity of t + t/d."""
    if t % d:
        raise ValueError(f"{d} does not divide {t}")
    return -1 if (t + t // d) % 2 else 1


def divisor_endo(m: int, u: int, d: int) -> int:
    """The divisor map d -> d / gcd(u, d) on the divisors of ``m``."""
    _check_positive(m, "m")
    _check_positive(u, "u")
    if d <= 0 or m % d:
        raise ValueError(f"{d} is not a divisor of {m}")
    return d // gcd(u, d)


def divisor_endo_image(m: int, u: int) -> set[int]:
    return {divisor_endo(m, u, d) for d in divisors(m)}


def divisor_endo_preimage(m: int, u: int, dprime: int) -> set[int]:
    """All divisors d of ``m`` with d / gcd(u, d) == dprime (possibly empty)."""
    _check_positive(m, "m")
    _check_positive(u, "u")
    return {d for d in divisors(m) if d // gcd(u, d) == dprime}


def coprime_part(u: int, k: int) -> int:
    """Largest divisor of ``u`` sharing no prime factor with ``k``."""
    g = gcd(u, k)
    while g > 1:
        u //= g
        g = gcd(u, g)
    return u
