"""Generating-function and root-of-unity machinery.

The exact routes (:func:`f_closed_coeffs`, :func:`upsilon`,
:func:`qstar_via_dft`) use integers only. Complex floating point appears in
:func:`f_direct`, :func:`f_closed_eval` and :func:`j_from_qstar`, which
exist to cross-check the exact routes.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .numtheory import binomial, divisors, gcd, ramanujan_sum
from .oracle import q_recursive
from .partitions import _exact_div

# below this |1 + z| the quotient form loses too many digits
_POLE_GUARD = 1e-3


def root_of_unity(m: int, k: int = 1) -> complex:
    """exp(2*pi*i*k/m)."""
    return cmath.exp(2j * cmath.pi * (k % m) / m)


@dataclass(frozen=True)
class AlphaBeta:
    alpha: int
    beta: int

    @classmethod
    def of(cls, m: int, u: int) -> AlphaBeta:
        # u == 0 (mod m) is read as u == m: alpha = 1, beta = m
        beta = gcd(m, u % m) or m
        return cls(m // beta, beta)


def f_direct(m: int, x: complex, y: complex, z: complex) -> complex:
    """prod_{j=1}^{m-1} (x + z*y**j), with F_0 = 0 and F_1 = 1."""
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    if m == 0:
        return 0j
    out = complex(1)
    yj = complex(1)
    for _ in range(1, m):
        yj *= y
        out *= x + z * yj
    return out


def f_closed_coeffs(m: int, u: int) -> tuple[int, ...]:
    """Integer coefficients of F_m(1, lambda_m**u, z) in powers of z (length m)."""
    if m < 1 or u < 0:
        raise ValueError("m must be positive and u non-negative")
    ab = AlphaBeta.of(m, u)
    coeffs = []
    for j in range(m):
        k = j // ab.alpha
        sign = -1 if (k + j) % 2 else 1
        coeffs.append(sign * binomial(ab.beta - 1, k))
    return tuple(coeffs)


def eval_poly(coeffs, z: complex) -> complex:
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def f_closed_eval(m: int, u: int, z: complex) -> complex:
    """(1 - (-z)**alpha)**beta / (1 + z), as a polynomial near the removable pole.

    Near z = -1 the polynomial is evaluated in its factored form
    (1 - z + ... + (-z)**(alpha-1)) * (1 - (-z)**alpha)**(beta-1); expanding
    the second factor would cancel away about 2**beta ulps.
    """
    ab = AlphaBeta.of(m, u)
    if abs(1 + z) < _POLE_GUARD:
        geometric = eval_poly([(-1) ** k for k in range(ab.alpha)], z)
        return geometric * (1 - (-z) ** ab.alpha) ** (ab.beta - 1)
    return (1 - (-z) ** ab.alpha) ** ab.beta / (1 + z)


def upsilon(s: int, t: int, alpha: int, beta: int) -> int:
    """Sum of the F-coefficients (alpha, beta) whose index is t mod s."""
    if s < 1 or alpha < 1 or beta < 1:
        raise ValueError("s, alpha and beta must be positive")
    total = 0
    for j in range(t % s, alpha * beta, s):
        k = j // alpha
        total += (-1 if (k + j) % 2 else 1) * binomial(beta - 1, k)
    return total


def ddot_q_star_recursive(m: int, t: int, s: int, n: int) -> int:
    """Q-double-dot-star straight from the integer partition recursion."""
    residue = n % m
    total = 0
    for u in range(m):
        if (u - t) % s:
            continue
        total += sum(q_recursive(m - 1, u, k) for k in range(residue, u * (m - 1) + 1, m))
    return total


def j_from_qstar(m: int, t: int, s: int, u: int) -> complex:
    """Discrete Fourier transform of n -> Qdd*_{m,t,s}(n) at frequency u."""
    if m < 1 or s < 1:
        raise ValueError("m and s must be positive")
    return sum(
        ddot_q_star_recursive(m, t, s, n) * root_of_unity(m, u * n) for n in range(m)
    )


def qstar_via_dft(m: int, t: int, s: int, n: int) -> int:
    """Qdd*_{m,t,s}(n) exactly, from upsilon and Ramanujan sums."""
    if m < 1 or s < 1:
        raise ValueError("m and s must be positive")
    total = sum(upsilon(s, t, d, m // d) * ramanujan_sum(d, n) for d in divisors(m))
    return _exact_div(total, m, f"Qdd*_{{{m},{t},{s}}}({n})")



def f_expand(m: int) -> list[list[int]]:
    """Integer coefficients of prod_{j=1}^{m-1} (1 + z*y**j).

    ``coeffs[t][n]`` is the coefficient of y**n z**t.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    top = m * (m - 1) // 2
    coeffs = [[0] * (top + 1) for _ in range(m)]
    coeffs[0][0] = 1
    for j in range(1, m):
        for t in range(j, 0, -1):
            row, prev = coeffs[t], coeffs[t - 1]
            for n in range(top, j - 1, -1):
                row[n] += prev[n - j]
    return coeffs
