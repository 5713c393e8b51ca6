"""Invariant sweeps comparing closed forms against oracles and each other.

Each check takes a size bound and returns ``None`` on success or the first
:class:`Counterexample` found.
"""

from __future__ import annotations

import cmath
import random
from dataclasses import dataclass
from typing import Callable

import mpmath

from . import genfunc, necklaces, numtheory, oracle, partitions
from .numtheory import binomial, divisors, gcd, ramanujan_sum

MAX_M_ORACLE = 16
MAX_M_DFT = 10
SUITES = ("oracle", "dft", "identities", "all")


@dataclass(frozen=True)
class Counterexample:
    check: str
    m: int
    t: int | None
    n: int | None
    expected: object
    got: object

    def __str__(self) -> str:
        return f"{self.check}: (m={self.m}, t={self.t}, n={self.n}, expected={self.expected}, got={self.got})"


def _cx(check, m, t, n, expected, got):
    return Counterexample(check, m, t, n, expected, got)


# -- oracle suite -----------------------------------------------------------


def check_q_vs_enumeration(max_m: int):
    for m in range(1, max_m + 1):
        for t in range(m + 1):
            table = oracle.enumerate_subset_sums(m, t).table
            for n in range(m):
                got = partitions.q_mod(m, t, n)
                if got != table[n]:
                    return _cx("q_mod vs enumeration", m, t, n, table[n], got)
    return None


def check_urn_decomposition(max_m: int):
    for m in range(1, min(max_m, 12) + 1):
        for t in range(m + 1):
            table = oracle.enumerate_subset_sums(m, t).table
            top = max(t, 0) * (m - 1)
            for n in range(m):
                got = sum(
                    oracle.q_recursive(m - 1, t, k) + oracle.q_recursive(m - 1, t - 1, k)
                    for k in range(n, top + 1, m)
                )
                if got != table[n]:
                    return _cx("zero-part decomposition", m, t, n, table[n], got)
    return None


def check_split(max_m: int):
    for m in range(1, min(max_m, 12) + 1):
        for t in range(m + 1):
            for n in range(m):
                if not partitions.q_split_check(m, t, n):
                    exp = partitions.q_mod(m, t, n)
                    got = partitions.q_star(m, t - 1, n) + partitions.q_star(m, t, n)
                    return _cx("Q = Q*(t-1) + Q*(t)", m, t, n, exp, got)
    return None


def check_maximizers(max_m: int):
    for m in range(1, min(max_m, 14) + 1):
        for t in range(m + 1):
            table = oracle.enumerate_subset_sums(m, t).table
            top = max(table)
            expected = tuple(n for n in range(m) if table[n] == top)
            rep = partitions.maximizers(m, t)
            if rep.maximizing_residues != expected or rep.max_value != top:
                return _cx("maximizers vs argmax", m, t, None, expected, rep.maximizing_residues)
    return None


def check_theorem3_vs_necklaces(max_m: int):
    for m in range(1, max_m + 1):
        for t in range(m + 1):
            hist = oracle.frequency_histogram(m, t) if m <= 14 else None
            for n in range(m):
                try:
                    case = necklaces.theorem3_dispatch(m, t, n)
                except AssertionError as exc:
                    return _cx("necklace correspondence", m, t, n, partitions.q_mod(m, t, n), str(exc))
                if hist is not None:
                    seen = sum(c for u, c in hist.items() if case.selector.contains(u))
                    if seen != case.count:
                        return _cx("correspondence vs enumeration", m, t, n, seen, case.count)
    return None


def check_necklace_formula_vs_enumeration(max_m: int):
    for m in range(1, min(max_m, 14) + 1):
        for t in range(m + 1):
            hist = oracle.frequency_histogram(m, t)
            for u in hist:
                if t and gcd(m, t) % u:
                    return _cx("frequency support", m, t, u, 0, hist[u])
            for n in range(1, m + 1):
                expected = sum(c for u, c in hist.items() if n % u == 0)
                got = necklaces.count_freq_dividing(m, t, n)
                if got != expected:
                    return _cx("necklace count vs enumeration", m, t, n, expected, got)
    return None


def check_q_recursive_floor(max_m: int):
    for m in range(min(max_m, 12) + 1):
        for t in range(m + 1):
            floor = t * (t + 1) // 2
            for n in range(floor):
                if oracle.q_recursive(m, t, n):
                    return _cx("q below minimum sum", m, t, n, 0, oracle.q_recursive(m, t, n))
    return None


# -- dft suite --------------------------------------------------------------


def check_generating_function(max_m: int):
    for m in range(1, min(max_m, 10) + 1):
        coeffs = genfunc.f_expand(m)
        for t, row in enumerate(coeffs):
            for n, c in enumerate(row):
                if c != oracle.q_recursive(m - 1, t, n):
                    return _cx("F_m(1,y,z) coefficients", m, t, n, oracle.q_recursive(m - 1, t, n), c)
    return None


def check_j_vs_upsilon(max_m: int):
    for m in range(1, min(max_m, 10) + 1):
        for s in range(1, m + 2):
            for t in range(s):
                for u in range(m):
                    ab = genfunc.AlphaBeta.of(m, u)
                    exact = genfunc.upsilon(s, t, ab.alpha, ab.beta)
                    approx = genfunc.j_from_qstar(m, t, s, u)
                    if abs(approx - exact) > 1e-6:
                        return _cx(f"J vs upsilon (s={s}, u={u})", m, t, None, exact, approx)
    return None


def check_qstar_via_dft(max_m: int):
    for m in range(1, min(max_m, 12) + 1):
        for s in range(1, m + 2):
            for t in range(s):
                for n in range(m):
                    exp = partitions.ddot_q_star_direct(m, t, s, n)
                    got = genfunc.qstar_via_dft(m, t, s, n)
                    if exp != got:
                        return _cx(f"Qdd* via DFT (s={s})", m, t, n, exp, got)
    return None


def check_f_closed_form(max_m: int, points: int = 100, near_pole: int = 10, seed: int = 0):
    rng = random.Random(seed)
    for m in range(1, max_m + 1):
        for u in range(1, max_m + 1):
            lam = genfunc.root_of_unity(m, u)
            coeffs = genfunc.f_closed_coeffs(m, u)
            for z in (1, -1):
                exact = sum(c * z**j for j, c in enumerate(coeffs))
                for label, val in (
                    ("direct", genfunc.f_direct(m, 1, lam, z)),
                    ("closed", genfunc.f_closed_eval(m, u, z)),
                ):
                    if abs(val - exact) > 1e-9 * max(1, abs(exact)):
                        return _cx(f"F {label} at z={z} (u={u})", m, None, None, exact, val)
            for _ in range(points):
                z = cmath.rect(rng.uniform(0.2, 1.2), rng.uniform(-cmath.pi, cmath.pi))
                direct = genfunc.f_direct(m, 1, lam, z)
                closed = genfunc.f_closed_eval(m, u, z)
                if abs(closed - direct) > 1e-9 * abs(direct):
                    return _cx(f"F closed form (u={u}, z={z:.4g})", m, None, None, direct, closed)
                # expanded form cancels badly; scale by the sum of |terms|
                poly = genfunc.eval_poly(coeffs, z)
                scale = sum(abs(c) * abs(z) ** j for j, c in enumerate(coeffs))
                if abs(poly - direct) > 1e-9 * scale:
                    return _cx(f"F coefficients (u={u}, z={z:.4g})", m, None, None, direct, poly)
            for _ in range(near_pole):
                z = -1 + cmath.rect(10 ** rng.uniform(-9, -3), rng.uniform(-cmath.pi, cmath.pi))
                direct = genfunc.f_direct(m, 1, lam, z)
                closed = genfunc.f_closed_eval(m, u, z)
                if abs(closed - direct) > 1e-4:
                    return _cx(f"F closed form near z=-1 (u={u}, z={z:.4g})", m, None, None, direct, closed)
            # value at the removable point vs the two-sided limit of the product
            at_pole = sum(c * (-1) ** j for j, c in enumerate(coeffs))
            h = 1e-7
            limit = (genfunc.f_direct(m, 1, lam, -1 + h) + genfunc.f_direct(m, 1, lam, -1 - h)) / 2
            if abs(limit - at_pole) > 1e-4:
                return _cx(f"F limit at z=-1 (u={u})", m, None, None, at_pole, limit)
    return None


# -- identities suite -------------------------------------------------------


def check_row_sums(max_m: int):
    for m in range(1, max_m + 1):
        for t in range(m + 1):
            got = partitions.q_table(m, t).total
            if got != binomial(m, t):
                return _cx("row sum", m, t, None, binomial(m, t), got)
    return None


def weighted_root_sum(m: int, weights) -> complex:
    """sum_n weights[n] * exp(2*pi*i*n/m), in 50-digit arithmetic.

    Weights reach ~1e10 at m = 40, where doubles alone leave ~1e-6 of noise.
    """
    with mpmath.workdps(50):
        total = mpmath.fsum(w * mpmath.expjpi(mpmath.mpf(2 * n) / m) for n, w in enumerate(weights))
        return complex(total)


def check_root_of_unity_vanishing(max_m: int):
    for m in range(2, max_m + 1):
        for t in range(1, m):
            z = weighted_root_sum(m, partitions.q_table(m, t).values)
            if abs(z.real) > 1e-6 or abs(z.imag) > 1e-6:
                return _cx("root-of-unity vanishing", m, t, None, 0, z)
    return None


def check_gcd_symmetry(max_m: int):
    for m in range(1, min(max_m, 20) + 1):
        for t in range(m + 1):
            seen: dict[int, int] = {}
            for n in range(m):
                g, v = gcd(n, t, m), partitions.q_mod(m, t, n)
                if seen.setdefault(g, v) != v:
                    return _cx("gcd symmetry", m, t, n, seen[g], v)
    return None


def check_inversion_system(max_m: int):
    for m in range(1, min(max_m, 16) + 1):
        for s in range(1, m + 2):
            for t in range(s):
                for n in range(m):
                    exp = partitions.ddot_q_direct(m, t, s, n)
                    got = partitions.ddot_q(m, t, s, n)
                    if exp != got:
                        return _cx(f"Qdd closed form (s={s})", m, t, n, exp, got)
    return None


def check_a_identities(max_m: int):
    for m in range(1, max_m + 1):
        for t in range(m + 2):
            a = partitions.a_coeff(m, t)
            if a < 0:
                return _cx("A non-negative", m, t, None, ">= 0", a)
            if t <= m and a != partitions.q_mod(m, t, 1):
                return _cx("A = Q(1)", m, t, 1, partitions.q_mod(m, t, 1), a)
            if not partitions.binomial_via_a_check(m, t):
                return _cx("binomial via A", m, t, None, binomial(m, t), "mismatch")
            for n in range(m):
                if partitions.q_via_a(m, t, n) != partitions.q_mod(m, t, n):
                    return _cx("Q via A", m, t, n, partitions.q_mod(m, t, n), partitions.q_via_a(m, t, n))
    return None


def random_integer_function(rng: random.Random, lo: int = -50, hi: int = 50) -> Callable[[int, int], int]:
    """A lazily sampled integer function of two arguments, fixed once drawn."""
    values: dict[tuple[int, int], int] = {}

    def x(a: int, b: int) -> int:
        if (a, b) not in values:
            values[a, b] = rng.randint(lo, hi)
        return values[a, b]

    return x


def check_mobius_variant_inversion(max_m: int, trials: int = 50, seed: int = 1):
    rng = random.Random(seed)
    for _ in range(trials):
        x = random_integer_function(rng)

        def y(a, b):
            return partitions.signed_divisor_transform(x, a, b)

        for m in range(1, max_m + 1):
            for t in range(0, m + 1):
                back = partitions.signed_mobius_inverse(y, m, t)
                if back != x(m, t):
                    return _cx("signed Möbius inversion", m, t, None, x(m, t), back)
    return None


def check_ramanujan_expansion(max_m: int, trials: int = 50, seed: int = 2, uv_max: int = 4):
    rng = random.Random(seed)
    for _ in range(trials):
        x = random_integer_function(rng)
        for m in range(1, max_m + 1):
            for n in range(m):
                for u in range(1, uv_max + 1):
                    for v in range(1, uv_max + 1):
                        lhs = partitions.ramanujan_expansion(x, m, n, u, v)
                        rhs = partitions.ramanujan_expansion_by_pairs(x, m, n, u, v)
                        if lhs != rhs:
                            return _cx(f"Ramanujan expansion (u={u}, v={v})", m, None, n, lhs, rhs)
    return None


def check_necklace_decomposition(max_m: int):
    for m in range(1, max_m + 1):
        for t in range(m + 1):
            for n in range(1, m + 1):
                a = necklaces.count_freq_dividing(m, t, n)
                b = necklaces.count_freq_dividing_by_cutting(m, t, n)
                if a != b:
                    return _cx("necklace cutting decomposition", m, t, n, a, b)
    return None


def check_subtraction_identity(max_m: int):
    for m in range(2, min(max_m, 16) + 1, 2):
        for t in range(2, m + 1, 2):
            if numtheory.v2(m) < numtheory.v2(t):
                continue
            for n in range(1, m):
                exp = partitions.q_mod(m, t, n)
                got = necklaces.subtraction_identity_rhs(m, t, n)
                if exp != got:
                    return _cx("subtraction identity", m, t, n, exp, got)
    return None


def check_identity_audit(max_m: int):
    for m in range(1, max_m + 1):
        audit = necklaces.identity_audit(m)
        if not audit.balanced:
            return _cx("identity audit", m, None, 0, audit.partition_total, audit.necklace_total - audit.excluded_total)
        if m % 2 and audit.excluded:
            return _cx("identity audit (odd m)", m, None, 0, (), audit.excluded)
    return None


def check_ramanujan_sums(max_m: int):
    for d in range(1, max_m + 1):
        if sum(ramanujan_sum(d, n) for n in range(d)) != (d == 1):
            return _cx("sum of c_d over a period", d, None, None, int(d == 1), "mismatch")
        for n in range(max_m + 1):
            approx = sum(genfunc.root_of_unity(d, j * n) for j in range(1, d + 1) if gcd(j, d) == 1)
            if abs(approx.real - ramanujan_sum(d, n)) > 1e-6:
                return _cx("c_d(n) vs exponential sum", d, None, n, approx.real, ramanujan_sum(d, n))
    return None


def check_divisor_endo(max_m: int, u_max: int = 30):
    for m in range(1, max_m + 1):
        for u in range(1, u_max + 1):
            image = numtheory.divisor_endo_image(m, u)
            if image != set(divisors(m // gcd(u, m))):
                return _cx(f"divisor map image (u={u})", m, None, None, divisors(m // gcd(u, m)), image)
            pre = [numtheory.divisor_endo_preimage(m, u, dp) for dp in sorted(image)]
            if sum(map(len, pre)) != len(divisors(m)) or set().union(*pre) != set(divisors(m)):
                return _cx(f"divisor map preimages (u={u})", m, None, None, divisors(m), pre)
    return None


# (name, suite, check)
CHECKS: list[tuple[str, str, Callable]] = [
    ("q_mod = subset enumeration", "oracle", check_q_vs_enumeration),
    ("zero-part decomposition", "oracle", check_urn_decomposition),
    ("Q = Q* split", "oracle", check_split),
    ("maximizers = argmax", "oracle", check_maximizers),
    ("necklace counts = enumeration", "oracle", check_necklace_formula_vs_enumeration),
    ("necklace correspondence", "oracle", check_theorem3_vs_necklaces),
    ("q below minimum sum", "oracle", check_q_recursive_floor),
    ("generating function", "dft", check_generating_function),
    ("J = upsilon", "dft", check_j_vs_upsilon),
    ("Qdd* via DFT", "dft", check_qstar_via_dft),
    ("F closed form", "dft", check_f_closed_form),
    ("Ramanujan sums", "identities", check_ramanujan_sums),
    ("divisor map", "identities", check_divisor_endo),
    ("row sums", "identities", check_row_sums),
    ("root-of-unity vanishing", "identities", check_root_of_unity_vanishing),
    ("gcd symmetry", "identities", check_gcd_symmetry),
    ("Qdd closed form", "identities", check_inversion_system),
    ("A identities", "identities", check_a_identities),
    ("signed Möbius inversion", "identities", check_mobius_variant_inversion),
    ("Ramanujan expansion", "identities", check_ramanujan_expansion),
    ("necklace decomposition", "identities", check_necklace_decomposition),
    ("subtraction identity", "identities", check_subtraction_identity),
    ("identity audit", "identities", check_identity_audit),
]


def run_suite(suite: str, max_m: int):
    """Yield (name, counterexample-or-None) for each check in ``suite``."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    for name, which, check in CHECKS:
        if suite != "all" and which != suite:
            continue
        bound = max_m
        if which == "oracle":
            bound = min(bound, MAX_M_ORACLE)
        elif which == "dft":
            bound = min(bound, MAX_M_DFT)
        yield name, check(bound)
