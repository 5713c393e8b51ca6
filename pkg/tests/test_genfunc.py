import cmath
import random

import pytest

from cycpart import genfunc as G
from cycpart.numtheory import binomial, gcd
from cycpart.oracle import q_recursive
from cycpart.partitions import ddot_q_star_direct, q_star


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def divide_by_one_plus_z(num):
    # synthetic division by (z + 1); asserts zero remainder
    coeffs = list(num)
    quot = [0] * (len(coeffs) - 1)
    for k in range(len(coeffs) - 1, 0, -1):
        quot[k - 1] = coeffs[k]
        coeffs[k - 1] -= coeffs[k]
    assert coeffs[0] == 0
    return quot


def quotient_form_coeffs(m, u):
    beta = gcd(m, u)
    alpha = m // beta
    base = [1] + [0] * (alpha - 1) + [-((-1) ** alpha)]  # 1 - (-z)^alpha
    num = [1]
    for _ in range(beta):
        num = poly_mul(num, base)
    return tuple(divide_by_one_plus_z(num))


def test_closed_coeff_examples():
    assert quotient_form_coeffs(6, 2) == (1, -1, 1, 1, -1, 1)
    assert G.f_closed_coeffs(6, 2) == (1, -1, 1, 1, -1, 1)
    assert G.f_closed_coeffs(5, 1) == (1, -1, 1, -1, 1)
    for m in range(1, 12):
        assert G.f_closed_coeffs(m, m) == tuple(binomial(m - 1, k) for k in range(m))


def test_closed_coeffs_match_long_division():
    for m in range(1, 25):
        for u in range(1, 25):
            assert G.f_closed_coeffs(m, u) == quotient_form_coeffs(m, u)


def test_alpha_beta():
    ab = G.AlphaBeta.of(6, 2)
    assert (ab.alpha, ab.beta) == (3, 2)
    ab = G.AlphaBeta.of(6, 0)
    assert (ab.alpha, ab.beta) == (1, 6)
    for m in range(1, 30):
        for u in range(0, 40):
            ab = G.AlphaBeta.of(m, u)
            assert ab.alpha * ab.beta == m


def test_f_direct_conventions():
    assert G.f_direct(1, 2, 3j, 5) == 1
    assert G.f_direct(0, 2, 3j, 5) == 0
    for m in range(1, 20):
        assert G.f_direct(m, 1, 1, 1) == 2 ** (m - 1)
    with pytest.raises(ValueError):
        G.f_direct(-1, 1, 1, 1)


def test_closed_eval_examples():
    assert G.f_closed_eval(6, 2, 1) == 2
    assert G.f_closed_eval(6, 2, -1) == 0
    assert sum(c * (-1) ** j for j, c in enumerate(G.f_closed_coeffs(6, 2))) == 0


def test_closed_eval_matches_product():
    rng = random.Random(7)
    for m in range(1, 51):
        for u in range(1, 51, 7):
            lam = G.root_of_unity(m, u)
            for _ in range(20):
                z = cmath.rect(rng.uniform(0.2, 1.2), rng.uniform(-cmath.pi, cmath.pi))
                direct = G.f_direct(m, 1, lam, z)
                assert abs(G.f_closed_eval(m, u, z) - direct) <= 1e-9 * abs(direct)


def test_row_sum_at_one():
    for m in range(1, 51):
        for u in range(1, 51):
            lam = G.root_of_unity(m, u)
            exact = sum(G.f_closed_coeffs(m, u))
            assert abs(G.f_direct(m, 1, lam, 1) - exact) <= 1e-9 * max(1, abs(exact))


def test_removable_point():
    for m in range(1, 51):
        for u in range(1, 51, 3):
            lam = G.root_of_unity(m, u)
            at_pole = sum(c * (-1) ** j for j, c in enumerate(G.f_closed_coeffs(m, u)))
            assert G.f_closed_eval(m, u, -1) == at_pole
            h = 1e-7
            limit = (G.f_direct(m, 1, lam, -1 + h) + G.f_direct(m, 1, lam, -1 - h)) / 2
            assert abs(limit - at_pole) <= 1e-4
            z = -1 + 3e-5j
            assert abs(G.f_closed_eval(m, u, z) - G.f_direct(m, 1, lam, z)) <= 1e-4


def test_upsilon_examples():
    assert G.upsilon(7, 0, 6, 1) == 1
    assert G.upsilon(2, 0, 1, 2) == 1
    for alpha in range(1, 8):
        for beta in range(1, 8):
            full = sum(G.f_closed_coeffs(alpha * beta, beta))
            assert G.upsilon(1, 0, alpha, beta) == full == (1 - (-1) ** alpha) ** beta // 2


def test_generating_function_expansion():
    for m in range(1, 11):
        coeffs = G.f_expand(m)
        for t, row in enumerate(coeffs):
            for n, c in enumerate(row):
                assert c == q_recursive(m - 1, t, n)


def test_j_examples():
    for m, t, s in [(4, 1, 2), (6, 0, 1), (5, 2, 3)]:
        at_zero = G.j_from_qstar(m, t, s, 0)
        assert abs(at_zero - sum(ddot_q_star_direct(m, t, s, n) for n in range(m))) < 1e-9
    assert abs(G.j_from_qstar(6, 2, 7, 1) - G.upsilon(7, 2, 6, 1)) < 1e-6
    assert abs(G.j_from_qstar(6, 0, 1, 2) - G.upsilon(1, 0, 3, 2)) < 1e-6


def test_j_matches_upsilon():
    for m in range(1, 11):
        for s in range(1, m + 2):
            for t in range(s):
                for u in range(m + 1):
                    ab = G.AlphaBeta.of(m, u)
                    assert abs(G.j_from_qstar(m, t, s, u) - G.upsilon(s, t, ab.alpha, ab.beta)) <= 1e-6


def test_qstar_via_dft_examples():
    assert G.qstar_via_dft(6, 2, 7, 0) == q_star(6, 2, 0) == 2
    assert G.qstar_via_dft(6, 2, 7, 1) == q_star(6, 2, 1) == 2
    for m in range(1, 10):
        for s in range(1, 12):
            assert G.qstar_via_dft(m, 0, s, 0) >= 1
        assert G.qstar_via_dft(m, 0, m + 1, 0) == 1


def test_qstar_via_dft_sweep():
    for m in range(1, 13):
        for s in range(1, m + 2):
            for t in range(-1, s + 1):
                for n in range(m):
                    assert G.qstar_via_dft(m, t, s, n) == ddot_q_star_direct(m, t, s, n)
                    assert G.qstar_via_dft(m, t, s, n) == G.ddot_q_star_recursive(m, t, s, n)
