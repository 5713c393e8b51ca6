"""Exit criteria for the package. Each test prints one PASS/FAIL line in the
terminal summary (see conftest.py)."""

from itertools import combinations

from cycpart import genfunc, necklaces, partitions, verify
from cycpart.numtheory import binomial
from cycpart.oracle import enumerate_necklaces, enumerate_subset_sums, frequency_histogram, q_recursive

from tests.acceptance_log import criterion


def test_c01_eight_bead_headline():
    with criterion(1, "m=8: 32 partitions of 0, 36 necklaces, 4 exclusions", budget=1.0):
        audit = necklaces.identity_audit(8)
        assert audit.partition_total == 32
        assert sum(partitions.q_mod(8, t, 0) for t in range(9)) == 32
        assert audit.necklace_total == 36
        assert sum(len(enumerate_necklaces(8, t)) for t in range(9)) == 36
        assert audit.excluded == ((2, 2, 1), (4, 4, 1), (6, 2, 1), (8, 8, 1))


def test_c02_oracle_equivalence():
    with criterion(2, "q_mod = subset enumeration, m <= 14", budget=30.0):
        for m in range(1, 15):
            for t in range(m + 1):
                table = enumerate_subset_sums(m, t).table
                assert tuple(partitions.q_mod(m, t, n) for n in range(m)) == table, (m, t)


def test_c03_necklace_correspondence():
    with criterion(3, "necklace correspondence, m <= 16 (oracle m <= 14)", budget=60.0):
        for m in range(1, 17):
            for t in range(m + 1):
                hist = frequency_histogram(m, t) if m <= 14 else None
                for n in range(m):
                    case = necklaces.theorem3_dispatch(m, t, n)
                    if hist is not None:
                        seen = sum(c for u, c in hist.items() if case.selector.contains(u))
                        assert seen == case.count == partitions.q_mod(m, t, n), (m, t, n)


def test_c04_maximizers():
    with criterion(4, "maximizer residues = brute-force argmax, m <= 14"):
        for m in range(1, 15):
            for t in range(m + 1):
                table = enumerate_subset_sums(m, t).table
                top = max(table)
                rep = partitions.maximizers(m, t)
                assert rep.maximizing_residues == tuple(n for n in range(m) if table[n] == top), (m, t)
                assert rep.max_value == top


def test_c05_row_sums():
    with criterion(5, "sum_n Q_{m,t}(n) = C(m,t), m <= 40"):
        for m in range(1, 41):
            for t in range(m + 1):
                assert sum(partitions.q_mod(m, t, n) for n in range(m)) == binomial(m, t), (m, t)


def test_c06_root_of_unity_vanishing():
    with criterion(6, "|sum_n Q_{m,t}(n) lambda^n| <= 1e-6, 0 < t < m <= 40"):
        for m in range(2, 41):
            for t in range(1, m):
                z = verify.weighted_root_sum(m, partitions.q_table(m, t).values)
                assert abs(z) <= 1e-6, (m, t, z)


def test_c07_generating_function():
    with criterion(7, "F_m(1,y,z) coefficients = q recursion, m <= 10"):
        for m in range(1, 11):
            for t, row in enumerate(genfunc.f_expand(m)):
                for n, c in enumerate(row):
                    assert c == q_recursive(m - 1, t, n), (m, t, n)


def test_c08_dft_chain():
    with criterion(8, "Qdd* via DFT exact for m <= 12; J ~ upsilon within 1e-6 for m <= 10"):
        assert verify.check_qstar_via_dft(12) is None
        assert verify.check_j_vs_upsilon(10) is None


def test_c09_f_closed_form():
    with criterion(9, "F closed form vs product, 100 random z per (m,u), m,u <= 50"):
        cx = verify.check_f_closed_form(50, points=100)
        assert cx is None, str(cx)


def test_c10_a_identities():
    with criterion(10, "A-identities m <= 24, A >= 0 for m <= 40"):
        for m in range(1, 25):
            for t in range(m + 1):
                assert partitions.binomial_via_a_check(m, t), (m, t)
                assert partitions.a_coeff(m, t) == partitions.q_mod(m, t, 1)
                for n in range(m):
                    assert partitions.q_via_a(m, t, n) == partitions.q_mod(m, t, n), (m, t, n)
        for m in range(1, 41):
            for t in range(m + 3):
                assert partitions.a_coeff(m, t) >= 0


def test_c11_inversion_properties():
    with criterion(11, "signed Möbius inversion and Ramanujan expansion, 50 random X each"):
        cx = verify.check_mobius_variant_inversion(24, trials=50)
        assert cx is None, str(cx)
        cx = verify.check_ramanujan_expansion(24, trials=50)
        assert cx is None, str(cx)


def test_c12_spot_values():
    with criterion(12, "Q_{6,2} table, Q_{8,4}(2) = |N_{8,4,<4>}| = 10, aperiodic(8,2) = 3"):
        pairs = [0] * 6
        for a, b in combinations(range(6), 2):
            pairs[(a + b) % 6] += 1
        assert pairs == [2, 3, 2, 3, 2, 3]
        assert partitions.q_table(6, 2).values == (2, 3, 2, 3, 2, 3)

        assert sum(1 for c in combinations(range(8), 4) if sum(c) % 8 == 2) == 10
        assert sum(1 for w in enumerate_necklaces(8, 4) if 4 % w.frequency == 0) == 10
        assert partitions.q_mod(8, 4, 2) == 10
        assert necklaces.count_freq_dividing(8, 4, 4) == 10

        assert sum(1 for w in enumerate_necklaces(8, 2) if w.frequency == 1) == 3
        assert necklaces.count_aperiodic(8, 2) == 3
