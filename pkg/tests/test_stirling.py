import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ekrperm import stirling as S
from oracles import brute_count


@pytest.mark.parametrize(
    "n,k,expected",
    [(0, 0, 1), (7, 7, 1), (5, 1, 24), (4, 2, 11), (5, 2, 50), (3, 0, 0), (0, 3, 0), (2, 5, 0)],
)
def test_recurrence_values(n, k, expected):
    assert S.stirling_recurrence(n, k) == expected


@pytest.mark.parametrize("n", range(1, 8))
def test_recurrence_matches_brute_force(n):
    for k in range(1, n + 1):
        assert S.stirling_recurrence(n, k) == brute_count(n, k)


def test_series_values():
    assert S.stirling_series(5, 1) == 24
    assert S.stirling_series(5, 3) == 35
    assert S.stirling_series(3, 7) == 0
    with pytest.raises(ValueError):
        S.stirling_series(0, 1)


def test_harmonic_values():
    assert S.stirling_harmonic_k2(2) == 1
    assert S.stirling_harmonic_k2(5) == 50
    assert S.stirling_harmonic_k2(8) == 13068
    with pytest.raises(ValueError):
        S.stirling_harmonic_k2(1)


def test_three_routes_agree():
    for n in range(0, 31):
        for k in range(0, n + 1):
            rec = S.stirling_recurrence(n, k)
            if n >= 1 and k >= 1:
                assert S.stirling_series(n, k) == rec
        if n >= 2:
            assert S.stirling_harmonic_k2(n) == S.stirling_recurrence(n, 2)


@pytest.mark.parametrize("n", range(0, 31))
def test_row_sums_are_factorials(n):
    assert sum(S.stirling_recurrence(n, k) for k in range(n + 1)) == math.factorial(n)


def test_signed():
    assert S.signed_stirling(4, 2) == 11
    assert S.signed_stirling(4, 3) == -6
    assert S.signed_stirling(9, 9) == 1
    for n in range(1, 15):
        row = [S.signed_stirling(n, k) for k in range(1, n + 1)]
        assert all(a * b < 0 for a, b in zip(row, row[1:]))


def test_big_values_are_exact():
    # (n-1)! at n = 22 no longer fits in 64 bits
    assert S.stirling_recurrence(22, 1) == math.factorial(21)
    assert S.stirling_recurrence(200, 1) == math.factorial(199)
    assert S.stirling_recurrence(200, 200) == 1
    assert S.stirling_recurrence(200, 199) == math.comb(200, 2)


def test_ratio():
    for n in (2, 3, 10, 150):
        assert S.ratio(n, 1) == 1.0
    assert S.ratio(100, 2) == pytest.approx(1.1242532433204213, abs=1e-3)
    assert S.ratio(5, 2) == pytest.approx(1.2944477803325247, abs=1e-3)
    with pytest.raises(ValueError):
        S.ratio(1, 1)
    with pytest.raises(ValueError):
        S.ratio(3, 4)


def test_ratio_k1_exact():
    for n in range(2, 60):
        assert Fraction(S.stirling_recurrence(n, 1), math.factorial(n - 1)) == 1


def test_estimate_constants_examples():
    est = S.estimate_constants(2, 2, 200)
    assert 0 < est.alpha_hat <= est.beta_hat < math.inf
    assert est.brackets(S.ratio(100, 2))
    assert est.beta_hat / est.alpha_hat < 3
    assert S.ratio(est.alpha_at, 2) == est.alpha_hat
    assert S.ratio(est.beta_at, 2) == est.beta_hat
    assert S.estimate_constants(3, 3, 200).alpha_hat > 0


def test_estimate_constants_rejects():
    with pytest.raises(ValueError):
        S.estimate_constants(1, 2, 10)
    with pytest.raises(ValueError):
        S.estimate_constants(3, 2, 10)
    with pytest.raises(ValueError):
        S.estimate_constants(2, 10, 10)


@settings(max_examples=40, deadline=None)
@given(
    k=st.integers(2, 5),
    lo=st.integers(0, 30),
    width=st.integers(1, 40),
    extra_lo=st.integers(0, 10),
    extra_hi=st.integers(0, 40),
)
def test_estimate_constants_monotone_under_widening(k, lo, width, extra_lo, extra_hi):
    n_min = max(k, 2) + extra_lo + lo
    n_max = n_min + width
    inner = S.estimate_constants(k, n_min, n_max)
    outer = S.estimate_constants(k, n_min - extra_lo, n_max + extra_hi)
    assert outer.alpha_hat <= inner.alpha_hat
    assert outer.beta_hat >= inner.beta_hat


def test_estimate_constants_thread_independent():
    a = S.estimate_constants(3, 3, 120, threads=1)
    b = S.estimate_constants(3, 3, 120, threads=4)
    assert a == b


def test_harmonic_chain_at_two():
    # ln2/2 < 1 <= 1 <= 1 < 2 ln 2
    report = S.harmonic_bounds_check(3)
    assert all(c.threshold == 2 for c in report.checks)


def test_harmonic_bounds_scan():
    report = S.harmonic_bounds_check(10_000)
    assert report["harmonic_le_upper"].failures == 0
    assert all(c.threshold is not None and c.threshold <= 3 for c in report.checks)
    with pytest.raises(ValueError):
        S.harmonic_bounds_check(2)


def test_log_power_sum():
    assert S.log_power_sum(1, 2) == 0.0
    assert S.log_power_sum(4, 2) == 0.0
    r1 = S.log_power_sum_check(1, 10_000)
    assert r1["both"].found and r1["both"].threshold <= 10_000
    r2 = S.log_power_sum_check(2, 10_000)
    assert r2["both"].found
    # the lower bound fails at n = 2 (empty sum) for every m
    assert r1["lower"].last_failure == 2 and r2["lower"].last_failure == 2


def test_log_power_sum_no_threshold_is_reported():
    # the lower-bound cutoff grows with m; at m = 30 it is past n = 10
    report = S.log_power_sum_check(30, 10)
    assert report["lower"].threshold is None
    assert report["lower"].last_failure == 10
    assert S.log_power_sum_check(12, 10)["lower"].threshold == 7
    assert not report["both"].found


def test_scanned_sum_matches_fsum():
    running = 0.0
    for r in range(1, 10_000):
        running += math.log(r) / r
    assert running == pytest.approx(S.log_power_sum(1, 10_000), abs=1e-9)


def test_record():
    rec = S.stirling_record(5, 2)
    assert rec["value"] == "50" and rec["n"] == 5 and rec["k"] == 2
    assert S.stirling_record(1, 1)["ratio"] is None
    assert S.stirling_record(30, 3)["value"] == str(S.stirling_recurrence(30, 3))


def test_table_invariants():
    table = S.StirlingTable()
    assert table(0, 0) == 1
    for n in range(1, 25):
        assert table(n, 0) == 0 and table(0, n) == 0 and table(n, n) == 1
        for k in range(1, n + 1):
            assert table(n, k) == table(n - 1, k - 1) + (n - 1) * table(n - 1, k)
