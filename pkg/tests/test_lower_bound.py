import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genbooks import complement, contains_book, find_clique
from genbooks.lower_bound import (
    XorShift64Star,
    bound_book_probability,
    bound_km_probability,
    chernoff_tail,
    empirical_tail,
    lb_parameters,
    monte_carlo_witness,
    sample_random_graph,
    splitmix64,
)

GRID = [(20, 1, 2), (50, 1, 2), (30, 1, 3)]


class TestGenerator:
    def test_splitmix_reference(self):
        # first two outputs of the reference splitmix64 stream seeded with 0
        assert splitmix64(0) == 0xE220A8397B1DCDAF
        assert splitmix64(0x9E3779B97F4A7C15) == 0x6E789E6AA1B965F4

    def test_streams_differ_and_repeat(self):
        a = [XorShift64Star(1, 0).next_u64() for _ in range(3)]
        b = XorShift64Star(1, 1).next_u64()
        assert a[0] == a[1] == a[2] and a[0] != b

    def test_uniformity(self):
        rng = XorShift64Star(42)
        xs = np.array([rng.random() for _ in range(20000)])
        assert 0 <= xs.min() and xs.max() < 1
        assert abs(xs.mean() - 0.5) < 0.01
        counts, _ = np.histogram(xs, bins=10, range=(0, 1))
        assert counts.min() > 1800


class TestSampling:
    def test_extremes(self):
        assert sample_random_graph(10, 0.0, 1).edge_count == 0
        assert sample_random_graph(10, 1.0, 1).edge_count == 45

    def test_edge_count_concentration(self):
        counts = [sample_random_graph(50, 0.5, s).edge_count for s in range(100)]
        sigma = math.sqrt(1225 * 0.25)
        assert all(abs(c - 612.5) <= 4 * sigma for c in counts)
        assert abs(np.mean(counts) - 612.5) < sigma

    def test_reproducible(self):
        assert sample_random_graph(30, 0.3, 5, stream=2) == sample_random_graph(30, 0.3, 5, stream=2)
        assert sample_random_graph(30, 0.3, 5, stream=2) != sample_random_graph(30, 0.3, 5, stream=3)

    def test_rejects_probability(self):
        with pytest.raises(ValueError):
            sample_random_graph(3, 1.5, 0)


class TestParameters:
    def test_m20(self):
        lp = lb_parameters(20, 1, 2)
        assert (lp.C, lp.c, lp.N) == (4, Fraction(1, 48), 18)
        assert lp.edge_prob_complement == pytest.approx(0.2 * math.log(20))
        assert lp.book_size == 20

    @pytest.mark.parametrize("m,k,r", GRID)
    def test_c_times_C_pow_r(self, m, k, r):
        lp = lb_parameters(m, k, r)
        assert lp.c * lp.C**lp.r == Fraction(1, 3)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(1, 4), st.integers(2, 5))
    def test_c_identity_property(self, k, r):
        C = 2 * (k + r - 1)
        m = 3
        while C * math.log(m) / m >= 1:
            m += 1
        lp = lb_parameters(m, k, r)
        assert lp.c * lp.C**r == Fraction(1, 3)
        assert 0 < lp.edge_prob_complement < 1

    def test_too_small(self):
        with pytest.raises(ValueError, match="m too small for C"):
            lb_parameters(5, 1, 2)

    def test_rejects_range(self):
        with pytest.raises(ValueError):
            lb_parameters(20, 0, 2)


class TestChernoff:
    def test_example(self):
        # (e/3)^30, evaluated independently
        assert chernoff_tail(100, 0.1, 30) == pytest.approx((math.e / 3) ** 30, rel=1e-12)
        assert chernoff_tail(100, 0.1, 30) == pytest.approx(0.0519035, rel=1e-5)

    def test_at_mean(self):
        assert chernoff_tail(100, 0.1, 10) == pytest.approx(math.e**10)

    def test_invalid(self):
        with pytest.raises(ValueError):
            chernoff_tail(100, 0.1, 5)

    def test_dominates_simulation(self):
        assert empirical_tail(100, 0.1, 30, 100_000, 0) <= chernoff_tail(100, 0.1, 30)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(10, 200), st.floats(0.01, 0.5), st.floats(1.0, 4.0))
    def test_dominates_exact_tail(self, n, prob, ratio):
        M = ratio * n * prob
        exact = sum(
            math.comb(n, j) * prob**j * (1 - prob) ** (n - j) for j in range(math.ceil(M), n + 1)
        )
        assert chernoff_tail(n, prob, M) >= exact * (1 - 1e-9)


class TestBounds:
    @pytest.mark.parametrize("m,k,r", GRID)
    def test_last_factor(self, m, k, r):
        bb = bound_book_probability(lb_parameters(m, k, r))
        assert bb.last_factor <= math.e / 3
        assert math.isfinite(bb.log_value) and bb.value >= 0

    def test_book_bound_values(self):
        vals = [bound_book_probability(lb_parameters(m, 1, 2)).value for m in (20, 30, 40, 50)]
        assert vals == pytest.approx([0.6475, 5.024, 9.656, 17.12], rel=1e-3)

    def test_book_bound_not_monotone_at_small_m(self):
        # rises over m = 20..50 because binom(N, r) grows faster than the
        # last factor decays until m^k is large enough; falls from m = 60 on
        vals = {m: bound_book_probability(lb_parameters(m, 1, 2)).value for m in (20, 30, 40, 50, 60, 100, 200, 500)}
        assert vals[20] < vals[30] < vals[40] < vals[50]
        assert vals[60] > vals[100] > vals[200] > vals[500]
        assert vals[200] < 0.01

    def test_book_bound_log_space_matches_direct(self):
        lp = lb_parameters(20, 1, 2)
        P, N = lp.edge_prob_complement, lp.N
        direct = math.comb(N, 2) * P * ((N - 2) * P**2 * math.e / 20) ** 20
        assert bound_book_probability(lp).value == pytest.approx(direct, rel=1e-10)

    def test_km_bound(self):
        lp = lb_parameters(20, 1, 2)
        km = bound_km_probability(lp)
        assert lp.N < lp.m and km.value == 0.0
        lp = lb_parameters(50, 1, 2)
        km = bound_km_probability(lp)
        assert 0 <= km.value <= km.weak_form
        assert km.log_value == pytest.approx(
            math.log(math.comb(lp.N, 50)) + 1225 * math.log(1 - lp.edge_prob_complement)
        )


class TestMonteCarlo:
    def test_desk_scale_m20(self):
        lp = lb_parameters(20, 1, 2)
        stats = monte_carlo_witness(lp, trials=30, seed=4)
        assert stats.clique_hits == 0
        assert stats.witnesses == stats.trials - stats.book_hits
        if stats.best_witness is not None:
            g = stats.best_witness
            assert find_clique(g, 20) is None and not contains_book(complement(g), 20, 2)

    def test_forced_book_hits(self):
        lp = lb_parameters(20, 1, 2)
        stats = monte_carlo_witness(lp, q_target=1, trials=10, seed=0)
        assert stats.book_hits == 10 and stats.witnesses == 0 and stats.best_witness is None

    def test_deterministic(self):
        lp = lb_parameters(20, 1, 2)
        assert monte_carlo_witness(lp, trials=12, seed=9) == monte_carlo_witness(lp, trials=12, seed=9)

    def test_threads_agree(self):
        lp = lb_parameters(20, 1, 2)
        serial = monte_carlo_witness(lp, q_target=6, trials=12, seed=2)
        assert monte_carlo_witness(lp, q_target=6, trials=12, seed=2, threads=3) == serial

    def test_sampling_cap(self):
        lp = lb_parameters(50, 1, 2)
        with pytest.raises(ValueError):
            monte_carlo_witness(lp, trials=1, max_order=100)
