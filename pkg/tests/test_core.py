import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tailindex.core import InvalidInput, RankedSample, as_sample, quantile, rank

import oracles


class TestQuantile:
    def test_lands_on_order_statistics(self):
        r = rank([2, 2, 4, 6, 6])
        assert quantile(r, 0.25) == 2
        assert quantile(r, 0.75) == 6

    def test_interpolates(self):
        # h = 0.3 * 3 + 1 = 1.9 -> 1 + 0.9 * (2 - 1)
        assert quantile(rank([1, 2, 3, 4]), 0.3) == pytest.approx(1.9, abs=1e-15)

    def test_boundaries(self):
        r = rank([5.0, 1.5, 9.0, 3.0])
        assert quantile(r, 0) == 1.5
        assert quantile(r, 1) == 9.0

    def test_vector_levels(self):
        r = rank([2, 2, 4, 6, 6])
        np.testing.assert_array_equal(quantile(r, [0.25, 0.5, 0.75]), [2, 4, 6])

    def test_errors(self):
        with pytest.raises(InvalidInput):
            quantile(np.array([]), 0.5)
        with pytest.raises(InvalidInput):
            quantile(rank([1, 2]), 1.5)

    def test_brute_force_agreement(self):
        rng = np.random.default_rng(2024)
        for _ in range(1000):
            x = rng.pareto(1.5, rng.integers(1, 51)) + 1
            p = rng.random()
            assert quantile(rank(x), p) == pytest.approx(oracles.quantile(x.tolist(), p), rel=1e-12, abs=0)

    def test_matches_numpy_linear(self):
        rng = np.random.default_rng(5)
        x = rng.lognormal(size=37)
        ps = np.linspace(0, 1, 41)
        np.testing.assert_allclose(quantile(rank(x), ps), np.quantile(x, ps), rtol=1e-12)

    @given(st.lists(st.floats(1e-3, 1e6), min_size=1, max_size=40), st.floats(0, 1), st.floats(0, 1))
    @settings(max_examples=200, deadline=None)
    def test_monotone_in_level(self, xs, p1, p2):
        r = rank(xs)
        lo, hi = sorted((p1, p2))
        assert quantile(r, lo) <= quantile(r, hi)


class TestRank:
    def test_basic(self):
        r = rank([3, 1, 2])
        np.testing.assert_array_equal(r.sorted, [1, 2, 3])
        np.testing.assert_allclose(r.survival, [1, 2 / 3, 1 / 3], rtol=1e-15)

    def test_singleton(self):
        r = rank([5])
        assert r.sorted.tolist() == [5] and r.survival.tolist() == [1]

    def test_ties_keep_distinct_ranks(self):
        r = rank([2, 2])
        assert r.sorted.tolist() == [2, 2]
        assert r.survival.tolist() == [1, 0.5]

    def test_idempotent(self):
        x = np.random.default_rng(0).random(100) + 0.1
        once = rank(x)
        np.testing.assert_array_equal(rank(once.sorted).sorted, once.sorted)

    def test_survival_invariants(self):
        r = rank(np.random.default_rng(1).random(57) + 1)
        assert isinstance(r, RankedSample) and r.n == 57
        assert r.survival[0] == 1 and r.survival[-1] == pytest.approx(1 / 57)
        assert np.all(np.diff(r.survival) < 0)

    def test_read_only(self):
        r = rank([1, 2, 3])
        with pytest.raises(ValueError):
            r.sorted[0] = 7


class TestAsSample:
    @pytest.mark.parametrize("bad", [[], [1, 0], [1, -2], [1, np.nan], [np.inf]])
    def test_rejects(self, bad):
        with pytest.raises(InvalidInput):
            as_sample(bad)

    def test_copies_input(self):
        src = np.array([1.0, 2.0])
        x = as_sample(src)
        src[0] = 99
        assert x[0] == 1.0
