from unittest import mock

import numpy as np
import pytest
from scipy import stats

from tailindex import alpha_hills
from tailindex.core import InvalidInput, Unsupported
from tailindex.gpd import GpdParams, ParetoParams
from tailindex.sampling import (
    generate_gpd,
    generate_pareto,
    generate_stable_symmetric,
    generate_student_t,
    make_rng,
    spawn_rngs,
)


def fake_rng(uniforms):
    rng = mock.MagicMock(spec=np.random.Generator)
    rng.random.side_effect = lambda n: np.array(uniforms, dtype=float)
    return rng


class TestPareto:
    def test_inverse_transform_point(self):
        # random() = 0.75 gives u = 0.25 and x = 2 / sqrt(0.25)
        assert generate_pareto(1, 2.0, 2.0, fake_rng([0.75]))[0] == 4.0

    def test_lower_boundary(self):
        assert generate_pareto(1, 1.3, 7.0, fake_rng([0.0]))[0] == 7.0

    def test_matches_formula_on_stream(self):
        u = 1 - make_rng(11).random(1000)
        np.testing.assert_array_equal(generate_pareto(1000, 1.7, 2.5, 11), 2.5 * u ** (-1 / 1.7))

    def test_params_object(self):
        np.testing.assert_array_equal(
            generate_pareto(50, ParetoParams(2.0, 3.0), rng=4), generate_pareto(50, 2.0, 3.0, 4)
        )

    def test_deterministic(self):
        a = generate_pareto(10_000, 1.2, 3, 99)
        b = generate_pareto(10_000, 1.2, 3, 99)
        assert a.tobytes() == b.tobytes()
        assert a.tobytes() != generate_pareto(10_000, 1.2, 3, 100).tobytes()

    @pytest.mark.parametrize("n, alpha, xmin", [(0, 1, 1), (3, 0, 1), (3, -1, 1), (3, 1, 0), (3, np.inf, 1), (2.5, 1, 1)])
    def test_invalid(self, n, alpha, xmin):
        with pytest.raises(InvalidInput):
            generate_pareto(n, alpha, xmin, 0)

    def test_large_sample(self):
        x = generate_pareto(10**6, 1.5, 5, 2023)
        assert 5 <= x.min() <= 5 + 1e-2
        assert alpha_hills(x, 10**6 // 2).shape == pytest.approx(1.5, abs=0.05)
        ks = stats.kstest((x / 5) ** -1.5, "uniform").statistic
        assert ks < 0.005


class TestGpd:
    def test_identical_to_pareto(self):
        a = generate_gpd(1000, GpdParams(0.5, 1.5, 3.0), 7)
        b = generate_pareto(1000, 2.0, 3.0, 7)
        assert a.tobytes() == b.tobytes()

    def test_unit_shape(self):
        a = generate_gpd(100, GpdParams(1.0, 2.0, 2.0), 1)
        assert a.tobytes() == generate_pareto(100, 1.0, 2.0, 1).tobytes()

    def test_same_distribution(self):
        a = generate_gpd(10**5, GpdParams(0.5, 1.5, 3.0), 1)
        b = generate_pareto(10**5, 2.0, 3.0, 2)
        assert stats.ks_2samp(a, b).statistic < 0.01

    def test_regime(self):
        with pytest.raises(Unsupported):
            generate_gpd(10, GpdParams(-0.1, 1, 1), 0)
        with pytest.raises(InvalidInput):
            generate_gpd(10, GpdParams(0.5, 1.5, 2.0), 0)


class TestStable:
    def test_gaussian_limit(self):
        x = generate_stable_symmetric(10**6, 2.0, 3)
        assert 1.95 <= x.var() <= 2.05

    def test_cauchy_limit(self):
        x = generate_stable_symmetric(10**6, 1.0, 3)
        assert -0.01 <= np.median(x) <= 0.01
        # quartiles of the standard Cauchy are -1 and 1
        assert np.quantile(x, 0.75) == pytest.approx(1, abs=0.01)

    def test_cauchy_is_tan_of_uniform(self):
        v = make_rng(8).uniform(-np.pi / 2, np.pi / 2, 20)
        np.testing.assert_array_equal(generate_stable_symmetric(20, 1.0, 8), np.tan(v))

    def test_tail_index(self):
        x = np.abs(generate_stable_symmetric(10**5, 1.5, 17))
        assert alpha_hills(x, 1000).shape == pytest.approx(1.5, rel=0.2)

    def test_symmetric(self):
        x = generate_stable_symmetric(10**5, 0.8, 5)
        assert abs((x > 0).mean() - 0.5) < 0.01

    @pytest.mark.parametrize("alpha", [0, -1, 2.01])
    def test_invalid(self, alpha):
        with pytest.raises(InvalidInput):
            generate_stable_symmetric(10, alpha, 0)


class TestStudentT:
    def test_normal_limit(self):
        x = generate_student_t(10**6, 1e6, 4)
        assert 0.99 <= x.var() <= 1.01

    def test_heavy_tails(self):
        x = generate_student_t(10**5, 3, 4)
        assert stats.kurtosis(x) > 5
        assert stats.kurtosis(generate_student_t(10**5, 1e6, 4)) < 0.2

    def test_tail_index(self):
        x = np.abs(generate_student_t(10**5, 3, 21))
        assert alpha_hills(x, 1000).shape == pytest.approx(3, abs=0.5)

    @pytest.mark.parametrize("dof", [0, -2, np.nan])
    def test_invalid(self, dof):
        with pytest.raises(InvalidInput):
            generate_student_t(5, dof, 0)


def test_spawned_streams_differ_and_repeat():
    a = [g.random(4).tobytes() for g in spawn_rngs(3, 3)]
    b = [g.random(4).tobytes() for g in spawn_rngs(3, 3)]
    assert a == b and len(set(a)) == 3


def test_make_rng_passthrough():
    g = np.random.default_rng(0)
    assert make_rng(g) is g
    with pytest.raises(InvalidInput):
        make_rng(1.5)
