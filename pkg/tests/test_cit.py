"""Tests for the base conditional independence tests.

Statistical claims are checked against independent oracles: closed-form
quantities (the half-normal median for the bandwidth heuristic, perfect
correlation for saturation), and Monte Carlo calibration windows under
generators whose ground truth is known by construction.  Seeds are fixed so
every rate below is a frozen, reproducible number.
"""

import numpy as np
import pytest
from scipy import stats

from citkit.cit import (
    CITestSpec,
    DataTriple,
    fisher_z,
    kcit,
    median_heuristic,
    rcit,
    run_cit,
)
from citkit.cit import TestOutcome as CitOutcome
from citkit.datagen import PnlConfig, gen_pnl
from citkit.errors import ConfigError, DataError


def _rep_seed(*key):
    return int(np.random.SeedSequence(key).generate_state(1, np.uint64)[0])


def gaussian_triple(n, seed, d_z=1):
    """x, y, z jointly independent standard normal: exact H0."""
    rng = np.random.default_rng(seed)
    return DataTriple(rng.standard_normal((n, 1)), rng.standard_normal((n, 1)),
                      rng.standard_normal((n, d_z)))


def rejection_rate(test, hypothesis, n, reps, level=0.05, tag=0):
    hits = 0
    for rep in range(reps):
        seed = _rep_seed(tag, n, hypothesis == "H1", rep)
        data = gen_pnl(PnlConfig(hypothesis=hypothesis, n=n, seed=seed))
        hits += test(data, seed).p <= level
    return hits / reps


class TestDataTriple:
    def test_rejects_mismatched_rows(self):
        with pytest.raises(DataError, match="row counts differ"):
            DataTriple(np.zeros((10, 1)), np.zeros((9, 1)), np.zeros((10, 1)))

    def test_rejects_non_finite(self):
        x = np.zeros((10, 1))
        x[3] = np.nan
        with pytest.raises(DataError, match="non-finite"):
            DataTriple(x, np.zeros((10, 1)), np.zeros((10, 1)))

    def test_rejects_tiny_samples(self):
        with pytest.raises(DataError, match="at least 8 rows"):
            DataTriple(np.zeros((7, 1)), np.zeros((7, 1)), np.zeros((7, 1)))

    def test_empty_conditioning_set_allowed(self):
        d = DataTriple(np.arange(10.0), np.arange(10.0), None)
        assert d.z.shape == (10, 0)

    def test_vectors_promoted_to_columns(self):
        d = DataTriple(np.arange(12.0), np.arange(12.0), np.arange(12.0))
        assert d.x.shape == (12, 1)
        assert d.n == 12

    def test_take_subsets_rows(self):
        d = gaussian_triple(20, seed=0)
        sub = d.take(np.arange(8))
        assert sub.n == 8
        assert np.array_equal(sub.x, d.x[:8])


class TestCITestSpec:
    def test_defaults(self):
        spec = CITestSpec()
        assert spec.method == "kcit"
        assert spec.num_features_xy == 100
        assert spec.ridge == 1e-3

    @pytest.mark.parametrize("kwargs", [
        {"method": "cmiknn"},
        {"bandwidth": "scott"},
        {"num_features_xy": 4},
        {"num_features_z": 2},
        {"ridge": 0.0},
        {"ridge": 1.0},
        {"permutations": -1},
    ])
    def test_rejects_bad_settings(self, kwargs):
        with pytest.raises(ConfigError):
            CITestSpec(**kwargs)


class TestMedianHeuristic:
    def test_single_pair_distance(self):
        assert median_heuristic(np.array([[0.0], [3.0]])) == 3.0

    def test_three_point_enumeration(self):
        # pairwise distances of {0, 1, 2} are {1, 1, 2}; median is 1
        assert median_heuristic(np.array([[0.0], [1.0], [2.0]])) == 1.0

    def test_standard_normal_matches_half_normal_median(self):
        # |X - X'| with X, X' ~ N(0,1) is half-normal with scale sqrt(2),
        # whose median is sqrt(2) * PhiInv(0.75) = 0.95387.
        rng = np.random.default_rng(7)
        med = median_heuristic(rng.standard_normal((10_000, 1)))
        assert abs(med - np.sqrt(2.0) * stats.norm.ppf(0.75)) < 0.02

    def test_identical_rows_error(self):
        with pytest.raises(DataError, match="identical"):
            median_heuristic(np.ones((50, 2)))

    def test_needs_two_rows(self):
        with pytest.raises(DataError):
            median_heuristic(np.ones((1, 2)))

    def test_deterministic_thinning_beyond_1000_rows(self):
        rng = np.random.default_rng(3)
        pts = rng.standard_normal((5000, 2))
        assert median_heuristic(pts) == median_heuristic(pts)


class TestFisherZ:
    def test_identical_columns_saturate(self):
        x = np.random.default_rng(0).standard_normal((100, 1))
        out = fisher_z(DataTriple(x, x.copy(), None))
        assert out.p < 1e-10
        assert out.p == 0.0
        assert "saturated" in out.flags

    def test_uniform_under_independence(self):
        ps = [fisher_z(gaussian_triple(5000, seed=s, d_z=1)).p for s in range(1000)]
        assert stats.kstest(ps, "uniform").statistic < 0.05

    def test_level_under_gaussian_conditional_independence(self):
        # x = z + e1, y = z + e2: conditionally independent given z.
        hits = 0
        for s in range(1000):
            rng = np.random.default_rng(_rep_seed(5, s))
            z = rng.standard_normal((2000, 1))
            d = DataTriple(z + rng.standard_normal((2000, 1)),
                           z + rng.standard_normal((2000, 1)), z)
            hits += fisher_z(d).p <= 0.05
        assert 0.03 <= hits / 1000 <= 0.07

    def test_marginal_degeneration_with_empty_z(self):
        rng = np.random.default_rng(1)
        x = rng.standard_normal((500, 1))
        y = 0.5 * x + rng.standard_normal((500, 1))
        out = fisher_z(DataTriple(x, y, None))
        r = np.corrcoef(x.ravel(), y.ravel())[0, 1]
        expected = np.sqrt(500 - 3) * np.arctanh(r)
        assert out.statistic == pytest.approx(expected, rel=1e-12)

    def test_collinear_conditioning_error(self):
        rng = np.random.default_rng(2)
        z1 = rng.standard_normal((100, 1))
        z = np.hstack([z1, 2.0 * z1])
        with pytest.raises(DataError, match="collinear"):
            fisher_z(DataTriple(rng.standard_normal((100, 1)),
                                rng.standard_normal((100, 1)), z))

    def test_x_linear_in_z_error(self):
        rng = np.random.default_rng(3)
        z = rng.standard_normal((100, 1))
        with pytest.raises(DataError, match="exact linear function"):
            fisher_z(DataTriple(3.0 * z + 1.0, rng.standard_normal((100, 1)), z))

    def test_requires_univariate_x_y(self):
        rng = np.random.default_rng(4)
        with pytest.raises(ConfigError):
            fisher_z(DataTriple(rng.standard_normal((50, 2)),
                                rng.standard_normal((50, 1)), None))

    def test_needs_enough_rows_for_dz(self):
        rng = np.random.default_rng(5)
        with pytest.raises(DataError, match="n > d_z \\+ 3"):
            fisher_z(DataTriple(rng.standard_normal((10, 1)),
                                rng.standard_normal((10, 1)),
                                rng.standard_normal((10, 7))))


class TestKcit:
    def test_type_one_error_window(self):
        rate = rejection_rate(lambda d, s: kcit(d, CITestSpec(method="kcit")),
                              "H0", 400, 500, tag=20)
        assert 0.02 <= rate <= 0.09

    def test_power_above_half_under_h1(self):
        rate = rejection_rate(lambda d, s: kcit(d, CITestSpec(method="kcit")),
                              "H1", 400, 200, tag=21)
        assert rate > 0.5

    def test_row_permutation_invariance(self):
        data = gen_pnl(PnlConfig(hypothesis="H1", n=300, seed=8))
        perm = np.random.default_rng(9).permutation(300)
        p1 = kcit(data, CITestSpec(method="kcit")).p
        p2 = kcit(data.take(perm), CITestSpec(method="kcit")).p
        assert p1 == pytest.approx(p2, abs=1e-8)

    def test_refuses_large_n(self):
        d = gaussian_triple(5001, seed=0)
        with pytest.raises(ConfigError, match="5000"):
            kcit(d, CITestSpec(method="kcit"))

    def test_constant_column_error_names_block(self):
        rng = np.random.default_rng(1)
        d = DataTriple(np.ones((50, 1)), rng.standard_normal((50, 1)),
                       rng.standard_normal((50, 1)))
        with pytest.raises(DataError, match="column 0 of x"):
            kcit(d, CITestSpec(method="kcit"))

    def test_permutation_null_flagged_and_valid(self):
        data = gaussian_triple(150, seed=11)
        out = kcit(data, CITestSpec(method="kcit", permutations=200, seed=4))
        assert out.flags == ("permutation_null",)
        assert out.p >= 1.0 / 201.0  # finite-permutation floor

    def test_unconditional_branch(self):
        rng = np.random.default_rng(12)
        x = rng.standard_normal((200, 1))
        y = x + 0.3 * rng.standard_normal((200, 1))
        out = kcit(DataTriple(x, y, None), CITestSpec(method="kcit"))
        assert out.p < 0.01  # strong marginal dependence


class TestRcit:
    def test_type_one_error_window(self):
        rate = rejection_rate(lambda d, s: rcit(d, CITestSpec(method="rcit", seed=s)),
                              "H0", 400, 500, tag=30)
        assert 0.02 <= rate <= 0.09

    def test_power_window_heavy_tailed_noise(self):
        # t(4) noise at n=1200: powerful but not saturated.
        rate = rejection_rate(lambda d, s: rcit(d, CITestSpec(method="rcit", seed=s)),
                              "H1", 1200, 200, tag=31)
        assert 0.75 <= rate <= 0.92

    def test_deterministic_given_seed(self):
        data = gen_pnl(PnlConfig(hypothesis="H1", n=400, seed=13))
        a = rcit(data, CITestSpec(method="rcit", seed=99))
        b = rcit(data, CITestSpec(method="rcit", seed=99))
        assert a.p == b.p
        assert a.statistic == b.statistic

    def test_different_feature_seeds_differ(self):
        data = gen_pnl(PnlConfig(hypothesis="H0", n=400, seed=13))
        a = rcit(data, CITestSpec(method="rcit", seed=1))
        b = rcit(data, CITestSpec(method="rcit", seed=2))
        assert a.p != b.p

    def test_permutation_null_flagged(self):
        data = gaussian_triple(200, seed=14)
        out = rcit(data, CITestSpec(method="rcit", permutations=100, seed=5))
        assert out.flags == ("permutation_null",)
        assert out.p >= 1.0 / 101.0

    def test_unconditional_branch(self):
        rng = np.random.default_rng(15)
        x = rng.standard_normal((300, 1))
        y = np.tanh(x) + 0.3 * rng.standard_normal((300, 1))
        out = rcit(DataTriple(x, y, None), CITestSpec(method="rcit", seed=0))
        assert out.p < 0.01


class TestUniformityUnderIndependence:
    """p-values under exact independence are uniform for every test."""

    @pytest.mark.parametrize("method", ["fisherz", "kcit", "rcit"])
    def test_ks_uniformity(self, method):
        ps = []
        for s in range(1000):
            data = gaussian_triple(400, seed=_rep_seed(40, s))
            ps.append(run_cit(data, CITestSpec(method=method, seed=s)).p)
        # critical KS value at the 0.01 level for 1000 samples
        assert stats.kstest(ps, "uniform").statistic < 1.63 / np.sqrt(1000)


class TestScaleInvariance:
    def test_fisher_z_scale_invariant(self):
        d = gaussian_triple(500, seed=16)
        scaled = DataTriple(7.3 * d.x, d.y, d.z)
        assert abs(fisher_z(d).p - fisher_z(scaled).p) < 1e-10

    @pytest.mark.parametrize("block", ["x", "y", "z"])
    def test_kcit_block_rescaling(self, block):
        d = gaussian_triple(250, seed=17)
        kwargs = {"x": d.x, "y": d.y, "z": d.z}
        kwargs[block] = 42.0 * kwargs[block]
        p0 = kcit(d, CITestSpec(method="kcit")).p
        p1 = kcit(DataTriple(**kwargs), CITestSpec(method="kcit")).p
        assert p0 == pytest.approx(p1, abs=1e-9)

    @pytest.mark.parametrize("block", ["x", "y", "z"])
    def test_rcit_block_rescaling(self, block):
        d = gaussian_triple(250, seed=18)
        kwargs = {"x": d.x, "y": d.y, "z": d.z}
        kwargs[block] = 0.01 * kwargs[block]
        p0 = rcit(d, CITestSpec(method="rcit", seed=3)).p
        p1 = rcit(DataTriple(**kwargs), CITestSpec(method="rcit", seed=3)).p
        assert p0 == pytest.approx(p1, abs=1e-9)


class TestConsistencyTrend:
    """Power is nondecreasing in n under the alternative, within MC error."""

    @pytest.mark.parametrize("method", ["fisherz", "kcit", "rcit"])
    def test_power_nondecreasing_in_n(self, method):
        def test(d, s):
            return run_cit(d, CITestSpec(method=method, seed=s))

        tag = {"fisherz": 50, "kcit": 51, "rcit": 52}[method]
        rates = [rejection_rate(test, "H1", n, 200, tag=tag) for n in (200, 400, 800)]
        assert rates[1] >= rates[0] - 0.03
        assert rates[2] >= rates[1] - 0.03


class TestDeterminism:
    @pytest.mark.parametrize("method", ["fisherz", "kcit", "rcit"])
    def test_same_inputs_same_outcome(self, method):
        data = gen_pnl(PnlConfig(hypothesis="H1", n=300, seed=19))
        spec = CITestSpec(method=method, seed=7)
        a, b = run_cit(data, spec), run_cit(data, spec)
        assert a.p == b.p
        assert a.statistic == b.statistic
        assert a.method == b.method


class TestRunCit:
    def test_dispatch_matches_direct_calls(self):
        data = gaussian_triple(200, seed=20)
        assert run_cit(data, CITestSpec(method="fisherz")).method == "fisherz"
        assert run_cit(data, CITestSpec(method="kcit")).method == "kcit"
        assert run_cit(data, CITestSpec(method="rcit", seed=0)).method == "rcit"

    def test_outcome_fields(self):
        out = run_cit(gaussian_triple(200, seed=21), CITestSpec(method="kcit"))
        assert isinstance(out, CitOutcome)
        assert 0.0 <= out.p <= 1.0
        assert out.n_used == 200
        assert out.elapsed >= 0.0
