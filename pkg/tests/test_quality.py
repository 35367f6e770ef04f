"""The statistical battery: each check catches what it claims to catch,
healthy engines pass the whole battery, and planted defects fail it."""

import math

import numpy as np
import pytest
import scipy.stats as st

from randstream import engines, quality, state_io
from randstream.rng import Rng


# pit_transform -------------------------------------------------------


def test_pit_maps_params_correctly():
    xs = np.array([0.3, 1.7, 4.0])
    got = quality.pit_transform(xs, "exp", {"beta": 2.0})
    assert np.allclose(got, 1.0 - np.exp(-xs / 2.0))
    got = quality.pit_transform(xs, "norm", {"mu": 1.0, "var": 4.0})
    assert np.allclose(got, st.norm(1.0, 2.0).cdf(xs))
    got = quality.pit_transform([0.25, 0.5], "u01", {})
    assert np.allclose(got, [0.25, 0.5])
    got = quality.pit_transform(xs, "gamma", {"alpha": 2.0, "theta": 3.0})
    assert np.allclose(got, st.gamma(2.0, scale=3.0).cdf(xs))


def test_pit_rejects_unknown_distribution():
    with pytest.raises(ValueError, match="no CDF registered"):
        quality.pit_transform([0.5], "cauchy_ish", {})


def test_pit_covers_every_registered_name():
    cases = {
        "u01": {},
        "unif": {"a": -1.0, "b": 3.0},
        "norm": {},
        "exp": {},
        "lognormal": {},
        "gamma": {"alpha": 2.0},
        "beta": {"a": 2.0, "b": 3.0},
        "chi2": {"nu": 4.0},
        "t": {"nu": 5.0},
        "f": {"nu1": 4.0, "nu2": 9.0},
        "gumbel": {},
        "pareto": {"alpha": 2.0},
        "gpd": {"xi": 0.2},
        "weibull": {"k": 1.5},
        "skew_normal": {"alpha": 2.0},
    }
    for name, params in cases.items():
        u = quality.pit_transform([0.5, 1.25], name, params)
        assert np.all((u >= 0.0) & (u <= 1.0)), name


# moment_check --------------------------------------------------------


def test_moment_check_passes_correct_normals():
    xs = np.random.Generator(np.random.PCG64(1)).standard_normal(50000)
    res = quality.moment_check(xs, 0.0, 1.0, 0.0, 0.0)
    assert res["passed"]
    assert all(abs(z) < 5.0 for z in res["z"].values())


def test_moment_check_catches_shifted_mean():
    xs = np.random.Generator(np.random.PCG64(2)).standard_normal(50000) + 0.1
    res = quality.moment_check(xs, 0.0, 1.0, 0.0, 0.0)
    assert not res["passed"]
    assert abs(res["z"]["mean"]) > 5.0


def test_moment_check_catches_wrong_variance():
    xs = np.random.Generator(np.random.PCG64(3)).standard_normal(50000) * 1.1
    res = quality.moment_check(xs, 0.0, 1.0, 0.0, 0.0)
    assert not res["passed"]
    assert abs(res["z"]["var"]) > 5.0


def test_moment_check_handles_constant_input():
    res = quality.moment_check(np.full(5000, 2.5), 2.5, 0.0, 0.0, 0.0)
    assert res["passed"]
    res = quality.moment_check(np.full(5000, 2.5), 0.0, 1.0, 0.0, 0.0)
    assert not res["passed"]
    assert math.isinf(res["z"]["mean"])


def test_moment_check_needs_data():
    with pytest.raises(ValueError, match="at least 1000"):
        quality.moment_check(np.zeros(999), 0.0, 1.0, 0.0, 0.0)


# extreme_check -------------------------------------------------------


def test_extreme_check_passes_uniforms():
    us = np.random.Generator(np.random.PCG64(4)).random(100000)
    assert quality.extreme_check(us)["passed"]


def test_extreme_check_catches_cropped_corners():
    us = 0.1 + 0.8 * np.random.Generator(np.random.PCG64(5)).random(100000)
    res = quality.extreme_check(us)
    assert not res["passed"]
    assert res["p_min"] < 1e-4 and res["p_max"] < 1e-4


def test_extreme_check_reports_observed_bounds():
    res = quality.extreme_check(np.array([0.2, 0.5, 0.9]))
    assert res["min"] == 0.2 and res["max"] == 0.9


# binning and bit balance ---------------------------------------------


def test_binning_check_catches_gap():
    us = np.random.Generator(np.random.PCG64(6)).random(100000)
    stat, p = quality.binning_check(us)
    assert p > 1e-6
    gappy = us[(us < 0.70) | (us > 0.72)]
    stat, p = quality.binning_check(gappy)
    assert p < 1e-10


def test_bit_balance_measures_frequencies():
    ones = np.full(100, 0xFFFFFFFFFFFFFFFF, dtype=np.uint64)
    assert np.all(quality.bit_balance(ones) == 1.0)
    zeros = np.zeros(100, dtype=np.uint64)
    assert np.all(quality.bit_balance(zeros) == 0.0)


def test_bit_balance_pvalue_catches_stuck_bit():
    gen = np.random.Generator(np.random.PCG64(7))
    words = gen.integers(0, 1 << 64, 20000, dtype=np.uint64)
    p, _ = quality._bit_balance_pvalue(words)
    assert p > 1e-6
    p, zmax = quality._bit_balance_pvalue(words & ~np.uint64(1 << 13))
    assert p < 1e-12
    assert zmax > 50


# the full battery ----------------------------------------------------


@pytest.mark.parametrize("eid", ["x256++simd", "pcg64"])
def test_battery_passes_healthy_engine(eid):
    rng = state_io.create(eid, seed=[2718, 281])
    rows = quality.battery(rng, n=30000)
    assert len(rows) == 38
    assert len({r["name"] for r in rows}) == 38
    failing = [r["name"] for r in rows if not r["passed"]]
    assert failing == [], failing


def test_battery_rows_carry_statistics():
    rng = state_io.create("sfc64", seed=[99])
    rows = quality.battery(rng, n=20000)
    cutoff = 1e-4 / len(rows)
    for r in rows:
        assert set(r) == {"name", "statistic", "p_value", "passed"}
        assert r["passed"] == (r["p_value"] >= cutoff)


class _StuckBitRng(Rng):
    """A generator whose 64-bit words always have bit 13 clear."""

    def next_u64(self):
        return super().next_u64() & ~(1 << 13)


def test_battery_catches_stuck_bit():
    rng = _StuckBitRng(engines.make("x256++"))
    rng.seed([123])
    rows = quality.battery(rng, n=20000)
    by_name = {r["name"]: r for r in rows}
    assert not by_name["words/bit_balance"]["passed"]


class _BiasedNormRng(Rng):
    """Normal draws shifted by a twentieth of a standard deviation."""

    def fill(self, dist, params, n):
        vals = super().fill(dist, params, n)
        if dist == "norm":
            vals = [v + 0.05 for v in vals]
        return vals


def test_battery_catches_biased_normal():
    rng = _BiasedNormRng(engines.make("x256++"))
    rng.seed([321])
    rows = quality.battery(rng, n=30000)
    by_name = {r["name"]: r for r in rows}
    assert not by_name["norm/moment_mean"]["passed"]
