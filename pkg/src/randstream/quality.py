"""Desk-scale statistical checks for generators and samplers.

Small enough to run in CI, sharp enough to catch a broken sampler: the
probability integral transform feeds KS and histogram tests, moments are
compared against theory with block standard errors, the extremes are
tested against their order-statistic laws, and raw words get a per-bit
balance check.  Heavyweight batteries (TestU01, PractRand) stay external
and consume the raw byte pipe instead.

CDFs used for the transform come from scipy and are only ever used here,
never inside the samplers themselves.
"""

import math

import numpy as np
from scipy import stats

from . import discrete

_PIT_CDFS = {
    "u01": lambda p: stats.uniform(),
    "unif": lambda p: stats.uniform(p.get("a", 0.0), p.get("b", 1.0) - p.get("a", 0.0)),
    "norm": lambda p: stats.norm(p.get("mu", 0.0), math.sqrt(p.get("var", 1.0))),
    "exp": lambda p: stats.expon(scale=p.get("beta", 1.0)),
    "lognormal": lambda p: stats.lognorm(math.sqrt(p.get("var", 1.0)), scale=math.exp(p.get("mu", 0.0))),
    "gamma": lambda p: stats.gamma(p["alpha"], scale=p.get("theta", 1.0)),
    "beta": lambda p: stats.beta(p["a"], p["b"]),
    "chi2": lambda p: stats.chi2(p["nu"]),
    "t": lambda p: stats.t(p["nu"]),
    "f": lambda p: stats.f(p["nu1"], p["nu2"]),
    "gumbel": lambda p: stats.gumbel_r(p.get("mu", 0.0), p.get("beta", 1.0)),
    "pareto": lambda p: stats.pareto(p["alpha"], scale=p.get("xm", 1.0)),
    "gpd": lambda p: stats.genpareto(p["xi"], loc=p.get("mu", 0.0), scale=p.get("sigma", 1.0)),
    "weibull": lambda p: stats.weibull_min(p["k"], scale=p.get("lam", 1.0)),
    "skew_normal": lambda p: stats.skewnorm(p.get("alpha", 0.0), loc=p.get("mu", 0.0), scale=p.get("sigma", 1.0)),
}


def pit_transform(samples, distribution, params=None):
    """Map samples through their CDF; a correct sampler yields U(0,1)."""
    if distribution not in _PIT_CDFS:
        raise ValueError("no CDF registered for distribution %r" % (distribution,))
    dist = _PIT_CDFS[distribution](params or {})
    return dist.cdf(np.asarray(samples, dtype=np.float64))


def moment_check(samples, mean, var, skew, kurt, se_mult=5.0, blocks=100):
    """Compare sample mean/var/skew/excess-kurtosis against theory.

    Standard errors come from splitting the data into consecutive blocks
    and taking the spread of the per-block statistics, so no higher-moment
    theory is needed.  Returns a dict with per-moment z-scores and an
    overall pass flag (all |z| below se_mult).
    """
    xs = np.asarray(samples, dtype=np.float64)
    n = xs.size
    if n < 1000:
        raise ValueError("moment_check needs at least 1000 samples, got %d" % n)
    blocks = min(blocks, n // 10)
    per = n // blocks
    xs = xs[: per * blocks].reshape(blocks, per)

    bm = xs.mean(axis=1)
    centered = xs - bm[:, None]
    bv = (centered**2).mean(axis=1)
    sd = np.sqrt(bv)
    with np.errstate(divide="ignore", invalid="ignore"):
        bs = np.nan_to_num((centered**3).mean(axis=1) / sd**3, nan=0.0)
        bk = np.nan_to_num((centered**4).mean(axis=1) / sd**4 - 3.0, nan=0.0)

    zs = {}
    for name, blockstats, expected in (
        ("mean", bm, mean),
        ("var", bv, var),
        ("skew", bs, skew),
        ("kurt", bk, kurt),
    ):
        se = blockstats.std(ddof=1) / math.sqrt(blocks)
        if se == 0.0:
            zs[name] = 0.0 if blockstats.mean() == expected else math.inf
        else:
            zs[name] = (blockstats.mean() - expected) / se
    return {
        "z": zs,
        "passed": all(abs(z) < se_mult for z in zs.values()),
    }


def extreme_check(samples, n=None, level=1e-4):
    """Test min and max of U(0,1) samples against their exact laws.

    The minimum of n uniforms follows Beta(1,n) and the maximum Beta(n,1);
    both get a two-sided test.  Exposes how far into the corners the
    stream actually reaches, which plain histograms miss.
    """
    xs = np.asarray(samples, dtype=np.float64)
    if n is None:
        n = xs.size
    lo = float(xs.min())
    hi = float(xs.max())
    # survival of the min and cdf of the max via logs, to keep precision
    sf_min = math.exp(n * math.log1p(-lo)) if lo < 1.0 else 0.0
    cdf_max = math.exp(n * math.log(hi)) if hi > 0.0 else 0.0
    p_min = 2.0 * min(sf_min, 1.0 - sf_min)
    p_max = 2.0 * min(cdf_max, 1.0 - cdf_max)
    return {
        "min": lo,
        "max": hi,
        "p_min": p_min,
        "p_max": p_max,
        "passed": p_min >= level and p_max >= level,
    }


def binning_check(samples, bins=100):
    """Equal-width histogram chi-square on [0,1) data; returns (stat, p)."""
    counts, _ = np.histogram(np.asarray(samples, dtype=np.float64), bins=bins, range=(0.0, 1.0))
    stat, p = stats.chisquare(counts)
    return float(stat), float(p)


def bit_balance(words, width=64):
    """Per-bit one-frequencies for integer draws in [0, 2^width)."""
    ws = np.asarray(words, dtype=np.uint64)
    freqs = np.empty(width)
    for k in range(width):
        freqs[k] = float(((ws >> np.uint64(k)) & np.uint64(1)).mean())
    return freqs


def _bit_balance_pvalue(words, width=64):
    freqs = bit_balance(words, width)
    n = len(words)
    zmax = float(np.abs(freqs - 0.5).max()) / (0.5 / math.sqrt(n))
    # Bonferroni over the bit positions
    return min(1.0, 2.0 * stats.norm.sf(zmax) * width), zmax


# battery rows: draw kind, fill params, PIT name, (mean, var, skew, kurt)
_BATTERY_CONTINUOUS = (
    ("u01", {}, "u01", (0.5, 1.0 / 12.0, 0.0, -1.2)),
    ("norm", {}, "norm", (0.0, 1.0, 0.0, 0.0)),
    ("exp", {}, "exp", (1.0, 1.0, 2.0, 6.0)),
    ("gamma", {"alpha": 2.0, "theta": 3.0}, "gamma", (6.0, 18.0, math.sqrt(2.0), 3.0)),
)

_BOUNDED_B = 10


def battery(rng, n=200000, level=1e-4):
    """Run the full desk battery on one generator.

    Draws u01, norm, exp, gamma(2,3) and bounded_uint(10) streams plus raw
    words, and applies every applicable check.  Returns one record per
    check: name, statistic, p_value, passed.  The pass threshold is
    level / number-of-checks (Bonferroni), so a clean generator fails the
    whole battery with probability below `level`.
    """
    rows = []

    def add(name, statistic, p):
        rows.append({"name": name, "statistic": float(statistic), "p_value": float(p)})

    for dist, params, pitname, moments in _BATTERY_CONTINUOUS:
        xs = rng.fill(dist, params, n)
        us = pit_transform(xs, pitname, params)
        ks = stats.kstest(us, "uniform")
        add(dist + "/ks", ks.statistic, ks.pvalue)
        stat, p = binning_check(us)
        add(dist + "/binning", stat, p)
        ext = extreme_check(us)
        add(dist + "/extreme_min", ext["min"], ext["p_min"])
        add(dist + "/extreme_max", ext["max"], ext["p_max"])
        mc = moment_check(xs, *moments)
        for mname, z in mc["z"].items():
            add(dist + "/moment_" + mname, z, 2.0 * stats.norm.sf(abs(z)))

    draws = np.array([discrete.bounded_uint(rng, _BOUNDED_B) for _ in range(n)])
    counts = np.bincount(draws, minlength=_BOUNDED_B)
    stat, p = stats.chisquare(counts)
    add("bounded/chi2", stat, p)
    b = _BOUNDED_B
    mc = moment_check(
        draws.astype(np.float64),
        (b - 1) / 2.0,
        (b * b - 1) / 12.0,
        0.0,
        -6.0 * (b * b + 1) / (5.0 * (b * b - 1)),
    )
    for mname, z in mc["z"].items():
        add("bounded/moment_" + mname, z, 2.0 * stats.norm.sf(abs(z)))

    words = [rng.next_u64() for _ in range(n // 2)]
    p, zmax = _bit_balance_pvalue(words)
    add("words/bit_balance", zmax, p)

    cutoff = level / len(rows)
    for row in rows:
        row["passed"] = row["p_value"] >= cutoff
    return rows
