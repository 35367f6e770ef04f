"""Continuous distributions.

The normal and exponential samplers are 256-layer ziggurats. Their slow
path never calls libm: an exact integer comparison against the
committed accept/reject thresholds settles almost every draw, and the
rare undecided draw evaluates the density with the deterministic exp.
Everything downstream (gamma and its derivatives, the transform
families) is built from those two plus u01, so all continuous output is
bit-identical across platforms.

Per-distribution tallies (attempts, density evaluations) are kept on
the generator object; they are diagnostics, not stream state.
"""

import math

import numpy as np

from . import zigtables as Z
from .detmath import det_exp, det_log

_B52 = 1 << 52
_M52 = (1 << 52) - 1
_M53 = (1 << 53) - 1
_TWO_M52 = 2.0 ** -52
_TWO_M24 = 2.0 ** -24

D_NORM = tuple((1 << 52) - k for k in Z.KI)
D_EXP = tuple((1 << 53) - k for k in Z.KE)


def _tally(rng, dist):
    return rng.counters.setdefault(dist, {"attempts": 0, "pdf_evals": 0})


def _f32(x):
    return float(np.float32(x))


def std_norm(rng):
    """Standard normal, double precision."""
    c = _tally(rng, "norm")
    while True:
        c["attempts"] += 1
        r = rng.next_u64()
        idx = r & 0xFF
        sign = (r >> 8) & 1
        rabs = (r >> 9) & _M52
        x = rabs * Z.WI[idx]
        if rabs < Z.KI[idx]:
            return -x if sign else x
        if idx == 0:
            while True:
                xx = -Z.NOR_INV_R * det_log(1.0 - rng.u01())
                yy = -det_log(1.0 - rng.u01())
                if yy + yy > xx * xx:
                    t = Z.NOR_R + xx
                    return -t if sign else t
        yv = rng.next_u64() >> 12
        d = D_NORM[idx]
        lhs = yv * d + (rabs - Z.KI[idx]) * _B52
        if lhs < Z.TA_NORM[idx]:
            return -x if sign else x
        if lhs <= Z.TR_NORM[idx]:
            c["pdf_evals"] += 1
            y = Z.FI[idx] + (yv * _TWO_M52) * (Z.FI[idx - 1] - Z.FI[idx])
            if y < det_exp(-0.5 * x * x):
                return -x if sign else x


def std_exp(rng):
    """Standard exponential, double precision."""
    c = _tally(rng, "exp")
    while True:
        c["attempts"] += 1
        r = rng.next_u64()
        idx = r & 0xFF
        rabs = (r >> 8) & _M53
        x = rabs * Z.WE[idx]
        if rabs < Z.KE[idx]:
            return x
        if idx == 0:
            return Z.EXP_R - det_log(1.0 - rng.u01())
        yv = rng.next_u64() >> 12
        d = D_EXP[idx]
        lhs = yv * d + (rabs - Z.KE[idx]) * _B52
        if lhs < Z.TA_EXP[idx]:
            return x
        if lhs <= Z.TR_EXP[idx]:
            c["pdf_evals"] += 1
            y = Z.FE[idx] + (yv * _TWO_M52) * (Z.FE[idx - 1] - Z.FE[idx])
            if y < det_exp(-x):
                return x


def std_norm_f(rng):
    """Standard normal, single precision, fed by 32-bit halves."""
    while True:
        r = rng.next_u32()
        idx = r & 0xFF
        sign = (r >> 8) & 1
        rabs = (r >> 9) & 0x7FFFFF
        x = _f32(rabs * Z.WI_F[idx])
        if rabs < Z.KI_F[idx]:
            return -x if sign else x
        if idx == 0:
            while True:
                xx = -Z.NOR_INV_R * det_log(1.0 - rng.u01f())
                yy = -det_log(1.0 - rng.u01f())
                if yy + yy > xx * xx:
                    t = _f32(Z.NOR_R + xx)
                    return -t if sign else t
        u = (rng.next_u32() >> 8) * _TWO_M24
        y = Z.FI_F[idx] + u * (Z.FI_F[idx - 1] - Z.FI_F[idx])
        if y < det_exp(-0.5 * x * x):
            return -x if sign else x


def std_exp_f(rng):
    """Standard exponential, single precision, fed by 32-bit halves."""
    while True:
        r = rng.next_u32()
        idx = r & 0xFF
        rabs = (r >> 8) & 0xFFFFFF
        x = _f32(rabs * Z.WE_F[idx])
        if rabs < Z.KE_F[idx]:
            return x
        if idx == 0:
            return _f32(Z.EXP_R - det_log(1.0 - rng.u01f()))
        u = (rng.next_u32() >> 8) * _TWO_M24
        y = Z.FE_F[idx] + u * (Z.FE_F[idx - 1] - Z.FE_F[idx])
        if y < det_exp(-x):
            return x


def unif(rng, a=0.0, b=1.0):
    a, b = float(a), float(b)
    if not b > a:
        raise ValueError("unif needs b > a")
    return a + rng.u01() * (b - a)


def unif_f(rng, a=0.0, b=1.0):
    a, b = float(a), float(b)
    if not b > a:
        raise ValueError("uniff needs b > a")
    return _f32(a + rng.u01f() * (b - a))


def _check_var(var, name):
    var = float(var)
    if not var >= 0.0:
        raise ValueError("%s variance must be >= 0" % name)
    return var


def norm(rng, mu=0.0, var=1.0):
    return float(mu) + math.sqrt(_check_var(var, "normal")) * std_norm(rng)


def norm_f(rng, mu=0.0, var=1.0):
    return _f32(float(mu) + math.sqrt(_check_var(var, "normf")) * std_norm_f(rng))


def expo(rng, beta=1.0):
    beta = float(beta)
    if not beta > 0.0:
        raise ValueError("exponential scale must be > 0")
    return beta * std_exp(rng)


def expo_f(rng, beta=1.0):
    beta = float(beta)
    if not beta > 0.0:
        raise ValueError("expf scale must be > 0")
    return _f32(beta * std_exp_f(rng))


def lognormal(rng, mu=0.0, var=1.0):
    return det_exp(norm(rng, mu, var))


def gamma(rng, alpha, theta=1.0):
    """Marsaglia-Tsang squeeze for alpha >= 1, with the standard
    power-of-uniform boost below 1. alpha == 1 runs the general path."""
    alpha = float(alpha)
    theta = float(theta)
    if not alpha > 0.0:
        raise ValueError("gamma shape must be > 0")
    if not theta > 0.0:
        raise ValueError("gamma scale must be > 0")
    if alpha < 1.0:
        base = gamma(rng, alpha + 1.0, 1.0)
        u = rng.u01()
        return theta * base * det_exp(det_log(u) / alpha)
    c = _tally(rng, "gamma")
    d = alpha - 1.0 / 3.0
    cc = 1.0 / math.sqrt(9.0 * d)
    while True:
        c["attempts"] += 1
        while True:
            z = std_norm(rng)
            t = 1.0 + cc * z
            if t > 0.0:
                break
        v = t * t * t
        u = rng.u01()
        zz = z * z
        if u < 1.0 - 0.0331 * zz * zz:
            return theta * d * v
        if det_log(u) < 0.5 * zz + d - d * v + d * det_log(v):
            return theta * d * v


def beta(rng, a, b):
    x = gamma(rng, a, 1.0)
    y = gamma(rng, b, 1.0)
    return x / (x + y)


def chi2(rng, nu):
    nu = float(nu)
    if not nu > 0.0:
        raise ValueError("chi2 degrees of freedom must be > 0")
    return gamma(rng, nu / 2.0, 2.0)


def student_t(rng, nu):
    nu = float(nu)
    if not nu > 0.0:
        raise ValueError("t degrees of freedom must be > 0")
    z = std_norm(rng)
    v = chi2(rng, nu)
    return z / math.sqrt(v / nu)


def fisher_f(rng, nu1, nu2):
    nu1, nu2 = float(nu1), float(nu2)
    if not (nu1 > 0.0 and nu2 > 0.0):
        raise ValueError("f degrees of freedom must be > 0")
    x = gamma(rng, nu1 / 2.0, 1.0)
    y = gamma(rng, nu2 / 2.0, 1.0)
    return (x / nu1) / (y / nu2)


def gumbel(rng, mu=0.0, beta=1.0):
    scale = float(beta)
    if not scale > 0.0:
        raise ValueError("gumbel scale must be > 0")
    u = rng.u01()
    return float(mu) - scale * det_log(-det_log(u))


def pareto(rng, alpha, xm=1.0):
    alpha, xm = float(alpha), float(xm)
    if not (alpha > 0.0 and xm > 0.0):
        raise ValueError("pareto needs alpha > 0 and xm > 0")
    return xm * det_exp(std_exp(rng) / alpha)


def gpd(rng, xi, mu=0.0, sigma=1.0):
    """Generalized Pareto via its Pareto/exponential representations."""
    xi, mu, sigma = float(xi), float(mu), float(sigma)
    if not sigma > 0.0:
        raise ValueError("gpd scale must be > 0")
    if xi == 0.0:
        return mu + sigma * std_exp(rng)
    p = det_exp(std_exp(rng) * abs(xi))
    if xi > 0.0:
        return mu + sigma * (p - 1.0) / xi
    return mu - sigma * (1.0 - 1.0 / p) / xi


def weibull(rng, k, lam=1.0):
    k, lam = float(k), float(lam)
    if not (k > 0.0 and lam > 0.0):
        raise ValueError("weibull needs k > 0 and lambda > 0")
    e = std_exp(rng)
    return lam * det_exp(det_log(e) / k)


def skew_normal(rng, alpha=0.0, mu=0.0, sigma=1.0):
    alpha, mu, sigma = float(alpha), float(mu), float(sigma)
    if not sigma > 0.0:
        raise ValueError("skew_normal scale must be > 0")
    delta = alpha / math.sqrt(1.0 + alpha * alpha)
    z1 = std_norm(rng)
    z2 = std_norm(rng)
    z = delta * abs(z1) + math.sqrt(1.0 - delta * delta) * z2
    return mu + sigma * z


def _semidefinite_factor(cov):
    try:
        return np.linalg.cholesky(cov)
    except np.linalg.LinAlgError:
        from scipy.linalg.lapack import dpstrf

        c, piv, rank, info = dpstrf(cov, lower=1)
        if info < 0:
            raise ValueError("covariance factorization failed")
        low = np.tril(c)
        low[:, rank:] = 0.0
        m = np.zeros_like(low)
        m[piv - 1, :] = low
        scale = max(1.0, float(np.abs(cov).max()))
        if not np.allclose(m @ m.T, cov, rtol=0.0, atol=1e-8 * scale):
            raise ValueError("mvn covariance must be positive semidefinite")
        return m


def mvn(rng, mean, cov, n=1, layout="n_d"):
    """Multivariate normal: n draws of dimension d.

    layout "n_d" returns shape (n, d); "d_n" the transpose. Uses the
    platform BLAS for the factor and the product, so it is the one
    continuous sampler excluded from the bit-identical contract.
    """
    mean = np.asarray(mean, dtype=np.float64)
    cov = np.asarray(cov, dtype=np.float64)
    if mean.ndim != 1 or cov.shape != (mean.size, mean.size):
        raise ValueError("mvn needs a length-d mean and a d x d covariance")
    if not np.allclose(cov, cov.T, rtol=1e-9, atol=1e-12):
        raise ValueError("mvn covariance must be symmetric")
    if layout not in ("n_d", "d_n"):
        raise ValueError("mvn layout must be 'n_d' or 'd_n'")
    n = int(n)
    if n < 1:
        raise ValueError("mvn needs n >= 1")
    d = mean.size
    factor = _semidefinite_factor(cov)
    z = np.array(
        [std_norm(rng) for _ in range(n * d)], dtype=np.float64
    ).reshape(n, d)
    x = mean + z @ factor.T
    return x if layout == "n_d" else x.T


_SCALAR = {
    "u01": lambda rng: rng.u01(),
    "u01f": lambda rng: rng.u01f(),
    "unif": unif,
    "uniff": unif_f,
    "norm": norm,
    "normf": norm_f,
    "exp": expo,
    "expf": expo_f,
    "lognormal": lognormal,
    "gamma": gamma,
    "beta": beta,
    "chi2": chi2,
    "t": student_t,
    "f": fisher_f,
    "gumbel": gumbel,
    "pareto": pareto,
    "gpd": gpd,
    "weibull": weibull,
    "skew_normal": skew_normal,
}

_TRANSFORMED = {"lognormal", "gumbel", "pareto", "weibull", "gpd"}


def _fill_vectorized(rng, name, params, n):
    """Bulk path for the transform families: identical word consumption
    to the scalar path, but the final log/exp runs on the whole array.
    Stays within a few ulp of the scalar path; the bitexact mode
    switches back to the scalar loop."""
    if name == "lognormal":
        mu = float(params.get("mu", 0.0))
        var = _check_var(params.get("var", 1.0), "lognormal")
        s = math.sqrt(var)
        zs = np.array([std_norm(rng) for _ in range(n)])
        return np.exp(mu + s * zs)
    if name == "gumbel":
        mu = float(params.get("mu", 0.0))
        b = float(params.get("beta", 1.0))
        if not b > 0.0:
            raise ValueError("gumbel scale must be > 0")
        us = np.array([rng.u01() for _ in range(n)])
        with np.errstate(divide="ignore"):
            return mu - b * np.log(-np.log(us))
    if name == "pareto":
        alpha = float(params["alpha"])
        xm = float(params.get("xm", 1.0))
        if not (alpha > 0.0 and xm > 0.0):
            raise ValueError("pareto needs alpha > 0 and xm > 0")
        es = np.array([std_exp(rng) for _ in range(n)])
        return xm * np.exp(es / alpha)
    if name == "weibull":
        k = float(params["k"])
        lam = float(params.get("lam", 1.0))
        if not (k > 0.0 and lam > 0.0):
            raise ValueError("weibull needs k > 0 and lambda > 0")
        es = np.array([std_exp(rng) for _ in range(n)])
        return lam * np.exp(np.log(es) / k)
    if name == "gpd":
        xi = float(params["xi"])
        mu = float(params.get("mu", 0.0))
        sigma = float(params.get("sigma", 1.0))
        if not sigma > 0.0:
            raise ValueError("gpd scale must be > 0")
        es = np.array([std_exp(rng) for _ in range(n)])
        if xi == 0.0:
            return mu + sigma * es
        p = np.exp(es * abs(xi))
        if xi > 0.0:
            return mu + sigma * (p - 1.0) / xi
        return mu - sigma * (1.0 - 1.0 / p) / xi
    raise KeyError(name)


def fill(rng, name, params, n):
    """n draws of a named continuous distribution as a float list."""
    if name not in _SCALAR:
        raise ValueError("unknown continuous distribution %r" % name)
    n = int(n)
    if n < 0:
        raise ValueError("draw count must be >= 0")
    if name in _TRANSFORMED and not rng.bitexact:
        return [float(v) for v in _fill_vectorized(rng, name, params, n)]
    fn = _SCALAR[name]
    try:
        return [
            float(fn(rng, **params)) if params else float(fn(rng))
            for _ in range(n)
        ]
    except TypeError:
        raise ValueError(
            "bad parameters for %s: %r" % (name, sorted(params))
        ) from None
