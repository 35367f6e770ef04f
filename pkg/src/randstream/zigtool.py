"""Ziggurat table construction and threshold derivation.

This module rebuilds the 256-layer ziggurat tables for the normal and
exponential samplers from first principles in arbitrary precision, and
derives the integer accept/reject thresholds that let the slow path
decide almost every draw without evaluating the density.

The thresholds bracket the implementation's own secant through each
layer's slow region: L = yv*D + (rabs-k)*2^52 is an exact integer
encoding of the (position, height) pair, the secant decision boundary
is the constant D*2^52, and the brackets move that constant inward and
outward by the supremum gap between the secant and the true density.
Draws landing between the brackets are the only ones that evaluate the
density.

Everything here runs offline (table generation tool, verification
tests); the sampling path only reads the committed tables.
"""

import mpmath as mp

LAYERS = 256

NORM_START_R = "3.6541528853610087963519472518"
EXP_START_R = "7.6971174701310497140446280481"


def _density(kind):
    if kind == "norm":
        return lambda x: mp.exp(-x * x / 2)
    if kind == "exp":
        return lambda x: mp.exp(-x)
    raise ValueError("kind must be 'norm' or 'exp'")


def _density_inv(kind):
    if kind == "norm":
        return lambda y: mp.sqrt(-2 * mp.log(y))
    return lambda y: -mp.log(y)


def _tail_area(kind, r):
    if kind == "norm":
        return mp.sqrt(mp.pi / 2) * mp.erfc(r / mp.sqrt(2))
    return mp.exp(-r)


def solve_layers(kind, prec=120):
    """Find r, the layer volume v, and all layer edges x_1..x_255 = r.

    Layers shrink from the tail inward by equal area v; r is pinned by
    requiring the innermost edge to land exactly on density 1.
    """
    with mp.workprec(prec):
        f = _density(kind)
        finv = _density_inv(kind)

        def edges(r):
            v = r * f(r) + _tail_area(kind, r)
            xs = [mp.mpf(0)] * LAYERS
            xs[LAYERS - 1] = r
            for i in range(LAYERS - 1, 1, -1):
                y = f(xs[i]) + v / xs[i]
                if y >= 1:
                    return None, v
                xs[i - 1] = finv(y)
            return xs, v

        def gap(r):
            xs, v = edges(r)
            if xs is None:
                return mp.mpf(-1)
            return f(xs[1]) + v / xs[1] - 1

        start = mp.mpf(NORM_START_R if kind == "norm" else EXP_START_R)
        r = mp.findroot(gap, start, tol=mp.mpf(2) ** (-(prec - 10)))
        xs, v = edges(r)
        return r, v, xs


def reference_tables(kind, prec=120):
    """Independent regeneration of (k, w, f) for the double-precision
    samplers: k[i] scales the fast-accept bound, w[i] scales the raw
    mantissa to x, f[i] is the density at layer edge i."""
    shift = 52 if kind == "norm" else 53
    scale = mp.mpf(2) ** shift
    with mp.workprec(prec):
        f = _density(kind)
        r, v, xs = solve_layers(kind, prec=prec)
        k = [0] * LAYERS
        w = [0.0] * LAYERS
        fv = [0.0] * LAYERS
        k[0] = int(mp.floor(scale * r * f(r) / v))
        w[0] = float(v / f(r) / scale)
        fv[0] = 1.0
        for i in range(1, LAYERS):
            if i > 1:
                k[i] = int(mp.floor(scale * xs[i - 1] / xs[i]))
            w[i] = float(xs[i] / scale)
            fv[i] = float(f(xs[i]))
        return k, w, fv


def _sup_on_interval(g, lo, hi, iters=70):
    """Supremum of a smooth g on [lo, hi] by ternary search."""
    a, b = mp.mpf(lo), mp.mpf(hi)
    for _ in range(iters):
        m1 = a + (b - a) / 3
        m2 = b - (b - a) / 3
        if g(m1) < g(m2):
            a = m1
        else:
            b = m2
    return max(g(a), g((a + b) / 2), g(b))


def _sup_gap(g, upper, grid=1024):
    """Supremum of g over [0, upper] via a dense grid plus local refine."""
    ts = [upper * j / grid for j in range(grid + 1)]
    vals = [g(t) for t in ts]
    best = mp.mpf(0)
    for j in range(grid + 1):
        left = vals[j - 1] if j > 0 else vals[j]
        right = vals[j + 1] if j < grid else vals[j]
        if vals[j] >= left and vals[j] >= right:
            lo = ts[j - 1] if j > 0 else ts[j]
            hi = ts[j + 1] if j < grid else ts[j]
            cand = _sup_on_interval(g, lo, hi)
            if cand > best:
                best = cand
    return best


YSCALE = 1 << 52


def dstar_thresholds(kind, k_arr, w_arr, f_arr, prec=160):
    """Certain-accept / certain-reject integer thresholds per layer.

    Computed against the committed double tables (not the ideal reals),
    because the thresholds must bracket what the sampler actually
    compares. Index 0 is the tail layer and has no thresholds.
    """
    shift = 52 if kind == "norm" else 53
    span = 1 << shift
    ta = [0] * LAYERS
    tr = [0] * LAYERS
    with mp.workprec(prec):
        f = _density(kind)
        for i in range(1, LAYERS):
            ki = int(k_arr[i])
            d = span - ki
            wi = mp.mpf(w_arr[i])
            fhi = mp.mpf(f_arr[i - 1])
            flo = mp.mpf(f_arr[i])
            df = fhi - flo

            def gap(t, _ki=ki, _wi=wi, _fhi=fhi, _df=df, _d=d):
                secant = _fhi - (t / _d) * _df
                return secant - f((_ki + t) * _wi)

            sup_acc = max(_sup_gap(gap, mp.mpf(d)), mp.mpf(0))
            sup_rej = max(_sup_gap(lambda t: -gap(t), mp.mpf(d)), mp.mpf(0))
            base = mp.mpf(d) * YSCALE
            ta[i] = int(mp.floor(base * (1 - sup_acc / df))) - 1
            tr[i] = int(mp.ceil(base * (1 + sup_rej / df))) + 1
    return ta, tr
