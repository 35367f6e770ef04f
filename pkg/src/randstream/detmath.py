"""Deterministic exp and log.

Platform libm implementations of exp and log disagree in the last ulp,
which breaks bit-identical output for any distribution that needs a
transcendental. These are faithful ports of the classic fdlibm kernels
(argument reduction plus fixed minimax polynomials, all in strict IEEE
double steps), so every platform computes the same bits. Accuracy is
below 1 ulp; the test suite pins both functions against a
high-precision reference.

Only +, -, *, / and exact bit surgery are used, so CPython's IEEE
doubles reproduce the reference semantics operation for operation.
"""

from struct import pack, unpack

_HUGE = 1.0e300
_TWOM1000 = 9.33263618503218878990e-302

_O_THRESHOLD = 7.09782712893383973096e+02
_U_THRESHOLD = -7.45133219101941108420e+02
_INVLN2 = 1.44269504088896338700e+00
_LN2_HI = 6.93147180369123816490e-01
_LN2_LO = 1.90821492927058770002e-10

_P1 = 1.66666666666666019037e-01
_P2 = -2.77777777770155933842e-03
_P3 = 6.61375632143793436117e-05
_P4 = -1.65339022054652515390e-06
_P5 = 4.13813679705723846039e-08

_LG1 = 6.666666666666735130e-01
_LG2 = 3.999999999940941908e-01
_LG3 = 2.857142874366239149e-01
_LG4 = 2.222219843214978396e-01
_LG5 = 1.818357216161805012e-01
_LG6 = 1.531383769920937332e-01
_LG7 = 1.479819860511658591e-01

_TWO54 = 1.80143985094819840000e+16


def _bits(x):
    return unpack("<Q", pack("<d", x))[0]


def _from_bits(b):
    return unpack("<d", pack("<Q", b & 0xFFFFFFFFFFFFFFFF))[0]


def _high(x):
    return _bits(x) >> 32


def _with_high(x, hi):
    return _from_bits(((hi & 0xFFFFFFFF) << 32) | (_bits(x) & 0xFFFFFFFF))


def det_exp(x):
    x = float(x)
    hx = _high(x)
    xsb = (hx >> 31) & 1
    hx &= 0x7FFFFFFF

    if hx >= 0x40862E42:
        if hx >= 0x7FF00000:
            if ((hx & 0xFFFFF) | (_bits(x) & 0xFFFFFFFF)) != 0:
                return x + x  # nan
            return x if xsb == 0 else 0.0  # +-inf
        if x > _O_THRESHOLD:
            return _HUGE * _HUGE
        if x < _U_THRESHOLD:
            return _TWOM1000 * _TWOM1000

    k = 0
    hi = lo = 0.0
    if hx > 0x3FD62E42:
        if hx < 0x3FF0A2E4:
            if xsb == 0:
                hi = x - _LN2_HI
                lo = _LN2_LO
                k = 1
            else:
                hi = x + _LN2_HI
                lo = -_LN2_LO
                k = -1
        else:
            k = int(_INVLN2 * x + (0.5 if xsb == 0 else -0.5))
            t = float(k)
            hi = x - t * _LN2_HI
            lo = t * _LN2_LO
        x = hi - lo
    elif hx < 0x3E300000:
        if _HUGE + x > 1.0:
            return 1.0 + x

    t = x * x
    c = x - t * (_P1 + t * (_P2 + t * (_P3 + t * (_P4 + t * _P5))))
    if k == 0:
        return 1.0 - ((x * c / (c - 2.0)) - x)
    y = 1.0 - ((lo - (x * c) / (2.0 - c)) - hi)
    if k >= -1021:
        return _with_high(y, _high(y) + (k << 20))
    return _with_high(y, _high(y) + ((k + 1000) << 20)) * _TWOM1000


def det_log(x):
    x = float(x)
    u = _bits(x)
    hx = u >> 32
    lx = u & 0xFFFFFFFF

    k = 0
    if hx >> 31:
        if ((hx & 0x7FFFFFFF) | lx) == 0:
            return float("-inf")  # log(-0.0)
        return float("nan")
    if hx < 0x00100000:
        if (hx | lx) == 0:
            return float("-inf")
        k -= 54
        x *= _TWO54
        hx = _high(x)
    if hx >= 0x7FF00000:
        return x + x  # +inf or nan

    k += (hx >> 20) - 1023
    hx &= 0x000FFFFF
    i = (hx + 0x95F64) & 0x100000
    x = _with_high(x, hx | (i ^ 0x3FF00000))
    k += i >> 20
    f = x - 1.0

    if (0x000FFFFF & (2 + hx)) < 3:
        if f == 0.0:
            if k == 0:
                return 0.0
            dk = float(k)
            return dk * _LN2_HI + dk * _LN2_LO
        big_r = f * f * (0.5 - 0.33333333333333333 * f)
        if k == 0:
            return f - big_r
        dk = float(k)
        return dk * _LN2_HI - ((big_r - dk * _LN2_LO) - f)

    s = f / (2.0 + f)
    dk = float(k)
    z = s * s
    i = hx - 0x6147A
    w = z * z
    j = 0x6B851 - hx
    t1 = w * (_LG2 + w * (_LG4 + w * _LG6))
    t2 = z * (_LG1 + w * (_LG3 + w * (_LG5 + w * _LG7)))
    i |= j
    big_r = t2 + t1
    if i > 0:
        hfsq = 0.5 * f * f
        if k == 0:
            return f - (hfsq - s * (hfsq + big_r))
        return dk * _LN2_HI - ((hfsq - (s * (hfsq + big_r) + dk * _LN2_LO)) - f)
    if k == 0:
        return f - s * (f - big_r)
    return dk * _LN2_HI - ((s * (f - big_r) - dk * _LN2_LO) - f)
