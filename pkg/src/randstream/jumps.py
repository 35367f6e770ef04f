"""Polynomial jumps for the F2-linear engine families.

A linear engine's transition T satisfies its characteristic polynomial
p, so T^N = (x^N mod p)(T). Jumping N steps is then: compute
g = x^N mod p once, and fold the state with g(T) using only single
steps and xors. The characteristic polynomials are recovered from the
engines themselves with Berlekamp-Massey on a state-bit readout, and
the jump polynomials for the supported power-of-two distances live in
a committed table so runtime never depends on the recovery step.

Polynomials over F2 are plain ints, bit i holding the coefficient of
x^i.
"""

import binascii
from pathlib import Path

from .engines.xorfam import STATE_BITS, STEP_FUNCTIONS

FAMILIES = {
    fam: (STEP_FUNCTIONS[fam], STATE_BITS[fam]) for fam in STEP_FUNCTIONS
}

STANDARD_JUMPS = (32, 64, 96, 128, 192)
FAMILY_JUMPS = {
    "x256": STANDARD_JUMPS,
    "x128+": (32, 64, 96),
    "xoro": (32, 64, 96),
}
LANE_JUMP = {"x256": 253}

TABLE_PATH = Path(__file__).parent / "_tables" / "jump_polynomials.txt"


def poly_mod(r, c):
    n = c.bit_length() - 1
    while True:
        d = r.bit_length() - 1
        if d < n:
            return r
        r ^= c << (d - n)


def poly_square(a):
    r = 0
    i = 0
    while a:
        if a & 1:
            r |= 1 << (i + i)
        a >>= 1
        i += 1
    return r


def x_pow_mod(n, c):
    """x^n mod c by left-to-right square and multiply on n's bits."""
    if n < 0:
        raise ValueError("jump distance must be nonnegative")
    r = 1
    for shift in range(n.bit_length() - 1, -1, -1):
        r = poly_mod(poly_square(r), c)
        if (n >> shift) & 1:
            r = poly_mod(r << 1, c)
    return r


def berlekamp_massey(bits):
    """Connection polynomial (int, bit j = c_j) and degree L for an
    F2 sequence satisfying s_i = sum_{j=1..L} c_j s_{i-j}."""
    c, b = 1, 1
    L, m = 0, 1
    for i, s in enumerate(bits):
        d = s
        t = c >> 1
        j = 1
        while t and j <= L:
            if t & 1:
                d ^= bits[i - j]
            t >>= 1
            j += 1
        if d:
            old = c
            c ^= b << m
            if 2 * L <= i:
                L, b, m = i + 1 - L, old, 1
            else:
                m += 1
        else:
            m += 1
    return c, L


def characteristic_polynomial(family):
    step, nbits = FAMILIES[family]
    nwords = nbits // 64
    state = [0] * nwords
    state[0] = 1
    bits = []
    for _ in range(2 * nbits):
        bits.append(state[0] & 1)
        state = step(state)
    conn, degree = berlekamp_massey(bits)
    if degree != nbits:
        raise RuntimeError(
            "recovered minimal polynomial for %s has degree %d, expected %d"
            % (family, degree, nbits)
        )
    # reciprocal of the connection polynomial = characteristic polynomial
    p = 0
    for j in range(degree + 1):
        if (conn >> j) & 1:
            p |= 1 << (degree - j)
    return p


def apply_polynomial(step_fn, state, poly):
    """g(T) applied to state: acc ^= T^i(state) for each set bit i."""
    acc = [0] * len(state)
    cur = list(state)
    while poly:
        if poly & 1:
            acc = [a ^ c for a, c in zip(acc, cur)]
        poly >>= 1
        if poly:
            cur = step_fn(cur)
    return acc


def brute_jump(step_fn, state, n):
    cur = list(state)
    for _ in range(n):
        cur = step_fn(cur)
    return cur


def generate_table_text():
    """Rebuild the committed table from scratch. Slow path; used by the
    generator tool and by tests that re-derive the table."""
    lines = []
    for fam in ("x256", "x128+", "xoro"):
        p = characteristic_polynomial(fam)
        ks = list(FAMILY_JUMPS[fam])
        if fam in LANE_JUMP:
            ks.append(LANE_JUMP[fam])
        for k in ks:
            g = x_pow_mod(1 << k, p)
            lines.append("%s %d %x" % (fam, k, g))
    body = "\n".join(lines)
    crc = binascii.crc32(body.encode("ascii")) & 0xFFFFFFFF
    return (
        "# randstream jump polynomial table\n# version 1\n# crc32 %08x\n%s\n"
        % (crc, body)
    )


def _load_table():
    text = TABLE_PATH.read_text("ascii")
    crc_expected = None
    records = {}
    body_lines = []
    for line in text.splitlines():
        if line.startswith("# crc32 "):
            crc_expected = int(line.split()[-1], 16)
            continue
        if line.startswith("#") or not line.strip():
            continue
        body_lines.append(line)
        fam, k, hexpoly = line.split()
        records[(fam, int(k))] = int(hexpoly, 16)
    crc_actual = binascii.crc32("\n".join(body_lines).encode("ascii")) & 0xFFFFFFFF
    if crc_expected is None or crc_actual != crc_expected:
        raise RuntimeError("jump polynomial table failed its checksum")
    return records


_TABLE = None


def jump_polynomial(family, k):
    global _TABLE
    if _TABLE is None:
        _TABLE = _load_table()
    try:
        return _TABLE[(family, k)]
    except KeyError:
        raise ValueError(
            "no jump polynomial for family %r at 2^%d" % (family, k)
        ) from None
