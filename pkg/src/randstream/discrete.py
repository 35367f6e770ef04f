"""Bounded integers, permutations, and subset sampling.

Bounded draws use the multiply-shift rejection method: widen the word
by the bound, keep the high part, and redraw only when the low part
falls under 2^W mod b. The rejection zone is empty when b is a power of
two and never exceeds b/2^W, so redraws are rare at any realistic
bound. 8/16/32-bit draws consume one 32-bit half-word; 64-bit draws
consume a full word.
"""

_WIDTHS = {8: "u32", 16: "u32", 32: "u32", 64: "u64"}


def _word(rng, width):
    if width == 64:
        return rng.next_u64()
    return rng.next_u32() & ((1 << width) - 1)


def bounded_uint(rng, b, width=64):
    """Uniform integer in [0, b). b = 0 means the full width (the word
    passes through untouched); b = 1 consumes a word and returns 0."""
    if width not in _WIDTHS:
        raise ValueError("bounded width must be 8, 16, 32, or 64")
    b = int(b)
    if b < 0 or b > (1 << width):
        raise ValueError("bound must be in [0, 2^%d]" % width)
    x = _word(rng, width)
    if b == 0:
        return x
    m = x * b
    low = m & ((1 << width) - 1)
    if low < b:
        threshold = ((1 << width) - b) % b
        while low < threshold:
            x = _word(rng, width)
            m = x * b
            low = m & ((1 << width) - 1)
    return m >> width


def bounded_int(rng, m, n, width=64):
    """Uniform integer in the inclusive signed range [m, n]."""
    if width not in (32, 64):
        raise ValueError("signed bounded width must be 32 or 64")
    m, n = int(m), int(n)
    half = 1 << (width - 1)
    if not (-half <= m <= n <= half - 1):
        raise ValueError(
            "range [%d, %d] does not fit a signed %d-bit span" % (m, n, width)
        )
    span = n - m + 1
    if span == (1 << width):
        return m + _word(rng, width)
    return m + bounded_uint(rng, span, width)


def permutation(rng, n):
    """Fisher-Yates from the top index down; index draws are 32-bit."""
    n = int(n)
    if n < 0 or n > (1 << 32):
        raise ValueError("permutation size must be in [0, 2^32]")
    arr = list(range(n))
    for i in range(n - 1, 0, -1):
        j = bounded_uint(rng, i + 1, 32)
        arr[i], arr[j] = arr[j], arr[i]
    return arr


def sample_without_replacement(rng, n, k):
    """k distinct values from range(n), sorted ascending.

    Floyd's algorithm when k is at most half of n (k draws total),
    a reservoir pass otherwise.
    """
    n, k = int(n), int(k)
    if n < 0 or n > (1 << 32):
        raise ValueError("population size must be in [0, 2^32]")
    if not 0 <= k <= n:
        raise ValueError("sample size must be in [0, population size]")
    if 2 * k <= n:
        chosen = set()
        for j in range(n - k, n):
            t = bounded_uint(rng, j + 1, 32)
            chosen.add(j if t in chosen else t)
        return sorted(chosen)
    reservoir = list(range(k))
    for i in range(k, n):
        j = bounded_uint(rng, i + 1, 32)
        if j < k:
            reservoir[j] = i
    return sorted(reservoir)


_BOUNDED_NAMES = {
    "uint8": 8,
    "uint16": 16,
    "uint32": 32,
    "uint64": 64,
}


def fill(rng, name, params, n):
    """n draws of a named discrete distribution as an int list."""
    n = int(n)
    if n < 0:
        raise ValueError("draw count must be >= 0")
    if name in _BOUNDED_NAMES:
        b = int(params.get("b", 0))
        width = _BOUNDED_NAMES[name]
        return [bounded_uint(rng, b, width) for _ in range(n)]
    if name in ("int", "long_long"):
        width = 32 if name == "int" else 64
        half = 1 << (width - 1)
        m = int(params.get("m", -half))
        hi = int(params.get("n", half - 1))
        return [bounded_int(rng, m, hi, width) for _ in range(n)]
    raise ValueError("unknown discrete distribution %r" % name)
