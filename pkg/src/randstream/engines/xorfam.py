"""The xor-shift/rotate family: x256++, x256**, x128+, xoro++.

Transitions are taken verbatim from the authors' reference code. The
state transition of each engine is linear over F2, which is what makes
polynomial jumps possible; the pure ``*_step_state`` functions below
expose the transition without the output map for the jump machinery.
"""

MASK64 = 0xFFFFFFFFFFFFFFFF


def rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & MASK64


def x256_step_state(s):
    """One transition of the shared xoshiro256 linear engine."""
    s0, s1, s2, s3 = s
    t = (s1 << 17) & MASK64
    s2 ^= s0
    s3 ^= s1
    s1 ^= s2
    s0 ^= s3
    s2 ^= t
    s3 = rotl(s3, 45)
    return [s0, s1, s2, s3]


def x128p_step_state(s):
    """One transition of the xorshift128+ linear engine (shifts 23, 18, 5)."""
    s1, s0 = s[0], s[1]
    s1 ^= (s1 << 23) & MASK64
    s1 = s1 ^ s0 ^ (s1 >> 18) ^ (s0 >> 5)
    return [s0, s1]


def xoro_step_state(s):
    """One transition of the xoroshiro128 linear engine (49, 21, 28)."""
    s0, s1 = s
    s1 ^= s0
    new0 = rotl(s0, 49) ^ s1 ^ ((s1 << 21) & MASK64)
    return [new0, rotl(s1, 28)]


class _XorEngine:
    """Shared plumbing: a word-list state that must never be all zero."""

    def __init__(self):
        self.s = [0] * self.STATE_WORDS
        self.s[0] = 1

    def get_state(self):
        return list(self.s)

    def set_state(self, words):
        words = [int(w) & MASK64 for w in words]
        if len(words) != self.STATE_WORDS:
            raise ValueError(
                "%s expects %d state words, got %d"
                % (self.ID, self.STATE_WORDS, len(words))
            )
        if not any(words):
            raise ValueError("all-zero state is invalid for " + self.ID)
        self.s = words

    def seed_from(self, words):
        words = [int(w) & MASK64 for w in words]
        if not any(words):
            words[0] = 1  # documented repair, never silently inside set_state
        self.s = words


class X256PlusPlus(_XorEngine):
    ID = "x256++"
    NAME = "xoshiro256++"
    AUTHORS = "Vigna and Blackman"
    YEAR = 2019
    STATE_WORDS = 4
    SEED_WORDS = 4
    CHUNK = 1
    PERIOD = "2^256-1"
    FAMILY = "x256"

    def generate(self, n):
        s0, s1, s2, s3 = self.s
        out = []
        for _ in range(n):
            out.append((rotl((s0 + s3) & MASK64, 23) + s0) & MASK64)
            t = (s1 << 17) & MASK64
            s2 ^= s0
            s3 ^= s1
            s1 ^= s2
            s0 ^= s3
            s2 ^= t
            s3 = rotl(s3, 45)
        self.s = [s0, s1, s2, s3]
        return out


class X256StarStar(_XorEngine):
    ID = "x256**"
    NAME = "xoshiro256**"
    AUTHORS = "Vigna and Blackman"
    YEAR = 2018
    STATE_WORDS = 4
    SEED_WORDS = 4
    CHUNK = 1
    PERIOD = "2^256-1"
    FAMILY = "x256"

    def generate(self, n):
        s0, s1, s2, s3 = self.s
        out = []
        for _ in range(n):
            out.append((rotl((s1 * 5) & MASK64, 7) * 9) & MASK64)
            t = (s1 << 17) & MASK64
            s2 ^= s0
            s3 ^= s1
            s1 ^= s2
            s0 ^= s3
            s2 ^= t
            s3 = rotl(s3, 45)
        self.s = [s0, s1, s2, s3]
        return out


class X128Plus(_XorEngine):
    ID = "x128+"
    NAME = "xorshift128+"
    AUTHORS = "Vigna"
    YEAR = 2014
    STATE_WORDS = 2
    SEED_WORDS = 2
    CHUNK = 1
    PERIOD = "2^128-1"
    FAMILY = "x128+"

    def generate(self, n):
        a, b = self.s
        out = []
        for _ in range(n):
            s1, s0 = a, b
            out.append((s0 + s1) & MASK64)
            a = s0
            s1 ^= (s1 << 23) & MASK64
            b = s1 ^ s0 ^ (s1 >> 18) ^ (s0 >> 5)
        self.s = [a, b]
        return out


class XoroPlusPlus(_XorEngine):
    ID = "xoro++"
    NAME = "xoroshiro128++"
    AUTHORS = "Vigna and Blackman"
    YEAR = 2019
    STATE_WORDS = 2
    SEED_WORDS = 2
    CHUNK = 1
    PERIOD = "2^128-1"
    FAMILY = "xoro"

    def generate(self, n):
        s0, s1 = self.s
        out = []
        for _ in range(n):
            out.append((rotl((s0 + s1) & MASK64, 17) + s0) & MASK64)
            s1 ^= s0
            s0 = rotl(s0, 49) ^ s1 ^ ((s1 << 21) & MASK64)
            s1 = rotl(s1, 28)
        self.s = [s0, s1]
        return out


STEP_FUNCTIONS = {
    "x256": x256_step_state,
    "x128+": x128p_step_state,
    "xoro": xoro_step_state,
}

STATE_BITS = {"x256": 256, "x128+": 128, "xoro": 128}
