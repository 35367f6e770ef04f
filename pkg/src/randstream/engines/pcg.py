"""PCG64 DXSM: 128-bit LCG state with the double-xorshift-multiply output."""

MASK64 = 0xFFFFFFFFFFFFFFFF
MASK128 = (1 << 128) - 1

DXSM_MULT = 0xDA942042E4DD58B5  # cheap 64-bit multiplier used by both halves
LCG_MULT = 0xDA942042E4DD58B5


class Pcg64Dxsm:
    ID = "pcg64"
    NAME = "PCG64 DXSM"
    AUTHORS = "O'Neill"
    YEAR = 2019
    STATE_WORDS = 4
    SEED_WORDS = 4
    CHUNK = 1
    PERIOD = "2^128 per increment"
    FAMILY = None

    def __init__(self):
        self.state = 0
        self.inc = 1

    def _output(self):
        # DXSM permutation of the *pre-step* state.
        hi = (self.state >> 64) & MASK64
        lo = (self.state & MASK64) | 1
        hi ^= hi >> 32
        hi = (hi * DXSM_MULT) & MASK64
        hi ^= hi >> 48
        return (hi * lo) & MASK64

    def generate(self, n):
        out = []
        for _ in range(n):
            out.append(self._output())
            self.state = (self.state * LCG_MULT + self.inc) & MASK128
        return out

    def advance(self, delta):
        """Advance the LCG by delta steps in O(log delta) (Brown's method)."""
        delta &= MASK128
        acc_mult = 1
        acc_plus = 0
        cur_mult = LCG_MULT
        cur_plus = self.inc
        while delta > 0:
            if delta & 1:
                acc_mult = (acc_mult * cur_mult) & MASK128
                acc_plus = (acc_plus * cur_mult + cur_plus) & MASK128
            cur_plus = ((cur_mult + 1) * cur_plus) & MASK128
            cur_mult = (cur_mult * cur_mult) & MASK128
            delta >>= 1
        self.state = (self.state * acc_mult + acc_plus) & MASK128

    def set_inc(self, words):
        if len(words) != 2:
            raise ValueError("pcg64 increment is 2 words")
        inc = (int(words[0]) & MASK64) | ((int(words[1]) & MASK64) << 64)
        self.inc = inc | 1

    def get_state(self):
        return [
            self.state & MASK64,
            (self.state >> 64) & MASK64,
            self.inc & MASK64,
            (self.inc >> 64) & MASK64,
        ]

    def set_state(self, words):
        if len(words) != 4:
            raise ValueError("pcg64 expects 4 state words, got %d" % len(words))
        words = [int(w) & MASK64 for w in words]
        inc = words[2] | (words[3] << 64)
        if inc % 2 == 0:
            raise ValueError("pcg64 increment must be odd")
        self.state = words[0] | (words[1] << 64)
        self.inc = inc

    def seed_from(self, words):
        words = [int(w) & MASK64 for w in words]
        self.state = words[0] | (words[1] << 64)
        self.inc = (words[2] | (words[3] << 64)) | 1
