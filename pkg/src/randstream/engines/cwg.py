"""cwg128, Dziala's 128-bit Collatz-Weyl generator."""

MASK64 = 0xFFFFFFFFFFFFFFFF
MASK128 = (1 << 128) - 1

SET_WEYL_WARMUP = 96  # published stream-initialization guidance


class Cwg128:
    """State: three 128-bit words (x, weyl state, counter part) plus the
    odd 128-bit Weyl increment that selects the stream."""

    ID = "cwg128"
    NAME = "cwg128"
    AUTHORS = "Dziala"
    YEAR = 2022
    STATE_WORDS = 8
    SEED_WORDS = 8
    CHUNK = 1
    PERIOD = "2^128 per increment"
    FAMILY = None

    def __init__(self):
        self.x = 0          # 128-bit multiplicative part
        self.weyl = 0       # 128-bit Weyl state
        self.extra = 0      # 128-bit additive state driven by the increment
        self.inc = 1        # odd 128-bit Weyl increment

    def generate(self, n):
        x, weyl, extra, inc = self.x, self.weyl, self.extra, self.inc
        out = []
        for _ in range(n):
            weyl = (weyl + x) & MASK128
            extra = (extra + inc) & MASK128
            x = (((x >> 1) * (weyl | 1)) ^ extra) & MASK128
            out.append(((weyl >> 96) ^ x) & MASK64)
        self.x, self.weyl, self.extra, self.inc = x, weyl, extra, inc
        return out

    def set_weyl(self, words):
        if len(words) != 2:
            raise ValueError("cwg128 Weyl increment is 2 words")
        inc = (int(words[0]) & MASK64) | ((int(words[1]) & MASK64) << 64)
        self.inc = inc | 1
        self.generate(SET_WEYL_WARMUP)

    def get_state(self):
        words = []
        for v in (self.x, self.weyl, self.extra, self.inc):
            words.append(v & MASK64)
            words.append((v >> 64) & MASK64)
        return words

    def set_state(self, words):
        if len(words) != 8:
            raise ValueError("cwg128 expects 8 state words, got %d" % len(words))
        words = [int(w) & MASK64 for w in words]
        vals = [words[2 * i] | (words[2 * i + 1] << 64) for i in range(4)]
        if vals[3] % 2 == 0:
            raise ValueError("cwg128 Weyl increment must be odd")
        self.x, self.weyl, self.extra, self.inc = vals

    def seed_from(self, words):
        words = [int(w) & MASK64 for w in words]
        vals = [words[2 * i] | (words[2 * i + 1] << 64) for i in range(4)]
        self.x, self.weyl, self.extra = vals[:3]
        self.inc = vals[3] | 1
