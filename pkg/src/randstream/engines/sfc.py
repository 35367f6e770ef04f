"""sfc64, Chris Doty-Humphrey's small-fast-counting generator."""

MASK64 = 0xFFFFFFFFFFFFFFFF

SET_ABC_WARMUP = 18  # published stream-initialization guidance


class Sfc64:
    ID = "sfc64"
    NAME = "sfc64"
    AUTHORS = "Chris Doty-Humphrey"
    YEAR = 2010
    STATE_WORDS = 4
    SEED_WORDS = 3
    CHUNK = 1
    PERIOD = ">=2^64"
    FAMILY = None

    def __init__(self):
        self.a = 0
        self.b = 0
        self.c = 0
        self.w = 1

    def generate(self, n):
        a, b, c, w = self.a, self.b, self.c, self.w
        out = []
        for _ in range(n):
            r = (a + b + w) & MASK64
            w = (w + 1) & MASK64
            a = b ^ (b >> 11)
            b = (c + (c << 3)) & MASK64
            c = (((c << 24) | (c >> 40)) + r) & MASK64
            out.append(r)
        self.a, self.b, self.c, self.w = a, b, c, w
        return out

    def set_abc(self, words):
        if len(words) != 3:
            raise ValueError("sfc64 stream selector is 3 words (a, b, c)")
        self.a, self.b, self.c = (int(w) & MASK64 for w in words)
        self.w = 0
        self.generate(SET_ABC_WARMUP)

    def get_state(self):
        return [self.a, self.b, self.c, self.w]

    def set_state(self, words):
        if len(words) != 4:
            raise ValueError("sfc64 expects 4 state words, got %d" % len(words))
        self.a, self.b, self.c, self.w = (int(w) & MASK64 for w in words)

    def seed_from(self, words):
        self.a, self.b, self.c = (int(w) & MASK64 for w in words[:3])
        self.w = 1
