"""Counter-based engines: squares64, Philox-4x64 (10 rounds), ChaCha20.

Each output block is a keyed function of a counter, so the sequence can
be reproduced from (counter, key/nonce) alone. squares64 emits one word
per counter value, philox four, chacha20 eight (a 64-byte block).
"""

MASK64 = 0xFFFFFFFFFFFFFFFF
MASK32 = 0xFFFFFFFF


class Squares64:
    ID = "squares"
    NAME = "squares64"
    AUTHORS = "Widynski"
    YEAR = 2021
    STATE_WORDS = 2
    SEED_WORDS = 1
    CHUNK = 1
    PERIOD = "2^64 per key"
    FAMILY = None

    def __init__(self):
        self.counter = 0
        self.key = 1

    def generate(self, n):
        ctr = self.counter
        key = self.key
        out = []
        for _ in range(n):
            y = x = (ctr * key) & MASK64
            z = (y + key) & MASK64
            x = (x * x + y) & MASK64
            x = ((x >> 32) | (x << 32)) & MASK64
            x = (x * x + z) & MASK64
            x = ((x >> 32) | (x << 32)) & MASK64
            x = (x * x + y) & MASK64
            x = ((x >> 32) | (x << 32)) & MASK64
            t = x = (x * x + z) & MASK64
            x = ((x >> 32) | (x << 32)) & MASK64
            out.append(t ^ (((x * x + y) & MASK64) >> 32))
            ctr = (ctr + 1) & MASK64
        self.counter = ctr
        return out

    def set_key(self, words):
        if len(words) != 1:
            raise ValueError("squares key is 1 word")
        self.key = int(words[0]) & MASK64
        self.counter = 0

    def get_state(self):
        return [self.counter, self.key]

    def set_state(self, words):
        if len(words) != 2:
            raise ValueError("squares expects 2 state words, got %d" % len(words))
        self.counter = int(words[0]) & MASK64
        self.key = int(words[1]) & MASK64

    def seed_from(self, words):
        self.key = int(words[0]) & MASK64
        self.counter = 0


PHILOX_M0 = 0xD2E7470EE14C6C93
PHILOX_M1 = 0xCA5A826395121157
PHILOX_W0 = 0x9E3779B97F4A7C15
PHILOX_W1 = 0xBB67AE8584CAA73B


class Philox4x64:
    """State is counter (4 words) + key (2 words)."""

    ID = "philox"
    NAME = "Philox-4x64"
    AUTHORS = "Salmon and Moraes"
    YEAR = 2011
    STATE_WORDS = 6
    SEED_WORDS = 2
    CHUNK = 4
    PERIOD = "2^256 per key"
    FAMILY = None

    def __init__(self):
        self.ctr = [0, 0, 0, 0]
        self.key = [0, 0]

    @staticmethod
    def block(ctr, key):
        """The 10-round philox4x64 bijection for one counter value."""
        x0, x1, x2, x3 = ctr
        k0, k1 = key
        for _ in range(10):
            p0 = PHILOX_M0 * x0
            p1 = PHILOX_M1 * x2
            x0, x1, x2, x3 = (
                ((p1 >> 64) ^ x1 ^ k0) & MASK64,
                p1 & MASK64,
                ((p0 >> 64) ^ x3 ^ k1) & MASK64,
                p0 & MASK64,
            )
            k0 = (k0 + PHILOX_W0) & MASK64
            k1 = (k1 + PHILOX_W1) & MASK64
        return [x0, x1, x2, x3]

    def _bump(self):
        for i in range(4):
            self.ctr[i] = (self.ctr[i] + 1) & MASK64
            if self.ctr[i] != 0:
                break

    def generate(self, n):
        if n % 4 != 0:
            raise ValueError("philox emits 4-word blocks")
        out = []
        for _ in range(n // 4):
            out.extend(self.block(self.ctr, self.key))
            self._bump()
        return out

    def set_key(self, words):
        if len(words) != 2:
            raise ValueError("philox key is 2 words")
        self.key = [int(w) & MASK64 for w in words]
        self.ctr = [0, 0, 0, 0]

    def get_state(self):
        return list(self.ctr) + list(self.key)

    def set_state(self, words):
        if len(words) != 6:
            raise ValueError("philox expects 6 state words, got %d" % len(words))
        words = [int(w) & MASK64 for w in words]
        self.ctr = words[:4]
        self.key = words[4:]

    def seed_from(self, words):
        self.key = [int(w) & MASK64 for w in words[:2]]
        self.ctr = [0, 0, 0, 0]


def _rotl32(x, r):
    return ((x << r) | (x >> (32 - r))) & MASK32


CHACHA_CONST = (0x61707865, 0x3320646E, 0x79622D32, 0x6B206574)

# column rounds then diagonal rounds; one pass below = one double round
CHACHA_QROUNDS = (
    (0, 4, 8, 12), (1, 5, 9, 13), (2, 6, 10, 14), (3, 7, 11, 15),
    (0, 5, 10, 15), (1, 6, 11, 12), (2, 7, 8, 13), (3, 4, 9, 14),
)


class ChaCha20:
    ID = "chacha20"
    NAME = "ChaCha20"
    AUTHORS = "Bernstein"
    YEAR = 2008
    STATE_WORDS = 6
    SEED_WORDS = 6
    CHUNK = 8
    PERIOD = "2^35 bytes per nonce"
    FAMILY = None

    def __init__(self):
        self.key = [0, 0, 0, 0]     # four u64 -> eight u32 key words
        self.nonce = [0, 0, 0]      # three u32 words
        self.counter = 0            # 32-bit block counter

    def _block_words(self):
        """One 64-byte keystream block as eight little-endian u64 words."""
        key32 = []
        for w in self.key:
            key32.append(w & MASK32)
            key32.append((w >> 32) & MASK32)
        st = list(CHACHA_CONST) + key32 + [self.counter] + self.nonce
        x = st[:]
        for _ in range(10):
            for a, b, c, d in CHACHA_QROUNDS:
                xa, xb, xc, xd = x[a], x[b], x[c], x[d]
                xa = (xa + xb) & MASK32
                xd = _rotl32(xd ^ xa, 16)
                xc = (xc + xd) & MASK32
                xb = _rotl32(xb ^ xc, 12)
                xa = (xa + xb) & MASK32
                xd = _rotl32(xd ^ xa, 8)
                xc = (xc + xd) & MASK32
                xb = _rotl32(xb ^ xc, 7)
                x[a], x[b], x[c], x[d] = xa, xb, xc, xd
        out32 = [(x[i] + st[i]) & MASK32 for i in range(16)]
        return [out32[2 * i] | (out32[2 * i + 1] << 32) for i in range(8)]

    def generate(self, n):
        if n % 8 != 0:
            raise ValueError("chacha20 emits 8-word blocks")
        out = []
        for _ in range(n // 8):
            if self.counter > MASK32:
                raise OverflowError("stream exhausted")
            out.extend(self._block_words())
            self.counter += 1
        return out

    def set_nonce(self, words):
        if len(words) != 2:
            raise ValueError("chacha20 nonce is 96 bits passed as 2 words")
        w0 = int(words[0]) & MASK64
        w1 = int(words[1]) & MASK32
        self.nonce = [w0 & MASK32, (w0 >> 32) & MASK32, w1]
        self.counter = 0

    def get_state(self):
        return list(self.key) + [
            self.nonce[0] | (self.nonce[1] << 32),
            self.nonce[2] | ((self.counter & MASK32) << 32),
        ]

    def set_state(self, words):
        if len(words) != 6:
            raise ValueError("chacha20 expects 6 state words, got %d" % len(words))
        words = [int(w) & MASK64 for w in words]
        self.key = words[:4]
        self.nonce = [words[4] & MASK32, (words[4] >> 32) & MASK32, words[5] & MASK32]
        self.counter = (words[5] >> 32) & MASK32

    def seed_from(self, words):
        words = [int(w) & MASK64 for w in words]
        self.key = words[:4]
        self.nonce = [words[4] & MASK32, (words[4] >> 32) & MASK32, words[5] & MASK32]
        self.counter = 0
