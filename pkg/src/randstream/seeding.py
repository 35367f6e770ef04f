"""Seed material conditioning.

User seeds are arbitrary 64-bit words; engines need well-mixed state of
varying width. A 128-bit entropy pool bridges the two: seed words are
hashed into the pool, the pool is cross-mixed so every input bit
influences every output word, and output words are drawn from the
cycled pool with a second hash. Spawn keys are extra words appended
after the seed, which gives an unbounded tree of decorrelated
substreams from one seed.

All arithmetic is on 32-bit lanes, so the construction behaves
identically on every platform.
"""

import os
import time

MASK32 = 0xFFFFFFFF
MASK64 = 0xFFFFFFFFFFFFFFFF

POOL_WORDS = 4

INIT_A = 0x43B0D7E5
MULT_A = 0x931E8875
INIT_B = 0x8B51F9DD
MULT_B = 0x58F38DED
MIX_MULT_L = 0xCA01F9DD
MIX_MULT_R = 0x4973F715
XSHIFT = 16


def _mix(x, y):
    r = (x * MIX_MULT_L - y * MIX_MULT_R) & MASK32
    r ^= r >> XSHIFT
    return r


def words32_from_words64(words64):
    """Each 64-bit word contributes its low half, then its high half."""
    out = []
    for w in words64:
        w = int(w) & MASK64
        out.append(w & MASK32)
        out.append(w >> 32)
    return out


class SeedSequenceFE128:
    """Fixed-entropy seed sequence with a 4x32-bit pool."""

    def __init__(self, entropy_words=None, spawn_key=()):
        self.entropy_words = [int(w) & MASK64 for w in (entropy_words or [])]
        self.spawn_key = tuple(int(w) & MASK64 for w in spawn_key)
        assembled = words32_from_words64(self.entropy_words)
        if self.spawn_key and len(assembled) < POOL_WORDS:
            # pad short entropy to the pool width before appending the
            # spawn key, so a spawn key of zeros still lands in the
            # fold loop and no child collides with its parent
            assembled += [0] * (POOL_WORDS - len(assembled))
        assembled += words32_from_words64(self.spawn_key)
        self.pool = self._mix_entropy(assembled)

    @staticmethod
    def _mix_entropy(entropy32):
        hash_const = INIT_A

        def hashed(value):
            nonlocal hash_const
            value = (value ^ hash_const) & MASK32
            hash_const = (hash_const * MULT_A) & MASK32
            value = (value * hash_const) & MASK32
            value ^= value >> XSHIFT
            return value

        pool = [0] * POOL_WORDS
        for i in range(POOL_WORDS):
            pool[i] = hashed(entropy32[i] if i < len(entropy32) else 0)
        for i_src in range(POOL_WORDS):
            for i_dst in range(POOL_WORDS):
                if i_src != i_dst:
                    pool[i_dst] = _mix(pool[i_dst], hashed(pool[i_src]))
        for i_src in range(POOL_WORDS, len(entropy32)):
            for i_dst in range(POOL_WORDS):
                pool[i_dst] = _mix(pool[i_dst], hashed(entropy32[i_src]))
        return pool

    def generate_words32(self, n):
        hash_const = INIT_B
        out = []
        i = 0
        while len(out) < n:
            v = (self.pool[i % POOL_WORDS] ^ hash_const) & MASK32
            hash_const = (hash_const * MULT_B) & MASK32
            v = (v * hash_const) & MASK32
            v ^= v >> XSHIFT
            out.append(v)
            i += 1
        return out

    def generate_words64(self, n):
        w32 = self.generate_words32(2 * n)
        return [w32[2 * i] | (w32[2 * i + 1] << 32) for i in range(n)]

    def child(self, index):
        """The seed sequence for substream `index` of this one."""
        return SeedSequenceFE128(
            self.entropy_words, self.spawn_key + (int(index) & MASK64,)
        )


def derive_seed_words(n_words, entropy_words, spawn_key=()):
    return SeedSequenceFE128(entropy_words, spawn_key).generate_words64(n_words)


def seed_engine(engine, entropy_words, spawn_key=()):
    engine.seed_from(derive_seed_words(engine.SEED_WORDS, entropy_words, spawn_key))


def random_entropy(n_words=4):
    """Entropy words from the OS, with a graceful degradation chain.

    Returns (words, source, degraded). Sources: "os.urandom",
    "/dev/urandom", or "clock" when no OS randomness is reachable; only
    the clock fallback is flagged degraded.
    """
    try:
        raw = os.urandom(8 * n_words)
        return (
            [int.from_bytes(raw[8 * i : 8 * i + 8], "little") for i in range(n_words)],
            "os.urandom",
            False,
        )
    except (NotImplementedError, OSError):
        pass
    try:
        with open("/dev/urandom", "rb") as fh:
            raw = fh.read(8 * n_words)
        if len(raw) == 8 * n_words:
            return (
                [
                    int.from_bytes(raw[8 * i : 8 * i + 8], "little")
                    for i in range(n_words)
                ],
                "/dev/urandom",
                False,
            )
    except OSError:
        pass
    mixer = SeedSequenceFE128(
        [time.time_ns() & MASK64, os.getpid() & MASK64, id(object()) & MASK64]
    )
    return mixer.generate_words64(n_words), "clock", True
