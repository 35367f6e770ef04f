"""ranlux++: an LCG formulation of subtract-with-borrow ranlux.

One step multiplies the 576-bit residue x by A = a^2048 mod m, where
m = 2^576 - 2^240 + 1 and a = b^-1 mod m (b = 2^24) is the one-step
multiplier equivalent to the classic subtract-with-borrow recurrence.
The nine 64-bit limbs of the new residue are the step's output words.

The multiply is done on the 9-limb representation with a schoolbook
9x9 product and the sparse reduction 2^576 === 2^240 - 1 (mod m),
folded twice, which keeps every intermediate bounded without a general
big-integer modulo in the word-emission path.
"""

MASK64 = 0xFFFFFFFFFFFFFFFF

B = 1 << 24
M = (1 << 576) - (1 << 240) + 1
A_ONE = M - (M - 1) // B          # one SWB step: multiply by b^-1 mod m
A_SKIP = pow(A_ONE, 2048, M)      # the ranlux++ per-step multiplier

A_LIMBS = [(A_SKIP >> (64 * i)) & MASK64 for i in range(9)]
LOW576 = (1 << 576) - 1


def limbs_to_int(limbs):
    x = 0
    for limb in reversed(limbs):
        x = (x << 64) | limb
    return x


def int_to_limbs(x):
    return [(x >> (64 * i)) & MASK64 for i in range(9)]


def _mul_step(x_limbs, y_limbs):
    """(x * y) mod m on limb vectors; used once per emitted 9-word chunk."""
    prod = [0] * 19
    for i in range(9):
        xi = x_limbs[i]
        carry = 0
        for j in range(9):
            t = prod[i + j] + xi * y_limbs[j] + carry
            prod[i + j] = t & MASK64
            carry = t >> 64
        prod[i + 9] = (prod[i + 9] + carry) & MASK64
    lo = 0
    for i in range(8, -1, -1):
        lo = (lo << 64) | prod[i]
    hi = 0
    for i in range(17, 8, -1):
        hi = (hi << 64) | prod[i]
    # fold hi * 2^576 === hi * (2^240 - 1) twice, then a final subtract
    r = lo + (hi << 240) - hi
    hi2 = r >> 576
    r = (r & LOW576) + (hi2 << 240) - hi2
    while r >= M:
        r -= M
    while r < 0:
        r += M
    return int_to_limbs(r)


class RanluxPP:
    ID = "ranlux++"
    NAME = "ranlux++"
    AUTHORS = "Sibidanov"
    YEAR = 2017
    STATE_WORDS = 9
    SEED_WORDS = 9
    CHUNK = 9
    PERIOD = "~2^570"
    FAMILY = None

    def __init__(self):
        self.limbs = int_to_limbs(1)

    def generate(self, n, multiplier_limbs=None):
        """Emit n words (n a multiple of 9). multiplier_limbs is a test
        hook; the identity multiplier leaves the residue unchanged."""
        if n % 9 != 0:
            raise ValueError("ranlux++ emits 9-word chunks")
        mult = multiplier_limbs if multiplier_limbs is not None else A_LIMBS
        out = []
        for _ in range(n // 9):
            self.limbs = _mul_step(self.limbs, mult)
            out.extend(self.limbs)
        return out

    def jump(self, k):
        """Jump 2^k steps: multiply the residue by A^(2^k) mod m."""
        mult = pow(A_SKIP, 1 << k, M)
        self.limbs = int_to_limbs((limbs_to_int(self.limbs) * mult) % M)

    def get_state(self):
        return list(self.limbs)

    def set_state(self, words):
        if len(words) != 9:
            raise ValueError("ranlux++ expects 9 state words, got %d" % len(words))
        words = [int(w) & MASK64 for w in words]
        if limbs_to_int(words) >= M:
            raise ValueError("ranlux++ residue must be < 2^576 - 2^240 + 1")
        self.limbs = words

    def seed_from(self, words):
        x = limbs_to_int([int(w) & MASK64 for w in words[:9]]) % M
        if x == 0:
            x = 1  # zero is absorbing for the multiplicative recurrence
        self.limbs = int_to_limbs(x)
