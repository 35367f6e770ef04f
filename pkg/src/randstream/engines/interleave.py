"""Eight-lane interleaved engines.

Each interleaved engine runs eight independent lanes of a scalar engine
and emits one word per lane per step, lane 0 first. Lanes are packed
into wide integers with a 128-bit slot per lane, so one Python big-int
operation advances all eight lanes at once (the slot headroom absorbs
adds and shifts before remasking). Stream placement:

  - xoshiro256 lanes: lane k is the seeded base state jumped ahead
    k * 2^253 steps, so consecutive lanes are 2^253 steps apart and
    cannot overlap within any realistic draw budget.
  - sfc64 lanes: lane k offsets the Weyl counter by k * 2^61, which
    partitions the counter's 2^64 period across lanes.
"""

from .sfc import Sfc64
from .xorfam import MASK64, X256PlusPlus, X256StarStar

SLOT = 128
LANES = 8
VMASK = 0
ONEV = 0
for _k in range(LANES):
    VMASK |= MASK64 << (SLOT * _k)
    ONEV |= 1 << (SLOT * _k)

SFC_LANE_STRIDE = 1 << 61
XOSHIRO_LANE_LOG2 = 253


def vshl(a, k):
    return (a << k) & VMASK


def vshr(a, k):
    return (a >> k) & VMASK


def vrotl(a, k):
    return ((a << k) & VMASK) | ((a >> (64 - k)) & VMASK)


def pack_lanes(lane_words):
    """lane_words[k] is one 64-bit word per lane; returns the packed vector."""
    v = 0
    for k, w in enumerate(lane_words):
        v |= w << (SLOT * k)
    return v


def unpack_lanes(v):
    return [(v >> (SLOT * k)) & MASK64 for k in range(LANES)]


def _emit(vouts):
    """Flatten step vectors into words, lane order within each step."""
    out = []
    for v in vouts:
        out.extend(unpack_lanes(v))
    return out


class _Interleaved:
    LANES = LANES
    CHUNK = LANES

    def generate(self, n):
        if n % LANES != 0:
            raise ValueError("interleaved engines emit %d-word chunks" % LANES)
        return _emit(self._steps(n // LANES))

    def get_state(self):
        words = []
        for lane in self._lane_states():
            words.extend(lane)
        return words

    def set_state(self, words):
        per = self.STATE_WORDS // LANES
        if len(words) != self.STATE_WORDS:
            raise ValueError(
                "%s expects %d state words, got %d"
                % (self.ID, self.STATE_WORDS, len(words))
            )
        words = [int(w) & MASK64 for w in words]
        lanes = [words[k * per : (k + 1) * per] for k in range(LANES)]
        self._check_lanes(lanes)
        self._load_lanes(lanes)

    def _check_lanes(self, lanes):
        pass


class _XoshiroSimd(_Interleaved):
    STATE_WORDS = 32
    SEED_WORDS = 4
    FAMILY = "x256"
    PERIOD = "2^256 - 1 per lane"

    def __init__(self):
        self.v = [pack_lanes([k * 4 + w + 1 for k in range(LANES)]) for w in range(4)]

    def _steps(self, count):
        s0, s1, s2, s3 = self.v
        outs = []
        emit = self._vout
        for _ in range(count):
            outs.append(emit(s0, s1, s2, s3))
            t = vshl(s1, 17)
            s2 ^= s0
            s3 ^= s1
            s1 ^= s2
            s0 ^= s3
            s2 ^= t
            s3 = vrotl(s3, 45)
        self.v = [s0, s1, s2, s3]
        return outs

    def _lane_states(self):
        cols = [unpack_lanes(v) for v in self.v]
        return [[cols[w][k] for w in range(4)] for k in range(LANES)]

    def _load_lanes(self, lanes):
        self.v = [pack_lanes([lane[w] for lane in lanes]) for w in range(4)]

    def _check_lanes(self, lanes):
        for k, lane in enumerate(lanes):
            if not any(lane):
                raise ValueError("lane %d state must not be all zero" % k)

    def seed_from(self, words):
        base = self.BASE()
        base.seed_from(words)
        self._load_lanes(derive_xoshiro_lanes(base.get_state()))

    def jump(self, k):
        from .. import jumps

        poly = jumps.jump_polynomial("x256", k)
        step = jumps.FAMILIES["x256"][0]
        self._load_lanes(
            [jumps.apply_polynomial(step, lane, poly) for lane in self._lane_states()]
        )


def derive_xoshiro_lanes(base_state):
    from .. import jumps

    poly = jumps.jump_polynomial("x256", XOSHIRO_LANE_LOG2)
    step = jumps.FAMILIES["x256"][0]
    lanes = [list(base_state)]
    for _ in range(LANES - 1):
        lanes.append(jumps.apply_polynomial(step, lanes[-1], poly))
    return lanes


class X256PlusPlusSimd(_XoshiroSimd):
    ID = "x256++simd"
    NAME = "xoshiro256++ x8"
    AUTHORS = "Blackman, Vigna"
    YEAR = 2019
    BASE = X256PlusPlus

    @staticmethod
    def _vout(s0, s1, s2, s3):
        return ((vrotl((s0 + s3) & VMASK, 23) + s0) & VMASK)


class X256StarStarSimd(_XoshiroSimd):
    ID = "x256**simd"
    NAME = "xoshiro256** x8"
    AUTHORS = "Blackman, Vigna"
    YEAR = 2019
    BASE = X256StarStar

    @staticmethod
    def _vout(s0, s1, s2, s3):
        return (vrotl((s1 * 5) & VMASK, 7) * 9) & VMASK


class Sfc64Simd(_Interleaved):
    ID = "sfc64simd"
    NAME = "sfc64 x8"
    AUTHORS = "Doty-Humphrey"
    YEAR = 2010
    STATE_WORDS = 32
    SEED_WORDS = 3
    FAMILY = None
    PERIOD = ">= 2^64 per lane"

    def __init__(self):
        base = Sfc64()
        self._load_lanes(derive_sfc_lanes(base.get_state()))

    def _steps(self, count):
        a, b, c, w = self.v
        outs = []
        for _ in range(count):
            out = (a + b + w) & VMASK
            outs.append(out)
            w = (w + ONEV) & VMASK
            a = b ^ vshr(b, 11)
            b = (c + vshl(c, 3)) & VMASK
            c = (vrotl(c, 24) + out) & VMASK
        self.v = [a, b, c, w]
        return outs

    def _lane_states(self):
        cols = [unpack_lanes(v) for v in self.v]
        return [[cols[w][k] for w in range(4)] for k in range(LANES)]

    def _load_lanes(self, lanes):
        self.v = [pack_lanes([lane[w] for lane in lanes]) for w in range(4)]

    def seed_from(self, words):
        base = Sfc64()
        base.seed_from(words)
        self._load_lanes(derive_sfc_lanes(base.get_state()))

    def set_abc(self, words):
        base = Sfc64()
        base.set_abc(words)
        self._load_lanes(derive_sfc_lanes(base.get_state()))


def derive_sfc_lanes(base_state):
    a, b, c, w = base_state
    return [[a, b, c, (w + k * SFC_LANE_STRIDE) & MASK64] for k in range(LANES)]
