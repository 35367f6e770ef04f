"""The generator facade: one engine, one buffer, draw methods.

An Rng owns an engine instance and its word buffer, plus the two mode
flags (bitexact bulk sampling, full-mantissa u01) and the diagnostic
tallies. Distribution logic lives in the continuous and discrete
modules; this class provides the word/uniform primitives they consume
and the stream-management surface (seed, jump, stream selection,
checkpointing).
"""

from functools import wraps
from struct import pack, unpack

from . import continuous, discrete, engines, jumps, seeding
from .buffer import WordBuffer

_MASK64 = 0xFFFFFFFFFFFFFFFF

# engines whose transition is linear and jumpable via the polynomial table
_POLY_JUMP = {
    "x256++": "x256",
    "x256**": "x256",
    "x128+": "x128+",
    "xoro++": "xoro",
}

_STREAM_METHODS = {
    "pcg64": ("set_inc", 2),
    "squares": ("set_key", 1),
    "philox": ("set_key", 2),
    "sfc64": ("set_abc", 3),
    "sfc64simd": ("set_abc", 3),
    "cwg128": ("set_weyl", 2),
    "chacha20": ("set_nonce", 2),
}


def _op(fn):
    """Maintain the per-instance error slot: any successful operation
    clears it, any failing one records the diagnostic and re-raises."""

    @wraps(fn)
    def guarded(self, *args, **kwargs):
        try:
            result = fn(self, *args, **kwargs)
        except Exception as exc:
            self.last_error = str(exc) or type(exc).__name__
            raise
        self.last_error = None
        return result

    return guarded


class Rng:
    def __init__(self, engine):
        self.engine = engine
        self.buffer = WordBuffer(engine)
        self.bitexact = False
        self.full_mantissa = False
        self.counters = {}
        self.last_error = None
        self.entropy_source = None
        self.entropy_degraded = False

    @property
    def engine_id(self):
        return self.engine.ID

    # word primitives -------------------------------------------------

    @_op
    def next_u64(self):
        return self.buffer.take_u64()

    @_op
    def next_u32(self):
        return self.buffer.take_u32()

    @_op
    def raw(self, nbytes):
        """nbytes of stream output, little-endian within each word. A
        trailing partial word contributes its low bytes and the rest of
        that word is discarded, so byte offsets never straddle calls."""
        nbytes = int(nbytes)
        if nbytes < 0:
            raise ValueError("byte count must be >= 0")
        full, rest = divmod(nbytes, 8)
        out = bytearray()
        for _ in range(full):
            out += pack("<Q", self.next_u64())
        if rest:
            out += pack("<Q", self.next_u64())[:rest]
        return bytes(out)

    # uniforms --------------------------------------------------------

    @_op
    def u01(self):
        """Uniform double in [0, 1). The default resolution is 2^-52
        (bit-or into the mantissa of 1.0); full-mantissa mode uses all
        53 bits via multiplication."""
        w = self.next_u64()
        if self.full_mantissa:
            return (w >> 11) * 1.1102230246251565e-16  # 2^-53
        return unpack("<d", pack("<Q", (w >> 12) | 0x3FF0000000000000))[0] - 1.0

    @_op
    def u01f(self):
        w = self.next_u32()
        if self.full_mantissa:
            return (w >> 8) * 5.9604644775390625e-08  # 2^-24
        return float(
            unpack("<f", pack("<I", (w >> 9) | 0x3F800000))[0]
        ) - 1.0

    # seeding and stream management -----------------------------------

    @_op
    def seed(self, entropy_words, spawn_key=()):
        seeding.seed_engine(self.engine, entropy_words, spawn_key)
        self.buffer.reset()
        self.entropy_source = "seed"
        self.entropy_degraded = False

    @_op
    def randomize(self):
        words, source, degraded = seeding.random_entropy()
        seeding.seed_engine(self.engine, words)
        self.buffer.reset()
        self.entropy_source = source
        self.entropy_degraded = degraded
        return source, degraded

    @_op
    def jump(self, k):
        k = int(k)
        eid = self.engine_id
        if eid in _POLY_JUMP:
            family = _POLY_JUMP[eid]
            poly = jumps.jump_polynomial(family, k)  # raises on bad k
            step = jumps.FAMILIES[family][0]
            self.engine.set_state(
                jumps.apply_polynomial(step, self.engine.get_state(), poly)
            )
        elif eid in ("x256++simd", "x256**simd"):
            self.engine.jump(k)
        elif eid == "pcg64":
            if k not in jumps.STANDARD_JUMPS:
                raise ValueError(
                    "pcg64 jump exponent must be one of %s"
                    % (jumps.STANDARD_JUMPS,)
                )
            self.engine.advance(1 << k)
        elif eid == "ranlux++":
            if k not in jumps.STANDARD_JUMPS:
                raise ValueError(
                    "ranlux++ jump exponent must be one of %s"
                    % (jumps.STANDARD_JUMPS,)
                )
            self.engine.jump(k)
        else:
            raise ValueError("jump unsupported for engine %s" % eid)
        self.buffer.reset()

    @_op
    def advance(self, delta):
        if self.engine_id != "pcg64":
            raise ValueError("advance unsupported for engine %s" % self.engine_id)
        self.engine.advance(int(delta))
        self.buffer.reset()

    @_op
    def set_stream(self, words):
        eid = self.engine_id
        if eid not in _STREAM_METHODS:
            raise ValueError(
                "stream selection unsupported for engine %s;"
                " use jumps or spawn keys" % eid
            )
        method, nwords = _STREAM_METHODS[eid]
        if len(words) != nwords:
            raise ValueError(
                "%s stream selector takes %d words, got %d"
                % (eid, nwords, len(words))
            )
        getattr(self.engine, method)([int(w) & _MASK64 for w in words])
        self.buffer.reset()

    # state -----------------------------------------------------------

    @_op
    def get_state(self):
        return self.engine.get_state()

    @_op
    def set_state(self, words):
        self.engine.set_state(words)
        self.buffer.reset()

    @_op
    def set_bitexact(self, flag):
        self.bitexact = bool(flag)

    @_op
    def set_full_mantissa(self, flag):
        self.full_mantissa = bool(flag)

    @_op
    def duplicate(self):
        """Full clone: same engine state, same buffered words, same
        modes. The clone and the original then emit identical output."""
        other = Rng(engines.make(self.engine_id))
        other.engine.set_state(self.engine.get_state())
        other.buffer.restore(self.buffer.capture())
        other.bitexact = self.bitexact
        other.full_mantissa = self.full_mantissa
        other.counters = {k: dict(v) for k, v in self.counters.items()}
        return other

    # distributions ---------------------------------------------------

    @_op
    def fill(self, dist, params=None, n=1):
        """n draws of a named distribution. Permutation and subset
        draws return their sequence directly (n must be 1)."""
        params = dict(params or {})
        if dist == "perm":
            size = int(params.get("n", 0))
            if int(n) != 1:
                raise ValueError("perm returns one sequence; draw count must be 1")
            return discrete.permutation(self, size)
        if dist == "sample":
            size = int(params.get("n", 0))
            k = int(params.get("k", 0))
            if int(n) != 1:
                raise ValueError("sample returns one sequence; draw count must be 1")
            return discrete.sample_without_replacement(self, size, k)
        if dist in continuous._SCALAR:
            return continuous.fill(self, dist, params, n)
        return discrete.fill(self, dist, params, n)

    # convenience scalar draws (the common ones; fill() covers all)

    @_op
    def unif(self, a=0.0, b=1.0):
        return continuous.unif(self, a, b)

    @_op
    def norm(self, mu=0.0, var=1.0):
        return continuous.norm(self, mu, var)

    @_op
    def expo(self, beta=1.0):
        return continuous.expo(self, beta)

    @_op
    def gamma(self, alpha, theta=1.0):
        return continuous.gamma(self, alpha, theta)

    @_op
    def bounded_uint(self, b, width=64):
        return discrete.bounded_uint(self, b, width)

    @_op
    def permutation(self, n):
        return discrete.permutation(self, n)

    @_op
    def sample(self, n, k):
        return discrete.sample_without_replacement(self, n, k)

    @_op
    def mvn(self, mean, cov, n=1, layout="n_d"):
        return continuous.mvn(self, mean, cov, n, layout)
