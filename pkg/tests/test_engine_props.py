"""Engine-layer properties: registry behavior, state invariants, stream
selectors, counter semantics, and the published test vectors that do not
need an external process."""

import numpy as np
import pytest

from randstream import engines
from randstream.engines.ranlux import M as RANLUX_M

M64 = 0xFFFFFFFFFFFFFFFF

ALL_IDS = [c.ID for c in engines.ENGINE_CLASSES]


# registry ------------------------------------------------------------


def test_catalogue_shape():
    cat = engines.catalogue()
    assert len(cat) == 14
    assert [c["id"] for c in cat] == ALL_IDS
    assert len({c["id"] for c in cat}) == 14
    by_id = {c["id"]: c for c in cat}
    assert by_id["ranlux++"]["state_words"] == 9
    assert by_id["x256++"]["state_words"] == 4
    assert by_id["philox"]["state_words"] == 6


def test_default_selector_is_interleaved_xoshiro():
    assert engines.normalize(None) == "x256++simd"
    assert engines.normalize("") == "x256++simd"
    assert engines.normalize("0") == "x256++simd"
    assert engines.normalize(0) == "x256++simd"


def test_selector_case_insensitive_no_aliases():
    assert engines.normalize("RANLUX++") == "ranlux++"
    assert engines.normalize("X256**SIMD") == "x256**simd"
    for bad in ("mt19937", "xoshiro256++", "pcg", "threefry"):
        with pytest.raises(ValueError) as err:
            engines.normalize(bad)
        assert bad in str(err.value)


# state invariants ----------------------------------------------------


@pytest.mark.parametrize("eid", ["x256++", "x256**", "x128+", "xoro++"])
def test_xor_family_rejects_all_zero_state(eid):
    eng = engines.make(eid)
    with pytest.raises(ValueError, match="all-zero"):
        eng.set_state([0] * eng.STATE_WORDS)


def test_pcg64_increment_must_be_odd():
    eng = engines.make("pcg64")
    with pytest.raises(ValueError, match="odd"):
        eng.set_state([1, 2, 4, 0])


def test_cwg128_increment_must_be_odd():
    eng = engines.make("cwg128")
    with pytest.raises(ValueError, match="odd"):
        eng.set_state([1, 2, 3, 4, 5, 6, 8, 0])


def test_ranluxpp_residue_must_be_below_modulus():
    eng = engines.make("ranlux++")
    too_big = [(RANLUX_M >> (64 * i)) & M64 for i in range(9)]
    with pytest.raises(ValueError):
        eng.set_state(too_big)


@pytest.mark.parametrize("eid", ALL_IDS)
def test_state_roundtrip_and_wrong_length(eid):
    eng = engines.make(eid)
    eng.seed_from(list(range(1, eng.SEED_WORDS + 1)))
    chunk = eng.CHUNK * (2 if eng.CHUNK > 1 else 8)
    eng.generate(chunk)
    words = eng.get_state()
    assert len(words) == eng.STATE_WORDS
    other = engines.make(eid)
    other.set_state(words)
    assert other.generate(chunk) == eng.generate(chunk)
    with pytest.raises(ValueError, match="state words"):
        other.set_state(words + [0])


@pytest.mark.parametrize("eid", ALL_IDS)
def test_replay_determinism(eid):
    a = engines.make(eid)
    a.seed_from(list(range(3, 3 + a.SEED_WORDS)))
    b = engines.make(eid)
    b.set_state(a.get_state())
    n = 10000
    n -= n % a.CHUNK
    assert a.generate(n) == b.generate(n)


def test_replay_determinism_deep():
    # the fast scalar engines get the full-depth replay
    for eid in ("x256++", "sfc64"):
        a = engines.make(eid)
        a.seed_from(list(range(1, a.SEED_WORDS + 1)))
        b = engines.make(eid)
        b.set_state(a.get_state())
        assert a.generate(1000000) == b.generate(1000000)


# published vectors that need no helper process -----------------------


def test_chacha20_rfc_block():
    # RFC 8439 section 2.3.2: sequential key, the 4a000000 nonce, counter 1
    eng = engines.make("chacha20")
    eng.set_state([
        0x0706050403020100, 0x0F0E0D0C0B0A0908,
        0x1716151413121110, 0x1F1E1D1C1B1A1918,
        0x4A00000009000000,
        0x0000000100000000,
    ])
    expect_hex = (
        "10f1e7e4d13b5915500fdd1fa32071c4c7d1f4c733c068030422aa9ac3d46c4e"
        "d2826446079faa0914c2d705d98b02a2b5129cd1de164eb9cbd083e8a2503c4e"
    )
    block = eng.generate(8)
    got = b"".join(w.to_bytes(8, "little") for w in block)
    assert got.hex() == expect_hex


def test_philox_counter_zero_block_matches_numpy():
    # drive numpy's counter to wrap to exactly 0 so its pre-increment
    # lands on the all-zero counter block
    ph = np.random.Philox(counter=[M64] * 4, key=0)
    ref = [int(w) for w in np.random.Generator(ph).integers(0, 1 << 64, 4, dtype=np.uint64)]
    eng = engines.make("philox")
    eng.set_state([0, 0, 0, 0, 0, 0])
    assert eng.generate(4) == ref


def test_philox_counter_carry():
    eng = engines.make("philox")
    eng.set_state([M64, 0, 0, 0, 7, 8])
    eng.generate(4)
    assert eng.get_state()[:4] == [0, 1, 0, 0]


# counter semantics ---------------------------------------------------


def test_squares_word_is_pure_function_of_counter_and_key():
    a = engines.make("squares")
    a.set_state([1234, 99])
    first = a.generate(1)
    b = engines.make("squares")
    b.set_state([1234, 99])
    assert b.generate(1) == first


def test_sfc64_counter_increments_per_step():
    eng = engines.make("sfc64")
    eng.seed_from([1, 2, 3])
    w0 = eng.get_state()[3]
    eng.generate(5)
    assert eng.get_state()[3] == (w0 + 5) & M64


def test_sfc64_set_abc_warmup_leaves_counter_18():
    eng = engines.make("sfc64")
    eng.set_abc([10, 20, 30])
    assert eng.get_state()[3] == 18


def test_cwg128_weyl_increment_fixed_per_stream():
    eng = engines.make("cwg128")
    eng.seed_from(list(range(1, 9)))
    inc = eng.get_state()[6:8]
    eng.generate(64)
    assert eng.get_state()[6:8] == inc


def test_cwg128_distinct_increments_diverge():
    outs = []
    for inc in (1, 3):
        eng = engines.make("cwg128")
        eng.set_state([5, 6, 7, 8, 9, 10, inc, 0])
        outs.append(eng.generate(8))
    assert outs[0] != outs[1]


def test_pcg64_distinct_increments_diverge_fast():
    outs = []
    for inc in (1, 3):
        eng = engines.make("pcg64")
        eng.set_state([11, 12, inc, 0])
        outs.append(eng.generate(4))
    assert outs[0] != outs[1]


def test_pcg64_advance_zero_is_identity():
    eng = engines.make("pcg64")
    eng.seed_from([4, 5, 6, 7])
    before = eng.get_state()
    eng.advance(0)
    assert eng.get_state() == before


def test_chacha20_stream_exhaustion():
    eng = engines.make("chacha20")
    eng.set_state([1, 2, 3, 4, 5, (M64 << 32) & M64])  # counter at 2^32 - 1
    eng.generate(8)  # the last block for this nonce
    with pytest.raises(OverflowError, match="stream exhausted"):
        eng.generate(8)


def test_ranluxpp_identity_multiplier_hook():
    eng = engines.make("ranlux++")
    eng.seed_from(list(range(1, 10)))
    before = eng.get_state()
    one = [1] + [0] * 8
    assert eng.generate(9, multiplier_limbs=one) == before
    assert eng.get_state() == before


def test_ranluxpp_residue_stays_reduced():
    eng = engines.make("ranlux++")
    eng.seed_from([M64] * 9)
    words = eng.generate(9 * 2000)
    for c in range(2000):
        limbs = words[9 * c: 9 * c + 9]
        x = 0
        for i, w in enumerate(limbs):
            x |= w << (64 * i)
        assert x < RANLUX_M


# period sanity (desk scale) ------------------------------------------


def _assert_no_short_cycle(words, tag):
    n = len(words)
    uniq, counts = np.unique(words, return_counts=True)
    for w in uniq[counts > 1]:
        positions = np.flatnonzero(words == w)
        positions = positions[positions < n - 1]
        successors = words[positions + 1]
        assert len(np.unique(successors)) == len(successors), tag


@pytest.mark.parametrize("eid", ALL_IDS)
def test_no_repeat_in_first_2_20_words(eid):
    # a period p <= 2^20 would force word[i] == word[i+p] with the same
    # successor for every i; chance word collisions (almost never seen
    # at this length) are allowed as long as their successors differ.
    # Interleaved engines get the check per lane: lanes of sfc64simd
    # share (a, b, c) at seed time and can legally emit equal words for
    # the first few rounds, which says nothing about any lane's period.
    eng = engines.make(eid)
    eng.seed_from(list(range(9, 9 + eng.SEED_WORDS)))
    n = 1 << 20
    n -= n % eng.CHUNK
    words = np.array(eng.generate(n), dtype=np.uint64)
    lanes = getattr(eng, "LANES", 1)
    if lanes == 1:
        _assert_no_short_cycle(words, eid)
    else:
        for k in range(lanes):
            _assert_no_short_cycle(words[k::lanes], "%s lane %d" % (eid, k))
