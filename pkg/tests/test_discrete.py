"""Discrete sampling: the multiply-shift bounded draw proven exhaustively
at 8-bit width, signed spans, Fisher-Yates permutations, and the two
subset-sampling paths."""

import math

import numpy as np
import pytest
import scipy.stats as st

from randstream import discrete, state_io


class ScriptedSource:
    """Feeds a fixed word list to the bounded samplers and counts
    consumption. Words are served to both the 32 and 64-bit taps."""

    def __init__(self, words):
        self.words = list(words)
        self.used = 0

    def next_u32(self):
        self.used += 1
        return self.words[self.used - 1] & 0xFFFFFFFF

    def next_u64(self):
        self.used += 1
        return self.words[self.used - 1] & 0xFFFFFFFFFFFFFFFF


# exhaustive correctness at 8-bit width -------------------------------


@pytest.mark.parametrize("b", range(2, 18))
def test_bounded_uint_8bit_census(b):
    # run every possible first word through the sampler: accepted words
    # must spread exactly evenly, rejected words must number 256 mod b
    counts = {v: 0 for v in range(b)}
    rejected = 0
    for x in range(256):
        src = ScriptedSource([x] + [255] * 8)
        v = discrete.bounded_uint(src, b, width=8)
        if src.used == 1:
            counts[v] += 1
        else:
            rejected += 1
    assert rejected == 256 % b
    assert set(counts.values()) == {256 // b}


def test_bounded_uint_power_of_two_never_rejects():
    for b in (2, 4, 16, 64, 128, 256):
        for x in range(256):
            src = ScriptedSource([x])
            v = discrete.bounded_uint(src, b, width=8)
            assert src.used == 1
            assert v == (x * b) >> 8


def test_bounded_uint_passthroughs():
    src = ScriptedSource([0xDEADBEEF12345678])
    assert discrete.bounded_uint(src, 0, width=64) == 0xDEADBEEF12345678
    src = ScriptedSource([0xAB])
    assert discrete.bounded_uint(src, 0, width=8) == 0xAB
    src = ScriptedSource([99])
    assert discrete.bounded_uint(src, 1, width=64) == 0
    assert src.used == 1  # b = 1 still consumes its word
    src = ScriptedSource([0xDEADBEEF12345678])
    assert discrete.bounded_uint(src, 1 << 64, width=64) == 0xDEADBEEF12345678


def test_bounded_uint_validation():
    src = ScriptedSource([0])
    with pytest.raises(ValueError, match="width"):
        discrete.bounded_uint(src, 5, width=12)
    with pytest.raises(ValueError, match="bound"):
        discrete.bounded_uint(src, -1, width=8)
    with pytest.raises(ValueError, match="bound"):
        discrete.bounded_uint(src, 257, width=8)
    assert src.used == 0  # nothing consumed on a rejected call


def test_bounded_uint_rejection_consumes_extra_words():
    # b = 3 at width 8: threshold is (256 - 3) % 3 = 1, so only the
    # word mapping to low byte 0 redraws; x = 0 gives m = 0, low = 0
    src = ScriptedSource([0, 255])
    v = discrete.bounded_uint(src, 3, width=8)
    assert src.used == 2
    assert v == (255 * 3) >> 8


# signed spans --------------------------------------------------------


def test_bounded_int_offsets_span():
    src = ScriptedSource([0, 0xFFFFFFFF])
    assert discrete.bounded_int(src, -5, 5, width=32) in range(-5, 6)
    vals = set()
    rng = state_io.create("x256++", seed=[51])
    for _ in range(2000):
        v = discrete.bounded_int(rng, -5, 5)
        assert -5 <= v <= 5
        vals.add(v)
    assert vals == set(range(-5, 6))


def test_bounded_int_full_span_is_offset_passthrough():
    src = ScriptedSource([0xFFFFFFFF])
    assert discrete.bounded_int(src, -(1 << 31), (1 << 31) - 1, width=32) == (
        -(1 << 31) + 0xFFFFFFFF
    )
    src = ScriptedSource([7])
    assert discrete.bounded_int(src, -(1 << 63), (1 << 63) - 1, width=64) == (
        -(1 << 63) + 7
    )


def test_bounded_int_validation():
    src = ScriptedSource([0])
    with pytest.raises(ValueError, match="signed bounded width"):
        discrete.bounded_int(src, 0, 1, width=8)
    with pytest.raises(ValueError, match="does not fit"):
        discrete.bounded_int(src, 5, 4, width=32)  # m > n
    with pytest.raises(ValueError, match="does not fit"):
        discrete.bounded_int(src, 0, 1 << 31, width=32)


# word-source widths --------------------------------------------------


def test_sub64_draws_pair_into_half_words():
    rng = state_io.create("sfc64", seed=[61])
    w0 = rng.next_u64()
    w1 = rng.next_u64()
    rng = state_io.create("sfc64", seed=[61])
    assert discrete.bounded_uint(rng, 0, width=8) == w0 & 0xFF
    assert discrete.bounded_uint(rng, 0, width=16) == (w0 >> 32) & 0xFFFF
    assert rng.next_u64() == w1


def test_64bit_draw_consumes_full_word():
    rng = state_io.create("sfc64", seed=[62])
    w0 = rng.next_u64()
    rng = state_io.create("sfc64", seed=[62])
    assert discrete.bounded_uint(rng, 0, width=64) == w0


# permutations --------------------------------------------------------


def test_permutation_basics():
    rng = state_io.create("x256++", seed=[71])
    assert discrete.permutation(rng, 0) == []
    assert discrete.permutation(rng, 1) == [0]
    for n in (2, 5, 17, 100):
        p = discrete.permutation(rng, n)
        assert sorted(p) == list(range(n))


def test_permutation_deterministic():
    a = state_io.create("x256++", seed=[72])
    b = state_io.create("x256++", seed=[72])
    assert [discrete.permutation(a, 8) for _ in range(20)] == [
        discrete.permutation(b, 8) for _ in range(20)
    ]


def test_permutation_validation():
    rng = state_io.create("x256++", seed=[73])
    with pytest.raises(ValueError, match="permutation size"):
        discrete.permutation(rng, -1)
    with pytest.raises(ValueError, match="permutation size"):
        discrete.permutation(rng, (1 << 32) + 1)


def test_permutation_index_draws_are_32_bit():
    # a permutation must leave the stream on a half-word boundary it
    # shares with other 32-bit consumers
    rng = state_io.create("sfc64", seed=[74])
    words = [rng.next_u64() for _ in range(40)]
    rng = state_io.create("sfc64", seed=[74])
    halves = []
    for w in words:
        halves += [w & 0xFFFFFFFF, w >> 32]
    consumed = 0
    probe = ScriptedSource(halves)
    discrete.permutation(probe, 9)
    consumed = probe.used
    discrete.permutation(rng, 9)
    nxt = rng.next_u32()
    assert nxt == halves[consumed]


def test_permutation_n4_covers_all_orders():
    rng = state_io.create("x256++", seed=[75])
    seen = set()
    for _ in range(3000):
        seen.add(tuple(discrete.permutation(rng, 4)))
    assert len(seen) == 24


# subset sampling -----------------------------------------------------


def test_sample_basics_and_edges():
    rng = state_io.create("x256++", seed=[81])
    assert discrete.sample_without_replacement(rng, 10, 0) == []
    assert discrete.sample_without_replacement(rng, 7, 7) == list(range(7))
    assert discrete.sample_without_replacement(rng, 0, 0) == []
    for n, k in ((10, 3), (10, 8), (50, 25), (33, 20)):
        s = discrete.sample_without_replacement(rng, n, k)
        assert len(s) == k
        assert len(set(s)) == k
        assert s == sorted(s)
        assert all(0 <= v < n for v in s)


def test_sample_validation():
    rng = state_io.create("x256++", seed=[82])
    with pytest.raises(ValueError, match="population size"):
        discrete.sample_without_replacement(rng, -1, 0)
    with pytest.raises(ValueError, match="sample size"):
        discrete.sample_without_replacement(rng, 5, 6)
    with pytest.raises(ValueError, match="sample size"):
        discrete.sample_without_replacement(rng, 5, -1)


def test_sample_both_paths_cover_subsets_uniformly():
    # k = 2 of 4 runs Floyd, k = 3 of 4 runs the reservoir; all C(4,k)
    # subsets should come out near-uniform
    for k, trials in ((2, 30000), (3, 30000)):
        rng = state_io.create("x256++", seed=[83, k])
        counts = {}
        for _ in range(trials):
            s = tuple(discrete.sample_without_replacement(rng, 4, k))
            counts[s] = counts.get(s, 0) + 1
        nsub = math.comb(4, k)
        assert len(counts) == nsub
        expect = trials / nsub
        chi2 = sum((c - expect) ** 2 / expect for c in counts.values())
        p = st.chi2(nsub - 1).sf(chi2)
        assert p > 1e-5, (k, p)


def test_bounded_uniformity_light():
    rng = state_io.create("x256++", seed=[84])
    draws = [discrete.bounded_uint(rng, 10) for _ in range(50000)]
    counts = np.bincount(draws, minlength=10)
    chi2 = ((counts - 5000.0) ** 2 / 5000.0).sum()
    assert st.chi2(9).sf(chi2) > 1e-5


# the fill surface ----------------------------------------------------


def test_fill_bounded_names():
    rng = state_io.create("sfc64", seed=[91])
    w0 = rng.next_u64()
    rng = state_io.create("sfc64", seed=[91])
    assert discrete.fill(rng, "uint64", {}, 1) == [w0]
    vals = discrete.fill(rng, "uint8", {"b": 6}, 100)
    assert all(0 <= v < 6 for v in vals)
    vals = discrete.fill(rng, "uint16", {"b": 1000}, 100)
    assert all(0 <= v < 1000 for v in vals)
    vals = discrete.fill(rng, "uint32", {"b": 3}, 100)
    assert all(0 <= v < 3 for v in vals)


def test_fill_signed_names():
    rng = state_io.create("x256++", seed=[92])
    vals = discrete.fill(rng, "int", {"m": -3, "n": 3}, 200)
    assert all(-3 <= v <= 3 for v in vals)
    vals = discrete.fill(rng, "long_long", {}, 200)
    assert any(v < 0 for v in vals) and any(v > 0 for v in vals)
    assert all(-(1 << 63) <= v <= (1 << 63) - 1 for v in vals)


def test_fill_validation():
    rng = state_io.create("x256++", seed=[93])
    with pytest.raises(ValueError, match="unknown discrete"):
        discrete.fill(rng, "poisson", {}, 1)
    with pytest.raises(ValueError, match="draw count"):
        discrete.fill(rng, "uint64", {}, -1)
    assert discrete.fill(rng, "uint64", {}, 0) == []
