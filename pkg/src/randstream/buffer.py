"""Engine output buffering.

Engines emit in chunks (up to nine words for the LCG formulation, eight
for the interleaved ones); consumers want one word, or half of one, at
a time. A 144-word buffer sits between: 144 is a common multiple of
every chunk size, so one refill is one engine call regardless of
engine. 32-bit requests split a word low half first; a leftover high
half is served to the next 32-bit request and quietly dropped by a
64-bit request, so mixed-width consumers never see a word reordered.
"""

CAPACITY = 144

_MASK32 = 0xFFFFFFFF


class WordBuffer:
    def __init__(self, engine):
        self.engine = engine
        self.words = []
        self.cursor = 0
        self.pending = None  # high half of a split word, or None

    def reset(self):
        self.words = []
        self.cursor = 0
        self.pending = None

    def take_u64(self):
        self.pending = None
        if self.cursor >= len(self.words):
            self.words = self.engine.generate(CAPACITY)
            self.cursor = 0
        w = self.words[self.cursor]
        self.cursor += 1
        return w

    def take_u32(self):
        if self.pending is not None:
            v = self.pending
            self.pending = None
            return v
        if self.cursor >= len(self.words):
            self.words = self.engine.generate(CAPACITY)
            self.cursor = 0
        w = self.words[self.cursor]
        self.cursor += 1
        self.pending = w >> 32
        return w & _MASK32

    def capture(self):
        """Snapshot for serialization: remaining words and split state."""
        return {
            "capacity": CAPACITY,
            "fill": len(self.words),
            "cursor": self.cursor,
            "words": list(self.words),
            "pending": self.pending,
        }

    def restore(self, snapshot):
        if snapshot["capacity"] != CAPACITY:
            raise ValueError("buffer capacity mismatch")
        if not 0 <= snapshot["cursor"] <= snapshot["fill"]:
            raise ValueError("buffer cursor out of range")
        self.words = list(snapshot["words"])
        self.cursor = snapshot["cursor"]
        self.pending = snapshot["pending"]
