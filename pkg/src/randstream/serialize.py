"""Checkpoint blobs.

A serialized generator is a small self-describing binary record:

    magic "RPKS" | version u16 | id length u8 + engine id (ascii)
    | mode flags u8 (bit 0 bitexact, bit 1 full mantissa)
    | state word count u16 + state words u64...
    | buffer capacity u16 + fill u16 + cursor u16 + buffered words u64...
    | pending flag u8 + pending half-word u32
    | crc32 u32 over everything above

All integers little-endian. The buffer section captures unconsumed
words and the split half-word, so a restore resumes mid-buffer exactly.
Corruption is reported distinctly: wrong magic, unsupported version,
checksum mismatch, and truncation each have their own diagnostic.
"""

import binascii
from struct import pack, unpack_from

from . import engines
from .buffer import CAPACITY
from .rng import Rng

MAGIC = b"RPKS"
VERSION = 1


class BlobError(ValueError):
    pass


def serialize(rng):
    state = rng.get_state()
    snap = rng.buffer.capture()
    flags = (1 if rng.bitexact else 0) | (2 if rng.full_mantissa else 0)
    ident = rng.engine_id.encode("ascii")
    body = bytearray()
    body += MAGIC
    body += pack("<H", VERSION)
    body += pack("<B", len(ident)) + ident
    body += pack("<B", flags)
    body += pack("<H", len(state))
    for w in state:
        body += pack("<Q", w)
    body += pack("<HHH", snap["capacity"], snap["fill"], snap["cursor"])
    for w in snap["words"]:
        body += pack("<Q", w)
    pending = snap["pending"]
    body += pack("<BI", 0 if pending is None else 1, pending or 0)
    body += pack("<I", binascii.crc32(bytes(body)) & 0xFFFFFFFF)
    return bytes(body)


class _Reader:
    def __init__(self, blob):
        self.blob = blob
        self.pos = 0

    def take(self, fmt, size):
        if self.pos + size > len(self.blob):
            raise BlobError("truncated state blob")
        vals = unpack_from(fmt, self.blob, self.pos)
        self.pos += size
        return vals

    def take_bytes(self, size):
        if self.pos + size > len(self.blob):
            raise BlobError("truncated state blob")
        out = self.blob[self.pos : self.pos + size]
        self.pos += size
        return out


def restore(blob):
    if not isinstance(blob, (bytes, bytearray)):
        raise BlobError("state blob must be bytes")
    blob = bytes(blob)
    if len(blob) < 4 or blob[:4] != MAGIC:
        raise BlobError("not a randstream state blob")
    if len(blob) < 8:
        raise BlobError("truncated state blob")
    claimed_crc = unpack_from("<I", blob, len(blob) - 4)[0]
    actual_crc = binascii.crc32(blob[:-4]) & 0xFFFFFFFF
    if claimed_crc != actual_crc:
        raise BlobError("state blob checksum mismatch")

    r = _Reader(blob[:-4])
    r.take_bytes(4)  # magic
    version = r.take("<H", 2)[0]
    if version != VERSION:
        raise BlobError("unsupported state blob version %d" % version)
    idlen = r.take("<B", 1)[0]
    ident = r.take_bytes(idlen).decode("ascii", "replace")
    flags = r.take("<B", 1)[0]
    nstate = r.take("<H", 2)[0]
    state = [r.take("<Q", 8)[0] for _ in range(nstate)]
    capacity, fill, cursor = r.take("<HHH", 6)
    words = [r.take("<Q", 8)[0] for _ in range(fill)]
    pending_flag, pending_val = r.take("<BI", 5)
    if r.pos != len(blob) - 4:
        raise BlobError("state blob has trailing bytes")
    if capacity != CAPACITY:
        raise BlobError("state blob buffer capacity mismatch")

    rng = Rng(engines.make(ident))
    rng.engine.set_state(state)
    rng.buffer.restore(
        {
            "capacity": capacity,
            "fill": fill,
            "cursor": cursor,
            "words": words,
            "pending": pending_val if pending_flag else None,
        }
    )
    rng.bitexact = bool(flags & 1)
    rng.full_mantissa = bool(flags & 2)
    return rng
