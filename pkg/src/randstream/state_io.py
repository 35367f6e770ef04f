"""Generator lifecycle: creation, duplication, checkpoints, catalogue.

create() with no seed pulls entropy from the OS (with a reported,
flagged fallback chain if that fails); with a seed it is fully
deterministic, and the same seed plus the same spawn key always
rebuilds the same stream on every platform.
"""

from . import engines, serialize
from .rng import Rng


def create(selector=None, seed=None, spawn_key=()):
    rng = Rng(engines.make(selector))
    if seed is None and not spawn_key:
        rng.randomize()
    else:
        rng.seed(list(seed or []), spawn_key)
    return rng


def duplicate(rng):
    return rng.duplicate()


def to_blob(rng):
    return serialize.serialize(rng)


def from_blob(blob):
    return serialize.restore(blob)


def free(rng):
    """Release a generator.

    Python reclaims the object itself; this exists so callers written
    against the create/free lifecycle (and the service layer) have an
    explicit teardown point. The handle must not be used afterwards.
    """
    rng.engine = None
    rng.buffer = None


def last_error(rng):
    """Most recent failed operation's diagnostic, or '' after a success."""
    return rng.last_error or ""


def catalogue():
    return engines.catalogue()
