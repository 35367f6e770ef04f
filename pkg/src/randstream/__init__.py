"""Portable random number generation.

Engines and distributions are separate layers: any engine feeds any
distribution, substreams are provably disjoint (jumps, counters, spawn
keys), and output is bit-identical across platforms. See state_io for
the lifecycle surface and the service subpackage for the HTTP front end.
"""

from .state_io import (
    catalogue,
    create,
    duplicate,
    free,
    from_blob,
    last_error,
    to_blob,
)
from .rng import Rng
from .serialize import BlobError
from .engines import UnknownEngineError

__version__ = "0.1.0"

__all__ = [
    "BlobError",
    "Rng",
    "UnknownEngineError",
    "catalogue",
    "create",
    "duplicate",
    "free",
    "from_blob",
    "last_error",
    "to_blob",
    "__version__",
]
