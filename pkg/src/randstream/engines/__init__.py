"""Engine registry: every generator the library ships, keyed by id."""

from .counter import ChaCha20, Philox4x64, Squares64
from .cwg import Cwg128
from .interleave import Sfc64Simd, X256PlusPlusSimd, X256StarStarSimd
from .pcg import Pcg64Dxsm
from .ranlux import RanluxPP
from .sfc import Sfc64
from .xorfam import X128Plus, X256PlusPlus, X256StarStar, XoroPlusPlus

ENGINE_CLASSES = [
    X256PlusPlus,
    X256StarStar,
    X128Plus,
    XoroPlusPlus,
    Pcg64Dxsm,
    Philox4x64,
    Squares64,
    Sfc64,
    Cwg128,
    RanluxPP,
    ChaCha20,
    X256PlusPlusSimd,
    X256StarStarSimd,
    Sfc64Simd,
]

BY_ID = {cls.ID: cls for cls in ENGINE_CLASSES}
_LOWER = {cls.ID.lower(): cls.ID for cls in ENGINE_CLASSES}

DEFAULT_ID = "x256++simd"


class UnknownEngineError(ValueError):
    pass


def normalize(selector):
    """Resolve a user-supplied engine selector to a canonical id.

    Matching ignores case. An empty selector (or the string "0", kept
    for callers that pass a numeric default through) means the default
    engine. Anything else unknown raises with the catalogue attached.
    """
    if selector is None:
        return DEFAULT_ID
    sel = str(selector).strip()
    if sel == "" or sel == "0":
        return DEFAULT_ID
    canon = _LOWER.get(sel.lower())
    if canon is None:
        raise UnknownEngineError(
            "unknown engine %r; known engines: %s"
            % (selector, ", ".join(sorted(BY_ID)))
        )
    return canon


def make(selector=None):
    return BY_ID[normalize(selector)]()


def catalogue():
    """Static description of every engine, in registry order."""
    out = []
    for cls in ENGINE_CLASSES:
        out.append(
            {
                "id": cls.ID,
                "name": cls.NAME,
                "authors": cls.AUTHORS,
                "year": cls.YEAR,
                "state_words": cls.STATE_WORDS,
                "seed_words": cls.SEED_WORDS,
                "period": cls.PERIOD,
            }
        )
    return out
