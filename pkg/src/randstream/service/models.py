"""Request and response bodies for the HTTP service.

64-bit words travel as decimal strings so JavaScript clients never hit
the 2^53 integer cliff; requests accept plain ints too. Floats are
ordinary JSON numbers.
"""

from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel

Word = Union[int, str]


class CreateRequest(BaseModel):
    engine: Optional[str] = None
    seed: Optional[List[Word]] = None
    spawn_key: List[Word] = []


class HandleResponse(BaseModel):
    handle: str
    engine: str


class SeedRequest(BaseModel):
    seed: List[Word]
    spawn_key: List[Word] = []


class RandomizeResponse(BaseModel):
    source: str
    degraded: bool


class JumpRequest(BaseModel):
    k: int


class AdvanceRequest(BaseModel):
    n: Word


class StreamRequest(BaseModel):
    words: List[Word]


class SampleRequest(BaseModel):
    dist: str
    params: Dict[str, Any] = {}
    n: int = 1


class SampleResponse(BaseModel):
    values: List[Any]


class RawRequest(BaseModel):
    nbytes: int


class ModeRequest(BaseModel):
    bitexact: Optional[bool] = None
    full_mantissa: Optional[bool] = None


class ModeResponse(BaseModel):
    bitexact: bool
    full_mantissa: bool


class StateResponse(BaseModel):
    engine: str
    words: List[str]


class StateRequest(BaseModel):
    words: List[Word]


class SerializedResponse(BaseModel):
    blob: str


class RestoreRequest(BaseModel):
    blob: str


class ErrorResponse(BaseModel):
    last_error: str


class EngineInfo(BaseModel):
    id: str
    name: str
    authors: str
    year: int
    state_words: int
    seed_words: int
    period: str


class SelftestRequest(BaseModel):
    engine: Optional[str] = None
    n: int = 100000


class CheckRecord(BaseModel):
    name: str
    statistic: float
    p_value: float
    passed: bool


class SelftestResponse(BaseModel):
    engine: str
    passed: bool
    records: List[CheckRecord]
