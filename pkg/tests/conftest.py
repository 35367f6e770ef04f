import json
import pathlib

import pytest

GOLDEN = pathlib.Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def engine_kats():
    return json.loads((GOLDEN / "engines_kat.json").read_text())


def golden_bytes(name):
    return (GOLDEN / "repro" / name).read_bytes()
