"""Regenerate the committed jump polynomial table in place."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from randstream import jumps  # noqa: E402

jumps.TABLE_PATH.parent.mkdir(parents=True, exist_ok=True)
jumps.TABLE_PATH.write_text(jumps.generate_table_text(), "ascii")
print("wrote", jumps.TABLE_PATH)
