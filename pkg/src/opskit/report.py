"""Versioned JSON result reports.

Reports serialize with sorted keys and fixed indentation so identical
inputs give identical bytes. Floats are kept at full precision in
``result``; ``display`` holds the 2-decimal strings shown to users.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field
from typing import Any

from . import __version__

FORMAT_VERSION = 1


def digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


def display(x: float, places: int = 2) -> str:
    return f"{x:.{places}f}"


@dataclass(frozen=True)
class ResultReport:
    kind: str
    input_digest: str
    result: dict[str, Any]
    display: dict[str, str] = field(default_factory=dict)
    verdicts: dict[str, bool] = field(default_factory=dict)
    version: str = __version__
    format: int = FORMAT_VERSION

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2, ensure_ascii=False, allow_nan=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> ResultReport:
        data = json.loads(text)
        if data.get("format") != FORMAT_VERSION:
            raise ValueError(f"unsupported report format {data.get('format')!r}")
        return cls(**data)
