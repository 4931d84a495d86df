"""Reference example listings shipped as text.

``exampleK.txt`` holds ``key: comma,separated,values`` lines transcribed once
from published listings; ``exampleK_pair.txt`` holds the column pairs in the
pair file format. ``SEQFORGE_FIXTURES`` points at a replacement directory.
"""

from __future__ import annotations

import os
from pathlib import Path

from ..errors import DomainError
from ..families import SequencePair, load_pair

FIXTURE_FILES = (
    "example1.txt",
    "example1_pair.txt",
    "example2.txt",
    "example2_pair.txt",
    "example3.txt",
)


def fixture_dir() -> Path:
    override = os.environ.get("SEQFORGE_FIXTURES")
    return Path(override) if override else Path(__file__).parent


def load_listing(name: str) -> dict[str, list[int]]:
    path = fixture_dir() / f"{name}.txt"
    out = {}
    with open(path, encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, values = line.partition(":")
            if not sep:
                raise DomainError(f"{path}:{lineno}: expected 'key: values'")
            out[key.strip()] = [int(v) for v in values.split(",")]
    return out


def load_fixture_pair(name: str) -> SequencePair:
    return load_pair(fixture_dir() / f"{name}.txt")
