"""Parser for the plain-text b-file sequence format: one "<index> <value>"
pair per line, '#' comments and blank lines ignored, indices strictly
increasing."""
from __future__ import annotations

from typing import NamedTuple


class BFileEntry(NamedTuple):
    index: int
    value: int


def parse_bfile(content: str) -> list[BFileEntry]:
    entries: list[BFileEntry] = []
    for lineno, raw in enumerate(content.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected '<index> <value>', got {raw!r}")
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer field in {raw!r}") from None
        if entries and index <= entries[-1].index:
            raise ValueError(f"line {lineno}: index {index} not increasing")
        entries.append(BFileEntry(index, value))
    return entries
