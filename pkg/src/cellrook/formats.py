"""Reading and writing shapes.

Three formats are supported:

``text``
    Lines of ``#`` (cell) and ``.`` (empty), top row first.  Trailing ``.``
    may be omitted; blank lines and lines starting with ``;`` are ignored.
``coords``
    One ``x y`` pair per line.
``json``
    ``{"cells": [[x, y], ...]}``.
"""

from __future__ import annotations

import json
import os

from .errors import EmptyCollection, ParseError
from .geometry import CellCollection, normalize

FORMATS = ("text", "coords", "json")

_EXTENSIONS = {
    ".txt": "text", ".grid": "text", ".shape": "text",
    ".xy": "coords", ".coords": "coords", ".dat": "coords",
    ".json": "json",
}


def _content_lines(data: str):
    for line in data.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith(";"):
            continue
        yield line.rstrip()


def detect_format(data: str) -> str:
    """Guess the format from the first non-comment character."""
    for line in _content_lines(data):
        ch = line.lstrip()[0]
        if ch in "#.":
            return "text"
        if ch == "{":
            return "json"
        if ch.isdigit() or ch in "+-":
            return "coords"
        raise ParseError(f"cannot detect shape format from {line!r}")
    raise ParseError("no shape data found")


def format_for_path(path: str) -> str | None:
    return _EXTENSIONS.get(os.path.splitext(path)[1].lower())


def parse_text(data: str) -> CellCollection:
    lines = list(_content_lines(data))
    cells = []
    height = len(lines)
    for i, line in enumerate(lines):
        y = height - i
        for j, ch in enumerate(line.strip()):
            if ch == "#":
                cells.append((j + 1, y))
            elif ch != ".":
                raise ParseError(f"unexpected character {ch!r} in grid line {i + 1}")
    return _finish(cells)


def parse_coords(data: str) -> CellCollection:
    cells = []
    for line in _content_lines(data):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'x y', got {line.strip()!r}")
        try:
            cells.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ParseError(f"non-integer coordinate in {line.strip()!r}") from exc
    return _finish(cells)


def parse_json(data: str) -> CellCollection:
    try:
        obj = json.loads(data)
        cells = [(int(x), int(y)) for x, y in obj["cells"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"malformed JSON shape: {exc}") from exc
    return _finish(cells)


def _finish(cells) -> CellCollection:
    try:
        return normalize(cells)
    except EmptyCollection as exc:
        raise ParseError("shape has no cells") from exc


_PARSERS = {"text": parse_text, "coords": parse_coords, "json": parse_json}


def parse_shape(data: str, fmt: str | None = None) -> CellCollection:
    fmt = fmt or detect_format(data)
    if fmt not in _PARSERS:
        raise ParseError(f"unknown format {fmt!r}")
    return _PARSERS[fmt](data)


def read_shape(path: str, fmt: str | None = None) -> CellCollection:
    with open(path) as fh:
        data = fh.read()
    return parse_shape(data, fmt or format_for_path(path))


def to_text(P: CellCollection) -> str:
    """Grid text with trailing empties stripped, newline-terminated."""
    lines = []
    for y in range(P.height, 0, -1):
        row = "".join("#" if (x, y) in P.cells else "." for x in range(1, P.width + 1))
        # an all-empty row keeps one dot; a blank line would be skipped on parse
        lines.append(row.rstrip(".") or ".")
    return "\n".join(lines) + "\n"


def to_coords(P: CellCollection) -> str:
    return "".join(f"{x} {y}\n" for x, y in P.sorted_cells)


def to_json(P: CellCollection) -> str:
    return json.dumps({"cells": [[x, y] for x, y in P.sorted_cells]})


def dump_shape(P: CellCollection, fmt: str = "text") -> str:
    if fmt == "text":
        return to_text(P)
    if fmt == "coords":
        return to_coords(P)
    if fmt == "json":
        return to_json(P) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
