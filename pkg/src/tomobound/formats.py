"""Text formats: line-sum input files and ASCII / plain-PBM image renderings.

Line-sum files come in two flavours::

    rows = 11 10 8 8 8 6 6 6 3 3 3 2
    cols = 12 10 7 6 6 6 6 6 6 6 3

or the JSON object ``{"rows": [...], "cols": [...]}``. Blank lines and
``#`` comments are ignored in the first form.

ASCII images use ``#`` for a one and ``.`` for a zero, one row per line, row
1 first. PBM output is plain ``P1`` with width n and height m, row 1 on top.
"""

from __future__ import annotations

import json

import numpy as np

from .core import BinaryImage, LineSums
from .errors import InvalidSums


class ParseError(InvalidSums):
    def __init__(self, message, line=None, column=None):
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
        self.column = column


def _parse_ints(text, line_no, offset):
    values = []
    pos = 0
    for token in text.split():
        pos = text.index(token, pos)
        try:
            values.append(int(token))
        except ValueError:
            raise ParseError(f"expected an integer, got {token!r}", line_no, offset + pos + 1) from None
        pos += len(token)
    return values


def parse_sums(text: str) -> LineSums:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
        if not isinstance(obj, dict) or "rows" not in obj or "cols" not in obj:
            raise ParseError('JSON input needs "rows" and "cols" keys')
        for key in ("rows", "cols"):
            if not isinstance(obj[key], list) or not all(
                isinstance(v, int) and not isinstance(v, bool) for v in obj[key]
            ):
                raise ParseError(f'"{key}" must be a list of integers')
        return LineSums(obj["rows"], obj["cols"])

    found = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if "=" not in line:
            col = len(line) - len(line.lstrip()) + 1
            raise ParseError("expected 'rows = ...' or 'cols = ...'", line_no, col)
        key, _, rest = line.partition("=")
        key = key.strip()
        if key not in ("rows", "cols"):
            col = len(line) - len(line.lstrip()) + 1
            raise ParseError(f"unknown key {key!r}", line_no, col)
        if key in found:
            raise ParseError(f"duplicate key {key!r}", line_no, 1)
        found[key] = _parse_ints(rest, line_no, line.index("=") + 1)
    for key in ("rows", "cols"):
        if key not in found:
            raise ParseError(f"missing '{key} = ...' line")
    return LineSums(found["rows"], found["cols"])


def format_sums(line_sums: LineSums) -> str:
    return (
        "rows = " + " ".join(map(str, line_sums.rows)) + "\n"
        "cols = " + " ".join(map(str, line_sums.cols)) + "\n"
    )


def to_ascii(image: BinaryImage) -> str:
    return str(image) + "\n"


def from_ascii(text: str) -> BinaryImage:
    lines = [ln.rstrip("\r") for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty ASCII image")
    width = len(lines[0])
    grid = []
    for line_no, line in enumerate(lines, start=1):
        if len(line) != width:
            raise ParseError(f"row has length {len(line)}, expected {width}", line_no, 1)
        for col, ch in enumerate(line, start=1):
            if ch not in "#.":
                raise ParseError(f"unexpected character {ch!r}", line_no, col)
        grid.append([ch == "#" for ch in line])
    return BinaryImage(grid)


def to_pbm(image: BinaryImage) -> str:
    body = "\n".join(" ".join("1" if v else "0" for v in row) for row in image.cells)
    return f"P1\n{image.n} {image.m}\n{body}\n"


def from_pbm(text: str) -> BinaryImage:
    tokens = []
    for raw in text.splitlines():
        tokens.extend(raw.split("#", 1)[0].split())
    if not tokens or tokens[0] != "P1":
        raise ParseError("not a plain PBM (P1) file")
    try:
        width, height = int(tokens[1]), int(tokens[2])
    except (IndexError, ValueError):
        raise ParseError("missing or malformed PBM dimensions") from None
    # plain PBM may also pack pixels without separators
    bits = "".join(tokens[3:])
    if len(bits) != width * height or set(bits) - {"0", "1"}:
        raise ParseError(f"expected {width * height} pixels of 0/1, got {len(bits)}")
    arr = np.frombuffer(bits.encode(), dtype=np.uint8) - ord("0")
    return BinaryImage(arr.reshape(height, width).astype(bool))


def image_rows(image: BinaryImage) -> list[str]:
    return str(image).splitlines()
