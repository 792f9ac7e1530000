"""graph6 codec.

The adjacency bits are the upper triangle taken column by column,
``(0,1), (0,2), (1,2), (0,3), ...``, packed six to a printable byte
(value + 63) and zero-padded.  Orders up to 62 use a one-byte header,
larger orders ``~`` followed by 18 bits.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import FormatError
from .graph import MAX_ORDER, Graph

HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def encode_graph6(g: Graph) -> str:
    out = [_encode_order(g.n)]
    acc = 0
    width = 0
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            width += 1
            if width == 6:
                out.append(chr(acc + 63))
                acc = width = 0
    if width:
        out.append(chr((acc << (6 - width)) + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    """Decode one graph6 line; trailing newline and an optional header are allowed."""
    line = text.rstrip("\r\n")
    base = 0
    if line.startswith(HEADER):
        line = line[len(HEADER):]
        base = len(HEADER)
    if not line:
        raise FormatError("empty graph6 line", base)
    if line[0] == ":":
        raise FormatError("sparse6 input is not accepted", base)
    if line[0] == "&":
        raise FormatError("digraph6 input is not accepted", base)
    for k, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"character {ch!r} outside graph6 range", base + k)

    if line[0] != "~":
        n, pos = ord(line[0]) - 63, 1
    else:
        if len(line) >= 2 and line[1] == "~":
            raise FormatError("8-byte order header exceeds supported size", base + 1)
        if len(line) < 4:
            raise FormatError("truncated order header", base + len(line))
        n = 0
        for ch in line[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 4
    if n < 1:
        raise FormatError("graph6 order must be positive", base)
    if n > MAX_ORDER:
        raise FormatError(f"order {n} exceeds cap {MAX_ORDER}", base)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = line[pos:]
    if len(body) < need:
        raise FormatError(f"truncated body: expected {need} bytes, got {len(body)}", base + len(line))
    if len(body) > need:
        raise FormatError("trailing bytes after graph6 body", base + pos + need)

    rows = [0] * n
    i, j = 0, 1
    for k, ch in enumerate(body):
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            if j >= n:
                if val >> shift & 1:
                    raise FormatError("nonzero padding bits", base + pos + k)
                continue
            if val >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph.from_rows(rows)


def iter_graph6(stream: Iterable[str]) -> Iterator[Graph]:
    for line in stream:
        if line.strip():
            yield decode_graph6(line.strip())


def read_graph6_file(path) -> list[Graph]:
    with open(path) as fh:
        return list(iter_graph6(fh))


def write_graph6(graphs: Iterable[Graph], fh: TextIO) -> None:
    for g in graphs:
        fh.write(encode_graph6(g) + "\n")
