"""graph6 encoding: printable ASCII, six bits per byte, offset 63.

The order is a single byte ``n + 63`` for ``n <= 62``; the upper triangle of
the adjacency matrix follows in column-major order (``(0,1), (0,2), (1,2),
(0,3), ...``), most significant bit first, zero-padded to a multiple of six.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import MAX_ORDER, Graph, GraphError

HEADER = ">>graph6<<"
MAX_WRITE_ORDER = 62


class Graph6Error(GraphError):
    """Malformed graph6 input; ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error("non-ASCII input", exc.start) from None
    text = text.rstrip("\r\n")
    base = 0
    if text.startswith(HEADER):
        base = len(HEADER)
        text = text[base:]
    if not text:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside 63..126", base + i)

    vals = [ord(ch) - 63 for ch in text]
    if vals[0] < 63:
        n, pos = vals[0], 1
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated long-form order", base + len(vals))
        if vals[1] == 63:
            raise Graph6Error("orders above 258047 are not supported", base + 1)
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds {MAX_ORDER}", base)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    data = vals[pos:]
    if len(data) != nbytes:
        raise Graph6Error(
            f"expected {nbytes} data bytes for n={n}, found {len(data)}",
            base + pos + min(len(data), nbytes),
        )

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if data[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    pad = nbytes * 6 - nbits
    if pad and data[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", base + pos + nbytes - 1)
    return Graph.from_rows(rows)


def write_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_WRITE_ORDER:
        raise GraphError(f"graph6 output supports n <= {MAX_WRITE_ORDER}, got {n}")
    rows = g.rows
    out = [chr(n + 63)]
    acc = nacc = 0
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | (rj >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


def bits_to_graph6(n: int, cert: int) -> bytes:
    """graph6 bytes for an upper-triangle bit string packed MSB-first into ``cert``."""
    nbits = n * (n - 1) // 2
    pad = (-nbits) % 6
    value = cert << pad
    nbytes = (nbits + pad) // 6
    body = bytes(((value >> (6 * (nbytes - 1 - i))) & 63) + 63 for i in range(nbytes))
    return bytes([n + 63]) + body


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, text)`` for non-blank lines, header-only lines skipped."""
    for lineno, line in enumerate(lines, 1):
        text = line.strip()
        if not text or text == HEADER:
            continue
        yield lineno, text


def read_graph6(stream: TextIO) -> Iterator[Graph]:
    for _, text in iter_graph6_lines(stream):
        yield parse_graph6(text)
