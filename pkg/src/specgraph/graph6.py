"""Dense undirected graph6 encoding (nauty ``formats.txt``)."""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Graph

HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    pass


class Graph6LengthError(Graph6Error):
    """Malformed vertex-count header."""


class Graph6ByteError(Graph6Error):
    """Byte outside the printable range 63..126."""


class Graph6TruncatedError(Graph6Error):
    """Adjacency body shorter than the header promises."""


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"vertex count {n} too large for graph6")


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6LengthError("empty input")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6LengthError("8-byte vertex count header cut short")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        if n <= 258047:
            raise Graph6LengthError(f"non-canonical 8-byte header for n={n}")
        return n, 8
    if len(data) < 4:
        raise Graph6LengthError("4-byte vertex count header cut short")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    if n <= 62:
        raise Graph6LengthError(f"non-canonical 4-byte header for n={n}")
    return n, 4


def write_graph6(g: Graph, header: bool = False) -> bytes:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + int("".join(map(str, bits[k : k + 6])), 2) for k in range(0, len(bits), 6)
    )
    return (HEADER if header else b"") + _encode_n(g.n) + body


def parse_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip(b"\r\n")
    if data.startswith(HEADER):
        data = data[len(HEADER) :]
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6ByteError(f"byte {b!r} at offset {pos} outside 63..126")
    n, offset = _decode_n(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[offset:]
    if len(body) < need:
        raise Graph6TruncatedError(f"expected {need} body bytes for n={n}, got {len(body)}")
    if len(body) > need:
        raise Graph6LengthError(f"{len(body) - need} trailing bytes after body for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def read_graph6_lines(lines: Iterable[bytes | str]) -> Iterator[tuple[int, Graph | Exception]]:
    """Yield ``(line_number, graph_or_error)`` for each non-blank line."""
    for lineno, raw in enumerate(lines, start=1):
        line = raw.encode() if isinstance(raw, str) else raw
        line = line.strip()
        if not line or line == HEADER:
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            yield lineno, exc
