"""Text interchange: graph6, DOT and plain ``u v`` edge lists.

graph6 follows the standard 6-bit encoding (upper triangle, column order,
optional ``>>graph6<<`` header).  DOT and edge lists use 1-based labels.
"""
from __future__ import annotations

from typing import Callable, Iterable

from .errors import ParameterError
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ParameterError(f"graph6 cannot encode n={n}")


def _decode_n(data: list[int]) -> tuple[int, int]:
    """Return ``(n, offset)`` where offset is the first byte of the edge block."""
    if not data:
        raise ParameterError("empty graph6 string")
    if data[0] != 63:
        return data[0], 1
    if len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise ParameterError("truncated graph6 size field")
        n = 0
        for b in data[2:8]:
            n = n << 6 | b
        return n, 8
    if len(data) < 4:
        raise ParameterError("truncated graph6 size field")
    n = 0
    for b in data[1:4]:
        n = n << 6 | b
    return n, 4


def to_graph6(g: Graph, header: bool = False) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[i:i + 6])), 2)) for i in range(0, len(bits), 6)
    )
    return (GRAPH6_HEADER if header else "") + _encode_n(g.n) + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if s.startswith(":") or s.startswith("&"):
        raise ParameterError("sparse6/digraph6 input is not supported")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= b < 64 for b in data):
        raise ParameterError(f"invalid graph6 character in {text!r}")
    n, off = _decode_n(data)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) - off != need:
        raise ParameterError(f"graph6 body has {len(data) - off} bytes, expected {need} for n={n}")
    rows = [0] * n
    k = 0
    body = data[off:]
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, rows)


def to_dot(g: Graph, name: str = "G", labels: Callable[[int], str] | None = None) -> str:
    """Undirected DOT text.  Node ids are 1-based; ``labels`` may override
    the displayed label of each 0-based vertex."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if labels is None:
            lines.append(f"  {v + 1};")
        else:
            lines.append(f'  {v + 1} [label="{labels(v)}"];')
    for u, v in g.edges():
        lines.append(f"  {u + 1} -- {v + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edge_list(g: Graph) -> str:
    return "".join(f"{u + 1} {v + 1}\n" for u, v in g.edges())


def from_edge_list(text: str | Iterable[str], n: int | None = None) -> Graph:
    """Parse ``u v`` lines (1-based).  Blank lines and ``#`` comments are
    skipped.  Without ``n`` the order is the largest label seen."""
    lines = text.splitlines() if isinstance(text, str) else list(text)
    edges = []
    for lineno, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParameterError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParameterError(f"line {lineno}: non-integer label in {line!r}") from None
        if u < 1 or v < 1:
            raise ParameterError(f"line {lineno}: labels are 1-based")
        edges.append((u - 1, v - 1))
    order = max((max(e) + 1 for e in edges), default=0)
    if n is None:
        n = order
    elif n < order:
        raise ParameterError(f"edge list mentions vertex {order} but n={n}")
    seen = set()
    for u, v in edges:
        if (min(u, v), max(u, v)) in seen:
            raise ParameterError(f"duplicate edge {u + 1} {v + 1}")
        seen.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, edges)
