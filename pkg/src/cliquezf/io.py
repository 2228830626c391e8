"""Reading and writing graphs: edgelist, graph6 (short form), dot and json.

Edgelist format: first line ``n m``, then ``m`` lines ``u v`` with 0-indexed
vertices; blank lines and ``#`` comments are ignored.

JSON format::

    {"n": 4, "edges": [[0, 1], [1, 2]], "labels": ["a", "b", "c", "d"]}

``labels`` is present only for graphs with vertex names (e.g. compressed
cliques graphs, whose vertices are named by their cells).
"""

from __future__ import annotations

import json
from typing import Iterator

from .graph import Graph, GraphError

FORMATS_IN = ("edgelist", "graph6")
FORMATS_OUT = ("edgelist", "graph6", "dot", "json")

_G6_HEADER = ">>graph6<<"


class FormatError(ValueError):
    pass


# -- graph6 ----------------------------------------------------------------------

def to_graph6(g: Graph, header: bool = False) -> str:
    if g.n > 62:
        raise FormatError("graph6 long form (n > 62) is not supported")
    out = [chr(63 + g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return (_G6_HEADER if header else "") + "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise FormatError("empty graph6 string")
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise FormatError("graph6 string has characters outside 63..126")
    if ord(s[0]) == 126:
        raise FormatError("graph6 long form (n > 62) is not supported")
    n = ord(s[0]) - 63
    need = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (need + 5) // 6:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6}")
    stream = []
    for ch in body:
        v = ord(ch) - 63
        stream.extend((v >> (5 - k)) & 1 for k in range(6))
    if any(stream[need:]):
        raise FormatError("graph6 padding bits are not zero")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if stream[pos]:
                edges.append((i, j))
            pos += 1
    return Graph.from_edges(n, edges)


def read_graph6_lines(lines) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line and not line.startswith("#"):
            yield from_graph6(line)


# -- edgelist --------------------------------------------------------------------

def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def from_edgelist(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty edgelist")
    head = lines[0].split()
    try:
        n, m = (int(x) for x in head)
    except ValueError:
        raise FormatError(f"malformed header {lines[0]!r}; expected 'n m'") from None
    if n < 0 or m < 0:
        raise FormatError("negative counts in header")
    rows = lines[1:]
    if len(rows) != m:
        raise FormatError(f"header promises {m} edges, found {len(rows)}")
    edges = []
    for row in rows:
        parts = row.split()
        if len(parts) != 2:
            raise FormatError(f"malformed edge line {row!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"malformed edge line {row!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex out of range in {row!r}")
        edges.append((u, v))
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def to_edgelist(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


# -- dot / json ----------------------------------------------------------------------

def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f'  {v} [label="{g.label(v)}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_obj(g: Graph) -> dict:
    obj: dict = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if g.names is not None:
        obj["labels"] = list(g.names)
    return obj


def to_json(g: Graph) -> str:
    return json.dumps(to_json_obj(g), sort_keys=True)


def from_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
        return Graph.from_edges(int(obj["n"]), [tuple(e) for e in obj["edges"]], obj.get("labels"))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed json graph: {exc}") from exc


# -- dispatch ----------------------------------------------------------------------------

def parse_graph(text: str, fmt: str = "auto") -> Graph:
    if fmt == "auto":
        fmt = sniff_format(text)
    if fmt == "edgelist":
        return from_edgelist(text)
    if fmt == "graph6":
        lines = _content_lines(text)
        if len(lines) != 1:
            raise FormatError("expected exactly one graph6 line")
        return from_graph6(lines[0])
    if fmt == "json":
        return from_json(text)
    raise FormatError(f"unknown input format {fmt!r}")


def sniff_format(text: str) -> str:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return "json"
    lines = _content_lines(text)
    if lines and len(lines[0].split()) == 2:
        return "edgelist"
    return "graph6"


def emit_graph(g: Graph, fmt: str) -> str:
    if fmt == "edgelist":
        return to_edgelist(g)
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "dot":
        return to_dot(g)
    if fmt == "json":
        return to_json(g) + "\n"
    raise FormatError(f"unknown output format {fmt!r}")
