"""Immutable simple graphs on vertices ``0..n-1`` and the edge-list text format.

The text format is::

    # optional comment lines
    n m
    u v        (m lines, 0 <= u < v < n)
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyGraphError, GraphError, ParseError

Edge = tuple[int, int]


def _canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class SimpleGraph:
    """Undirected graph without loops or parallel edges.

    Edges are stored as sorted ``(u, v)`` pairs with ``u < v``; iteration
    order is always that sorted order so downstream algorithms are
    deterministic.
    """

    __slots__ = ("_n", "_edges", "_index", "_adj", "_incident", "_labels")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (),
                 labels: Sequence[str] | None = None):
        n = int(n)
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        seen = set()
        for e in edges:
            if len(e) != 2:
                raise GraphError(f"edge {e!r} is not a pair")
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            pair = _canon(u, v)
            if pair in seen:
                raise GraphError(f"parallel edge {pair}")
            seen.add(pair)
        if labels is not None:
            labels = tuple(str(lab) for lab in labels)
            if len(labels) != n:
                raise GraphError("labels must have one entry per vertex")
        self._n = n
        self._edges = tuple(sorted(seen))
        self._index = {e: i for i, e in enumerate(self._edges)}
        adj: list[list[int]] = [[] for _ in range(n)]
        inc: list[list[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(self._edges):
            adj[u].append(v)
            adj[v].append(u)
            inc[u].append(i)
            inc[v].append(i)
        self._adj = tuple(tuple(a) for a in adj)
        self._incident = tuple(tuple(a) for a in inc)
        self._labels = labels

    @property
    def n(self) -> int:
        return self._n

    vertex_count = n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def labels(self) -> tuple[str, ...] | None:
        return self._labels

    def vertices(self) -> range:
        return range(self._n)

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def incident(self, v: int) -> tuple[int, ...]:
        """Indices (into :attr:`edges`) of the edges at ``v``."""
        return self._incident[v]

    def edge_index(self, u: int, v: int) -> int:
        return self._index[_canon(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        return _canon(u, v) in self._index

    def with_edges(self, added: Iterable[Sequence[int]] = (),
                   removed: Iterable[Sequence[int]] = (), n: int | None = None) -> "SimpleGraph":
        drop = {_canon(int(u), int(v)) for u, v in removed}
        missing = drop - set(self._edges)
        if missing:
            raise GraphError(f"cannot remove absent edges {sorted(missing)}")
        kept = [e for e in self._edges if e not in drop]
        return SimpleGraph(self._n if n is None else n, kept + [tuple(e) for e in added])

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"SimpleGraph(n={self._n}, m={self.m})"


@dataclass(frozen=True)
class DegreeProfile:
    d_min: int
    d_max: int

    @property
    def d(self) -> int:
        return self.d_min

    @property
    def s(self) -> int:
        return self.d_max - self.d_min


def degree_profile(G: SimpleGraph) -> DegreeProfile:
    if G.n == 0:
        raise EmptyGraphError("degree profile of a graph with no vertices")
    degs = G.degrees()
    return DegreeProfile(min(degs), max(degs))


def is_dds_graph(G: SimpleGraph, d: int, s: int) -> bool:
    """True iff every degree of ``G`` lies in ``[d, d + s]``."""
    return all(d <= k <= d + s for k in G.degrees())


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _int_pair(line: str, lineno: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise ParseError(f"expected two integers, got {line!r}", lineno)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"non-integer token in {line!r}", lineno) from None


def _read_one(lines, first) -> SimpleGraph:
    lineno, header = first
    n, m = _int_pair(header, lineno)
    if n < 1 or m < 0:
        raise ParseError(f"bad header 'n m' = {n} {m}", lineno)
    seen: set[Edge] = set()
    last = lineno
    for _ in range(m):
        try:
            lineno, line = next(lines)
        except StopIteration:
            raise ParseError(f"expected {m} edges, found {len(seen)}", last) from None
        last = lineno
        u, v = _int_pair(line, lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range [0, {n}) in {line!r}", lineno)
        pair = _canon(u, v)
        if pair in seen:
            raise ParseError(f"duplicate edge {pair}", lineno)
        seen.add(pair)
    return SimpleGraph(n, seen)


def read_graph(text: str) -> SimpleGraph:
    """Parse exactly one graph in edge-list format."""
    lines = _data_lines(text)
    first = next(lines, None)
    if first is None:
        raise ParseError("empty input", 1)
    G = _read_one(lines, first)
    extra = next(lines, None)
    if extra is not None:
        raise ParseError(f"trailing data {extra[1]!r}", extra[0])
    return G


def read_graphs(text: str) -> list[SimpleGraph]:
    """Parse a concatenation of edge-list blocks."""
    lines = _data_lines(text)
    out = []
    for first in lines:
        out.append(_read_one(lines, first))
    return out


def write_graph(G: SimpleGraph) -> str:
    rows = [f"{G.n} {G.m}"]
    rows.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(rows) + "\n"


def load_graph(path) -> SimpleGraph:
    with open(path, encoding="utf-8") as fh:
        return read_graph(fh.read())


def save_graph(G: SimpleGraph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(write_graph(G))


# Small named graphs used by fixtures, generators and tests.

def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(p: int, q: int) -> SimpleGraph:
    return SimpleGraph(p + q, [(u, p + v) for u in range(p) for v in range(q)])


def star_graph(leaves: int) -> SimpleGraph:
    return SimpleGraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph(10, outer + spokes + inner)


def disjoint_union(*graphs: SimpleGraph) -> SimpleGraph:
    edges, offset = [], 0
    for H in graphs:
        edges.extend((u + offset, v + offset) for u, v in H.edges)
        offset += H.n
    return SimpleGraph(offset, edges)
