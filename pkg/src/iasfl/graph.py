"""Simple undirected graphs, the edge-list file format, and shape predicates."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable

from .errors import InputError

_TOKEN = re.compile(r"[A-Za-z0-9_]+")


@dataclass(frozen=True)
class Graph:
    """Simple finite graph with a fixed vertex order.

    Edges are stored as index-ordered pairs ``(u, v)`` with ``u`` declared
    before ``v``, sorted by vertex position.  Isolated vertices are rejected
    unless ``allow_isolated`` is set (used only by internal enumeration).
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    allow_isolated: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        pos = {}
        for v in self.vertices:
            if not isinstance(v, str) or not _TOKEN.fullmatch(v):
                raise InputError(f"bad vertex name {v!r}")
            if v in pos:
                raise InputError(f"duplicate vertex {v!r}")
            pos[v] = len(pos)
        seen = set()
        norm = []
        for u, v in self.edges:
            if u not in pos or v not in pos:
                raise InputError(f"edge {u}-{v} uses an undeclared vertex")
            if u == v:
                raise InputError(f"loop at {u}")
            key = frozenset((u, v))
            if key in seen:
                raise InputError(f"duplicate edge {u}-{v}")
            seen.add(key)
            norm.append((u, v) if pos[u] < pos[v] else (v, u))
        norm.sort(key=lambda e: (pos[e[0]], pos[e[1]]))
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "_pos", pos)
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", {v: frozenset(n) for v, n in adj.items()})
        if not self.allow_isolated:
            for v in self.vertices:
                if not adj[v]:
                    raise InputError(f"isolated vertex {v}")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]], vertices: Iterable[str] = ()) -> "Graph":
        """Build a graph; vertex order is ``vertices`` then first appearance in ``edges``."""
        order = list(dict.fromkeys(vertices))
        edges = list(edges)
        for e in edges:
            for v in e:
                if v not in order:
                    order.append(v)
        return cls(tuple(order), tuple(edges))

    @property
    def order(self) -> int:
        return len(self.vertices)

    def index(self, v: str) -> int:
        return self._pos[v]

    def neighbors(self, v: str) -> frozenset[str]:
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._adj[u]

    def remove_edge(self, u: str, v: str) -> "Graph":
        drop = frozenset((u, v))
        return Graph(self.vertices, tuple(e for e in self.edges if frozenset(e) != drop))

    def remove_vertex(self, v: str) -> "Graph":
        return Graph(
            tuple(w for w in self.vertices if w != v),
            tuple(e for e in self.edges if v not in e),
        )

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        stack = [self.vertices[0]]
        seen = {self.vertices[0]}
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def to_text(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges)


def parse_graph(text: str | bytes, source: str | None = None) -> Graph:
    """Parse the edge-list format.

    One edge ``<u> <v>`` per line; ``#`` starts a comment; ``vertex <name>``
    declares a vertex (which must then appear in some edge).
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InputError(f"not UTF-8: {exc}", source) from None
    order: dict[str, int] = {}
    declared: dict[str, int] = {}
    edges: list[tuple[str, str]] = []
    seen: dict[frozenset, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 2:
            raise InputError(f"expected '<u> <v>', got {line!r}", source, lineno)
        for t in toks:
            if not _TOKEN.fullmatch(t):
                raise InputError(f"bad vertex token {t!r}", source, lineno)
        if toks[0] == "vertex":
            declared.setdefault(toks[1], lineno)
            order.setdefault(toks[1], len(order))
            continue
        u, v = toks
        if u == v:
            raise InputError(f"loop at {u}", source, lineno)
        key = frozenset((u, v))
        if key in seen:
            raise InputError(f"duplicate edge {u}-{v} (first on line {seen[key]})", source, lineno)
        seen[key] = lineno
        order.setdefault(u, len(order))
        order.setdefault(v, len(order))
        edges.append((u, v))
    used = {v for e in edges for v in e}
    for v, lineno in declared.items():
        if v not in used:
            raise InputError(f"isolated vertex {v}", source, lineno)
    if not edges:
        raise InputError("graph has no edges", source)
    return Graph(tuple(order), tuple(edges))


@dataclass(frozen=True)
class ShapeReport:
    is_path: bool
    is_cycle: bool
    is_star: bool
    is_complete: bool
    is_complete_bipartite: bool
    is_complete_multipartite: bool
    odd_order: bool
    pendant_vertices: tuple[str, ...]
    center: str | None


def _bipartition(g: Graph) -> tuple[set[str], set[str]] | None:
    color: dict[str, int] = {}
    for s in g.vertices:
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in color:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return None
    return ({v for v in g.vertices if color[v] == 0}, {v for v in g.vertices if color[v] == 1})


def graph_shape(g: Graph) -> ShapeReport:
    n, m = g.order, len(g.edges)
    degs = {v: g.degree(v) for v in g.vertices}
    connected = g.is_connected()
    pendants = tuple(v for v in g.vertices if degs[v] == 1)

    is_tree = connected and m == n - 1
    is_path = is_tree and max(degs.values()) <= 2
    is_cycle = connected and n >= 3 and all(d == 2 for d in degs.values())
    center = None
    if is_tree:
        hubs = [v for v in g.vertices if degs[v] == n - 1]
        if hubs:
            center = hubs[0]
    is_star = center is not None
    is_complete = m == n * (n - 1) // 2

    parts = _bipartition(g)
    is_cbip = (
        connected
        and parts is not None
        and m == len(parts[0]) * len(parts[1])
    )

    # complete multipartite <=> non-adjacency is an equivalence relation
    classes: list[set[str]] = []
    for v in g.vertices:
        for c in classes:
            rep = next(iter(c))
            if not g.has_edge(v, rep):
                c.add(v)
                break
        else:
            classes.append({v})
    multi = all(
        (not g.has_edge(u, w)) == (i == j)
        for i, a in enumerate(classes)
        for j, b in enumerate(classes)
        for u in a
        for w in b
        if u != w
    )
    return ShapeReport(
        is_path=is_path,
        is_cycle=is_cycle,
        is_star=is_star,
        is_complete=is_complete,
        is_complete_bipartite=is_cbip,
        is_complete_multipartite=multi and len(classes) > 2,
        odd_order=n % 2 == 1,
        pendant_vertices=pendants,
        center=center,
    )
