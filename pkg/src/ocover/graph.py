"""Cubic graphs: representation, graph6 codec, generators and structural queries.

Edge sets are plain ``int`` bitmasks over edge indices throughout the package:
bit ``i`` set means edge ``i`` is present.  Edge indices follow graph6 bit
order (upper triangle, column by column), so decoding is deterministic.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, NamedTuple

import networkx as nx

from . import kernels


class GraphError(ValueError):
    """Raised for malformed or non-cubic graph input."""


class DirectedEdge(NamedTuple):
    edge: int
    head: int


@dataclass(frozen=True)
class CubicGraph:
    n: int
    edges: tuple[tuple[int, int], ...]
    name: str = ""
    incidence: tuple[tuple[int, int, int], ...] = field(init=False, repr=False, compare=False)
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        inc: list[list[int]] = [[] for _ in range(self.n)]
        index = {}
        for i, (u, v) in enumerate(self.edges):
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {i} has endpoint outside 0..{self.n - 1}")
            key = (min(u, v), max(u, v))
            if key in index:
                raise GraphError(f"parallel edge between {u} and {v}")
            index[key] = i
            inc[u].append(i)
            inc[v].append(i)
        for v, es in enumerate(inc):
            if len(es) != 3:
                raise GraphError(f"vertex {v} has degree {len(es)}, expected 3")
        object.__setattr__(self, "incidence", tuple(tuple(es) for es in inc))
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], name: str = "", n: int | None = None):
        """Build a graph; edges are re-indexed into graph6 bit order."""
        es = sorted(((min(u, v), max(u, v)) for u, v in edges), key=lambda e: (e[1], e[0]))
        if n is None:
            n = 1 + max(max(e) for e in es) if es else 0
        return cls(n, tuple(es), name)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.edges)) - 1

    def edge_index(self, u: int, v: int) -> int:
        return self._index[(min(u, v), max(u, v))]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._index

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if v == a else a

    def neighbours(self, v: int) -> list[int]:
        return [self.other(e, v) for e in self.incidence[v]]

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges)
        return G

    def __str__(self):
        return self.name or graph6_encode(self)


# -- edge-set helpers -------------------------------------------------------

def mask_of(edges: Iterable[int]) -> int:
    mask = 0
    for e in edges:
        mask |= 1 << e
    return mask


def edges_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def vertex_degrees(g: CubicGraph, mask: int) -> list[int]:
    deg = [0] * g.n
    for e in edges_of(mask):
        u, v = g.edges[e]
        deg[u] += 1
        deg[v] += 1
    return deg


def is_even_subgraph(g: CubicGraph, mask: int) -> bool:
    return all(d % 2 == 0 for d in vertex_degrees(g, mask))


def is_perfect_matching(g: CubicGraph, mask: int) -> bool:
    return all(d == 1 for d in vertex_degrees(g, mask))


# -- graph6 -----------------------------------------------------------------

def graph6_decode(text: str | bytes, name: str = "") -> CubicGraph:
    if isinstance(text, str):
        text = text.encode("ascii")
    text = text.strip()
    if text.startswith(b">>graph6<<"):
        text = text[len(b">>graph6<<"):]
    if not text or text.startswith(b":") or text.startswith(b"&"):
        raise GraphError(f"not a graph6 line: {text[:20]!r}")
    try:
        G = nx.from_graph6_bytes(text)
    except (nx.NetworkXError, ValueError, IndexError) as exc:
        raise GraphError(f"malformed graph6 line {text[:20]!r}: {exc}") from exc
    for v, d in G.degree():
        if d != 3:
            raise GraphError(f"vertex {v} has degree {d}, expected 3")
    return CubicGraph.from_edges(G.edges(), name=name, n=G.number_of_nodes())


def graph6_encode(g: CubicGraph) -> str:
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").strip()


def read_graph6_file(path) -> list[CubicGraph]:
    """Read every graph6 line from ``path``; graphs are named ``<stem>-<i>``."""
    from pathlib import Path

    path = Path(path)
    graphs = []
    for i, line in enumerate(path.read_text().split()):
        graphs.append(graph6_decode(line, name=f"{path.stem}-{i + 1}"))
    return graphs


# -- generators -------------------------------------------------------------

def gen_flower_snark(m: int) -> CubicGraph:
    """Isaacs flower snark J_m on vertices a_i, b_i, c_i, d_i (ids 4i..4i+3)."""
    if m < 3 or m % 2 == 0:
        raise GraphError(f"flower snark needs odd m >= 3, got {m}")

    def a(i): return 4 * (i % m)
    def b(i): return 4 * (i % m) + 1
    def c(i): return 4 * (i % m) + 2
    def d(i): return 4 * (i % m) + 3

    edges = []
    for i in range(m):
        edges += [(a(i), b(i)), (b(i), c(i)), (b(i), d(i)),
                  (a(i), a(i + 1)), (c(i), d(i + 1)), (d(i), c(i + 1))]
    return CubicGraph.from_edges(edges, name=f"J{m}", n=4 * m)


def flower_vertex(m: int, kind: str, i: int) -> int:
    return 4 * (i % m) + "abcd".index(kind)


def _read_fixture(name: str) -> list[tuple[int, int]]:
    text = resources.files("ocover.data").joinpath(f"{name}.adj").read_text()
    edges = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            u, v = line.split()
            edges.append((int(u), int(v)))
    return edges


NAMED_GRAPHS = ("k4", "k33", "prism", "petersen", "tietze", "blanusa1", "blanusa2", "g10_04_6")


def gen_named(name: str) -> CubicGraph:
    key = name.lower().replace("-", "_").replace(".", "_")
    aliases = {"j3": "tietze", "10_04_6": "g10_04_6", "graph10_04_6": "g10_04_6"}
    key = aliases.get(key, key)
    if key not in NAMED_GRAPHS:
        raise GraphError(f"unknown graph {name!r}; known: {', '.join(NAMED_GRAPHS)}")
    return CubicGraph.from_edges(_read_fixture(key), name=key)


# -- structure --------------------------------------------------------------

def is_bridgeless(g: CubicGraph) -> bool:
    return not nx.has_bridges(g.to_networkx())


def girth(g: CubicGraph) -> int:
    best = None
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbours(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    if best is None:
        raise GraphError("graph is a forest")
    return best


def enumerate_perfect_matchings(g: CubicGraph) -> list[int]:
    """All perfect matchings as edge masks, sorted by their sorted edge lists."""
    pms = kernels.perfect_matchings(g.n, g.edges, g.incidence)
    return sorted(pms, key=edges_of)


def complement_2factor(g: CubicGraph, pm: int) -> int:
    if not is_perfect_matching(g, pm):
        raise GraphError("not a perfect matching")
    return g.full_mask & ~pm


@dataclass(frozen=True)
class Circuit:
    """A directed circuit given by its vertex sequence (closing edge implied)."""

    vertices: tuple[int, ...]

    def directed_edges(self, g: CubicGraph) -> list[DirectedEdge]:
        vs = self.vertices
        return [DirectedEdge(g.edge_index(vs[i], vs[(i + 1) % len(vs)]), vs[(i + 1) % len(vs)])
                for i in range(len(vs))]

    def edge_mask(self, g: CubicGraph) -> int:
        return mask_of(d.edge for d in self.directed_edges(g))

    def reversed(self) -> "Circuit":
        vs = self.vertices
        return Circuit((vs[0],) + tuple(reversed(vs[1:])))

    def __len__(self):
        return len(self.vertices)


def circuits(g: CubicGraph, mask: int) -> list[Circuit]:
    """Split an even subgraph of a cubic graph into circuits.

    Each circuit starts at its lowest vertex and heads to the lower of its two
    neighbours on the circuit; circuits are listed by starting vertex.
    """
    adj: dict[int, list[int]] = {}
    for e in edges_of(mask):
        u, v = g.edges[e]
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for v, nb in adj.items():
        if len(nb) != 2:
            raise GraphError(f"not an even subgraph of a cubic graph: vertex {v} has degree {len(nb)}")
    out = []
    seen = set()
    for s in sorted(adj):
        if s in seen:
            continue
        walk = [s]
        seen.add(s)
        prev, cur = s, min(adj[s])
        while cur != s:
            walk.append(cur)
            seen.add(cur)
            a, b = adj[cur]
            prev, cur = cur, (b if a == prev else a)
        out.append(Circuit(tuple(walk)))
    return out


def three_edge_colouring(g: CubicGraph) -> dict[int, int] | None:
    """A proper 3-edge-colouring ``{edge: colour in 1..3}``, or None if none exists."""
    colour = [0] * g.m
    order = []
    seen = set()
    for s in range(g.n):  # BFS edge order keeps constraints local
        if s in seen:
            continue
        queue = deque([s])
        seen.add(s)
        while queue:
            u = queue.popleft()
            for e in g.incidence[u]:
                if e not in order:
                    order.append(e)
                w = g.other(e, u)
                if w not in seen:
                    seen.add(w)
                    queue.append(w)

    def ok(e, c):
        for v in g.edges[e]:
            for f in g.incidence[v]:
                if f != e and colour[f] == c:
                    return False
        return True

    def rec(i):
        if i == len(order):
            return True
        e = order[i]
        # the first edge's colour is symmetric
        for c in ((1,) if i == 0 else (1, 2, 3)):
            if ok(e, c):
                colour[e] = c
                if rec(i + 1):
                    return True
                colour[e] = 0
        return False

    if rec(0):
        return {e: colour[e] for e in range(g.m)}
    return None


def automorphism_count(g: CubicGraph) -> int:
    G = g.to_networkx()
    return sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(G, G).isomorphisms_iter())


def is_isomorphic(g: CubicGraph, h: CubicGraph) -> bool:
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())
