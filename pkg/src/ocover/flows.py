"""Integer flows: weighted cycle sums, (2,4,4) and (3,3,3) flow double covers.

Values are signed relative to each edge's stored direction ``edges[e] = (u, v)``,
i.e. from the lower vertex to the higher one.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Sequence

from . import kernels
from .cover import BudgetExhausted, CycleCover, OrientedCycleCover, triple_coverage
from .graph import CubicGraph, circuits, edges_of, is_even_subgraph, mask_of


@dataclass(frozen=True)
class IntFlow:
    graph: CubicGraph
    values: tuple[int, ...]

    @property
    def support(self) -> int:
        return mask_of(e for e, x in enumerate(self.values) if x)

    def __neg__(self) -> "IntFlow":
        return IntFlow(self.graph, tuple(-x for x in self.values))

    def __add__(self, other: "IntFlow") -> "IntFlow":
        return IntFlow(self.graph, tuple(a + b for a, b in zip(self.values, other.values)))

    def to_dict(self) -> dict:
        return {"orientation": [list(e) for e in self.graph.edges], "values": list(self.values)}


def is_conservative(g: CubicGraph, values: Sequence[int]) -> bool:
    bal = [0] * g.n
    for (u, v), x in zip(g.edges, values):
        bal[u] -= x
        bal[v] += x
    return not any(bal)


def verify_nzk(g: CubicGraph, flow: IntFlow | Sequence[int], k: int, support: int | None = None) -> bool:
    """Conservation everywhere and 0 < |value| < k on ``support`` (default: all edges), 0 elsewhere."""
    values = flow.values if isinstance(flow, IntFlow) else tuple(flow)
    if len(values) != g.m or not is_conservative(g, values):
        return False
    sup = g.full_mask if support is None else support
    for e, x in enumerate(values):
        if sup >> e & 1:
            if not 0 < abs(x) < k:
                return False
        elif x:
            return False
    return True


def circulation(g: CubicGraph, circuit) -> list[int]:
    vals = [0] * g.m
    for d in circuit.directed_edges(g):
        vals[d.edge] += 1 if d.head == g.edges[d.edge][1] else -1
    return vals


def flow_from_weights(ocover: OrientedCycleCover, weights: Sequence[int]) -> IntFlow:
    g = ocover.graph
    if len(weights) != ocover.k:
        raise ValueError(f"need {ocover.k} weights, got {len(weights)}")
    vals = [0] * g.m
    for w, cyc in zip(weights, ocover.cycles):
        if not w:
            continue
        for c in cyc:
            for e, x in enumerate(circulation(g, c)):
                vals[e] += w * x
    return IntFlow(g, tuple(vals))


def weight_orderings(ocover: OrientedCycleCover, weights: Sequence[int], k: int) -> list[tuple[int, ...]]:
    """Distinct assignments of ``weights`` to the cycles that give a nowhere-zero k-flow."""
    out = []
    for w in sorted(set(permutations(weights))):
        if verify_nzk(ocover.graph, flow_from_weights(ocover, w), k):
            out.append(w)
    return out


# -- generic search ------------------------------------------------------------

def _run(g: CubicGraph, options: list[list[tuple[int, ...]]], n_parts: int,
         accept: Callable[[list[tuple[int, ...]]], bool] | None, limit: int, budget: int):
    edges = list(g.edges)
    sols: list[list[tuple[int, ...]]] = []

    def cb(choice):
        vec = [options[e][i] for e, i in enumerate(choice)]
        if accept is None or accept(vec):
            sols.append(vec)
            return bool(limit) and len(sols) >= limit
        return False

    status, nodes = kernels.flow_search(g.n, edges, options, n_parts, cb, budget)
    return sols, status, nodes


def nz_flow(g: CubicGraph, support: int, k: int, budget: int = 0) -> IntFlow | None:
    """A nowhere-zero k-flow on the subgraph ``support`` (zero elsewhere), or None.

    Raises BudgetExhausted when the search stops early without an answer.
    """
    vals = [x for x in range(1 - k, k) if x]
    options = []
    first = True
    for e in range(g.m):
        if support >> e & 1:
            # negating a flow keeps it valid: fix the sign of the first support edge
            options.append([(x,) for x in vals if x > 0] if first else [(x,) for x in vals])
            first = False
        else:
            options.append([(0,)])
    sols, status, _ = _run(g, options, 1, None, 1, budget)
    if sols:
        return IntFlow(g, tuple(v[0] for v in sols[0]))
    if status == kernels.BUDGET:
        raise BudgetExhausted(f"nz{k} search on {bin(support).count('1')} edges")
    return None


def nz2_flow(g: CubicGraph, support: int) -> IntFlow:
    """The +-1 circulation along the circuits of an even subgraph."""
    if not is_even_subgraph(g, support):
        raise ValueError("nz2 support must be an even subgraph")
    vals = [0] * g.m
    for c in circuits(g, support):
        for e, x in enumerate(circulation(g, c)):
            vals[e] += x
    return IntFlow(g, tuple(vals))


# -- (2,4,4) from a 6c4c ---------------------------------------------------------

# coverage by the chosen triple -> parts holding the edge
MEMBERSHIP = {0: ("F4a", "F4b"), 1: ("C2", "F4a"), 2: ("F4a", "F4b"), 3: ("C2", "F4b")}


class FlowCounterexample(RuntimeError):
    """No nz4 flow on a (2,4,4) part; the witness is attached."""

    def __init__(self, message: str, witness: dict):
        super().__init__(message)
        self.witness = witness


@dataclass
class FlowTripleCover:
    graph: CubicGraph
    masks: dict[str, int]
    flows: dict[str, IntFlow] = field(default_factory=dict)

    def is_double_cover(self) -> bool:
        g = self.graph
        return all(sum(m >> e & 1 for m in self.masks.values()) == 2 for e in range(g.m))

    def verify(self) -> bool:
        g = self.graph
        k_of = {"C2": 2, "F4a": 4, "F4b": 4}
        return self.is_double_cover() and is_even_subgraph(g, self.masks["C2"]) and all(
            verify_nzk(g, self.flows[p], k_of[p], self.masks[p]) for p in k_of)

    def to_dict(self) -> dict:
        return {p: {"edges": edges_of(self.masks[p]), "values": list(self.flows[p].values)} for p in self.masks}


def flows_244(cover: CycleCover | OrientedCycleCover, triple: Sequence[int], budget: int = 0) -> FlowTripleCover:
    if isinstance(cover, OrientedCycleCover):
        cover = cover.cover
    g = cover.graph
    cnt = triple_coverage(cover, triple)
    masks = {"C2": 0, "F4a": 0, "F4b": 0}
    for e, c in enumerate(cnt):
        for p in MEMBERSHIP[c]:
            masks[p] |= 1 << e
    ftc = FlowTripleCover(g, masks)
    ftc.flows["C2"] = nz2_flow(g, masks["C2"])
    for p in ("F4a", "F4b"):
        f = nz_flow(g, masks[p], 4, budget)
        if f is None:
            raise FlowCounterexample(f"no nz4 flow on {p} for triple {tuple(triple)}",
                                     {"graph": g.name, "triple": list(triple), "part": p, "edges": edges_of(masks[p])})
        ftc.flows[p] = f
    if not ftc.verify():
        raise RuntimeError("(2,4,4) decomposition failed verification")
    return ftc


def ordered_on(g: CubicGraph, mask: int, ordered: Sequence[int]) -> int:
    """How many of the given vertices lie on the subgraph ``mask``."""
    on = set()
    for e in edges_of(mask):
        on.update(g.edges[e])
    return sum(1 for v in ordered if v in on)


# -- flow double covers by search ---------------------------------------------------

@dataclass
class FlowDoubleCover:
    """Parts (one flow each) covering every edge exactly twice."""

    graph: CubicGraph
    kinds: tuple[int, ...]  # k of each part's nowhere-zero k-flow
    flows: tuple[IntFlow, ...]

    @property
    def masks(self) -> list[int]:
        return [f.support for f in self.flows]

    def verify(self, oriented: bool = False) -> bool:
        g = self.graph
        if not all(verify_nzk(g, f, k, f.support) for f, k in zip(self.flows, self.kinds)):
            return False
        for e in range(g.m):
            vals = [f.values[e] for f in self.flows if f.values[e]]
            if len(vals) != 2:
                return False
            if oriented and vals[0] * vals[1] > 0:
                return False
        return True

    def vertex_degrees(self) -> list[tuple[int, ...]]:
        g = self.graph
        return [tuple(sum(1 for e in g.incidence[v] if f.values[e]) for f in self.flows) for v in range(g.n)]

    def degree3_vertices(self) -> list[int]:
        return [v for v, d in enumerate(self.vertex_degrees()) if 3 in d]

    def to_dict(self) -> dict:
        return {"kinds": list(self.kinds), "values": [list(f.values) for f in self.flows]}


def _pair_options(kinds: Sequence[int], oriented: bool) -> list[tuple[int, ...]]:
    n = len(kinds)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for a in (x for x in range(1 - kinds[i], kinds[i]) if x):
                for b in (x for x in range(1 - kinds[j], kinds[j]) if x):
                    if oriented and a * b > 0:
                        continue
                    vec = [0] * n
                    vec[i], vec[j] = a, b
                    out.append(tuple(vec))
    return out


def search_flow_double_cover(g: CubicGraph, kinds: Sequence[int], oriented: bool, limit: int = 1,
                             budget: int = 0, accept=None) -> tuple[list[FlowDoubleCover], str]:
    """Double covers by len(kinds) parts carrying nowhere-zero flows of the given orders.

    Symmetry is broken on the first edge: its pair of parts is the least in
    its orbit under swaps of equal-kind parts, and its first value is
    positive (both values when unoriented, since parts negate independently).
    """
    kinds = tuple(kinds)
    opts = _pair_options(kinds, oriented)
    swaps = [p for p in permutations(range(len(kinds))) if all(kinds[p[i]] == kinds[i] for i in range(len(kinds)))]

    def least(o):
        parts = tuple(i for i, x in enumerate(o) if x)
        return all(tuple(sorted(p[i] for i in parts)) >= parts for p in swaps)

    first = [o for o in opts if least(o)]
    first = [o for o in first if all(x > 0 for x in o if x)] if not oriented else \
        [o for o in first if next(x for x in o if x) > 0]
    options = [first] + [opts] * (g.m - 1)

    def wrap(vec):
        dc = _to_cover(g, kinds, vec)
        return accept is None or accept(dc)

    sols, status, _ = _run(g, options, len(kinds), wrap, limit, budget)
    return [_to_cover(g, kinds, v) for v in sols], status


def _to_cover(g, kinds, vecs) -> FlowDoubleCover:
    return FlowDoubleCover(g, tuple(kinds), tuple(IntFlow(g, tuple(v[p] for v in vecs)) for p in range(len(kinds))))


def search_oriented_244(g: CubicGraph, limit: int = 1, budget: int = 0) -> tuple[list[FlowDoubleCover], str]:
    return search_flow_double_cover(g, (2, 4, 4), True, limit, budget)


def search_333(g: CubicGraph, oriented: bool, limit: int = 1, budget: int = 0, accept=None
               ) -> tuple[list[FlowDoubleCover], str]:
    return search_flow_double_cover(g, (3, 3, 3), oriented, limit, budget, accept)
