"""Ordered/disordered vertices and rich/poor edges of an oriented 6-cycle 4-cover."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .cover import OrientedCycleCover

ORDERED = "ordered"
DISORDERED = "disordered"
RICH = "rich"
POOR = "poor"

# (edge class, sorted endpoint classes) -> subtype; the last two are outside the
# observed taxonomy and are collected as counterexamples
_SUBTYPES = {
    (RICH, (DISORDERED, DISORDERED)): "drd",
    (RICH, (DISORDERED, ORDERED)): "dro",
    (POOR, (DISORDERED, DISORDERED)): "dpd",
    (POOR, (ORDERED, ORDERED)): "opo",
    (RICH, (ORDERED, ORDERED)): "oro",
    (POOR, (DISORDERED, ORDERED)): "dpo",
}
TAXONOMY = ("drd", "dro", "dpd", "opo")


class ClassificationError(ValueError):
    """The cover is not a valid o6c4c, or a vertex is neither ordered nor disordered."""


@dataclass(frozen=True)
class Traversal:
    cycle: int
    circuit: int
    e_in: int
    e_out: int


@dataclass(frozen=True)
class CornerPassage:
    vertex: int
    edge_pair: frozenset
    traversals: tuple[Traversal, ...]

    @property
    def same_direction(self) -> bool:
        a, b = self.traversals
        return (a.e_in, a.e_out) == (b.e_in, b.e_out)


def corners(ocover: OrientedCycleCover) -> list[CornerPassage]:
    g = ocover.graph
    table: dict = {}
    for i, cyc in enumerate(ocover.cycles):
        for j, c in enumerate(cyc):
            des = c.directed_edges(g)
            for t in range(len(des)):
                e_in, e_out = des[t - 1].edge, des[t].edge
                v = des[t - 1].head
                table.setdefault((v, frozenset((e_in, e_out))), []).append(Traversal(i, j, e_in, e_out))
    out = []
    for v in range(g.n):
        inc = g.incidence[v]
        for a, b in ((inc[0], inc[1]), (inc[0], inc[2]), (inc[1], inc[2])):
            trav = table.pop((v, frozenset((a, b))), [])
            if len(trav) != 2:
                raise ClassificationError(
                    f"corner {g.edges[a]}|{g.edges[b]} at vertex {v} traversed {len(trav)} times, expected 2")
            out.append(CornerPassage(v, frozenset((a, b)), tuple(trav)))
    if table:
        raise ClassificationError("traversal through a non-corner")
    return out


def classify_vertices(ocover: OrientedCycleCover, _corners=None) -> list[str]:
    cs = _corners if _corners is not None else corners(ocover)
    out = []
    for v in range(ocover.graph.n):
        same = [c.same_direction for c in cs[3 * v:3 * v + 3]]
        if all(same):
            out.append(ORDERED)
        elif not any(same):
            out.append(DISORDERED)
        else:
            raise ClassificationError(f"vertex {v} is mixed: corner directions {same}")
    return out


def classify_edges(ocover: OrientedCycleCover) -> list[str]:
    g = ocover.graph
    combos: list[set] = [set() for _ in range(g.m)]
    uses = [0] * g.m
    for cyc in ocover.cycles:
        for c in cyc:
            des = c.directed_edges(g)
            L = len(des)
            for t in range(L):
                e = des[t].edge
                prev_e, next_e = des[t - 1].edge, des[(t + 1) % L].edge
                tail = des[t - 1].head
                # key by endpoint so direction of travel does not matter
                at = {tail: prev_e, des[t].head: next_e}
                u, v = g.edges[e]
                combos[e].add((at[u], at[v]))
                uses[e] += 1
    out = []
    for e in range(g.m):
        if uses[e] != 4:
            raise ClassificationError(f"edge {e} covered {uses[e]} times, expected 4")
        n = len(combos[e])
        if n == 4:
            out.append(RICH)
        elif n == 2:
            out.append(POOR)
        else:
            raise ClassificationError(f"edge {e} has {n} neighbour combinations")
    return out


def edge_subtypes(ocover: OrientedCycleCover, vertex_class=None, edge_class=None) -> list[str]:
    g = ocover.graph
    vc = vertex_class if vertex_class is not None else classify_vertices(ocover)
    ec = edge_class if edge_class is not None else classify_edges(ocover)
    return [_SUBTYPES[(ec[e], tuple(sorted((vc[u], vc[v]))))] for e, (u, v) in enumerate(g.edges)]


@dataclass
class ClassificationReport:
    vertex_class: list[str]
    edge_class: list[str]
    edge_subtype: list[str]
    counts: dict = field(default_factory=dict)
    counterexamples: list[int] = field(default_factory=list)

    @property
    def ordered(self) -> list[int]:
        return [v for v, c in enumerate(self.vertex_class) if c == ORDERED]

    @property
    def n_ordered(self) -> int:
        return self.counts[ORDERED]

    @property
    def n_rich(self) -> int:
        return self.counts[RICH]

    @property
    def n_poor(self) -> int:
        return self.counts[POOR]

    @property
    def all_disordered(self) -> bool:
        return self.counts[ORDERED] == 0

    def to_dict(self) -> dict:
        return {
            "vertices": self.vertex_class,
            "edges": self.edge_class,
            "subtypes": self.edge_subtype,
            "counts": self.counts,
            "taxonomy_counterexamples": self.counterexamples,
        }


def classify(ocover: OrientedCycleCover) -> ClassificationReport:
    cs = corners(ocover)
    vc = classify_vertices(ocover, cs)
    ec = classify_edges(ocover)
    st = edge_subtypes(ocover, vc, ec)
    counts = Counter(vc) + Counter(ec) + Counter(st)
    tallies = {key: counts.get(key, 0) for key in (ORDERED, DISORDERED, RICH, POOR) + TAXONOMY + ("oro", "dpo")}
    bad = [e for e, s in enumerate(st) if s not in TAXONOMY]
    return ClassificationReport(vc, ec, st, tallies, bad)
