"""k-cycle m-covers: verification, exact search, orientation and splits."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator, Sequence

from . import kernels
from .graph import (
    Circuit,
    CubicGraph,
    GraphError,
    circuits,
    edges_of,
    enumerate_perfect_matchings,
    is_even_subgraph,
    mask_of,
)


class BudgetExhausted(RuntimeError):
    """A search hit its node budget before finishing."""


@dataclass(frozen=True)
class CycleCover:
    graph: CubicGraph
    cycles: tuple[int, ...]  # edge masks
    m: int

    @property
    def k(self) -> int:
        return len(self.cycles)

    def multiset_key(self) -> tuple[int, ...]:
        return tuple(sorted(self.cycles))


@dataclass(frozen=True)
class OrientedCycleCover:
    graph: CubicGraph
    cycles: tuple[tuple[Circuit, ...], ...]
    m: int

    @property
    def k(self) -> int:
        return len(self.cycles)

    @property
    def cover(self) -> CycleCover:
        g = self.graph
        return CycleCover(g, tuple(mask_of(e for c in cyc for e in _circuit_edges(g, c)) for cyc in self.cycles), self.m)

    def circuit_ids(self) -> list[tuple[int, int]]:
        return [(i, j) for i, cyc in enumerate(self.cycles) for j in range(len(cyc))]

    def circuit(self, cid: tuple[int, int]) -> Circuit:
        return self.cycles[cid[0]][cid[1]]

    @property
    def circuit_count(self) -> int:
        return sum(len(c) for c in self.cycles)

    def reoriented(self, flip: set[tuple[int, int]]) -> "OrientedCycleCover":
        cycles = tuple(
            tuple(c.reversed() if (i, j) in flip else c for j, c in enumerate(cyc))
            for i, cyc in enumerate(self.cycles)
        )
        return OrientedCycleCover(self.graph, cycles, self.m)

    def reversed(self) -> "OrientedCycleCover":
        return self.reoriented(set(self.circuit_ids()))

    def permuted(self, order: Sequence[int]) -> "OrientedCycleCover":
        return OrientedCycleCover(self.graph, tuple(self.cycles[i] for i in order), self.m)


def _circuit_edges(g: CubicGraph, c: Circuit) -> list[int]:
    return [d.edge for d in c.directed_edges(g)]


@dataclass
class VerificationReport:
    failures: list[str] = field(default_factory=list)
    bad_cycles: list[int] = field(default_factory=list)
    bad_edges: list[int] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.valid


def verify_cover(g: CubicGraph, cycles: Sequence[int], m: int) -> VerificationReport:
    rep = VerificationReport()
    for i, mask in enumerate(cycles):
        if mask & ~g.full_mask:
            rep.failures.append(f"cycle {i} uses edges outside the graph")
            rep.bad_cycles.append(i)
        elif not is_even_subgraph(g, mask):
            rep.failures.append(f"cycle {i} is not an even subgraph")
            rep.bad_cycles.append(i)
    count = [0] * g.m
    for mask in cycles:
        for e in edges_of(mask & g.full_mask):
            count[e] += 1
    for e, c in enumerate(count):
        if c != m:
            rep.failures.append(f"edge {e} {g.edges[e]} covered {c} times, expected {m}")
            rep.bad_edges.append(e)
    return rep


def _check_circuit(g: CubicGraph, c: Circuit) -> str | None:
    vs = c.vertices
    if len(vs) < 3:
        return f"circuit {vs} is too short"
    if len(set(vs)) != len(vs):
        return f"circuit {vs} repeats a vertex"
    for i in range(len(vs)):
        if not g.has_edge(vs[i], vs[(i + 1) % len(vs)]):
            return f"circuit {vs} uses non-edge {vs[i]}-{vs[(i + 1) % len(vs)]}"
    return None


def verify_oriented_cover(g: CubicGraph, ocover: OrientedCycleCover | Sequence[Sequence[Circuit]],
                          m: int | None = None) -> VerificationReport:
    if isinstance(ocover, OrientedCycleCover):
        m = ocover.m if m is None else m
        cycles = ocover.cycles
    else:
        cycles = ocover
    rep = VerificationReport()
    fwd = [0] * g.m
    bwd = [0] * g.m
    masks = []
    for i, cyc in enumerate(cycles):
        mask = 0
        broken = False
        for c in cyc:
            err = _check_circuit(g, c)
            if err:
                rep.failures.append(f"cycle {i}: {err}")
                broken = True
                continue
            for d in c.directed_edges(g):
                if mask >> d.edge & 1:
                    rep.failures.append(f"cycle {i} uses edge {d.edge} twice")
                    broken = True
                mask |= 1 << d.edge
                if d.head == g.edges[d.edge][1]:
                    fwd[d.edge] += 1
                else:
                    bwd[d.edge] += 1
        if broken:
            rep.bad_cycles.append(i)
        masks.append(mask)
    base = verify_cover(g, masks, m)
    rep.failures += base.failures
    rep.bad_cycles = sorted(set(rep.bad_cycles + base.bad_cycles))
    rep.bad_edges = list(base.bad_edges)
    if m % 2 == 0:
        for e in range(g.m):
            if e not in base.bad_edges and fwd[e] != bwd[e]:
                rep.failures.append(f"edge {e} {g.edges[e]} traversed {fwd[e]} times forward and {bwd[e]} backward")
                rep.bad_edges.append(e)
    else:
        rep.failures.append(f"odd multiplicity {m} cannot be balanced")
    return rep


# -- constructions ------------------------------------------------------------

def o6c4c_from_colouring(g: CubicGraph, colouring: dict[int, int]) -> OrientedCycleCover:
    for v in range(g.n):
        cols = sorted(colouring[e] for e in g.incidence[v])
        if cols != [1, 2, 3]:
            raise GraphError(f"improper colouring at vertex {v}: {cols}")
    cycles = []
    for pair in ((1, 2), (1, 3), (2, 3)):
        mask = mask_of(e for e in range(g.m) if colouring[e] in pair)
        cycles.append(tuple(circuits(g, mask)))
    cycles += [tuple(c.reversed() for c in cyc) for cyc in cycles]
    return OrientedCycleCover(g, tuple(cycles), 4)


# -- search -------------------------------------------------------------------

@dataclass(frozen=True)
class SearchConfig:
    k: int = 6
    m: int = 4
    oriented: bool = False
    mode: str = "first"  # first | all | count
    node_budget: int = 0  # 0 = unlimited; applies per kernel call

    def __post_init__(self):
        if self.mode not in ("first", "all", "count"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.oriented and self.m % 2:
            raise ValueError("oriented covers need even m")
        if self.k < self.m:
            raise ValueError("k must be at least m")
        if self.node_budget < 0:
            raise ValueError("budget must be nonnegative")


@dataclass
class SearchResult:
    solutions: list
    status: str  # complete | stopped | budget
    count: int = 0
    nodes: int = 0

    @property
    def budget_exhausted(self) -> bool:
        return self.status == kernels.BUDGET

    @property
    def found(self) -> bool:
        return self.count > 0


def even_subgraphs(g: CubicGraph) -> list[int]:
    """All nonempty even subgraphs, via the cycle space of a spanning forest."""
    import networkx as nx

    basis = [mask_of(g.edge_index(u, v) for u, v in zip(c, c[1:] + c[:1]))
             for c in nx.cycle_basis(g.to_networkx())]
    out = set()
    for bits in range(1, 1 << len(basis)):
        mask = 0
        for i, b in enumerate(basis):
            if bits >> i & 1:
                mask ^= b
        out.add(mask)
    return sorted(out)


def iter_cycle_covers(g: CubicGraph, k: int, m: int, budget: int = 0,
                      engine: str = "auto") -> Iterator[CycleCover]:
    """Yield covers lazily; raises BudgetExhausted if the budget runs out.

    ``engine`` is "matching" (perfect-matching multisets, needs 2k == 3m),
    "even" (raw even-subgraph multisets) or "auto".
    """
    if engine == "auto":
        engine = "matching" if 2 * k == 3 * m else "even"
    if engine == "matching":
        if 2 * k != 3 * m:
            raise ValueError("matching engine needs 2k == 3m")
        rows = enumerate_perfect_matchings(g)
        need, exact = k - m, True
    else:
        rows = even_subgraphs(g)
        need, exact = m, False
    found: list[tuple[int, ...]] = []
    batch = 256
    # the kernel is callback-driven; collect in batches and resume by skipping
    seen = 0
    while True:
        target = seen + batch
        got: list[tuple[int, ...]] = []

        def cb(sol):
            got.append(sol)
            return len(got) >= target

        status, _ = kernels.multicover(rows, g.m, need, k, exact, cb, budget)
        for sol in got[seen:]:
            yield _cover_from_rows(g, rows, sol, k, m, engine)
        if status == kernels.BUDGET:
            raise BudgetExhausted(f"cover search on {g} exceeded {budget} nodes")
        if status == kernels.COMPLETE:
            return
        seen = target
        batch *= 4


def _cover_from_rows(g, rows, sol, k, m, engine):
    if engine == "matching":
        cycles = tuple(sorted(g.full_mask & ~rows[i] for i in sol))
    else:
        cycles = tuple(sorted(rows[i] for i in sol)) + (0,) * (k - len(sol))
    return CycleCover(g, cycles, m)


def search_cycle_cover(g: CubicGraph, config: SearchConfig, engine: str = "auto",
                       accept: Callable[[OrientedCycleCover], bool] | None = None) -> SearchResult:
    """Run a cover search; ``accept`` filters oriented solutions (e.g. class constraints)."""
    solutions: list = []
    count = 0
    status = kernels.COMPLETE
    try:
        for cover in iter_cycle_covers(g, config.k, config.m, config.node_budget, engine):
            if not config.oriented:
                count += 1
                if config.mode != "count":
                    solutions.append(cover)
                if config.mode == "first":
                    status = kernels.STOPPED
                    break
                continue
            sub_mode = "first" if config.mode == "first" and accept is None else "all"
            res = orient_cover(cover, mode=sub_mode, budget=config.node_budget)
            if res.budget_exhausted:
                status = kernels.BUDGET
                break
            for oc in res.solutions:
                if accept is not None and not accept(oc):
                    continue
                count += 1
                if config.mode != "count":
                    solutions.append(oc)
                if config.mode == "first":
                    break
            if config.mode == "first" and count:
                status = kernels.STOPPED
                break
    except BudgetExhausted:
        status = kernels.BUDGET
    return SearchResult(solutions, status, count)


def _union_find_parity(n):
    parent = list(range(n))
    parity = [0] * n  # parity relative to parent: s[x] = s[parent] * (-1)**parity

    def find(x):
        if parent[x] == x:
            return x, 0
        root, p = find(parent[x])
        parent[x] = root
        parity[x] ^= p
        return root, parity[x]

    def union(a, b, rel):
        """Impose s[a] * s[b] == (-1)**rel; False on contradiction."""
        ra, pa = find(a)
        rb, pb = find(b)
        if ra == rb:
            return (pa ^ pb) == rel
        parent[rb] = ra
        parity[rb] = pa ^ pb ^ rel
        return True

    return find, union


def corner_uses(g: CubicGraph, circ_list: Sequence[Circuit]) -> dict:
    """``{(v, frozenset(in, out)): [(circuit idx, in_edge, out_edge), ...]}``."""
    uses: dict = {}
    for ci, c in enumerate(circ_list):
        des = c.directed_edges(g)
        L = len(des)
        for i in range(L):
            e_in = des[i - 1].edge
            e_out = des[i].edge
            v = des[i - 1].head
            uses.setdefault((v, frozenset((e_in, e_out))), []).append((ci, e_in, e_out))
    return uses


def orient_cover(cover: CycleCover, mode: str = "all", budget: int = 0,
                 vertex_classes: dict[int, str] | None = None) -> SearchResult:
    """Orientations of every circuit making each edge balanced.

    ``vertex_classes`` optionally pins vertices to "ordered"/"disordered"
    (6c4c covers only).  Circuits keep the canonical start vertex; reversed
    ones start at the same vertex going the other way.
    """
    g = cover.graph
    if cover.m % 2:
        return SearchResult([], kernels.COMPLETE)
    cyc_circuits = [circuits(g, mask) for mask in cover.cycles]
    flat: list[Circuit] = [c for cs in cyc_circuits for c in cs]
    owner = [i for i, cs in enumerate(cyc_circuits) for _ in cs]
    nv = len(flat)
    find, union = _union_find_parity(nv)
    if vertex_classes:
        uses = corner_uses(g, flat)
        for (v, _), lst in uses.items():
            cls = vertex_classes.get(v)
            if cls is None:
                continue
            if len(lst) != 2:
                raise ValueError("vertex constraints need every corner used exactly twice")
            (a, ia, oa), (b, ib, ob) = lst
            same_now = (ia, oa) == (ib, ob)
            want_same = cls == "ordered"
            # flipping one of the two circuits toggles same/opposite
            if not union(a, b, 0 if same_now == want_same else 1):
                return SearchResult([], kernels.COMPLETE)
    roots = sorted({find(i)[0] for i in range(nv)})
    rindex = {r: j for j, r in enumerate(roots)}
    constraints = []
    terms_by_edge: list[dict[int, int]] = [dict() for _ in range(g.m)]
    for ci, c in enumerate(flat):
        r, p = find(ci)
        for d in c.directed_edges(g):
            sign = 1 if d.head == g.edges[d.edge][1] else -1
            if p:
                sign = -sign
            t = terms_by_edge[d.edge]
            t[rindex[r]] = t.get(rindex[r], 0) + sign
    for t in terms_by_edge:
        terms = [(v, c) for v, c in sorted(t.items()) if c]
        if terms:
            constraints.append(terms)
        # all-cancelled terms already sum to zero
    solutions: list[OrientedCycleCover] = []
    count = [0]

    def cb(signs):
        count[0] += 1
        if mode != "count":
            flipped = []
            for ci, c in enumerate(flat):
                r, p = find(ci)
                s = signs[rindex[r]] * (-1 if p else 1)
                flipped.append(c if s == 1 else c.reversed())
            k = 0
            cycles = []
            for cs in cyc_circuits:
                cycles.append(tuple(flipped[k:k + len(cs)]))
                k += len(cs)
            solutions.append(OrientedCycleCover(g, tuple(cycles), cover.m))
        return mode == "first"

    status, nodes = kernels.sign_search(len(roots), constraints, cb, budget)
    return SearchResult(solutions, status, count[0], nodes)


def search_oriented(g: CubicGraph, k: int = 6, m: int = 4, budget: int = 0,
                    vertex_classes: dict[int, str] | None = None,
                    accept: Callable[[OrientedCycleCover], bool] | None = None,
                    limit: int = 1) -> SearchResult:
    """Oriented covers honouring optional vertex-class pins and a filter.

    Stops after ``limit`` accepted solutions (0 = no limit).
    """
    solutions = []
    status = kernels.COMPLETE
    try:
        for cover in iter_cycle_covers(g, k, m, budget):
            mode = "first" if accept is None and limit == 1 else "all"
            res = orient_cover(cover, mode=mode, budget=budget, vertex_classes=vertex_classes)
            if res.budget_exhausted:
                status = kernels.BUDGET
                break
            for oc in res.solutions:
                if accept is None or accept(oc):
                    solutions.append(oc)
                    if limit and len(solutions) >= limit:
                        return SearchResult(solutions, kernels.STOPPED, len(solutions))
    except BudgetExhausted:
        status = kernels.BUDGET
    return SearchResult(solutions, status, len(solutions))


# -- splits into two cycle double covers --------------------------------------

@dataclass(frozen=True)
class Split:
    """Two halves of the circuits of an o6c4c, each a cycle double cover."""

    halves: tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]

    @property
    def cycle_level(self) -> bool:
        """True when every cycle lies wholly in one half (a split into two triples)."""
        cyc = [{i for i, _ in h} for h in self.halves]
        return not (cyc[0] & cyc[1])

    def triples(self) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
        if not self.cycle_level:
            return None
        return tuple(tuple(sorted({i for i, _ in h})) for h in self.halves)  # type: ignore[return-value]


def split_into_two_cdcs(ocover: OrientedCycleCover) -> list[Split]:
    """All partitions of the circuits into two halves covering each edge twice.

    Triple partitions of the 6 cycles are the special case ``cycle_level``.
    """
    g = ocover.graph
    if ocover.m != 4:
        raise ValueError("splits are defined for 4-covers")
    ids = ocover.circuit_ids()
    masks = [ocover.circuit(c).edge_mask(g) for c in ids]
    by_edge = [[i for i, mk in enumerate(masks) if mk >> e & 1] for e in range(g.m)]
    side = [-1] * len(ids)
    out = []

    def consistent():
        for lst in by_edge:
            a = sum(1 for i in lst if side[i] == 0)
            b = sum(1 for i in lst if side[i] == 1)
            if a > 2 or b > 2:
                return False
        return True

    def rec():
        # most constrained undecided edge
        best = None
        for lst in by_edge:
            und = [i for i in lst if side[i] < 0]
            if und and (best is None or len(und) < len(best)):
                best = und
        if best is None:
            out.append(Split((tuple(ids[i] for i in range(len(ids)) if side[i] == 0),
                              tuple(ids[i] for i in range(len(ids)) if side[i] == 1))))
            return
        i = best[0]
        for s in ((0,) if i == 0 else (0, 1)):  # circuit 0 always in the first half
            side[i] = s
            if consistent():
                rec()
            side[i] = -1

    rec()
    out.sort(key=lambda s: s.halves)
    return out


def triple_coverage(cover: CycleCover, triple: Sequence[int]) -> list[int]:
    g = cover.graph
    cnt = [0] * g.m
    for i in triple:
        for e in edges_of(cover.cycles[i]):
            cnt[e] += 1
    return cnt


def cycle_triples(k: int = 6) -> list[tuple[int, ...]]:
    return list(combinations(range(k), 3))
