"""Rotation systems, face tracing, and the o6cdc built from a disordered o6c4c.

Cycles of a 6-cover are numbered 1..6 here (cycle index + 1), matching the
notation of pair lists and triples such as ``(12 -> 35) + 64``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import NamedTuple, Sequence

from .cover import OrientedCycleCover, verify_oriented_cover
from .graph import Circuit, CubicGraph, DirectedEdge


class RibbonError(ValueError):
    """Precondition failure, e.g. ordered vertices present."""


class TheoremViolation(RuntimeError):
    """A derived face is not a circuit or mixes classes; ``certificate`` replays it."""

    def __init__(self, message: str, certificate: dict):
        super().__init__(message)
        self.certificate = certificate


Pair = tuple[int, int]


def _fmt_pair(p: Pair) -> str:
    return f"{p[0]}{p[1]}"


def inversions(seq: Sequence[int]) -> int:
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])


# -- pair lists ----------------------------------------------------------------

@dataclass(frozen=True)
class PairList:
    """Three ordered cycle pairs around a vertex, in cyclic order.

    ``pairs[i]`` sits on edge ``edges[i]``; the rotation at the vertex is
    ``edges[0] -> edges[1] -> edges[2]``.  ``pairs[0]`` contains cycle 1.
    """

    vertex: int
    edges: tuple[int, int, int]
    pairs: tuple[Pair, Pair, Pair]

    @property
    def sequence(self) -> tuple[int, ...]:
        return tuple(x for p in self.pairs for x in p)

    @property
    def is_even(self) -> bool:
        return inversions(self.sequence) % 2 == 0

    def pair_at(self, e: int) -> Pair:
        return self.pairs[self.edges.index(e)]

    def __str__(self):
        return "[" + " -> ".join(_fmt_pair(p) for p in self.pairs) + "]"


def local_pairlist(vertex: int, passes: dict[int, tuple[int, int]]) -> PairList:
    """Pair list from the local passes ``cycle number -> (e_in, e_out)`` at a vertex.

    Each cycle avoids one of the three edges; the two cycles avoiding an edge
    form its pair.  Cycle 1's ``in -> out -> avoided`` fixes a cyclic order;
    of it and its reverse, the one reading as an even permutation wins.
    """
    if sorted(passes) != [1, 2, 3, 4, 5, 6]:
        raise RibbonError(f"vertex {vertex}: expected passes of cycles 1..6, got {sorted(passes)}")
    edges = sorted({e for io in passes.values() for e in io})
    if len(edges) != 3:
        raise RibbonError(f"vertex {vertex}: passes use {len(edges)} edges")
    avoid: dict[int, list[int]] = {e: [] for e in edges}
    for c, (a, b) in passes.items():
        (x,) = [e for e in edges if e not in (a, b)]
        avoid[x].append(c)
    if any(len(v) != 2 for v in avoid.values()):
        raise RibbonError(f"vertex {vertex}: an edge is not avoided by exactly two cycles")

    def build(rot):
        pairs = []
        for k, f in enumerate(rot):
            nxt, nxt2 = rot[(k + 1) % 3], rot[(k + 2) % 3]
            same = [c for c in avoid[f] if passes[c] == (nxt, nxt2)]
            other = [c for c in avoid[f] if passes[c] == (nxt2, nxt)]
            if len(same) != 1 or len(other) != 1:
                raise RibbonError(f"vertex {vertex} is not disordered")
            pairs.append((same[0], other[0]))
        # start at the pair holding cycle 1
        k0 = next(i for i, p in enumerate(pairs) if 1 in p)
        order = [(k0 + i) % 3 for i in range(3)]
        return PairList(vertex, tuple(rot[i] for i in order), tuple(pairs[i] for i in order))

    e_in, e_out = passes[1]
    (pm,) = [e for e in edges if e not in (e_in, e_out)]
    first = build((e_in, e_out, pm))
    second = build((pm, e_out, e_in))
    even = [pl for pl in (first, second) if pl.is_even]
    if len(even) != 1:
        raise RibbonError(f"vertex {vertex}: parity rule is ambiguous ({first}, {second})")
    return even[0]


def _passes(ocover: OrientedCycleCover) -> list[dict[int, tuple[int, int]]]:
    g = ocover.graph
    out: list[dict[int, tuple[int, int]]] = [dict() for _ in range(g.n)]
    for i, cyc in enumerate(ocover.cycles):
        for c in cyc:
            des = c.directed_edges(g)
            for t in range(len(des)):
                v = des[t - 1].head
                if i + 1 in out[v]:
                    raise RibbonError(f"cycle {i + 1} passes vertex {v} twice")
                out[v][i + 1] = (des[t - 1].edge, des[t].edge)
    return out


def pairlist_at_vertex(ocover: OrientedCycleCover, v: int) -> PairList:
    if ocover.k != 6 or ocover.m != 4:
        raise RibbonError("pair lists need an o6c4c")
    return local_pairlist(v, _passes(ocover)[v])


# -- rotation systems and faces --------------------------------------------------

@dataclass(frozen=True)
class RotationSystem:
    """Per vertex, the cyclic order of its three incident edges."""

    graph: CubicGraph
    orders: tuple[tuple[int, int, int], ...]
    _succ: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        g = self.graph
        if len(self.orders) != g.n:
            raise ValueError("rotation must list every vertex")
        succ = {}
        for v, order in enumerate(self.orders):
            if sorted(order) != sorted(g.incidence[v]):
                raise ValueError(f"rotation at {v} is not a cyclic order of its edges")
            for k in range(3):
                succ[(v, order[k])] = order[(k + 1) % 3]
        object.__setattr__(self, "_succ", succ)

    def succ(self, v: int, e: int) -> int:
        return self._succ[(v, e)]

    def flipped(self, vertices) -> "RotationSystem":
        vs = set(vertices)
        return RotationSystem(self.graph, tuple(
            (o[0], o[2], o[1]) if v in vs else o for v, o in enumerate(self.orders)))

    @classmethod
    def from_bits(cls, g: CubicGraph, bits: int) -> "RotationSystem":
        """Vertex v uses its stored incidence order, reversed when bit v is set."""
        return cls(g, tuple((i[0], i[2], i[1]) if bits >> v & 1 else tuple(i)
                            for v, i in enumerate(g.incidence)))

    @classmethod
    def from_neighbour_orders(cls, g: CubicGraph, orders: Sequence[Sequence[int]]) -> "RotationSystem":
        return cls(g, tuple(tuple(g.edge_index(v, w) for w in ws) for v, ws in enumerate(orders)))


Face = list[DirectedEdge]


def trace_faces(g: CubicGraph, rotation: RotationSystem) -> list[Face]:
    """Faces of the ribbon graph; together they use every directed edge once.

    Arriving at ``v`` along edge ``h`` the walk leaves along ``succ(v, h)``.
    """
    used = set()
    faces = []
    for e in range(g.m):
        for head in g.edges[e][::-1]:
            if (e, head) in used:
                continue
            face = []
            cur = DirectedEdge(e, head)
            while (cur.edge, cur.head) not in used:
                used.add((cur.edge, cur.head))
                face.append(cur)
                nxt = rotation.succ(cur.head, cur.edge)
                cur = DirectedEdge(nxt, g.other(nxt, cur.head))
            if cur != face[0]:
                raise RuntimeError("face tracing did not close")  # rotation is a permutation
            faces.append(face)
    return faces


def face_vertices(face: Face) -> list[int]:
    """Vertices in walk order, starting from the head of the face's last edge."""
    return [face[i - 1].head for i in range(len(face))]


def is_circuit(face: Face) -> bool:
    vs = face_vertices(face)
    return len(set(vs)) == len(vs)


def face_to_circuit(face: Face) -> Circuit:
    return Circuit(tuple(face_vertices(face)))


def group_faces(g: CubicGraph, faces: Sequence[Face], k: int) -> list[list[int]] | None:
    """Partition circuit faces into ``k`` classes of vertex-disjoint faces, if possible."""
    vsets = [set(face_vertices(f)) for f in faces]
    order = sorted(range(len(faces)), key=lambda i: -len(vsets[i]))
    colour = [-1] * len(faces)
    used: list[set] = [set() for _ in range(k)]

    def rec(t):
        if t == len(order):
            return True
        i = order[t]
        tried_empty = False
        for c in range(k):
            if not used[c]:
                if tried_empty:
                    continue  # empty classes are interchangeable
                tried_empty = True
            if used[c] & vsets[i]:
                continue
            colour[i] = c
            used[c] |= vsets[i]
            if rec(t + 1):
                return True
            used[c] -= vsets[i]
            colour[i] = -1
        return False

    if not rec(0):
        return None
    return [[i for i in range(len(faces)) if colour[i] == c] for c in range(k)]


def faces_to_cover(g: CubicGraph, faces: Sequence[Face], classes: Sequence[Sequence[int]], m: int = 2) -> OrientedCycleCover:
    return OrientedCycleCover(g, tuple(tuple(face_to_circuit(faces[i]) for i in cl) for cl in classes), m)


def find_ocdc_rotations(g: CubicGraph, k: int, limit: int = 0) -> list[tuple[RotationSystem, OrientedCycleCover]]:
    """Exhaustive over all 2^n rotations: those whose faces form an o(k)cdc."""
    out = []
    for bits in range(1 << g.n):
        rot = RotationSystem.from_bits(g, bits)
        faces = trace_faces(g, rot)
        if not all(is_circuit(f) for f in faces):
            continue
        classes = group_faces(g, faces, k)
        if classes is None:
            continue
        oc = faces_to_cover(g, faces, classes)
        if verify_oriented_cover(g, oc, 2).valid:
            out.append((rot, oc))
            if limit and len(out) >= limit:
                break
    return out


# -- triples and their classes ---------------------------------------------------

class Triple(NamedTuple):
    """Local face signature ``(inc -> out) + match`` at a vertex."""

    inc: Pair
    out: Pair
    match: Pair

    @property
    def sequence(self) -> tuple[int, ...]:
        return self.inc + self.out + self.match

    @classmethod
    def parse(cls, text: str) -> "Triple":
        s = text.replace(" ", "").replace("→", "->")
        left, match = s.split("+")
        inc, out = left.strip("()").split("->")
        return cls((int(inc[0]), int(inc[1])), (int(out[0]), int(out[1])), (int(match[0]), int(match[1])))

    def __str__(self):
        return f"({_fmt_pair(self.inc)} -> {_fmt_pair(self.out)}) + {_fmt_pair(self.match)}"


def rule1(t: Triple) -> Triple:
    return Triple(t.out, t.inc, t.match)


def rule2(t: Triple) -> Triple:
    (a, b), (c, d), (e, f) = t
    return Triple((a, b), (f, e), (d, c))


def rule3(t: Triple) -> Triple:
    (a, b), (c, d), (e, f) = t
    return Triple((b, a), (c, e), (d, f))


def all_triples() -> list[Triple]:
    """The 360 triples whose six entries read as an even permutation of 1..6."""
    out = []
    for p in permutations(range(1, 7)):
        if inversions(p) % 2 == 0:
            out.append(Triple((p[0], p[1]), (p[2], p[3]), (p[4], p[5])))
    return out


def _closure(start: Triple, rules) -> set[Triple]:
    seen = {start}
    stack = [start]
    while stack:
        t = stack.pop()
        for r in rules:
            u = r(t)
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen


def canonical_representative(t: Triple) -> Triple:
    """Reshuffle pairs (rules 1 and 2) so 1 sits in the first pair, 2 as far left as possible, and so on."""
    def key(u: Triple):
        where = {x: i for i, p in enumerate(u) for x in p}
        return tuple(where[x] for x in range(1, 7))
    return min(_closure(t, (rule1, rule2)), key=key)


@lru_cache(maxsize=None)
def triple_classes() -> tuple[frozenset, ...]:
    """Equivalence classes of the 360 triples under rules 1-3, ordered by least member."""
    remaining = set(all_triples())
    classes = []
    while remaining:
        cl = _closure(min(remaining), (rule1, rule2, rule3))
        if not cl <= remaining:
            raise RuntimeError("rule closure leaves the even triples")
        remaining -= cl
        classes.append(frozenset(cl))
    classes.sort(key=min)
    return tuple(classes)


@lru_cache(maxsize=None)
def class_index() -> dict[Triple, int]:
    """Triple -> class number 1..6."""
    return {t: i + 1 for i, cl in enumerate(triple_classes()) for t in cl}


def class_representatives() -> list[list[Triple]]:
    """Per class, its sorted canonical representatives (10 each, 60 overall)."""
    return [sorted({canonical_representative(t) for t in cl}) for cl in triple_classes()]


def triple_table_text() -> str:
    """Representatives as plain text, one class per block; stable for diffing."""
    lines = []
    for i, reps in enumerate(class_representatives(), 1):
        lines.append(f"class {i}:")
        lines += [f"  {t}" for t in reps]
    return "\n".join(lines) + "\n"


def normalize_table(columns: Sequence[Sequence[str]]) -> list[list[str]]:
    """Canonical form of a triple table.

    Every entry becomes the canonical representative of its rule 1+2 orbit,
    so tables that pick a different member of an orbit still compare equal;
    columns are then sorted internally and among themselves.
    """
    cols = [sorted(str(canonical_representative(Triple.parse(s))) for s in col) for col in columns]
    return sorted(cols)


def o4cdc_triples() -> list[Triple]:
    """The four local signatures left when a 3-cycle double cover is doubled with reversal."""
    return [Triple.parse(s) for s in ("(14->25)+63", "(41->25)+36", "(14->52)+36", "(41->52)+63")]


# -- the o6cdc construction ------------------------------------------------------

@dataclass
class O6cdcResult:
    rotation: RotationSystem
    pairlists: list[PairList]
    faces: list[Face]
    face_class: list[int]
    cover: OrientedCycleCover

    def to_dict(self) -> dict:
        return {
            "pairlists": [str(p) for p in self.pairlists],
            "faces": [{"class": c, "vertices": face_vertices(f)} for f, c in zip(self.faces, self.face_class)],
        }


def rotation_from_pairlists(g: CubicGraph, pls: Sequence[PairList]) -> RotationSystem:
    return RotationSystem(g, tuple(pl.edges for pl in pls))


def face_triples(face: Face, pls: Sequence[PairList]) -> list[Triple]:
    out = []
    L = len(face)
    for t in range(L):
        h_in, h_out = face[t - 1], face[t]
        v = h_in.head
        pl = pls[v]
        (third,) = [e for e in pl.edges if e not in (h_in.edge, h_out.edge)]
        out.append(Triple(pl.pair_at(h_in.edge), pl.pair_at(h_out.edge), pl.pair_at(third)))
    return out


def derive_o6cdc(ocover: OrientedCycleCover) -> O6cdcResult:
    """The deterministic ribbon graph of an all-disordered o6c4c, verified as an o6cdc."""
    from .certificate import cover_to_dict  # deferred: certificate imports this module

    g = ocover.graph
    if ocover.k != 6 or ocover.m != 4:
        raise RibbonError("derive_o6cdc needs an o6c4c")
    passes = _passes(ocover)
    try:
        pls = [local_pairlist(v, passes[v]) for v in range(g.n)]
    except RibbonError as exc:
        raise RibbonError(f"ordered vertices present: {exc}") from exc
    rot = rotation_from_pairlists(g, pls)
    faces = trace_faces(g, rot)
    idx = class_index()
    face_class = []
    for f in faces:
        cls = {idx[t] for t in face_triples(f, pls)}
        if len(cls) != 1 or not is_circuit(f):
            cert = {"o6c4c": cover_to_dict(ocover), "face": face_vertices(f), "classes": sorted(cls)}
            raise TheoremViolation(f"face {face_vertices(f)} is not a single-class circuit", cert)
        face_class.append(cls.pop())
    classes = [[i for i, c in enumerate(face_class) if c == k] for k in range(1, 7)]
    cover = faces_to_cover(g, faces, classes)
    for k, cl in enumerate(classes, 1):
        seen: set = set()
        for i in cl:
            vs = set(face_vertices(faces[i]))
            if vs & seen:
                cert = {"o6c4c": cover_to_dict(ocover), "class": k}
                raise TheoremViolation(f"class {k} visits a vertex twice", cert)
            seen |= vs
    rep = verify_oriented_cover(g, cover, 2)
    if not rep.valid:
        raise TheoremViolation(f"derived cover invalid: {rep.failures[:3]}", {"o6c4c": cover_to_dict(ocover)})
    return O6cdcResult(rot, pls, faces, face_class, cover)


def observed_triples(ocover: OrientedCycleCover) -> set[Triple]:
    """Every local face signature of the deterministic ribbon graph."""
    g = ocover.graph
    passes = _passes(ocover)
    pls = [local_pairlist(v, passes[v]) for v in range(g.n)]
    rot = rotation_from_pairlists(g, pls)
    out = set()
    for f in trace_faces(g, rot):
        out.update(face_triples(f, pls))
    return out


def random_rotation(g: CubicGraph, rng) -> RotationSystem:
    return RotationSystem.from_bits(g, rng.getrandbits(g.n) if g.n else 0)


__all__ = [
    "PairList", "RotationSystem", "Triple", "O6cdcResult", "RibbonError", "TheoremViolation",
    "local_pairlist", "pairlist_at_vertex", "trace_faces", "is_circuit", "face_vertices",
    "group_faces", "find_ocdc_rotations", "all_triples", "triple_classes", "class_index",
    "canonical_representative", "class_representatives", "triple_table_text", "normalize_table",
    "o4cdc_triples", "derive_o6cdc", "observed_triples", "rule1", "rule2", "rule3",
]
