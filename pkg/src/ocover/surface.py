"""Orientable surfaces glued from the circuits of an oriented cover.

Both constructions are instances of one polygon complex: every circuit is a
polygon, each polygon side carries a gluing key and a direction token, and
two sides sharing a key are glued exactly when their tokens are reversed.

* ``glue_surface``: sides are the corners (consecutive edge pairs) a circuit
  passes; polygon vertices are edge coverages.
* ``split_surfaces``: within each half of a split, sides are the graph edges.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Sequence

from .classify import ClassificationReport, classify
from .cover import OrientedCycleCover, Split


class SurfaceError(RuntimeError):
    pass


class _UF:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, x):
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.p[max(a, b)] = min(a, b)


@dataclass
class ComponentStats:
    V: int
    E: int
    F: int
    boundaries: int
    chi: int
    genus: int


@dataclass
class SurfaceStats:
    components: list[ComponentStats]

    @property
    def V(self):
        return sum(c.V for c in self.components)

    @property
    def E(self):
        return sum(c.E for c in self.components)

    @property
    def F(self):
        return sum(c.F for c in self.components)

    @property
    def boundaries(self):
        return sum(c.boundaries for c in self.components)

    @property
    def chi(self):
        return sum(c.chi for c in self.components)

    def to_dict(self):
        return [vars(c) for c in self.components]


@dataclass
class SurfaceGraph:
    """A polygon complex.

    ``faces[f]`` lists the sides of polygon ``f`` in order; side ``(f, i)`` runs
    from polygon corner ``(f, i)`` to ``(f, i + 1)``.  ``labels[f][i]`` is the
    (key, token) pair the side was built from; ``corner_labels[f][i]`` names
    the polygon corner (e.g. the edge coverage it stands for).
    """

    labels: list[list[tuple[Hashable, tuple]]]
    corner_labels: list[list[Hashable]]
    face_names: list[Hashable]
    partner: dict = field(default_factory=dict)
    vertex_of: dict = field(default_factory=dict)  # polygon corner -> vertex id
    vertex_names: list = field(default_factory=list)
    component_of_face: list[int] = field(default_factory=list)
    boundaries: list[list[tuple[int, int]]] = field(default_factory=list)

    @property
    def n_faces(self):
        return len(self.labels)

    def unglued_sides(self) -> list[tuple[int, int]]:
        return [(f, i) for f, sides in enumerate(self.labels) for i in range(len(sides))
                if (f, i) not in self.partner]

    def glued_pairs(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        return sorted((a, b) for a, b in self.partner.items() if a < b)

    def boundary_labels(self, b: list[tuple[int, int]]) -> list[tuple]:
        return [self.labels[f][i] for f, i in b]

    def stats(self) -> SurfaceStats:
        return surface_stats(self)


def _build(faces: Sequence[Sequence[tuple[Hashable, tuple]]],
           corner_labels: Sequence[Sequence[Hashable]],
           face_names: Sequence[Hashable]) -> SurfaceGraph:
    s = SurfaceGraph([list(f) for f in faces], [list(c) for c in corner_labels], list(face_names))
    by_key: dict = {}
    for f, sides in enumerate(s.labels):
        for i, (key, _) in enumerate(sides):
            by_key.setdefault(key, []).append((f, i))
    for key, sides in by_key.items():
        if len(sides) != 2:
            raise SurfaceError(f"gluing key {key!r} appears {len(sides)} times, expected 2")
        (f1, i1), (f2, i2) = sides
        t1 = s.labels[f1][i1][1]
        t2 = s.labels[f2][i2][1]
        if tuple(reversed(t1)) == tuple(t2):
            s.partner[(f1, i1)] = (f2, i2)
            s.partner[(f2, i2)] = (f1, i1)
        elif tuple(t1) != tuple(t2):
            raise SurfaceError(f"sides with key {key!r} have unrelated tokens {t1}, {t2}")

    # polygon corners -> surface vertices
    corner_ids = {}
    for f, sides in enumerate(s.labels):
        for i in range(len(sides)):
            corner_ids[(f, i)] = len(corner_ids)
    uf = _UF(len(corner_ids))
    for (f, i), (g, j) in s.partner.items():
        Lf, Lg = len(s.labels[f]), len(s.labels[g])
        # side (f,i): p_i -> p_{i+1}; glued reversed to (g,j): q_j -> q_{j+1}
        uf.union(corner_ids[(f, i)], corner_ids[(g, (j + 1) % Lg)])
        uf.union(corner_ids[(f, (i + 1) % Lf)], corner_ids[(g, j)])
    roots: dict = {}
    for c, cid in corner_ids.items():
        r = uf.find(cid)
        if r not in roots:
            roots[r] = len(roots)
            s.vertex_names.append(s.corner_labels[c[0]][c[1]])
        s.vertex_of[c] = roots[r]

    fuf = _UF(s.n_faces)
    for (f, _), (g, _) in s.partner.items():
        fuf.union(f, g)
    comp_roots: dict = {}
    s.component_of_face = []
    for f in range(s.n_faces):
        r = fuf.find(f)
        comp_roots.setdefault(r, len(comp_roots))
        s.component_of_face.append(comp_roots[r])
    s.boundaries = trace_boundaries(s)
    return s


def trace_boundaries(s: SurfaceGraph) -> list[list[tuple[int, int]]]:
    """Closed boundary walks as lists of unglued sides.

    From an unglued side, step to the next side of its polygon; while that
    side is glued, cross to the partner polygon and take the side after the
    partner.  The first unglued side reached continues the boundary.
    Walks start at their least side.
    """
    unglued = set(s.unglued_sides())
    seen = set()
    out = []
    for start in sorted(unglued):
        if start in seen:
            continue
        walk = []
        cur = start
        guard = 0
        while True:
            walk.append(cur)
            seen.add(cur)
            f, i = cur
            nxt = (f, (i + 1) % len(s.labels[f]))
            while nxt in s.partner:
                g, j = s.partner[nxt]
                nxt = (g, (j + 1) % len(s.labels[g]))
                guard += 1
                if guard > 10 * (len(s.partner) + len(unglued) + 1):
                    raise SurfaceError("boundary walk does not close")
            if nxt == start:
                break
            if nxt in seen:
                raise SurfaceError(f"boundary walk from {start} re-entered {nxt}")
            cur = nxt
        out.append(walk)
    if sum(len(w) for w in out) != len(unglued):
        raise SurfaceError("boundaries do not partition the unglued sides")
    return out


def surface_stats(s: SurfaceGraph) -> SurfaceStats:
    ncomp = max(s.component_of_face, default=-1) + 1
    V = [set() for _ in range(ncomp)]
    E = [0] * ncomp
    F = [0] * ncomp
    B = [0] * ncomp
    for f, sides in enumerate(s.labels):
        c = s.component_of_face[f]
        F[c] += 1
        for i in range(len(sides)):
            V[c].add(s.vertex_of[(f, i)])
            if (f, i) not in s.partner or (f, i) < s.partner[(f, i)]:
                E[c] += 1
    for b in s.boundaries:
        B[s.component_of_face[b[0][0]]] += 1
    comps = []
    for c in range(ncomp):
        e = E[c]
        chi = len(V[c]) - e + F[c]
        twice_g = 2 - chi - B[c]
        if twice_g < 0 or twice_g % 2:
            raise SurfaceError(f"component {c}: chi={chi}, boundaries={B[c]} give non-integer genus")
        comps.append(ComponentStats(len(V[c]), e, F[c], B[c], chi, twice_g // 2))
    return SurfaceStats(comps)


# -- the o6c4c surface ---------------------------------------------------------

def glue_surface(ocover: OrientedCycleCover, report: ClassificationReport | None = None) -> SurfaceGraph:
    """Glue circuits along corners covered twice in opposite directions.

    Corners at ordered vertices are covered twice in the same direction and
    stay unglued, so they end up on the boundary.
    """
    g = ocover.graph
    rep = classify(ocover)
    if report is not None and (report.vertex_class != rep.vertex_class or report.edge_class != rep.edge_class):
        raise SurfaceError("classification report does not match the cover")
    faces, corner_labels, names = [], [], []
    for i, cyc in enumerate(ocover.cycles):
        for j, c in enumerate(cyc):
            des = c.directed_edges(g)
            L = len(des)
            sides, cl = [], []
            for t in range(L):
                e_in, e_out = des[t - 1].edge, des[t].edge
                v = des[t - 1].head
                sides.append(((v, frozenset((e_in, e_out))), (e_in, e_out)))
                # polygon corner t is this circuit's coverage of the incoming edge
                cl.append((e_in, i, j))
            faces.append(sides)
            corner_labels.append(cl)
            names.append((i, j))
    return _build(faces, corner_labels, names)


def surface_vertex_edges(s: SurfaceGraph) -> list[int]:
    """The graph edge under each surface vertex (corner labels are coverages)."""
    return [name[0] for name in s.vertex_names]


# -- the pair of surfaces from a split -----------------------------------------

def split_surfaces(ocover: OrientedCycleCover, split: Split) -> tuple[SurfaceGraph, SurfaceGraph]:
    g = ocover.graph
    out = []
    for half in split.halves:
        faces, corner_labels = [], []
        for cid in half:
            des = ocover.circuit(cid).directed_edges(g)
            L = len(des)
            sides, cl = [], []
            for t in range(L):
                tail = des[t - 1].head
                sides.append((des[t].edge, (tail, des[t].head)))
                cl.append(tail)
            faces.append(sides)
            corner_labels.append(cl)
        try:
            out.append(_build(faces, corner_labels, list(half)))
        except SurfaceError as exc:
            raise SurfaceError(f"invalid split: {exc}") from exc
    return out[0], out[1]


def boundary_edges(s: SurfaceGraph) -> set[int]:
    """Graph edges on the boundary of a split surface."""
    return {s.labels[f][i][0] for b in s.boundaries for f, i in b}


def to_dot(s: SurfaceGraph, name: str = "surface") -> str:
    """The surface's 1-skeleton: one node per surface vertex, one edge per glued or boundary side."""
    lines = [f"graph {name} {{"]
    for v, label in enumerate(s.vertex_names):
        lines.append(f'  s{v} [label="{label}"];')
    done = set()
    for f, sides in enumerate(s.labels):
        L = len(sides)
        for i in range(L):
            side = (f, i)
            if side in done:
                continue
            done.add(side)
            style = ""
            if side in s.partner:
                done.add(s.partner[side])
            else:
                style = " [style=dashed]"
            a, b = s.vertex_of[(f, i)], s.vertex_of[(f, (i + 1) % L)]
            lines.append(f"  s{a} -- s{b}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
