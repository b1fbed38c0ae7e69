"""Oriented 6-cycle 4-covers of flower snarks with every b_i ordered.

J_m is m copies of one column (a_i, b_i, c_i, d_i) joined through three cut
edges a_i a_{i+1}, c_i d_{i+1}, d_i c_{i+1}.  Every condition of an o6c4c is
local, so a cover of J_m is a closed walk of length m in a transfer graph
whose states describe how the six cycles cross one cut.  A J3 solution is a
closed 3-walk; a closed 2-walk through one of its states is the two-column
gadget that turns a J_m solution into a J_{m+2} solution, leaving the
original columns untouched.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .classify import ORDERED, classify
from .cover import OrientedCycleCover, verify_oriented_cover
from .graph import Circuit, CubicGraph, flower_vertex, gen_flower_snark

K = 6
CUT = ("A", "C", "D")  # a_i a_{i+1}, c_i d_{i+1}, d_i c_{i+1}


class FlowerConstructionError(RuntimeError):
    """The constructed cover failed verification; never returned silently."""


def _option(o: int) -> tuple[int, int, int]:
    """Per-cycle crossing option -> direction per cut edge (+1 right, -1 left, 0 unused)."""
    omitted, which = divmod(o, 2)
    used = [e for e in range(3) if e != omitted]
    out = [0, 0, 0]
    out[used[which]] = 1
    out[used[1 - which]] = -1
    return tuple(out)  # type: ignore[return-value]


OPTIONS = [_option(o) for o in range(6)]


@lru_cache(maxsize=None)
def cut_states() -> tuple[tuple[int, ...], ...]:
    """Crossing options for all 6 cycles with every cut edge used 2+2."""
    states = []
    for st in product(range(6), repeat=K):
        ok = True
        for e in range(3):
            vals = [OPTIONS[o][e] for o in st]
            if vals.count(1) != 2 or vals.count(-1) != 2:
                ok = False
                break
        if ok:
            states.append(st)
    return tuple(states)


def _column(o_in: int, o_out: int):
    """Directed internal edges of one cycle inside a column, or None if inconsistent.

    Maps ab, bc, bd to +1 (traversed towards b), -1 (away from b) or 0.
    """
    cin = OPTIONS[o_in]   # A_in at a, C_in at d, D_in at c ; +1 = entering column
    cout = OPTIONS[o_out]  # A_out at a, C_out at c, D_out at d ; +1 = leaving column
    # net inflow at each outer vertex from cut edges: +1 entering, -1 leaving
    flow_a = cin[0] - cout[0]
    flow_c = cin[2] - cout[1]
    flow_d = cin[1] - cout[2]
    res = {}
    for name, f, used_in, used_out in (
        ("ab", flow_a, cin[0], cout[0]),
        ("bc", flow_c, cin[2], cout[1]),
        ("bd", flow_d, cin[1], cout[2]),
    ):
        deg = (used_in != 0) + (used_out != 0)
        if deg == 2:
            if f != 0:  # both cut edges enter (or leave) the vertex
                return None
            res[name] = 0
        elif deg == 1:
            # the internal edge must carry the flow onward: f=+1 means the
            # cycle arrived at the outer vertex and leaves toward b
            res[name] = f
        else:
            res[name] = 0
    # b needs one edge in and one edge out
    used = [x for x in res.values() if x]
    if len(used) not in (0, 2) or sum(used) != 0:
        return None
    return res


@lru_cache(maxsize=None)
def _column_table():
    return {(i, o): _column(i, o) for i in range(6) for o in range(6)}


def transitions(state: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Out-states reachable through one column with b ordered and all edges 2+2."""
    table = _column_table()
    per_cycle = [[o for o in range(6) if table[(state[t], o)] is not None] for t in range(K)]
    out = []
    chosen = [0] * K

    def rec(t, cov):
        if t == K:
            if _column_ok(state, chosen):
                out.append(tuple(chosen))
            return
        for o in per_cycle[t]:
            cut = OPTIONS[o]
            new = list(cov)
            for e in range(3):
                if cut[e] == 1:
                    new[e] += 1
                elif cut[e] == -1:
                    new[3 + e] += 1
            if max(new) > 2:
                continue
            chosen[t] = o
            rec(t + 1, new)

    rec(0, [0] * 6)
    return out


def _column_ok(s_in, s_out) -> bool:
    table = _column_table()
    cols = [table[(s_in[t], s_out[t])] for t in range(K)]
    for name in ("ab", "bc", "bd"):
        vals = [c[name] for c in cols]
        if vals.count(1) != 2 or vals.count(-1) != 2:
            return False
    # b ordered: each corner at b used twice in the same direction
    corners = {}
    for c in cols:
        into = [n for n in ("ab", "bc", "bd") if c[n] == 1]
        outof = [n for n in ("ab", "bc", "bd") if c[n] == -1]
        if into:
            corners.setdefault(frozenset((into[0], outof[0])), []).append((into[0], outof[0]))
    return all(len(v) == 2 and v[0] == v[1] for v in corners.values())


@dataclass(frozen=True)
class FlowerWalk:
    """Cut states around J_m: column i goes from states[i] to states[i + 1]."""

    states: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.states)


@lru_cache(maxsize=None)
def base_and_gadget() -> tuple[FlowerWalk, tuple[tuple[int, ...], tuple[int, ...]]]:
    """A closed 3-walk (J3) and a closed 2-walk sharing its first state (gadget)."""
    succ_cache: dict = {}

    def succ(s):
        if s not in succ_cache:
            succ_cache[s] = transitions(s)
        return succ_cache[s]

    for s in cut_states():
        nxt = succ(s)
        if not nxt:
            continue
        two = [t for t in nxt if s in succ(t)]
        if not two:
            continue
        for x in nxt:
            for y in succ(x):
                if s in succ(y):
                    return FlowerWalk((s, x, y)), (s, two[0])
    raise FlowerConstructionError("no J3 solution with a two-column gadget")


def flower_walk(m: int) -> FlowerWalk:
    if m < 3 or m % 2 == 0:
        raise ValueError(f"flower snark needs odd m >= 3, got {m}")
    base, (s, t) = base_and_gadget()
    # gadget columns first, so the base columns keep the highest indices
    states = (s, t) * ((m - 3) // 2) + base.states
    return FlowerWalk(states)


def walk_to_cover(g: CubicGraph, walk: FlowerWalk) -> OrientedCycleCover:
    m = walk.m
    table = _column_table()
    arcs = [[] for _ in range(K)]  # directed (tail, head) per cycle
    for i in range(m):
        s_in, s_out = walk.states[i], walk.states[(i + 1) % m]
        a, b, c, d = (flower_vertex(m, x, i) for x in "abcd")
        a2, c2, d2 = flower_vertex(m, "a", i + 1), flower_vertex(m, "c", i + 1), flower_vertex(m, "d", i + 1)
        for t in range(K):
            cut = OPTIONS[s_out[t]]
            for e, (u, v) in enumerate(((a, a2), (c, d2), (d, c2))):
                if cut[e] == 1:
                    arcs[t].append((u, v))
                elif cut[e] == -1:
                    arcs[t].append((v, u))
            col = table[(s_in[t], s_out[t])]
            for name, outer in (("ab", a), ("bc", c), ("bd", d)):
                if col[name] == 1:
                    arcs[t].append((outer, b))
                elif col[name] == -1:
                    arcs[t].append((b, outer))
    cycles = []
    for t in range(K):
        nxt = {}
        for u, v in arcs[t]:
            if u in nxt:
                raise FlowerConstructionError(f"cycle {t} leaves vertex {u} twice")
            nxt[u] = v
        circs = []
        seen = set()
        for s in sorted(nxt):
            if s in seen:
                continue
            walk_v = [s]
            seen.add(s)
            cur = nxt[s]
            while cur != s:
                walk_v.append(cur)
                seen.add(cur)
                cur = nxt[cur]
            circs.append(Circuit(tuple(walk_v)))
        cycles.append(tuple(circs))
    return OrientedCycleCover(g, tuple(cycles), 4)


def flower_o6c4c(m: int) -> OrientedCycleCover:
    """An o6c4c of J_m with all b_i ordered, verified before it is returned."""
    g = gen_flower_snark(m)
    oc = walk_to_cover(g, flower_walk(m))
    rep = verify_oriented_cover(g, oc)
    if not rep.valid:
        raise FlowerConstructionError(f"J{m} cover failed verification: {rep.failures[:3]}")
    classes = classify(oc).vertex_class
    bad = [i for i in range(m) if classes[flower_vertex(m, "b", i)] != ORDERED]
    if bad:
        raise FlowerConstructionError(f"J{m}: b vertices {bad} are not ordered")
    return oc
