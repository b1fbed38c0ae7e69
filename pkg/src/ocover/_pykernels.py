"""Pure-Python search kernels.

These are the reference implementations; ``_ckernels.pyx`` mirrors them
one-to-one.  Every search takes a ``callback(solution) -> bool`` (return True
to stop) and a node budget (``0`` = unlimited), and returns ``(status,
nodes)`` with status one of ``"complete"``, ``"stopped"``, ``"budget"``.
"""
from functools import lru_cache

COMPLETE = "complete"
STOPPED = "stopped"
BUDGET = "budget"


class _Stop(Exception):
    pass


class _Budget(Exception):
    pass


def perfect_matchings(n, edges, incidence):
    out = []
    matched = [False] * n

    def rec(mask):
        v = 0
        while v < n and matched[v]:
            v += 1
        if v == n:
            out.append(mask)
            return
        matched[v] = True
        for e in incidence[v]:
            a, b = edges[e]
            w = b if a == v else a
            if not matched[w]:
                matched[w] = True
                rec(mask | (1 << e))
                matched[w] = False
        matched[v] = False

    rec(0)
    return out


def multicover(rows, n_edges, need, max_rows, exact, callback, budget=0):
    """Multisets of ``rows`` (edge masks) covering every edge exactly ``need`` times.

    At each node the most constrained deficient edge is picked and all rows
    still needed on it are chosen at once, so every multiset is produced once.
    """
    rows = list(rows)
    nrows = len(rows)
    by_edge = [[i for i in range(nrows) if rows[i] >> e & 1] for e in range(n_edges)]
    ge = [0] * (need + 1)  # ge[j]: edges covered at least j times
    ge[0] = (1 << n_edges) - 1
    chosen = []
    nodes = [0]

    def add(r):
        for j in range(need, 0, -1):
            ge[j] |= ge[j - 1] & r

    def coverage(e):
        c = 0
        while c < need and ge[c + 1] >> e & 1:
            c += 1
        return c

    def rec():
        nodes[0] += 1
        if budget and nodes[0] > budget:
            raise _Budget
        slots = max_rows - len(chosen)
        sat = ge[need]
        deficient = ge[0] & ~sat
        if not deficient:
            if exact and slots:
                return
            if callback(tuple(sorted(chosen))):
                raise _Stop
            return
        best_e, best_cands, best_d = -1, None, 0
        m = deficient
        while m:
            low = m & -m
            e = low.bit_length() - 1
            m ^= low
            d = need - coverage(e)
            if d > slots:
                return
            cands = [i for i in by_edge[e] if not rows[i] & sat]
            if not cands:
                return
            if best_cands is None or len(cands) < len(best_cands):
                best_e, best_cands, best_d = e, cands, d
        _choose(best_cands, 0, best_d)

    def _choose(cands, start, d):
        if d == 0:
            rec()
            return
        sat = ge[need]
        saved = ge[:]
        for idx in range(start, len(cands)):
            r = rows[cands[idx]]
            if r & sat:
                continue
            add(r)
            chosen.append(cands[idx])
            _choose(cands, idx, d - 1)
            chosen.pop()
            ge[:] = saved

    try:
        rec()
    except _Stop:
        return STOPPED, nodes[0]
    except _Budget:
        return BUDGET, nodes[0]
    return COMPLETE, nodes[0]


def _var_order(n_vars, constraints):
    """Variables ordered so constraints close as early as possible."""
    occurs = [[] for _ in range(n_vars)]
    for ci, terms in enumerate(constraints):
        for v, _ in terms:
            occurs[v].append(ci)
    left = [len({v for v, _ in terms}) for terms in constraints]
    placed = [False] * n_vars
    order = []
    for _ in range(n_vars):
        best, best_key = -1, None
        for v in range(n_vars):
            if placed[v]:
                continue
            key = (min((left[c] for c in occurs[v]), default=99), -len(occurs[v]), v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        placed[best] = True
        order.append(best)
        for c in set(occurs[best]):
            left[c] -= 1
    return order


def sign_search(n_vars, constraints, callback, budget=0):
    """Assignments s in {+1,-1}^n_vars with sum(coef * s[var]) == 0 per constraint."""
    order = _var_order(n_vars, constraints)
    pos = {v: i for i, v in enumerate(order)}
    # per depth: list of (constraint, coef) touched by that variable
    touch = [[] for _ in range(n_vars)]
    remaining = [0] * len(constraints)
    for ci, terms in enumerate(constraints):
        for v, c in terms:
            touch[pos[v]].append((ci, c))
            remaining[ci] += abs(c)
    partial = [0] * len(constraints)
    signs = [0] * n_vars
    nodes = [0]

    def rec(depth):
        nodes[0] += 1
        if budget and nodes[0] > budget:
            raise _Budget
        if depth == n_vars:
            if callback(tuple(signs)):
                raise _Stop
            return
        for s in (1, -1):
            ok = True
            for ci, c in touch[depth]:
                partial[ci] += s * c
                remaining[ci] -= abs(c)
            for ci, _ in touch[depth]:
                if abs(partial[ci]) > remaining[ci]:
                    ok = False
                    break
            if ok:
                signs[order[depth]] = s
                rec(depth + 1)
            for ci, c in touch[depth]:
                partial[ci] -= s * c
                remaining[ci] += abs(c)
        signs[order[depth]] = 0

    try:
        rec(0)
    except _Stop:
        return STOPPED, nodes[0]
    except _Budget:
        return BUDGET, nodes[0]
    return COMPLETE, nodes[0]


def _edge_order(n_vertices, edges):
    """Edge order that completes vertices early (greedy by fewest open edges)."""
    return list(_edge_order_cached(n_vertices, tuple(map(tuple, edges))))


@lru_cache(maxsize=256)
def _edge_order_cached(n_vertices, edges):
    open_count = [0] * n_vertices
    for u, v in edges:
        open_count[u] += 1
        open_count[v] += 1
    placed = [False] * len(edges)
    order = []
    for _ in range(len(edges)):
        best, best_key = -1, None
        for i, (u, v) in enumerate(edges):
            if placed[i]:
                continue
            key = (min(open_count[u], open_count[v]), open_count[u] + open_count[v], i)
            if best_key is None or key < best_key:
                best, best_key = i, key
        placed[best] = True
        order.append(best)
        u, v = edges[best]
        open_count[u] -= 1
        open_count[v] -= 1
    return tuple(order)


def flow_search(n_vertices, edges, options, n_parts, callback, budget=0):
    """Per-edge value vectors satisfying conservation in every part.

    ``edges[i] = (tail, head)`` fixes the reference direction; ``options[i]`` is
    the list of allowed value tuples (one value per part) for edge ``i``.
    The callback receives the chosen option index per edge.
    """
    n_edges = len(edges)
    order = _edge_order(n_vertices, edges)
    maxabs = [0] * n_parts
    for opts in options:
        for vec in opts:
            for p in range(n_parts):
                maxabs[p] = max(maxabs[p], abs(vec[p]))
    open_edges = [0] * n_vertices
    for u, v in edges:
        open_edges[u] += 1
        open_edges[v] += 1
    bal = [[0] * n_parts for _ in range(n_vertices)]
    choice = [-1] * n_edges
    nodes = [0]

    def feasible(x):
        r = open_edges[x]
        b = bal[x]
        for p in range(n_parts):
            if abs(b[p]) > r * maxabs[p]:
                return False
        return True

    def rec(depth):
        nodes[0] += 1
        if budget and nodes[0] > budget:
            raise _Budget
        if depth == n_edges:
            if callback(tuple(choice)):
                raise _Stop
            return
        e = order[depth]
        u, v = edges[e]
        open_edges[u] -= 1
        open_edges[v] -= 1
        bu, bv = bal[u], bal[v]
        for oi, vec in enumerate(options[e]):
            for p in range(n_parts):
                bu[p] += vec[p]
                bv[p] -= vec[p]
            if feasible(u) and feasible(v):
                choice[e] = oi
                rec(depth + 1)
            for p in range(n_parts):
                bu[p] -= vec[p]
                bv[p] += vec[p]
        choice[e] = -1
        open_edges[u] += 1
        open_edges[v] += 1

    try:
        rec(0)
    except _Stop:
        return STOPPED, nodes[0]
    except _Budget:
        return BUDGET, nodes[0]
    return COMPLETE, nodes[0]
