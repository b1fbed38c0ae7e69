# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; behaviour matches ``_pykernels`` exactly.

Edge masks are 64-bit, so graphs are limited to 64 edges here; the
dispatcher in ``kernels.py`` falls back to Python beyond that.
"""
from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport uint64_t, int64_t

from ._pykernels import COMPLETE, STOPPED, BUDGET, _var_order, _edge_order

DEF CONT = 0
DEF STOP = 1
DEF OVER = 2

MAX_EDGES = 64


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


# -- perfect matchings --------------------------------------------------------

cdef class _PM:
    cdef int n
    cdef int *inc
    cdef int *other
    cdef char *matched
    cdef list out

    cdef void rec(self, uint64_t mask):
        cdef int v = 0, j, e, w
        while v < self.n and self.matched[v]:
            v += 1
        if v == self.n:
            self.out.append(mask)
            return
        self.matched[v] = 1
        for j in range(3):
            e = self.inc[3 * v + j]
            w = self.other[3 * v + j]
            if not self.matched[w]:
                self.matched[w] = 1
                self.rec(mask | ((<uint64_t>1) << e))
                self.matched[w] = 0
        self.matched[v] = 0


def perfect_matchings(int n, edges, incidence):
    cdef _PM st = _PM()
    cdef int v, j, e
    st.n = n
    st.inc = <int *>malloc(3 * n * sizeof(int))
    st.other = <int *>malloc(3 * n * sizeof(int))
    st.matched = <char *>calloc(n, 1)
    st.out = []
    try:
        for v in range(n):
            for j in range(3):
                e = incidence[v][j]
                st.inc[3 * v + j] = e
                a, b = edges[e]
                st.other[3 * v + j] = b if a == v else a
        st.rec(0)
    finally:
        free(st.inc)
        free(st.other)
        free(st.matched)
    return [int(x) for x in st.out]


# -- multiset exact multicover ------------------------------------------------

cdef class _MC:
    cdef int nrows, n_edges, need, max_rows, exact
    cdef uint64_t *rows
    cdef int *edge_start
    cdef int *edge_rows
    cdef uint64_t *ge
    cdef uint64_t *saved
    cdef int *chosen
    cdef int nchosen
    cdef int *cands
    cdef long long nodes, budget
    cdef object callback

    cdef inline int coverage(self, int e):
        cdef int c = 0
        while c < self.need and (self.ge[c + 1] >> e) & 1:
            c += 1
        return c

    cdef inline void add(self, uint64_t r):
        cdef int j
        for j in range(self.need, 0, -1):
            self.ge[j] |= self.ge[j - 1] & r

    cdef int rec(self):
        cdef int slots, e, d, k, i, best_d = 0, best_n = -1, ncand
        cdef uint64_t sat, deficient, m
        cdef int *buf
        cdef int *best_buf
        cdef int *tmp
        self.nodes += 1
        if self.budget and self.nodes > self.budget:
            return OVER
        slots = self.max_rows - self.nchosen
        sat = self.ge[self.need]
        deficient = self.ge[0] & ~sat
        if deficient == 0:
            if self.exact and slots:
                return CONT
            sol = sorted([self.chosen[i] for i in range(self.nchosen)])
            if self.callback(tuple(sol)):
                return STOP
            return CONT
        # two scratch halves per level: the best list so far and a work list
        best_buf = self.cands + (2 * self.nchosen) * self.nrows
        buf = best_buf + self.nrows
        m = deficient
        while m:
            e = __builtin_ctzll(m)
            m &= m - 1
            d = self.need - self.coverage(e)
            if d > slots:
                return CONT
            ncand = 0
            for k in range(self.edge_start[e], self.edge_start[e + 1]):
                i = self.edge_rows[k]
                if not (self.rows[i] & sat):
                    buf[ncand] = i
                    ncand += 1
            if ncand == 0:
                return CONT
            if best_n < 0 or ncand < best_n:
                best_n = ncand
                best_d = d
                tmp = best_buf
                best_buf = buf
                buf = tmp
        return self.choose(best_buf, best_n, 0, best_d)

    cdef int choose(self, int *cands, int ncand, int start, int d):
        cdef int idx, rc, j
        cdef uint64_t sat, r
        cdef uint64_t *saved
        if d == 0:
            return self.rec()
        sat = self.ge[self.need]
        saved = self.saved + (self.nchosen) * (self.need + 1)
        for j in range(self.need + 1):
            saved[j] = self.ge[j]
        for idx in range(start, ncand):
            r = self.rows[cands[idx]]
            if r & sat:
                continue
            self.add(r)
            self.chosen[self.nchosen] = cands[idx]
            self.nchosen += 1
            rc = self.choose(cands, ncand, idx, d - 1)
            self.nchosen -= 1
            for j in range(self.need + 1):
                self.ge[j] = saved[j]
            if rc != CONT:
                return rc
        return CONT


def multicover(rows, int n_edges, int need, int max_rows, bint exact, callback, long long budget=0):
    if n_edges > MAX_EDGES:
        raise ValueError("compiled kernel supports at most 64 edges")
    cdef _MC st = _MC()
    cdef int nrows = len(rows), i, e, k
    st.nrows = nrows
    st.n_edges = n_edges
    st.need = need
    st.max_rows = max_rows
    st.exact = exact
    st.callback = callback
    st.budget = budget
    st.nodes = 0
    st.nchosen = 0
    st.rows = <uint64_t *>malloc((nrows + 1) * sizeof(uint64_t))
    st.edge_start = <int *>malloc((n_edges + 1) * sizeof(int))
    st.edge_rows = <int *>malloc((nrows * n_edges + 1) * sizeof(int))
    st.ge = <uint64_t *>calloc(need + 1, sizeof(uint64_t))
    st.saved = <uint64_t *>calloc((max_rows + 1) * (need + 1), sizeof(uint64_t))
    st.chosen = <int *>malloc((max_rows + 1) * sizeof(int))
    st.cands = <int *>malloc((2 * (max_rows + 1) * nrows + 1) * sizeof(int))
    try:
        for i in range(nrows):
            st.rows[i] = <uint64_t>rows[i]
        k = 0
        for e in range(n_edges):
            st.edge_start[e] = k
            for i in range(nrows):
                if (st.rows[i] >> e) & 1:
                    st.edge_rows[k] = i
                    k += 1
        st.edge_start[n_edges] = k
        st.ge[0] = ((<uint64_t>1) << n_edges) - 1 if n_edges < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
        rc = st.rec()
    finally:
        free(st.rows); free(st.edge_start); free(st.edge_rows); free(st.ge)
        free(st.saved); free(st.chosen); free(st.cands)
    if rc == STOP:
        return STOPPED, st.nodes
    if rc == OVER:
        return BUDGET, st.nodes
    return COMPLETE, st.nodes


# -- sign assignments under balance constraints -------------------------------

cdef class _SS:
    cdef int n_vars
    cdef int *order
    cdef int *touch_start
    cdef int *touch_con
    cdef int *touch_coef
    cdef int *partial
    cdef int *remaining
    cdef int *signs
    cdef long long nodes, budget
    cdef object callback

    cdef int rec(self, int depth):
        cdef int s, k, ci, c, ok, rc
        self.nodes += 1
        if self.budget and self.nodes > self.budget:
            return OVER
        if depth == self.n_vars:
            if self.callback(tuple([self.signs[i] for i in range(self.n_vars)])):
                return STOP
            return CONT
        for s in (1, -1):
            ok = 1
            for k in range(self.touch_start[depth], self.touch_start[depth + 1]):
                ci = self.touch_con[k]
                c = self.touch_coef[k]
                self.partial[ci] += s * c
                self.remaining[ci] -= c if c > 0 else -c
            for k in range(self.touch_start[depth], self.touch_start[depth + 1]):
                ci = self.touch_con[k]
                if abs(self.partial[ci]) > self.remaining[ci]:
                    ok = 0
                    break
            rc = CONT
            if ok:
                self.signs[self.order[depth]] = s
                rc = self.rec(depth + 1)
            for k in range(self.touch_start[depth], self.touch_start[depth + 1]):
                ci = self.touch_con[k]
                c = self.touch_coef[k]
                self.partial[ci] -= s * c
                self.remaining[ci] += c if c > 0 else -c
            if rc != CONT:
                return rc
        self.signs[self.order[depth]] = 0
        return CONT


def sign_search(int n_vars, constraints, callback, long long budget=0):
    order = _var_order(n_vars, constraints)
    pos = {v: i for i, v in enumerate(order)}
    touch = [[] for _ in range(n_vars)]
    for ci, terms in enumerate(constraints):
        for v, c in terms:
            touch[pos[v]].append((ci, c))
    cdef _SS st = _SS()
    cdef int nt = sum(len(t) for t in touch), k = 0, d, nc = len(constraints)
    st.n_vars = n_vars
    st.callback = callback
    st.budget = budget
    st.nodes = 0
    st.order = <int *>malloc((n_vars + 1) * sizeof(int))
    st.touch_start = <int *>malloc((n_vars + 2) * sizeof(int))
    st.touch_con = <int *>malloc((nt + 1) * sizeof(int))
    st.touch_coef = <int *>malloc((nt + 1) * sizeof(int))
    st.partial = <int *>calloc(nc + 1, sizeof(int))
    st.remaining = <int *>calloc(nc + 1, sizeof(int))
    st.signs = <int *>calloc(n_vars + 1, sizeof(int))
    try:
        for d in range(n_vars):
            st.order[d] = order[d]
            st.touch_start[d] = k
            for ci, c in touch[d]:
                st.touch_con[k] = ci
                st.touch_coef[k] = c
                st.remaining[ci] += abs(c)
                k += 1
        st.touch_start[n_vars] = k
        rc = st.rec(0)
    finally:
        free(st.order); free(st.touch_start); free(st.touch_con); free(st.touch_coef)
        free(st.partial); free(st.remaining); free(st.signs)
    if rc == STOP:
        return STOPPED, st.nodes
    if rc == OVER:
        return BUDGET, st.nodes
    return COMPLETE, st.nodes


# -- multi-part integer flows -------------------------------------------------

cdef class _FS:
    cdef int n_edges, n_parts
    cdef int *order
    cdef int *tail
    cdef int *head
    cdef int *opt_start
    cdef int *opt_vals
    cdef int *maxabs
    cdef int *open_edges
    cdef int *bal
    cdef int *choice
    cdef long long nodes, budget
    cdef object callback

    cdef inline bint feasible(self, int x):
        cdef int p, r = self.open_edges[x], b
        for p in range(self.n_parts):
            b = self.bal[x * self.n_parts + p]
            if b < 0:
                b = -b
            if b > r * self.maxabs[p]:
                return False
        return True

    cdef int rec(self, int depth):
        cdef int e, u, v, oi, p, rc, val
        cdef int *vec
        self.nodes += 1
        if self.budget and self.nodes > self.budget:
            return OVER
        if depth == self.n_edges:
            if self.callback(tuple([self.choice[i] for i in range(self.n_edges)])):
                return STOP
            return CONT
        e = self.order[depth]
        u = self.tail[e]
        v = self.head[e]
        self.open_edges[u] -= 1
        self.open_edges[v] -= 1
        rc = CONT
        for oi in range(self.opt_start[e + 1] - self.opt_start[e]):
            vec = self.opt_vals + (self.opt_start[e] + oi) * self.n_parts
            for p in range(self.n_parts):
                self.bal[u * self.n_parts + p] += vec[p]
                self.bal[v * self.n_parts + p] -= vec[p]
            if self.feasible(u) and self.feasible(v):
                self.choice[e] = oi
                rc = self.rec(depth + 1)
            for p in range(self.n_parts):
                self.bal[u * self.n_parts + p] -= vec[p]
                self.bal[v * self.n_parts + p] += vec[p]
            if rc != CONT:
                break
        self.choice[e] = -1
        self.open_edges[u] += 1
        self.open_edges[v] += 1
        return rc


def flow_search(int n_vertices, edges, options, int n_parts, callback, long long budget=0):
    cdef int n_edges = len(edges), e, k = 0, p, i
    order = _edge_order(n_vertices, edges)
    cdef int nopt = sum(len(o) for o in options)
    cdef _FS st = _FS()
    st.n_edges = n_edges
    st.n_parts = n_parts
    st.callback = callback
    st.budget = budget
    st.nodes = 0
    st.order = <int *>malloc((n_edges + 1) * sizeof(int))
    st.tail = <int *>malloc((n_edges + 1) * sizeof(int))
    st.head = <int *>malloc((n_edges + 1) * sizeof(int))
    st.opt_start = <int *>malloc((n_edges + 2) * sizeof(int))
    st.opt_vals = <int *>malloc((nopt * n_parts + 1) * sizeof(int))
    st.maxabs = <int *>calloc(n_parts + 1, sizeof(int))
    st.open_edges = <int *>calloc(n_vertices + 1, sizeof(int))
    st.bal = <int *>calloc(n_vertices * n_parts + 1, sizeof(int))
    st.choice = <int *>malloc((n_edges + 1) * sizeof(int))
    try:
        for i in range(n_edges):
            st.order[i] = order[i]
            st.tail[i] = edges[i][0]
            st.head[i] = edges[i][1]
            st.open_edges[st.tail[i]] += 1
            st.open_edges[st.head[i]] += 1
            st.choice[i] = -1
            st.opt_start[i] = k
            for vec in options[i]:
                for p in range(n_parts):
                    st.opt_vals[k * n_parts + p] = vec[p]
                    if abs(vec[p]) > st.maxabs[p]:
                        st.maxabs[p] = abs(vec[p])
                k += 1
        st.opt_start[n_edges] = k
        rc = st.rec(0)
    finally:
        free(st.order); free(st.tail); free(st.head); free(st.opt_start); free(st.opt_vals)
        free(st.maxabs); free(st.open_edges); free(st.bal); free(st.choice)
    if rc == STOP:
        return STOPPED, st.nodes
    if rc == OVER:
        return BUDGET, st.nodes
    return COMPLETE, st.nodes
