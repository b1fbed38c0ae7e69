"""Slow, obviously-correct reference computations used to cross-check the kernels.

Nothing here shares code with the search kernels beyond the graph container.
"""
from itertools import combinations


def brute_perfect_matchings(g):
    """Every set of n/2 pairwise disjoint edges, as edge masks."""
    out = []
    for es in combinations(range(g.m), g.n // 2):
        seen = set()
        for e in es:
            seen.update(g.edges[e])
        if len(seen) == g.n:
            out.append(sum(1 << e for e in es))
    return sorted(out)


def brute_6c4c(g):
    """All 6c4c cover multisets, as sorted tuples of edge masks.

    Six even subgraphs with 4|E| = 6n edge slots between them, each of at
    most n edges, must all be 2-factors; so try multisets of complements of
    perfect matchings and keep those covering each edge exactly 4 times.
    """
    factors = [g.full_mask & ~pm for pm in brute_perfect_matchings(g)]
    cols = [[e for e in range(g.m) if f >> e & 1] for f in factors]
    out = []

    def rec(start, chosen, cnt):
        if len(chosen) == 6:
            if all(c == 4 for c in cnt):
                out.append(tuple(sorted(factors[i] for i in chosen)))
            return
        for i in range(start, len(factors)):
            if any(cnt[e] == 4 for e in cols[i]):
                continue
            for e in cols[i]:
                cnt[e] += 1
            rec(i, chosen + [i], cnt)
            for e in cols[i]:
                cnt[e] -= 1

    rec(0, [], [0] * g.m)
    return sorted(set(out))


def ref_graph6(g):
    """graph6 by hand: size byte, then the upper triangle column by column, six bits per char."""
    n = g.n
    assert n < 63
    adj = {frozenset(e) for e in g.edges}
    bits = [int(frozenset((i, j)) in adj) for j in range(n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chunks = [bits[i:i + 6] for i in range(0, len(bits), 6)]
    return chr(63 + n) + "".join(chr(63 + int("".join(map(str, c)), 2)) for c in chunks)


def brute_face_count(g, succ):
    """Orbits of the face permutation on darts, with a plain visited set."""
    darts = [(u, v) for u, v in g.edges] + [(v, u) for u, v in g.edges]
    seen = set()
    faces = 0
    for d in darts:
        if d in seen:
            continue
        faces += 1
        while d not in seen:
            seen.add(d)
            u, v = d
            d = (v, succ(v, u))
    return faces
