import pytest

from ocover.classify import TAXONOMY, classify, corners
from ocover.corpus import all_o6c4c
from ocover.cover import search_oriented
from ocover.graph import gen_named


def oracle(oc):
    """Vertex and edge classes straight from the circuits' vertex sequences."""
    g = oc.graph
    passes = {v: [] for v in range(g.n)}  # (prev, next) per visit
    cover_pairs = {e: [] for e in range(g.m)}
    for cyc in oc.cycles:
        for c in cyc:
            vs = c.vertices
            L = len(vs)
            for i in range(L):
                passes[vs[i]].append((vs[i - 1], vs[(i + 1) % L]))
                u, v = vs[i], vs[(i + 1) % L]
                before, after = vs[i - 1], vs[(i + 2) % L]
                key = (before, after) if u < v else (after, before)
                cover_pairs[g.edge_index(u, v)].append(key)
    vclass = []
    for v in range(g.n):
        by_corner = {}
        for a, b in passes[v]:
            by_corner.setdefault(frozenset((a, b)), []).append((a, b))
        same = all(p[0] == p[1] for p in by_corner.values())
        opposite = all(p[0] == p[1][::-1] for p in by_corner.values())
        assert same or opposite, "mixed vertex"
        vclass.append("ordered" if same else "disordered")
    eclass = ["rich" if len(set(cover_pairs[e])) == 4 else "poor" for e in range(g.m)]
    assert all(len(set(cover_pairs[e])) in (2, 4) for e in range(g.m))
    return vclass, eclass


def test_petersen_classification(petersen_solutions):
    for oc in petersen_solutions.solutions:
        rep = classify(oc)
        assert (rep.n_ordered, rep.n_rich, rep.n_poor) == (3, 15, 0)
        assert not rep.counterexamples


def test_petersen_ordered_vertices_are_independent(petersen_o6c4c):
    rep = classify(petersen_o6c4c)
    g = petersen_o6c4c.graph
    for u in rep.ordered:
        assert not set(g.neighbours(u)) & set(rep.ordered)


@pytest.mark.parametrize("name", ["k4", "k33", "prism", "tietze", "g10_04_6"])
def test_matches_oracle_fixtures(name):
    for oc in all_o6c4c(gen_named(name)).solutions:
        rep = classify(oc)
        assert (rep.vertex_class, rep.edge_class) == oracle(oc)


def test_matches_oracle_corpus(sweep20):
    for s in sweep20.values():
        for oc in s.solutions[:40]:
            rep = classify(oc)
            assert (rep.vertex_class, rep.edge_class) == oracle(oc)


def test_taxonomy_has_no_counterexamples(sweep):
    seen = set()
    for s in sweep.values():
        for oc in s.solutions:
            rep = classify(oc)
            assert not rep.counterexamples, s.graph.name
            seen.update(rep.edge_subtype)
    assert seen <= set(TAXONOMY)


def test_corners_cover_each_vertex_corner_twice(petersen_o6c4c):
    cs = corners(petersen_o6c4c)
    assert len(cs) == 3 * petersen_o6c4c.graph.n
    assert all(len(c.traversals) == 2 for c in cs)


def test_invariant_under_reversal_and_permutation(petersen_solutions, sweep20):
    sols = petersen_solutions.solutions + sweep20["snarks20-3"].solutions
    for oc in sols:
        rep = classify(oc)
        for other in (oc.reversed(), oc.permuted([3, 1, 5, 0, 2, 4])):
            r2 = classify(other)
            assert (r2.vertex_class, r2.edge_class, r2.edge_subtype) == \
                (rep.vertex_class, rep.edge_class, rep.edge_subtype)


def test_blanusa2_poor_edges():
    g = gen_named("blanusa2")
    res = search_oriented(g, accept=lambda oc: classify(oc).n_poor == 3)
    rep = classify(res.solutions[0])
    assert (rep.n_poor, rep.n_rich) == (3, 24)


def test_report_dict(petersen_o6c4c):
    d = classify(petersen_o6c4c).to_dict()
    assert d["counts"]["ordered"] == 3 and d["counts"]["oro"] == 0
    assert len(d["vertices"]) == 10 and len(d["edges"]) == len(d["subtypes"]) == 15
