import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from ocover.graph import (NAMED_GRAPHS, Circuit, CubicGraph, GraphError, circuits, complement_2factor,
                          edges_of, enumerate_perfect_matchings, flower_vertex, gen_flower_snark, gen_named,
                          girth, graph6_decode, graph6_encode, is_bridgeless, is_even_subgraph,
                          is_isomorphic, is_perfect_matching, mask_of, read_graph6_file,
                          three_edge_colouring)

from .oracles import brute_perfect_matchings, ref_graph6


def random_cubic(n, seed):
    G = nx.random_regular_graph(3, n, seed=seed)
    return CubicGraph.from_edges(G.edges(), n=n)


cubic_graphs = st.builds(random_cubic, st.sampled_from([4, 6, 8, 10, 12]), st.integers(0, 2**32 - 1))


def test_from_edges_sorts_into_graph6_order():
    g = CubicGraph.from_edges([(3, 0), (1, 0), (2, 0), (1, 2), (2, 3), (3, 1)])
    assert g.edges == ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3))
    assert g.edge_index(3, 1) == 4
    assert g.other(4, 3) == 1


@pytest.mark.parametrize("edges, msg", [
    ([(0, 1), (0, 2), (1, 2)], "degree"),
    ([(0, 0)], "loop"),
    ([(0, 1), (1, 0)], "parallel"),
])
def test_rejects_non_cubic(edges, msg):
    with pytest.raises(GraphError, match=msg):
        CubicGraph(3, tuple(edges))


@pytest.mark.parametrize("name, n, pms, colourable", [
    ("k4", 4, 3, True), ("k33", 6, 6, True), ("prism", 6, 4, True), ("petersen", 10, 6, False),
    ("tietze", 12, None, False), ("blanusa1", 18, None, False), ("blanusa2", 18, None, False),
    ("g10_04_6", 10, None, True),
])
def test_named_fixtures(name, n, pms, colourable):
    g = gen_named(name)
    assert g.n == n and g.m == 3 * n // 2
    if pms is not None:
        assert len(enumerate_perfect_matchings(g)) == pms
    assert (three_edge_colouring(g) is not None) == colourable


def test_named_fixtures_are_distinct_known_graphs():
    assert is_isomorphic(gen_named("petersen"), CubicGraph.from_edges(nx.petersen_graph().edges()))
    assert gen_named("j3") == gen_named("tietze")
    assert not is_isomorphic(gen_named("blanusa1"), gen_named("blanusa2"))
    with pytest.raises(GraphError):
        gen_named("dodecahedron")
    assert len(NAMED_GRAPHS) == 8


def test_petersen_structure(petersen):
    assert girth(petersen) == 5
    assert is_bridgeless(petersen)
    pms = enumerate_perfect_matchings(petersen)
    # every edge lies in exactly two perfect matchings
    assert all(sum(pm >> e & 1 for pm in pms) == 2 for e in range(petersen.m))
    for pm in pms:
        f = complement_2factor(petersen, pm)
        assert sorted(len(c) for c in circuits(petersen, f)) == [5, 5]


def test_complement_2factor_rejects_non_matching(petersen):
    with pytest.raises(GraphError):
        complement_2factor(petersen, 0b11)


@pytest.mark.parametrize("m", [3, 5, 7, 9])
def test_flower_snark(m):
    g = gen_flower_snark(m)
    assert g.n == 4 * m
    assert three_edge_colouring(g) is None
    assert girth(g) == (3 if m == 3 else 5 if m == 5 else 6)
    a, b, c, d = (flower_vertex(m, x, 0) for x in "abcd")
    assert set(g.neighbours(b)) == {a, c, d}
    assert g.has_edge(a, flower_vertex(m, "a", 1))
    assert g.has_edge(c, flower_vertex(m, "d", 1))
    assert g.has_edge(d, flower_vertex(m, "c", 1))
    assert flower_vertex(m, "a", m) == a


@pytest.mark.parametrize("m", [1, 2, 4])
def test_flower_snark_rejects_bad_m(m):
    with pytest.raises(GraphError):
        gen_flower_snark(m)


def test_flower_j3_is_tietze():
    assert is_isomorphic(gen_flower_snark(3), gen_named("tietze"))


def test_graph6_known_encoding(petersen):
    assert graph6_encode(petersen) == ref_graph6(petersen)
    assert graph6_decode(graph6_encode(petersen)) == CubicGraph(petersen.n, petersen.edges)


def test_read_graph6_file_names(tmp_path):
    p = tmp_path / "few.g6"
    p.write_text(">>graph6<<" + graph6_encode(gen_named("k4")) + "\n\n" + graph6_encode(gen_named("prism")) + "\n")
    gs = read_graph6_file(p)
    assert [g.name for g in gs] == ["few-1", "few-2"]
    assert [g.n for g in gs] == [4, 6]


def test_graph6_decode_rejects_garbage():
    with pytest.raises(GraphError):
        graph6_decode("~~~~")


def test_circuit_helpers(petersen):
    c = circuits(petersen, complement_2factor(petersen, enumerate_perfect_matchings(petersen)[0]))[0]
    assert c.reversed().reversed() == c
    assert c.reversed().vertices[0] == c.vertices[0]
    assert c.edge_mask(petersen) == c.reversed().edge_mask(petersen)
    assert mask_of(edges_of(c.edge_mask(petersen))) == c.edge_mask(petersen)
    assert len(Circuit((1, 2, 3))) == 3


@settings(max_examples=60, deadline=None)
@given(cubic_graphs)
def test_graph6_round_trip_random(g):
    assert graph6_encode(g) == ref_graph6(g)
    assert graph6_decode(graph6_encode(g)).edges == g.edges


@settings(max_examples=60, deadline=None)
@given(cubic_graphs)
def test_perfect_matchings_match_brute_force(g):
    pms = enumerate_perfect_matchings(g)
    assert sorted(pms) == brute_perfect_matchings(g)
    assert all(is_perfect_matching(g, pm) for pm in pms)


@settings(max_examples=60, deadline=None)
@given(cubic_graphs, st.integers(0, 2**64))
def test_circuits_partition_even_subgraphs(g, bits):
    pms = enumerate_perfect_matchings(g)
    if not pms:
        return
    f = complement_2factor(g, pms[bits % len(pms)])
    assert is_even_subgraph(g, f)
    cs = circuits(g, f)
    assert sum(len(c) for c in cs) == g.n
    total = 0
    for c in cs:
        assert total & c.edge_mask(g) == 0
        total |= c.edge_mask(g)
    assert total == f
