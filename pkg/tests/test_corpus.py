from ocover.corpus import CORPUS_ENV, all_o6c4c, corpus_dir, corpus_files, corpus_graph, load_corpus
from ocover.graph import girth, gen_named, graph6_decode, graph6_encode, is_bridgeless, is_isomorphic, \
    three_edge_colouring

from .oracles import ref_graph6


def test_shipped_corpus_counts():
    counts = {}
    for g in load_corpus():
        counts[g.n] = counts.get(g.n, 0) + 1
    assert counts == {10: 1, 18: 2, 20: 6, 22: 20}


def test_corpus_graphs_are_snarks(corpus22):
    for g in corpus22:
        assert girth(g) >= 5
        assert is_bridgeless(g)
        assert three_edge_colouring(g) is None


def test_graph6_round_trip_full_corpus(corpus22):
    for p in corpus_files():
        lines = [ln.strip() for ln in p.read_text().splitlines() if ln.strip()]
        for line in lines:
            g = graph6_decode(line)
            assert graph6_encode(g) == line == ref_graph6(g)


def test_corpus_pairwise_non_isomorphic(corpus22):
    by_n = {}
    for g in corpus22:
        by_n.setdefault(g.n, []).append(g)
    for gs in by_n.values():
        for i, g in enumerate(gs):
            assert not any(is_isomorphic(g, h) for h in gs[i + 1:])


def test_corpus_names_and_lookup():
    g = corpus_graph("snarks20-3")
    assert g.name == "snarks20-3" and g.n == 20
    assert is_isomorphic(corpus_graph("snarks10-1"), gen_named("petersen"))
    assert [p.name for p in corpus_files(18)] == ["snarks10.g6", "snarks18.g6"]


def test_env_override(tmp_path, monkeypatch):
    (tmp_path / "snarks10.g6").write_text(graph6_encode(gen_named("petersen")) + "\n")
    monkeypatch.setenv(CORPUS_ENV, str(tmp_path))
    assert corpus_dir() == tmp_path
    assert [g.name for g in load_corpus()] == ["snarks10-1"]


def test_all_o6c4c_budget():
    s = all_o6c4c(gen_named("blanusa1"), budget=5)
    assert not s.complete
