"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s``; the lines are also repeated
in the terminal summary.
"""
import random
from contextlib import contextmanager
from itertools import combinations
from time import perf_counter

import networkx as nx
import pytest

from ocover import kernels
from ocover.classify import classify
from ocover.corpus import load_corpus
from ocover.cover import (SearchConfig, cycle_triples, iter_cycle_covers, orient_cover, search_cycle_cover,
                          split_into_two_cdcs, verify_oriented_cover)
from ocover.flower import flower_o6c4c
from ocover.flows import flow_from_weights, flows_244, ordered_on, search_oriented_244, verify_nzk, weight_orderings
from ocover.graph import (CubicGraph, complement_2factor, enumerate_perfect_matchings, flower_vertex, gen_named,
                          graph6_decode, graph6_encode)
from ocover.lemmas import PASS, check_euler_parity, check_ordered_ne_one, check_reorientation_parity, \
    check_six_covers
from ocover.ribbon import (class_representatives, derive_o6cdc, is_circuit, normalize_table, random_rotation,
                           trace_faces, triple_classes)
from ocover.surface import boundary_edges, glue_surface, split_surfaces

from .conftest import ACCEPTANCE_LINES
from .oracles import brute_6c4c, brute_face_count, brute_perfect_matchings, ref_graph6
from .reference import REFERENCE_COLUMNS

CORPUS_BUDGET = 2_000_000


@contextmanager
def criterion(tag, title, limit=None):
    t0 = perf_counter()
    verdict = "FAIL"
    try:
        yield
        dt = perf_counter() - t0
        assert limit is None or dt < limit, f"took {dt:.1f}s against a {limit}s limit"
        verdict = "PASS"
    finally:
        line = f"criterion {tag:>3}: {verdict}  {title}  ({perf_counter() - t0:.1f}s)"
        ACCEPTANCE_LINES.append(line)
        print("\n" + line)


def split_shape(surf):
    st = surf.stats()
    return len(st.components), tuple(sorted(len(b) for b in surf.boundaries))


def random_cubic(n, seed):
    return CubicGraph.from_edges(nx.random_regular_graph(3, n, seed=seed).edges(), n=n)


def test_criterion_01_petersen_o6c4c(petersen):
    with criterion("1", "Petersen o6c4c: 3 ordered, 15 rich, 0 poor", 10):
        res = search_cycle_cover(petersen, SearchConfig(oriented=True))
        (oc,) = res.solutions
        assert verify_oriented_cover(petersen, oc).valid
        rep = classify(oc)
        assert (rep.n_ordered, rep.n_rich, rep.n_poor) == (3, 15, 0)


def test_criterion_02_petersen_unique_6c4c(petersen):
    with criterion("2", "Petersen 6c4c is unique: the six 2-factors", 10):
        covers = list(iter_cycle_covers(petersen, 6, 4))
        assert len(covers) == 1
        factors = sorted(complement_2factor(petersen, pm) for pm in enumerate_perfect_matchings(petersen))
        assert len(set(factors)) == 6
        assert sorted(covers[0].cycles) == factors


def test_criterion_03_petersen_surface(petersen_o6c4c):
    with criterion("3", "Petersen surface: 3 boundaries; split halves share one 12-boundary"):
        oc = petersen_o6c4c
        surf = glue_surface(oc)
        assert surf.stats().boundaries == 3
        centres = sorted({surf.labels[f][i][0][0] for f, i in b}.pop() for b in surf.boundaries)
        assert centres == sorted(classify(oc).ordered)
        found = False
        for sp in split_into_two_cdcs(oc):
            a, b = split_surfaces(oc, sp)
            if [len(x) for x in a.boundaries] == [len(x) for x in b.boundaries] == [12] and \
                    boundary_edges(a) == boundary_edges(b):
                found = True
        assert found


def test_criterion_04_g10_04_6_split():
    with criterion("4", "10.04-6 split: (1 comp, 10+10) and (3 comps, 5+5+5+5)", 60):
        want = ((1, (10, 10)), (3, (5, 5, 5, 5)))
        g = gen_named("g10_04_6")
        hit = None
        for cover in iter_cycle_covers(g, 6, 4):
            sols = orient_cover(cover, "all").solutions
            for oc in sols:
                for sp in split_into_two_cdcs(oc):
                    if tuple(sorted(map(split_shape, split_surfaces(oc, sp)))) == want:
                        hit = oc
                        break
                if hit:
                    break
            if hit:
                break
        assert hit is not None


def test_criterion_05_blanusa2_three_poor():
    with criterion("5", "Blanusa-2 o6c4c with 3 poor / 24 rich edges", 600):
        g = gen_named("blanusa2")

        def accept(oc):
            rep = classify(oc)
            return (rep.n_poor, rep.n_rich) == (3, 24)

        res = search_cycle_cover(g, SearchConfig(oriented=True), accept=accept)
        assert res.found
        assert verify_oriented_cover(g, res.solutions[0]).valid


def test_criterion_06_flower_snarks():
    with criterion("6", "flower o6c4c for m = 3..11, every b_i ordered", 300):
        for m in (3, 5, 7, 9, 11):
            oc = flower_o6c4c(m)
            assert verify_oriented_cover(oc.graph, oc).valid
            ordered = set(classify(oc).ordered)
            assert {flower_vertex(m, "b", i) for i in range(m)} <= ordered


def test_criterion_07_corpus_sweep(corpus22):
    with criterion("7", f"every corpus snark <= 22 has an o6c4c ({len(corpus22)} graphs)"):
        assert len(corpus22) == 29
        for g in corpus22:
            t0 = perf_counter()
            res = search_cycle_cover(g, SearchConfig(oriented=True, node_budget=CORPUS_BUDGET))
            print(f"  {g.name}: {res.status}, budget {CORPUS_BUDGET} nodes/call, {perf_counter() - t0:.2f}s")
            assert res.found, f"{g.name}: no solution ({res.status})"
            assert verify_oriented_cover(g, res.solutions[0]).valid


def test_criterion_08_triple_table():
    with criterion("8", "6 classes x 60; representatives match the reference table"):
        assert [len(c) for c in triple_classes()] == [60] * 6
        ours = [[str(t) for t in r] for r in class_representatives()]
        assert normalize_table(ours) == normalize_table(REFERENCE_COLUMNS)


def test_criterion_09_o6cdc(sweep):
    with criterion("9", "derive_o6cdc on every all-disordered corpus solution"):
        sols = [oc for s in sweep.values() for oc in s.solutions if classify(oc).all_disordered]
        assert sols
        for oc in sols:
            res = derive_o6cdc(oc)
            assert all(is_circuit(f) for f in res.faces)
            assert verify_oriented_cover(oc.graph, res.cover, 2).valid
        print(f"  {len(sols)} all-disordered solutions")


def test_criterion_10_flows(petersen_solutions):
    with criterion("10", "nz5 from (0,1,2,0,2,1), nz7 from (1,2,4), zero from all ones"):
        for oc in petersen_solutions.solutions:
            orders = weight_orderings(oc, (0, 1, 2, 0, 2, 1), 5)
            assert orders and verify_nzk(oc.graph, flow_from_weights(oc, orders[0]), 5)
            for t in combinations(range(6), 3):
                w = [0] * 6
                for x, i in zip((1, 2, 4), t):
                    w[i] = x
                assert verify_nzk(oc.graph, flow_from_weights(oc, w), 7)
            assert not any(flow_from_weights(oc, (1,) * 6).values)


def test_criterion_11_lemmas(sweep, sweep20):
    with criterion("11", "reorientation parity, ordered count != 1, Euler parity"):
        for s in sweep20.values():
            for orients in s.orientations:
                if orients:
                    assert check_reorientation_parity(orients[0]).verdict == PASS
        every = [oc for s in sweep.values() for oc in s.solutions]
        assert check_ordered_ne_one(every).verdict == PASS
        for oc in every:
            cls = classify(oc)
            if cls.all_disordered:
                assert check_euler_parity(oc, cls).verdict == PASS


def test_criterion_12_six_covers(petersen):
    with criterion("12", "Petersen has no 9c6c; an 18-vertex snark has an o9c6c", 60):
        d = check_six_covers(petersen).details
        assert d["9c6c_status"] == kernels.COMPLETE and d["9c6c_count"] == 0
        found = [g.name for g in load_corpus(18) if g.n == 18 and check_six_covers(g).details["o9c6c"]]
        assert found


@pytest.mark.xfail(strict=True, reason="each Petersen edge lies on 12 of its 20 nine-circuits, not 6")
def test_criterion_12b_nine_circuits_six_cover(petersen):
    with criterion("12b", "all Petersen 9-circuits form a 6-cover (known to be false as stated)"):
        d = check_six_covers(petersen).details
        print(f"  nine-circuits: {d['nine_circuits']}, edge coverage {d['nine_circuit_coverage']}")
        assert d["all_nine_circuits_6_cover"]


def test_criterion_13_244(sweep20, petersen):
    with criterion("13", "(2,4,4) decompositions on snarks <= 20; oriented (2,4,4) on Petersen"):
        triples = cycle_triples()
        for s in sweep20.values():
            for oc in s.solutions:
                ordered = classify(oc).ordered
                for t in triples:
                    ftc = flows_244(oc, t)
                    assert ftc.verify()
                    assert ordered_on(oc.graph, ftc.masks["C2"], ordered) % 2 == 0
        sols, _ = search_oriented_244(petersen)
        assert sols and sols[0].verify(oriented=True)


def test_criterion_14_property_suites(corpus22):
    with criterion("14", "graph6 round trip, 1000 rotation systems, brute-force oracles"):
        for g in corpus22:
            assert graph6_encode(g) == ref_graph6(g)
            assert graph6_decode(graph6_encode(g)).edges == g.edges
        rng = random.Random(2024)
        for i in range(1000):
            g = random_cubic(rng.choice([4, 6, 8, 10, 12, 16, 20]), i)
            rot = random_rotation(g, rng)
            faces = trace_faces(g, rot)
            darts = [(d.edge, d.head) for f in faces for d in f]
            assert len(darts) == len(set(darts)) == 2 * g.m
            assert len(faces) == brute_face_count(g, lambda v, u: g.other(rot.succ(v, g.edge_index(u, v)), v))
        for n in (4, 6, 8, 10, 12):
            for seed in range(4):
                g = random_cubic(n, seed)
                assert sorted(enumerate_perfect_matchings(g)) == brute_perfect_matchings(g)
        for n, seed in [(10, 0), (12, 0), (12, 1), (14, 0)]:
            g = random_cubic(n, seed)
            want = brute_6c4c(g)
            for engine in ("matching", "even"):
                got = sorted(c.multiset_key() for c in iter_cycle_covers(g, 6, 4, engine=engine))
                assert got == want
