import pytest

from ocover.classify import classify
from ocover.corpus import all_o6c4c
from ocover.cover import split_into_two_cdcs
from ocover.graph import gen_named
from ocover.surface import (SurfaceError, boundary_edges, glue_surface, split_surfaces, surface_vertex_edges,
                            to_dot)


def shape(s):
    st = s.stats()
    return len(st.components), tuple(sorted(len(b) for b in s.boundaries))


def check_euler(s):
    st = s.stats()
    for c in st.components:
        assert c.V - c.E + c.F == c.chi
        assert c.chi == 2 - 2 * c.genus - c.boundaries
    sides = sum(len(f) for f in s.labels)
    assert 2 * st.E == sides + sum(len(b) for b in s.boundaries)


def test_petersen_glued_surface(petersen_o6c4c):
    s = glue_surface(petersen_o6c4c)
    st = s.stats()
    assert st.boundaries == 3
    assert (st.V, st.E, st.F) == (24, 39, 12)
    ordered = set(classify(petersen_o6c4c).ordered)
    g = petersen_o6c4c.graph
    # every boundary circles one ordered vertex, and each ordered vertex gets one
    centres = []
    for b in s.boundaries:
        vs = {s.labels[f][i][0][0] for f, i in b}
        assert len(vs) == 1
        centres.append(vs.pop())
    assert sorted(centres) == sorted(ordered)
    assert len(surface_vertex_edges(s)) == st.V
    assert all(0 <= e < g.m for e in surface_vertex_edges(s))
    check_euler(s)


def test_petersen_split_surfaces(petersen_o6c4c):
    (sp,) = split_into_two_cdcs(petersen_o6c4c)
    a, b = split_surfaces(petersen_o6c4c, sp)
    assert shape(a) == shape(b) == (1, (12,))
    assert boundary_edges(a) == boundary_edges(b)
    assert len(boundary_edges(a)) == 6
    check_euler(a)
    check_euler(b)


def test_g10_04_6_split_shapes():
    shapes = set()
    for oc in all_o6c4c(gen_named("g10_04_6")).solutions:
        for sp in split_into_two_cdcs(oc):
            shapes.add(tuple(sorted(map(shape, split_surfaces(oc, sp)))))
    assert ((1, (10, 10)), (3, (5, 5, 5, 5))) in shapes


def test_all_disordered_surfaces_are_closed(sweep):
    n = 0
    for s in sweep.values():
        for oc in s.solutions:
            rep = classify(oc)
            if not rep.all_disordered:
                continue
            n += 1
            surf = glue_surface(oc, rep)
            st = surf.stats()
            assert st.boundaries == 0
            assert st.V == rep.n_rich + 2 * rep.n_poor
            check_euler(surf)
    assert n == 24


def test_euler_on_fixture_surfaces():
    for name in ("k4", "k33", "tietze"):
        for oc in all_o6c4c(gen_named(name)).solutions:
            check_euler(glue_surface(oc))
            for sp in split_into_two_cdcs(oc):
                for half in split_surfaces(oc, sp):
                    check_euler(half)


def test_report_mismatch_rejected(petersen_solutions):
    a, b = petersen_solutions.solutions[:2]
    ra = classify(a)
    if ra.vertex_class == classify(b).vertex_class:
        pytest.skip("solutions share a classification")
    with pytest.raises(SurfaceError):
        glue_surface(b, ra)


def test_dot(petersen_o6c4c):
    text = to_dot(glue_surface(petersen_o6c4c), "pet")
    assert text.startswith("graph pet {") and text.rstrip().endswith("}")
    assert text.count("dashed") == 18
