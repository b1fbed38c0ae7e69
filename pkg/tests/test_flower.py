import pytest

from ocover.classify import classify
from ocover.cover import verify_oriented_cover
from ocover.flower import OPTIONS, base_and_gadget, cut_states, flower_o6c4c, flower_walk, transitions
from ocover.graph import flower_vertex


def test_cut_states():
    states = cut_states()
    assert len(states) == 900
    assert len(set(states)) == 900
    assert all(len(s) == 6 and all(0 <= o < len(OPTIONS) for o in s) for s in states)


def test_base_and_gadget_are_closed_walks():
    base, (s, t) = base_and_gadget()
    assert base.m == 3
    assert base.states[0] == s
    for i in range(3):
        assert base.states[(i + 1) % 3] in transitions(base.states[i])
    assert t in transitions(s) and s in transitions(t)


def test_walk_extends_by_gadget():
    j3, j5, j7 = flower_walk(3), flower_walk(5), flower_walk(7)
    # the base keeps the highest columns; lower columns are gadget copies
    assert j5.states[-3:] == j3.states
    assert j7.states[-5:] == j5.states
    assert j7.states[:2] == j7.states[2:4]


@pytest.mark.parametrize("m", [3, 5, 7, 9, 11, 13])
def test_flower_o6c4c(m):
    oc = flower_o6c4c(m)
    g = oc.graph
    assert g.n == 4 * m
    assert verify_oriented_cover(g, oc).valid
    rep = classify(oc)
    ordered = set(rep.ordered)
    assert {flower_vertex(m, "b", i) for i in range(m)} <= ordered


@pytest.mark.parametrize("m", [1, 2, 4, 6])
def test_flower_rejects_bad_m(m):
    with pytest.raises(ValueError):
        flower_walk(m)
