"""Post-processing steps that enrich a solution certificate in place.

Every step writes one top-level section and is idempotent: re-running it
replaces that section.  Steps whose precondition fails are recorded under
``skipped`` with a reason instead of raising.
"""
from __future__ import annotations

from itertools import combinations

from .certificate import cover_from_dict, is_oriented
from .classify import classify
from .cover import BudgetExhausted, OrientedCycleCover, cycle_triples, split_into_two_cdcs
from .flows import (FlowCounterexample, flow_from_weights, flows_244, ordered_on, search_333,
                    search_oriented_244, verify_nzk, weight_orderings)
from .lemmas import SolutionRecord, check_conjectures, check_euler_parity, check_ordered_ne_one, \
    check_reorientation_parity
from .ribbon import RibbonError, derive_o6cdc
from .surface import SurfaceGraph, boundary_edges, glue_surface, split_surfaces

STEPS = ("classify", "surface", "split", "ribbon", "flows", "checks")
NZ5_WEIGHTS = (0, 1, 2, 0, 2, 1)


class StepSkipped(Exception):
    pass


def _corner_record(s: SurfaceGraph, ocover: OrientedCycleCover, side) -> list[int]:
    """A boundary side of the o6c4c surface as the passage ``u -> v -> w`` through a corner."""
    g = ocover.graph
    f, i = side
    (v, _), (e_in, e_out) = s.labels[f][i]
    return [g.other(e_in, v), v, g.other(e_out, v)]


def _need_o6c4c(oc: OrientedCycleCover):
    if oc.k != 6 or oc.m != 4:
        raise StepSkipped(f"needs an o6c4c, certificate has k={oc.k}, m={oc.m}")


def step_classify(oc, doc):
    _need_o6c4c(oc)
    return classify(oc).to_dict()


def step_surface(oc, doc):
    _need_o6c4c(oc)
    s = glue_surface(oc)
    st = s.stats()
    return {
        "components": st.to_dict(),
        "V": st.V, "E": st.E, "F": st.F, "boundaries": st.boundaries, "chi": st.chi,
        "boundary_walks": [[_corner_record(s, oc, side) for side in b] for b in s.boundaries],
    }


def step_split(oc, doc):
    _need_o6c4c(oc)
    out = []
    for sp in split_into_two_cdcs(oc):
        halves = []
        for h, s in zip(sp.halves, split_surfaces(oc, sp)):
            st = s.stats()
            halves.append({
                "circuits": [list(c) for c in h],
                "components": st.to_dict(),
                "boundary_lengths": sorted(len(b) for b in s.boundaries),
                "boundary_edges": sorted(boundary_edges(s)),
            })
        out.append({"cycle_level": sp.cycle_level, "halves": halves})
    return out


def step_ribbon(oc, doc):
    _need_o6c4c(oc)
    if not classify(oc).all_disordered:
        raise StepSkipped("ordered vertices present")
    try:
        return derive_o6cdc(oc).to_dict()
    except RibbonError as exc:
        raise StepSkipped(str(exc)) from exc


def step_flows(oc, doc, budget: int = 0):
    _need_o6c4c(oc)
    g = oc.graph
    rep = classify(oc)
    orders = weight_orderings(oc, NZ5_WEIGHTS, 5)
    nz7 = all(verify_nzk(g, flow_from_weights(oc, [dict(zip(t, (1, 2, 4))).get(i, 0) for i in range(6)]), 7)
              for t in combinations(range(6), 3))
    triples = []
    for t in cycle_triples():
        try:
            ftc = flows_244(oc, t, budget)
        except FlowCounterexample as exc:
            triples.append({"triple": list(t), "counterexample": exc.witness})
            continue
        except BudgetExhausted:
            triples.append({"triple": list(t), "status": "budget"})
            continue
        triples.append({"triple": list(t), "verified": ftc.verify(),
                        "ordered_on_C2": ordered_on(g, ftc.masks["C2"], rep.ordered), **ftc.to_dict()})
    o244, st244 = search_oriented_244(g, budget=budget)
    o333, st333 = search_333(g, True, budget=budget)
    u333, stu = search_333(g, False, budget=budget)
    return {
        "nz5_weight_orderings": [list(w) for w in orders],
        "nz5_example": list(flow_from_weights(oc, orders[0]).values) if orders else None,
        "nz7_all_triples": nz7,
        "zero_from_ones": not any(flow_from_weights(oc, (1,) * 6).values),
        "flows_244": triples,
        "oriented_244": {"status": st244, "solution": o244[0].to_dict() if o244 else None},
        "oriented_333": {"status": st333, "solution": o333[0].to_dict() if o333 else None},
        "unoriented_333": {"status": stu, "solution": u333[0].to_dict() if u333 else None,
                           "degree3_vertices": u333[0].degree3_vertices() if u333 else None},
    }


def step_checks(oc, doc, budget: int = 0):
    _need_o6c4c(oc)
    rec = SolutionRecord.build(oc)
    reports = [check_reorientation_parity(oc, budget), check_ordered_ne_one([oc]),
               check_euler_parity(oc, rec.classification)]
    reports += list(check_conjectures([rec]).values())
    return {r.name: {"verdict": r.verdict, "details": r.details, "witnesses": len(r.witnesses)} for r in reports}


_FUNCS = {"classify": step_classify, "surface": step_surface, "split": step_split,
          "ribbon": step_ribbon, "flows": step_flows, "checks": step_checks}
_SECTION = {"classify": "classification", "ribbon": "o6cdc"}


def run_steps(doc: dict, steps, budget: int = 0) -> dict:
    """Apply ``steps`` to a certificate document; returns the same (mutated) document."""
    oc = cover_from_dict(doc)
    skipped = dict(doc.get("skipped", {}))
    for step in steps:
        if step not in _FUNCS:
            raise ValueError(f"unknown step {step!r}; choose from {', '.join(STEPS)}")
        section = _SECTION.get(step, step)
        kwargs = {"budget": budget} if step in ("flows", "checks") else {}
        try:
            if not is_oriented(doc):
                raise StepSkipped("cover is not oriented")
            doc[section] = _FUNCS[step](oc, doc, **kwargs)
            skipped.pop(step, None)
        except StepSkipped as exc:
            doc.pop(section, None)
            skipped[step] = str(exc)
    if skipped:
        doc["skipped"] = skipped
    else:
        doc.pop("skipped", None)
    return doc
