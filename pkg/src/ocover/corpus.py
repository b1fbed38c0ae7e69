"""Shipped snark corpus and exhaustive per-graph solution sweeps."""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import kernels
from .cover import BudgetExhausted, CycleCover, OrientedCycleCover, iter_cycle_covers, orient_cover
from .graph import CubicGraph, read_graph6_file

CORPUS_ENV = "OCOVER_CORPUS"
SHIPPED_ORDERS = (10, 18, 20, 22)


def corpus_dir() -> Path:
    """``$OCOVER_CORPUS`` if set, else the files shipped with the package."""
    env = os.environ.get(CORPUS_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("ocover.data")))


def corpus_files(max_n: int | None = None, directory: Path | None = None) -> list[Path]:
    d = directory or corpus_dir()
    out = []
    for p in sorted(d.glob("snarks*.g6"), key=lambda p: int(p.stem[6:] or 0)):
        n = int(p.stem[6:])
        if max_n is None or n <= max_n:
            out.append(p)
    return out


def load_corpus(max_n: int | None = None, directory: Path | None = None) -> list[CubicGraph]:
    """Snarks named ``snarks<n>-<i>`` (1-based position in ``snarks<n>.g6``)."""
    graphs = []
    for p in corpus_files(max_n, directory):
        graphs += read_graph6_file(p)
    return graphs


def corpus_graph(name: str, directory: Path | None = None) -> CubicGraph:
    stem, _, idx = name.rpartition("-")
    path = (directory or corpus_dir()) / f"{stem}.g6"
    return read_graph6_file(path)[int(idx) - 1]


@dataclass
class GraphSolutions:
    graph: CubicGraph
    covers: list[CycleCover] = field(default_factory=list)
    # orientations[i] are all orientations of covers[i]
    orientations: list[list[OrientedCycleCover]] = field(default_factory=list)
    status: str = kernels.COMPLETE

    @property
    def solutions(self) -> list[OrientedCycleCover]:
        return [oc for lst in self.orientations for oc in lst]

    @property
    def complete(self) -> bool:
        return self.status == kernels.COMPLETE


def all_o6c4c(g: CubicGraph, budget: int = 0) -> GraphSolutions:
    """Every 6c4c of ``g`` with every orientation of each."""
    res = GraphSolutions(g)
    try:
        for cover in iter_cycle_covers(g, 6, 4, budget):
            r = orient_cover(cover, "all", budget)
            res.covers.append(cover)
            res.orientations.append(r.solutions)
            if r.budget_exhausted:
                res.status = kernels.BUDGET
                break
    except BudgetExhausted:
        res.status = kernels.BUDGET
    return res
