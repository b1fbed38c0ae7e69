"""Oriented cycle covers of cubic graphs: search, verification and analysis."""
from __future__ import annotations

__version__ = "0.1.0"

from .classify import ClassificationReport, classify
from .cover import (CycleCover, OrientedCycleCover, SearchConfig, SearchResult, iter_cycle_covers,
                    orient_cover, search_cycle_cover, split_into_two_cdcs, verify_cover,
                    verify_oriented_cover)
from .flower import flower_o6c4c
from .graph import CubicGraph, gen_flower_snark, gen_named, graph6_decode, graph6_encode, read_graph6_file
from .kernels import IMPLEMENTATION as KERNELS
from .ribbon import derive_o6cdc, triple_classes
from .surface import glue_surface

__all__ = [
    "ClassificationReport", "CubicGraph", "CycleCover", "KERNELS", "OrientedCycleCover", "SearchConfig",
    "SearchResult", "classify", "derive_o6cdc", "flower_o6c4c", "gen_flower_snark", "gen_named",
    "glue_surface", "graph6_decode", "graph6_encode", "iter_cycle_covers", "orient_cover",
    "read_graph6_file", "search_cycle_cover", "split_into_two_cdcs", "triple_classes", "verify_cover",
    "verify_oriented_cover",
]
