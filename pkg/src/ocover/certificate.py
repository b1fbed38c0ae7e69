"""Solution certificates: one JSON document per cover.

Required fields are ``graph6``, ``k``, ``m`` and ``cycles[][].vertices``;
pipeline steps append further sections (``classification``, ``surface``,
``split``, ``o6cdc``, ``flows``, ``checks``).  See docs/formats.md.
"""
from __future__ import annotations

import json
from pathlib import Path

from .cover import CycleCover, OrientedCycleCover, verify_cover, verify_oriented_cover
from .graph import Circuit, CubicGraph, circuits, graph6_decode, graph6_encode

SCHEMA_VERSION = 1


class CertificateError(ValueError):
    pass


def cover_to_dict(ocover: OrientedCycleCover, name: str | None = None) -> dict:
    g = ocover.graph
    return {
        "schema": SCHEMA_VERSION,
        "name": name if name is not None else g.name,
        "graph6": graph6_encode(g),
        "k": ocover.k,
        "m": ocover.m,
        "oriented": True,
        "cycles": [[{"vertices": list(c.vertices)} for c in cyc] for cyc in ocover.cycles],
    }


def unoriented_to_dict(cover: CycleCover, name: str | None = None) -> dict:
    """Circuit directions in an unoriented certificate carry no meaning."""
    g = cover.graph
    return {
        "schema": SCHEMA_VERSION,
        "name": name if name is not None else g.name,
        "graph6": graph6_encode(g),
        "k": cover.k,
        "m": cover.m,
        "oriented": False,
        "cycles": [[{"vertices": list(c.vertices)} for c in circuits(g, mask)] for mask in cover.cycles],
    }


def is_oriented(doc: dict) -> bool:
    return bool(doc.get("oriented", True))


def cover_from_dict(doc: dict, verify: bool = True) -> OrientedCycleCover:
    try:
        g = graph6_decode(doc["graph6"], name=doc.get("name") or "")
        k, m = int(doc["k"]), int(doc["m"])
        cycles = tuple(tuple(Circuit(tuple(int(x) for x in c["vertices"])) for c in cyc) for cyc in doc["cycles"])
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateError(f"malformed certificate: {exc}") from exc
    if len(cycles) != k:
        raise CertificateError(f"certificate lists {len(cycles)} cycles, k={k}")
    oc = OrientedCycleCover(g, cycles, m)
    if verify:
        rep = verify_oriented_cover(g, oc) if is_oriented(doc) else verify_cover(g, oc.cover.cycles, m)
        if not rep.valid:
            raise CertificateError("certificate does not verify: " + "; ".join(rep.failures[:3]))
    return oc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def write(doc: dict, path: str | Path) -> Path:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(dumps(doc))
    return p


def read(path: str | Path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise CertificateError(f"{path}: not JSON ({exc})") from exc


def graph_of(doc: dict) -> CubicGraph:
    return graph6_decode(doc["graph6"], name=doc.get("name") or "")
