"""Filter snarks out of a stream of cubic graphs in graph6 format.

Usage: geng -cq -d3 -D3 -tf N | python scripts/build_corpus.py > snarksN.g6

geng's -tf flags give girth >= 5; this script keeps the graphs that are not
3-edge-colourable and have no cyclic edge cut of size <= 3.
"""
import sys
from itertools import combinations

import networkx as nx

from ocover.graph import graph6_decode, graph6_encode, three_edge_colouring


def cyclically_4_edge_connected(g):
    G = g.to_networkx()
    for size in (1, 2, 3):
        for cut in combinations(G.edges(), size):
            H = G.copy()
            H.remove_edges_from(cut)
            comps = list(nx.connected_components(H))
            if len(comps) < 2:
                continue
            # cyclic cut: at least two sides contain a cycle
            cyclic = sum(1 for c in comps if H.subgraph(c).number_of_edges() >= len(c))
            if cyclic >= 2:
                return False
    return True


def main():
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        g = graph6_decode(line)
        if three_edge_colouring(g) is not None:
            continue
        if cyclically_4_edge_connected(g):
            print(graph6_encode(g), flush=True)


if __name__ == "__main__":
    main()
