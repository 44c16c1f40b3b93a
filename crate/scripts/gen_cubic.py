#!/usr/bin/env python3
"""Generate connected simple cubic graphs up to isomorphism, in graph6.

Graphs of order n+2 are produced from order n by edge insertion (subdivide
two edges, join the two new vertices) and from pairs of smaller graphs by
bridging, by vertex-to-triangle expansion and from order n-2 by diamond
splicing, then deduplicated by nauty certificates. The result is checked
against the known counts 1, 2, 5, 19, 85, 509, 4060.

usage: gen_cubic.py MAXN OUTDIR
"""
import itertools
import os
import sys

import networkx as nx
from pynauty import Graph, certificate

KNOWN = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509, 16: 4060}


def cert(g):
    n = g.number_of_nodes()
    adj = {v: [u for u in g[v]] for v in g}
    return certificate(Graph(n, adjacency_dict=adj))


def insertions(g):
    n = g.number_of_nodes()
    edges = list(g.edges())
    for (a, b), (c, d) in itertools.combinations(edges, 2):
        h = g.copy()
        x, y = n, n + 1
        h.remove_edge(a, b)
        h.remove_edge(c, d)
        h.add_edges_from([(a, x), (x, b), (c, y), (y, d), (x, y)])
        yield h


def triangles(g):
    # replace a vertex by a triangle
    n = g.number_of_nodes()
    for v in list(g):
        h = g.copy()
        a, b, c = list(g[v])
        h.remove_node(v)
        h = nx.relabel_nodes(h, {u: (u if u < v else u - 1) for u in h})
        m = n - 1
        a, b, c = [(u if u < v else u - 1) for u in (a, b, c)]
        h.add_edges_from([(m, m + 1), (m + 1, m + 2), (m + 2, m), (m, a), (m + 1, b), (m + 2, c)])
        yield h


def diamonds(g):
    # splice a diamond (K4 minus an edge) into an edge, via its two tips
    n = g.number_of_nodes()
    for (p, q) in g.edges():
        h = g.copy()
        a, b, c, d = n, n + 1, n + 2, n + 3
        h.remove_edge(p, q)
        h.add_edges_from([(p, a), (a, b), (a, c), (b, c), (b, d), (c, d), (d, q)])
        yield h


def bridged(g1, g2):
    # subdivide one edge in each, join the subdivision vertices by a bridge
    n1 = g1.number_of_nodes()
    g2 = nx.relabel_nodes(g2, {v: v + n1 for v in g2})
    n = n1 + g2.number_of_nodes()
    for (a, b) in g1.edges():
        for (c, d) in g2.edges():
            h = nx.union(g1, g2)
            x, y = n, n + 1
            h.remove_edge(a, b)
            h.remove_edge(c, d)
            h.add_edges_from([(a, x), (x, b), (c, y), (y, d), (x, y)])
            yield h


def main():
    maxn, outdir = int(sys.argv[1]), sys.argv[2]
    levels = {4: [nx.complete_graph(4)]}
    for n in range(6, maxn + 1, 2):
        seen = {}
        cands = itertools.chain.from_iterable(
            itertools.chain(insertions(g), triangles(g)) for g in levels[n - 2]
        )
        pairs = []
        for n1 in range(4, n - 1, 2):
            n2 = n - 2 - n1
            if n2 < n1 or n2 not in levels:
                continue
            for i, g1 in enumerate(levels[n1]):
                for j, g2 in enumerate(levels[n2]):
                    if n1 == n2 and j < i:
                        continue
                    pairs.append(bridged(g1, g2))
        if n - 4 in levels:
            pairs.extend(diamonds(g) for g in levels[n - 4])
        for h in itertools.chain(cands, *pairs):
            c = cert(h)
            if c not in seen:
                seen[c] = h
        graphs = [seen[c] for c in sorted(seen)]
        levels[n] = graphs
        print(n, len(graphs), file=sys.stderr)
        if n in KNOWN and len(graphs) != KNOWN[n]:
            sys.exit(f"order {n}: got {len(graphs)}, expected {KNOWN[n]}")
        if n >= 8:
            with open(os.path.join(outdir, f"cubic{n:02d}.g6"), "w") as f:
                for g in graphs:
                    f.write(nx.to_graph6_bytes(g, header=False).decode())


if __name__ == "__main__":
    main()
