"""Independent oracles used by the tests.

These deliberately avoid the library's own algorithms: girth by
brute-force simple-cycle enumeration (networkx), layers by naive
repeated relaxation over an explicit adjacency dict.
"""

from __future__ import annotations

import random

import networkx as nx

from bipgirth.digraph import (
    BipartiteDigraph,
    GeneralDigraph,
    Side,
    VertexRef,
    _bits,
)


def to_networkx(g) -> nx.DiGraph:
    d = nx.DiGraph()
    if isinstance(g, GeneralDigraph):
        d.add_nodes_from(range(g.n))
        d.add_edges_from(g.edges())
    else:
        for u, v in g.edges():
            d.add_edge(str(u), str(v))
    return d


def brute_girth(g):
    """Minimum simple directed cycle length, or None."""
    d = to_networkx(g)
    best = None
    for cyc in nx.simple_cycles(d):
        if best is None or len(cyc) < best:
            best = len(cyc)
    return best


def naive_layers(g: BipartiteDigraph, v: VertexRef, max_i: int) -> list[set]:
    """Exact-distance sets by repeated relaxation over an adjacency dict."""
    adj: dict[VertexRef, set] = {}
    for u in [VertexRef(Side.A, i) for i in range(g.a_size)] + \
             [VertexRef(Side.B, j) for j in range(g.b_size)]:
        rows = g.a_out if u.side is Side.A else g.b_out
        other = Side.B if u.side is Side.A else Side.A
        adj[u] = {VertexRef(other, j) for j in _bits(rows[u.index])}
    dist = {v: 0}
    changed = True
    while changed:
        changed = False
        for u, d in list(dist.items()):
            for w in adj[u]:
                if w not in dist or dist[w] > d + 1:
                    dist[w] = d + 1
                    changed = True
    layers = [set() for _ in range(max_i + 1)]
    for u, d in dist.items():
        if d <= max_i:
            layers[d].add(u)
    return layers


def random_bipartite(rng: random.Random, max_side: int = 6) -> BipartiteDigraph:
    na = rng.randint(1, max_side)
    nb = rng.randint(1, max_side)
    a_out = tuple(rng.getrandbits(nb) for _ in range(na))
    b_out = tuple(rng.getrandbits(na) for _ in range(nb))
    return BipartiteDigraph(na, nb, a_out, b_out)


def random_general(rng: random.Random, max_n: int = 8) -> GeneralDigraph:
    n = rng.randint(1, max_n)
    out = tuple(rng.getrandbits(n) & ~(1 << i) for i in range(n))
    return GeneralDigraph(n, out)
