"""Exhaustive catalogs of small graphs."""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

import networkx as nx

from .cliques import find_clique
from .graph import Graph, bits

__all__ = ["all_graphs", "clique_free_graphs"]


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices (``2**C(n,2)`` of them)."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for k, (u, v) in enumerate(pairs):
            if code >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield Graph(n, tuple(rows))


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def clique_free_graphs(n: int, k: int) -> list[Graph]:
    """One representative per isomorphism class of ``K_k``-free graphs of order ``n``.

    Grown vertex by vertex: ``K_k``-freeness is hereditary, so every class on
    ``n`` vertices extends some class on ``n - 1``.  Duplicates are removed by
    Weisfeiler-Lehman hash buckets followed by an exact isomorphism test.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    level = [Graph(0, ())]
    for order in range(1, n + 1):
        buckets: dict[tuple, list[tuple[Graph, nx.Graph]]] = {}
        out: list[Graph] = []
        for base in level:
            for nbhd in range(1 << base.n):
                # the new vertex must not close a K_k with an existing (k-1)-clique
                if find_clique(base, k - 1, within=bits(nbhd)) is not None:
                    continue
                rows = list(base.rows) + [nbhd]
                for v in bits(nbhd):
                    rows[v] |= 1 << base.n
                g = Graph(order, tuple(rows))
                h = _to_nx(g)
                key = (g.edge_count, tuple(sorted(g.degrees())), nx.weisfeiler_lehman_graph_hash(h))
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, other) for _, other in bucket):
                    continue
                bucket.append((g, h))
                out.append(g)
        level = out
    return level
