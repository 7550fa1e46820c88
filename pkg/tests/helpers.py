"""Brute-force oracles and seeded instance generators shared by the tests."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product

from genbooks import Graph, complement, complete_multipartite
from genbooks.regularity import bad_rset_count, counting_bound_dle, key_lemma_check


def random_graph(n: int, prob: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < prob])


def is_clique(g: Graph, vs) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def brute_clique_count(g: Graph, r: int) -> int:
    return sum(is_clique(g, c) for c in combinations(range(g.n), r))


def brute_book_size(g: Graph, r: int) -> int:
    best = 0
    for base in combinations(range(g.n), r):
        if is_clique(g, base):
            pages = sum(
                all(g.has_edge(v, b) for b in base) for v in range(g.n) if v not in base
            )
            best = max(best, pages)
    return best


def brute_colorable(g: Graph, p: int) -> bool:
    edges = list(g.edges())
    return any(
        all(col[u] != col[v] for u, v in edges) for col in product(range(p), repeat=g.n)
    )


def graph_arrows(g: Graph, p: int, q: int, r: int) -> bool:
    """``K_{p+1}`` in ``g`` or ``B_q^(r)`` in its complement, by enumeration."""
    if any(is_clique(g, c) for c in combinations(range(g.n), p + 1)):
        return True
    return brute_book_size(complement(g), r) >= q


# -- near-Turán instances ------------------------------------------------------


def near_turan(p: int, n: int, remove: int, rng: random.Random) -> Graph:
    """Balanced complete ``p``-partite graph on ``n`` vertices minus ``remove`` random edges."""
    sizes = [n // p + (i < n % p) for i in range(p)]
    base = complete_multipartite(sizes)
    edges = list(base.edges())
    gone = set(rng.sample(range(len(edges)), remove))
    return Graph.from_edges(n, [e for i, e in enumerate(edges) if i not in gone])


# -- regularity instances ------------------------------------------------------
# Exact eps-regularity is very demanding at desk scale, so the generators
# build nearly complete bipartite pairs; the premise filter then keeps the
# ones that really satisfy every hypothesis.


def _near_complete_pair(n: int, a: list[int], b: list[int], holes: int, rng, extra=()):
    pairs = [(u, v) for u in a for v in b]
    gone = set(rng.sample(range(len(pairs)), holes))
    edges = [e for i, e in enumerate(pairs) if i not in gone]
    return edges + list(extra)


def bad_set_instance(rng: random.Random):
    """``|A| = |B| = 12``, ``eps = 1/4``, ``d`` in {0.6, 0.7, 0.8}, dense random pair."""
    na = nb = 12
    r = rng.choice((2, 3))
    eps, d = Fraction(1, 4), Fraction(rng.choice((6, 7, 8)), 10)
    a = list(range(na))
    b = list(range(na, na + nb))
    holes = rng.randint(0, 12)
    inner = [e for e in combinations(a, 2) if rng.random() < 0.5]
    g = Graph.from_edges(na + nb, _near_complete_pair(na + nb, a, b, holes, rng, inner))
    y = sorted(rng.sample(b, rng.randint(nb // 2, nb)))
    return g, a, y, b, eps, d, r


def bad_set_validated(count: int, seed: int, max_tries: int = 20_000):
    rng = random.Random(seed)
    out = []
    for _ in range(max_tries):
        g, a, y, b, eps, d, r = bad_set_instance(rng)
        res = bad_rset_count(g, a, y, eps, d, r, b)
        if res.premise_ok and res.regular and res.density >= d:
            out.append(((g, a, y, b, eps, d, r), res))
            if len(out) == count:
                return out
    raise RuntimeError(f"only {len(out)} validated bad-set instances")


def clique_count_instance(rng: random.Random):
    """``|A| = |B_i| = 10``, ``t <= 5``, ``eps = 1/5``, ``d`` in {0.6, 0.8}."""
    size = 10
    t = rng.randint(1, 5)
    r = 2
    eps, d = Fraction(1, 5), Fraction(rng.choice((6, 8)), 10)
    a = list(range(size))
    bs = [list(range(size * (i + 1), size * (i + 2))) for i in range(t)]
    n = size * (t + 1)
    edges = [e for e in combinations(a, 2) if rng.random() < rng.random()]
    for b in bs:
        edges += _near_complete_pair(n, a, b, rng.choice((0, 0, 1)), rng)
    edges += [(u, v) for u, v in combinations(range(size, n), 2) if rng.random() < 0.3]
    return Graph.from_edges(n, edges), a, bs, eps, d, r


def clique_count_validated(count: int, seed: int, max_tries: int = 20_000):
    rng = random.Random(seed)
    out = []
    for _ in range(max_tries):
        g, a, bs, eps, d, r = clique_count_instance(rng)
        res = counting_bound_dle(g, a, bs, eps, d, r)
        if res.premises_hold:
            out.append(((g, a, bs, eps, d, r), res))
            if len(out) == count:
                return out
    raise RuntimeError(f"only {len(out)} validated clique-count instances")


def key_lemma_instance(rng: random.Random, size: int = 8, drop: float = 0.05):
    """``p = 2``, three parts of ``size``, complete tripartite minus a
    ``drop`` fraction of cross edges, ``d = 0.9`` and ``eps`` at the largest
    value on a 1/100 grid passing ``eps <= (d - eps)^p / (p + 2)``."""
    p = 2
    n = size * (p + 1)
    parts = [list(range(size * i, size * (i + 1))) for i in range(p + 1)]
    d = Fraction(9, 10)
    eps = max(Fraction(j, 100) for j in range(1, 90) if Fraction(j, 100) <= (d - Fraction(j, 100)) ** p / (p + 2))
    cross = [(u, v) for i, j in combinations(range(p + 1), 2) for u in parts[i] for v in parts[j]]
    keep = [e for e in cross if rng.random() >= drop]
    return Graph.from_edges(n, keep), parts, eps, d


def key_lemma_validated(count: int, seed: int, max_tries: int = 20_000, **kw):
    rng = random.Random(seed)
    out, failed = [], 0
    for _ in range(max_tries):
        g, parts, eps, d = key_lemma_instance(rng, **kw)
        res = key_lemma_check(g, parts, eps, d)
        if res.premises_hold:
            out.append(((g, parts, eps, d), res))
            if len(out) == count:
                return out, failed
        else:
            failed += 1
    raise RuntimeError(f"only {len(out)} validated key-lemma instances")


def stability_instances(count: int, seed: int, max_tries: int = 1_000):
    """Near-Turán graphs with ``alpha <= c(p)`` that satisfy every hypothesis."""
    from genbooks.stability import compute_c, extract_stable_subgraph

    rng = random.Random(seed)
    out = []
    for _ in range(max_tries):
        p = rng.choice((2, 3))
        n = rng.randint(60, 120)
        alpha = compute_c(p).c * rng.choice((1.0, 0.75, 0.5))
        g = near_turan(p, n, int(alpha * n * n / 2), rng)
        res = extract_stable_subgraph(g, p, alpha, cap=n)
        if res.hypothesis_met:
            out.append((g, p, alpha, res))
            if len(out) == count:
                return out
    raise RuntimeError(f"only {len(out)} stability instances")
