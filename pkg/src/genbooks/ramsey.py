"""Exhaustive certification of ``r(K_{p+1}, B_q^(r))`` for tiny parameters.

The arrowing search decides, for one order ``n``, whether every graph on
``n`` vertices contains ``K_{p+1}`` or has ``B_q^(r)`` in its complement.
It is a depth-first search over the edges of ``K_n`` in row order
``(0,1), (0,2), ..., (1,2), ...``.  Two partial graphs are kept: ``g``
(edges decided present) and ``co`` (edges decided absent).  Any clique in
``g`` or book in ``co`` survives every completion, so such a branch
arrows and is cut.  Symmetry: every graph is isomorphic to one in which
vertex 0 has maximum degree ``d`` and neighbourhood ``{1, ..., d}``, so
row 0 is fixed per ``d`` and every degree is capped at ``d``.

Search order is deterministic: ``d`` from ``n-1`` down, and "present"
before "absent" at every edge.  The counterexample returned is the first
leaf reached, i.e. among the canonical candidates the one whose
non-edge bit string (row order) is lexicographically least.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .cliques import contains_book, find_clique, iter_cliques
from .graph import Graph, SetLike, VertexSet, as_mask, bits, complement, complete_multipartite
from .stability import ContractViolation

__all__ = [
    "ArrowingVerdict",
    "RamseyCertificate",
    "RamseySearchCapError",
    "PigeonholeResult",
    "DEFAULT_SEARCH_CAP",
    "build_witness",
    "verify_witness",
    "arrows",
    "ramsey_number",
    "formula_value",
    "find_kpr",
    "pigeonhole_book",
]

DEFAULT_SEARCH_CAP = 9


class RamseySearchCapError(ValueError):
    """Requested order is above the exhaustive-search cap."""

    def __init__(self, message: str, log: Sequence["ArrowingVerdict"] = ()):
        super().__init__(message)
        self.log = tuple(log)

    @property
    def lower_bound(self) -> Optional[int]:
        """Largest order with a counterexample in the partial log, plus one."""
        refuted = [v.n for v in self.log if not v.arrows]
        return max(refuted) + 1 if refuted else None


def formula_value(p: int, q: int, r: int) -> int:
    return p * (q + r - 1) + 1


def build_witness(p: int, q: int, r: int) -> Graph:
    """``K_p(q + r - 1)``: ``K_{p+1}``-free, complement is ``p`` disjoint ``K_{q+r-1}``."""
    if p < 2 or q < 1 or r < 1:
        raise ValueError("need p >= 2, q >= 1, r >= 1")
    return complete_multipartite([q + r - 1] * p)


def verify_witness(g: Graph, p: int, q: int, r: int) -> bool:
    """``g`` has no ``K_{p+1}`` and its complement has no ``B_q^(r)``."""
    return find_clique(g, p + 1) is None and not contains_book(complement(g), q, r)


@dataclass(frozen=True)
class ArrowingVerdict:
    n: int
    p: int
    q: int
    r: int
    arrows: bool
    counterexample: Optional[Graph]
    graphs_examined: int
    elapsed: float = field(default=0.0, compare=False)


# -- the search ----------------------------------------------------------------


def _has_clique(rows: list[int], cand: int, k: int) -> bool:
    if k <= 0:
        return True
    if cand.bit_count() < k:
        return False
    if k == 1:
        return True
    while cand.bit_count() >= k:
        low = cand & -cand
        cand ^= low
        if _has_clique(rows, cand & rows[low.bit_length() - 1], k - 1):
            return True
    return False


def _book_at(co: list[int], x: int, r: int, q: int) -> bool:
    # some r-clique of co containing x has >= q common neighbours
    def rec(cand: int, common: int, need: int) -> bool:
        if need == 0:
            return common.bit_count() >= q
        while cand.bit_count() >= need:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            nxt = common & co[v]
            if nxt.bit_count() >= q and rec(cand & co[v], nxt, need - 1):
                return True
        return False

    return co[x].bit_count() >= q and rec(co[x], co[x], r - 1)


def _search_branch(n: int, p: int, q: int, r: int, d: int) -> tuple[Optional[tuple[int, ...]], int]:
    """DFS for a counterexample with vertex 0 of degree ``d`` = maximum degree."""
    g = [0] * n
    co = [0] * n
    deg = [0] * n
    nodes = 0

    def put(i: int, j: int, present: bool) -> bool:
        if present:
            if deg[i] >= d or deg[j] >= d:
                return False
            if _has_clique(g, g[i] & g[j], p - 1):
                return False
            g[i] |= 1 << j
            g[j] |= 1 << i
            deg[i] += 1
            deg[j] += 1
            return True
        co[i] |= 1 << j
        co[j] |= 1 << i
        if _book_at(co, i, r, q) or _book_at(co, j, r, q):
            co[i] &= ~(1 << j)
            co[j] &= ~(1 << i)
            return False
        return True

    def undo(i: int, j: int, present: bool) -> None:
        if present:
            g[i] &= ~(1 << j)
            g[j] &= ~(1 << i)
            deg[i] -= 1
            deg[j] -= 1
        else:
            co[i] &= ~(1 << j)
            co[j] &= ~(1 << i)

    for j in range(1, n):
        if not put(0, j, j <= d):
            return None, 1
    edges = [(i, j) for i in range(1, n) for j in range(i + 1, n)]
    total = len(edges)

    def dfs(k: int) -> bool:
        nonlocal nodes
        nodes += 1
        if k == total:
            return True
        i, j = edges[k]
        for present in (True, False):
            if put(i, j, present):
                if dfs(k + 1):
                    return True
                undo(i, j, present)
        return False

    if dfs(0):
        return tuple(g), nodes
    return None, nodes


def _branch_task(args: tuple[int, int, int, int, int]) -> tuple[Optional[tuple[int, ...]], int]:
    return _search_branch(*args)


def arrows(
    n: int,
    p: int,
    q: int,
    r: int,
    *,
    cap: int = DEFAULT_SEARCH_CAP,
    threads: int = 1,
) -> ArrowingVerdict:
    """Decide whether every graph of order ``n`` has ``K_{p+1}`` or a
    ``B_q^(r)`` in its complement.

    ``graphs_examined`` counts search nodes (partial graphs).  Branches for
    different degrees of vertex 0 run in separate processes when
    ``threads > 1``; the verdict, counterexample and node count are the same
    as in a serial run.
    """
    if p < 2 or q < 1 or r < 1:
        raise ValueError("need p >= 2, q >= 1, r >= 1")
    if n < 1:
        raise ValueError("order must be positive")
    if n > cap:
        raise RamseySearchCapError(
            f"order {n} exceeds the search cap {cap}; raise the cap (distributed search is not provided)"
        )
    start = time.perf_counter()
    degrees = list(range(n - 1, -1, -1))
    found: Optional[tuple[int, ...]] = None
    examined = 0
    if threads > 1 and len(degrees) > 1:
        with ProcessPoolExecutor(max_workers=min(threads, len(degrees))) as pool:
            results = list(pool.map(_branch_task, [(n, p, q, r, d) for d in degrees]))
    else:
        results = None
    for idx, d in enumerate(degrees):
        rows, nodes = results[idx] if results is not None else _search_branch(n, p, q, r, d)
        examined += nodes
        if rows is not None:
            found = rows
            break
    counterexample = None
    if found is not None:
        counterexample = Graph(n, found)
        if not verify_witness(counterexample, p, q, r):
            raise ContractViolation("search returned an invalid counterexample")
    return ArrowingVerdict(
        n, p, q, r, found is None, counterexample, examined, time.perf_counter() - start
    )


@dataclass(frozen=True)
class RamseyCertificate:
    p: int
    q: int
    r: int
    value: int
    witness: Graph
    search_log: tuple[ArrowingVerdict, ...]

    @property
    def formula(self) -> int:
        return formula_value(self.p, self.q, self.r)

    @property
    def matches_formula(self) -> bool:
        return self.value == self.formula


def ramsey_number(
    p: int, q: int, r: int, n_cap: int = DEFAULT_SEARCH_CAP, *, threads: int = 1
) -> RamseyCertificate:
    """Smallest ``n`` that arrows, with a verified witness of order ``n - 1``.

    Orders are searched upward from 1.  The witness is the extremal graph
    ``K_p(q + r - 1)`` when it has order ``n - 1`` (it always verifies),
    otherwise the search's own counterexample at ``n - 1``.
    """
    log: list[ArrowingVerdict] = []
    for n in range(1, n_cap + 1):
        verdict = arrows(n, p, q, r, cap=n_cap, threads=threads)
        log.append(verdict)
        if verdict.arrows:
            break
    else:
        raise RamseySearchCapError(
            f"r(K_{p + 1}, B_{q}^({r})) exceeds the cap {n_cap}", log
        )
    value = log[-1].n
    if value == 1:
        raise ContractViolation("every graph of order 1 cannot arrow")
    extremal = build_witness(p, q, r)
    if extremal.n == value - 1 and verify_witness(extremal, p, q, r):
        witness = extremal
    else:
        witness = log[-2].counterexample
    assert witness is not None
    if not verify_witness(witness, p, q, r):
        raise ContractViolation("certificate witness fails verification")
    if any(v.arrows for v in log[:-1]):
        raise ContractViolation("arrowing is not monotone in n")
    return RamseyCertificate(p, q, r, value, witness, tuple(log))


# -- the pigeonhole step -------------------------------------------------------


def find_kpr(g: Graph, p: int, r: int) -> Optional[tuple[VertexSet, ...]]:
    """First copy of ``K_p(r)`` in ``g``: ``p`` independent ``r``-sets, complete
    between each other.  Classes are listed by increasing minimum vertex."""
    if p < 1 or r < 1:
        raise ValueError("need p >= 1 and r >= 1")
    co = complement(g)
    rows = g.rows

    def rec(classes: tuple[tuple[int, ...], ...], allowed: int) -> Optional[tuple[tuple[int, ...], ...]]:
        if len(classes) == p:
            return classes
        if classes:
            allowed &= ~((1 << (classes[-1][0] + 1)) - 1)
        for members, _ in iter_cliques(co, r, within=VertexSet(allowed)):
            nxt = allowed
            for v in members:
                nxt &= rows[v]
            found = rec(classes + (members,), nxt)
            if found is not None:
                return found
        return None

    found = rec((), g.vertex_mask)
    if found is None:
        return None
    return tuple(VertexSet.of(c) for c in found)


@dataclass(frozen=True)
class PigeonholeResult:
    """Either a ``K_{p+1}`` (``clique``) or a complement book ``base``/``pages``."""

    clique: Optional[tuple[int, ...]]
    base: Optional[VertexSet]
    pages: VertexSet
    floor: int


def pigeonhole_book(g: Graph, p: int, r: int, embedding: Sequence[SetLike]) -> PigeonholeResult:
    """Turn a ``K_p(r)`` copy into a ``K_{p+1}`` or a large book in the complement.

    An outside vertex with a neighbour in every class closes a ``K_{p+1}``.
    Otherwise each outside vertex misses some class entirely and is filed
    under the first such class; the fullest class (lowest index on ties) is
    the base.  With ``n - pr`` outside vertices the book has at least
    ``ceil((n - pr) / p)`` pages.
    """
    classes = [as_mask(c) for c in embedding]
    if len(classes) != p:
        raise ValueError(f"embedding must have {p} classes")
    used = 0
    for i, c in enumerate(classes):
        if c.bit_count() != r or used & c or c >> g.n:
            raise ValueError(f"class {i} must be an r-set disjoint from the others")
        used |= c
        for v in bits(c):
            if g.rows[v] & c:
                raise ValueError(f"class {i} is not independent")
            for j, other in enumerate(classes):
                if j != i and other & ~g.rows[v]:
                    raise ValueError(f"classes {i} and {j} are not completely joined")
    floor = -(-(g.n - p * r) // p)
    assigned = [0] * p
    for u in bits(g.vertex_mask & ~used):
        missed = [i for i, c in enumerate(classes) if not g.rows[u] & c]
        if not missed:
            clique = tuple(sorted([u] + [(g.rows[u] & c & -(g.rows[u] & c)).bit_length() - 1 for c in classes]))
            return PigeonholeResult(clique, None, VertexSet(), floor)
        assigned[missed[0]] |= 1 << u
    best = max(range(p), key=lambda i: (assigned[i].bit_count(), -i))
    pages = assigned[best]
    if pages.bit_count() < floor:
        raise ContractViolation("pigeonhole book is smaller than its floor")
    return PigeonholeResult(None, VertexSet(classes[best]), VertexSet(pages), floor)
