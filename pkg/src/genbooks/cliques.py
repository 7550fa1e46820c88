"""Clique and independent-set counting, book sizes and the counting
inequalities behind the degree-square bound.

Everything is exact.  Cliques are enumerated by narrowing a candidate mask
with ``&`` over bit rows; a vertex is only extended by higher-indexed
candidates so every clique is produced once, in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Optional

from .graph import Graph, SetLike, VertexSet, as_mask, bits, complement

__all__ = [
    "BookMeasure",
    "DegreeSquareBound",
    "iter_cliques",
    "count_cliques",
    "find_clique",
    "is_clique_free",
    "count_independent_rsets",
    "book_size",
    "contains_book",
    "triangle_identity",
    "degree_square_bound",
    "turan_edge_max",
]


def _check_r(r: int) -> None:
    if r < 1:
        raise ValueError(f"clique order must be positive, got {r}")


def iter_cliques(
    g: Graph, r: int, within: Optional[SetLike] = None
) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield ``(clique, common)`` for every ``r``-clique of ``g``.

    ``common`` is the bit mask of vertices adjacent to all clique members.
    Cliques come out in lexicographic order.  ``within`` restricts the
    clique vertices (not the common neighbourhood).
    """
    _check_r(r)
    rows = g.rows
    full = g.vertex_mask
    start = full if within is None else as_mask(within) & full
    stack: list[int] = []

    def rec(cand: int, common: int, need: int) -> Iterator[tuple[tuple[int, ...], int]]:
        while cand:
            if cand.bit_count() < need:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            nxt = common & rows[v]
            stack.append(v)
            if need == 1:
                yield tuple(stack), nxt
            else:
                yield from rec(cand & rows[v], nxt, need - 1)
            stack.pop()

    yield from rec(start, full, r)


def count_cliques(g: Graph, r: int) -> int:
    """Exact number of ``r``-vertex complete subgraphs."""
    _check_r(r)
    rows = g.rows

    def rec(cand: int, need: int) -> int:
        if need == 1:
            return cand.bit_count()
        total = 0
        while cand.bit_count() >= need:
            low = cand & -cand
            cand ^= low
            total += rec(cand & rows[low.bit_length() - 1], need - 1)
        return total

    return rec(g.vertex_mask, r)


def _color_bound(rows: tuple[int, ...], cand: int) -> int:
    # greedy colouring of g[cand]; the number of classes bounds the clique number
    colors = 0
    uncolored = cand
    while uncolored:
        colors += 1
        q = uncolored
        while q:
            low = q & -q
            uncolored ^= low
            q &= ~low & ~rows[low.bit_length() - 1]
    return colors


def find_clique(g: Graph, k: int, within: Optional[SetLike] = None) -> Optional[tuple[int, ...]]:
    """Lexicographically first ``k``-clique of ``g`` (inside ``within``), or None.

    Branches whose greedy colouring uses fewer than the missing number of
    colours are cut, which keeps early exit cheap on dense random graphs.
    """
    if k <= 0:
        return ()
    rows = g.rows
    start = g.vertex_mask if within is None else as_mask(within) & g.vertex_mask

    def rec(cand: int, need: int, chosen: tuple[int, ...]) -> Optional[tuple[int, ...]]:
        if need == 1:
            if cand:
                return chosen + ((cand & -cand).bit_length() - 1,)
            return None
        if cand.bit_count() > 8 and _color_bound(rows, cand) < need:
            return None
        while cand.bit_count() >= need:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            found = rec(cand & rows[v], need - 1, chosen + (v,))
            if found is not None:
                return found
        return None

    return rec(start, k, ())


def is_clique_free(g: Graph, k: int) -> bool:
    return find_clique(g, k) is None


def count_independent_rsets(g: Graph, r: int) -> int:
    return count_cliques(complement(g), r)


@dataclass(frozen=True)
class BookMeasure:
    """Largest ``r``-book of a graph: its page count and base clique."""

    r: int
    size: int
    base: Optional[VertexSet]
    pages: VertexSet = VertexSet()


def book_size(g: Graph, r: int) -> BookMeasure:
    """``bs^(r)(g)``: the most common neighbours any ``r``-clique has.

    Ties go to the lexicographically smallest base.  A graph without an
    ``r``-clique has size 0 and no base.
    """
    best_size = -1
    best: Optional[tuple[tuple[int, ...], int]] = None
    for clique, common in iter_cliques(g, r):
        size = common.bit_count()
        if size > best_size:
            best_size, best = size, (clique, common)
    if best is None:
        return BookMeasure(r=r, size=0, base=None)
    return BookMeasure(r=r, size=best_size, base=VertexSet.of(best[0]), pages=VertexSet(best[1]))


def contains_book(g: Graph, q: int, r: int) -> bool:
    """Whether ``g`` contains ``B_q^(r)`` (``K_r`` joined to ``q`` vertices)."""
    if q < 1:
        raise ValueError("a book needs at least one page (q >= 1)")
    _check_r(r)
    for _, common in iter_cliques(g, r):
        if common.bit_count() >= q:
            return True
    return False


def triangle_identity(g: Graph) -> tuple[int, int]:
    """``(3 * #triangles, sum over edges uv of |N(u) & N(v)|)``; always equal."""
    lhs = 3 * count_cliques(g, 3)
    rhs = sum((g.rows[u] & g.rows[v]).bit_count() for u, v in g.edges())
    return lhs, rhs


class DegreeSquareBound(NamedTuple):
    lhs: int
    rhs: Fraction
    holds: bool


def degree_square_bound(g: Graph, p: int) -> DegreeSquareBound:
    """Compare ``sum d(u)^2`` with ``2 (p-1)/p m n``.

    Every ``K_{p+1}``-free graph satisfies the inequality, so ``holds=False``
    certifies that ``g`` contains a ``K_{p+1}``.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    lhs = sum(d * d for d in g.degrees())
    rhs = 2 * Fraction(p - 1, p) * g.edge_count * g.n
    return DegreeSquareBound(lhs, rhs, lhs <= rhs)


def turan_edge_max(n: int, p: int) -> int:
    """Edge count of the balanced complete ``p``-partite graph on ``n`` vertices."""
    if n < 0 or p < 1:
        raise ValueError("need n >= 0 and p >= 1")
    q, extra = divmod(n, p)
    sizes = [q + 1] * extra + [q] * (p - extra)
    return (n * n - sum(s * s for s in sizes)) // 2
