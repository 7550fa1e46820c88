"""Immutable simple graphs on ``[n]`` stored as bit rows.

Row ``u`` of a :class:`Graph` is a Python ``int`` whose bit ``v`` is set
iff ``uv`` is an edge.  Python integers are arrays of machine words, so
``&``, ``|`` and ``int.bit_count`` act word-parallel on whole
neighbourhoods.  Vertices are 0-indexed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

__all__ = [
    "Graph",
    "Graph6Error",
    "VertexSet",
    "SetLike",
    "as_mask",
    "bits",
    "parse_graph6",
    "serialize_graph6",
    "complement",
    "induced",
    "common_neighbors",
    "complete",
    "empty",
    "cycle",
    "complete_multipartite",
    "turan_graph",
    "disjoint_union",
]

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_ORDER = (1 << 18) - 1


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``[n]`` held as a bit mask."""

    mask: int = 0

    def __post_init__(self) -> None:
        if self.mask < 0:
            raise ValueError("vertex set mask must be nonnegative")

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if v < 0:
                raise ValueError(f"negative vertex {v}")
            mask |= 1 << v
        return cls(mask)

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __and__(self, other: "SetLike") -> "VertexSet":
        return VertexSet(self.mask & as_mask(other))

    def __or__(self, other: "SetLike") -> "VertexSet":
        return VertexSet(self.mask | as_mask(other))

    def __sub__(self, other: "SetLike") -> "VertexSet":
        return VertexSet(self.mask & ~as_mask(other))

    def to_list(self) -> list[int]:
        return list(bits(self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"


SetLike = Union[VertexSet, int, Iterable[int]]


def as_mask(s: SetLike) -> int:
    """Bit mask of a :class:`VertexSet`, a raw ``int`` mask, or an iterable
    of vertex indices."""
    if isinstance(s, VertexSet):
        return s.mask
    if isinstance(s, int):
        if s < 0:
            raise ValueError("vertex mask must be nonnegative")
        return s
    return VertexSet.of(s).mask


class Graph6Error(ValueError):
    """Malformed graph6 text; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``range(n)``.

    ``rows[u]`` is the neighbourhood of ``u`` as a bit mask.  Construction
    validates symmetry and irreflexivity; instances are never mutated.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("order must be nonnegative")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full or row < 0:
                raise ValueError(f"row {u} has bits outside [0, {self.n})")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
            for v in bits(row):
                if not self.rows[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency {u}-{v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_adjacency(cls, matrix: Sequence[Sequence[int]] | np.ndarray) -> "Graph":
        a = np.asarray(matrix, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        n = a.shape[0]
        rows = tuple(sum(1 << int(v) for v in np.flatnonzero(a[u])) for u in range(n))
        return cls(n, rows)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, row in enumerate(self.rows):
            for v in bits(row):
                a[u, v] = 1
        return a

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, u: int) -> VertexSet:
        return VertexSet(self.rows[u])

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.rows):
            for v in bits(row >> (u + 1)):
                yield u, u + 1 + v

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count}, g6={serialize_graph6(self)!r})"


# -- graph6 ---------------------------------------------------------------


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= GRAPH6_MAX_ORDER:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ValueError(f"graph6 order {n} exceeds {GRAPH6_MAX_ORDER}")


def serialize_graph6(g: Graph) -> str:
    """Canonical graph6 string of ``g`` (no header, zero padding)."""
    out = [_encode_order(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string; an optional ``>>graph6<<`` header and
    surrounding whitespace are ignored."""
    s = text.strip()
    base = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for k, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}", base + k)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        raise Graph6Error(f"orders above {GRAPH6_MAX_ORDER} are not supported", base + 1)
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated long-form order", base + len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    nedge_bits = n * (n - 1) // 2
    need = (nedge_bits + 5) // 6
    if len(vals) - pos != need:
        raise Graph6Error(
            f"order {n} needs {need} edge bytes, found {len(vals) - pos}",
            base + min(len(vals), pos + need),
        )
    pad = need * 6 - nedge_bits
    if pad and vals[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", base + len(vals) - 1)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = vals[pos + k // 6]
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


# -- set-algebraic operations ---------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(g.rows)))


def induced(g: Graph, s: SetLike) -> Graph:
    """Induced subgraph on ``s``, relabelled by increasing original index."""
    mask = as_mask(s)
    if mask >> g.n:
        raise ValueError("vertex set is not contained in [n]")
    keep = list(bits(mask))
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for w in bits(g.rows[v] & mask):
            row |= 1 << index[w]
        rows.append(row)
    return Graph(len(keep), tuple(rows))


def common_neighbors(g: Graph, s: SetLike) -> VertexSet:
    """Vertices adjacent to every member of ``s`` (``s`` itself excluded)."""
    mask = as_mask(s)
    if not mask:
        raise ValueError("common_neighbors needs a nonempty vertex set")
    if mask >> g.n:
        raise ValueError("vertex set is not contained in [n]")
    acc = g.vertex_mask
    for v in bits(mask):
        acc &= g.rows[v]
    return VertexSet(acc & ~mask)


# -- constructors ----------------------------------------------------------


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << u) for u in range(n)))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; parts are consecutive index blocks."""
    n = sum(sizes)
    full = (1 << n) - 1
    rows = []
    start = 0
    for size in sizes:
        block = ((1 << size) - 1) << start
        rows.extend([full & ~block] * size)
        start += size
    return Graph(n, tuple(rows))


def turan_graph(n: int, p: int) -> Graph:
    """Balanced complete ``p``-partite graph on ``n`` vertices."""
    if p < 1:
        raise ValueError("p must be positive")
    q, extra = divmod(n, p)
    return complete_multipartite([q + 1] * extra + [q] * (p - extra))


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for h in graphs:
        rows.extend(row << offset for row in h.rows)
        offset += h.n
    return Graph(offset, tuple(rows))
