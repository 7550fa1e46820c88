"""Near-Turán structure of ``K_{p+1}``-free graphs.

:func:`compute_c` finds the admissible slack ``c(p)``; :func:`extract_stable_subgraph`
runs the single low-degree deletion pass and checks the resulting size,
minimum-degree and ``p``-colourability guarantees; :func:`aes_check`
tests the Andrásfai-Erdős-Sós minimum-degree condition.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .cliques import find_clique
from .graph import Graph, VertexSet, bits, induced

__all__ = [
    "ContractViolation",
    "StabilityConstants",
    "StabilityResult",
    "ColoringResult",
    "AesVerdict",
    "DEFAULT_COLORING_CAP",
    "compute_c",
    "extract_stable_subgraph",
    "aes_check",
    "is_p_colorable",
    "exact_rational",
]

DEFAULT_COLORING_CAP = 40
ROOT_TOL = 1e-12
THRESHOLD_TOL = 1e-9

Real = Union[int, float, Fraction]


class ContractViolation(AssertionError):
    """A proven guarantee failed on a concrete input: the implementation is wrong."""


def exact_rational(x: Real) -> Fraction:
    """Exact value of ``x``; floats are read as their shortest decimal repr,
    so ``1e-4`` becomes ``1/10000`` rather than its binary neighbour."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(repr(float(x)))


def _linear_coeff(p: int) -> float:
    return 1 + 3 / (3 * p - 1) * ((p - 1) / p) ** 2


def _constant_term(p: int) -> float:
    return 1 / (2 * (3 * p - 1) * p)


@dataclass(frozen=True)
class StabilityConstants:
    p: int
    c0: float
    c: float
    lower: float
    upper: float
    approx: float
    residual: float

    @property
    def sandwich_holds(self) -> bool:
        return self.lower < self.c < self.upper

    def cube_root_inequality_at(self, y: float) -> bool:
        """``y + a y^(1/3) <= b`` for the cubic's coefficients ``a``, ``b``."""
        lhs = y + _linear_coeff(self.p) * y ** (1 / 3)
        return lhs <= _constant_term(self.p) + ROOT_TOL


def compute_c(p: int) -> StabilityConstants:
    """Bisect ``x^3 + a x - b`` on ``(0, b)`` and return ``c(p) = c0^3``.

    ``a = 1 + 3/(3p-1) ((p-1)/p)^2`` and ``b = 1/(2(3p-1)p)``.  The cubic is
    increasing for ``x > 0``, negative at 0 and positive at ``b``, so the
    positive root is unique and bracketed.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    a = _linear_coeff(p)
    b = _constant_term(p)

    def f(x: float) -> float:
        return x * x * x + a * x - b

    lo, hi = 0.0, b
    for _ in range(200):
        mid = (lo + hi) / 2
        if mid in (lo, hi):
            break
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    c0 = lo if abs(f(lo)) <= abs(f(hi)) else hi
    residual = abs(f(c0))
    result = StabilityConstants(
        p=p,
        c0=c0,
        c=c0**3,
        lower=1 / (2 * p * (3 * p + 2)) ** 3,
        upper=1 / (2 * p * (3 * p - 1)) ** 3,
        approx=6.0**-3 * p**-6,
        residual=residual,
    )
    if residual >= ROOT_TOL or not result.sandwich_holds or not result.cube_root_inequality_at(result.c):
        raise ContractViolation(f"constants for p={p} fail their invariants: {result}")
    return result


# -- exact colouring -------------------------------------------------------


@dataclass(frozen=True)
class ColoringResult:
    """``colorable`` is None when the instance was above the cap (unchecked)."""

    colorable: Optional[bool]
    coloring: Optional[tuple[int, ...]] = None

    @property
    def checked(self) -> bool:
        return self.colorable is not None


def _bipartition(g: Graph) -> Optional[tuple[int, ...]]:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in bits(g.rows[u]):
                if side[v] < 0:
                    side[v] = 1 - side[u]
                    queue.append(v)
                elif side[v] == side[u]:
                    return None
    return tuple(side)


def _dsatur(g: Graph, p: int) -> Optional[tuple[int, ...]]:
    n = g.n
    rows = g.rows
    color = [-1] * n
    # forbidden[v]: bit c set when some coloured neighbour of v has colour c
    forbidden = [0] * n
    full = (1 << p) - 1

    def pick() -> int:
        best, key = -1, (-1, -1)
        for v in range(n):
            if color[v] < 0:
                k = (forbidden[v].bit_count(), rows[v].bit_count())
                if k > key:
                    best, key = v, k
        return best

    def rec(colored: int, used: int) -> bool:
        if colored == n:
            return True
        v = pick()
        free = full & ~forbidden[v]
        # colours beyond the first unused one are symmetric
        limit = min(p, used + 1)
        for c in range(limit):
            if not free >> c & 1:
                continue
            color[v] = c
            touched = [w for w in bits(rows[v]) if color[w] < 0 and not forbidden[w] >> c & 1]
            for w in touched:
                forbidden[w] |= 1 << c
            if all(forbidden[w] != full for w in touched) and rec(colored + 1, max(used, c + 1)):
                return True
            for w in touched:
                forbidden[w] &= ~(1 << c)
            color[v] = -1
        return False

    if rec(0, 0):
        return tuple(color)
    return None


def is_p_colorable(g: Graph, p: int, cap: int = DEFAULT_COLORING_CAP) -> ColoringResult:
    """Exact ``p``-colourability with a witness colouring.

    ``p <= 2`` is decided by breadth-first search at any order.  For larger
    ``p`` a DSATUR branch and bound runs when ``g.n <= cap``; above the cap
    the result is unchecked rather than a guess.
    """
    if p < 1:
        raise ValueError("p must be positive")
    if g.n == 0:
        return ColoringResult(True, ())
    if p == 1:
        ok = g.edge_count == 0
        return ColoringResult(ok, (0,) * g.n if ok else None)
    if p == 2:
        sides = _bipartition(g)
        return ColoringResult(sides is not None, sides)
    if g.n > cap:
        return ColoringResult(None)
    coloring = _dsatur(g, p)
    return ColoringResult(coloring is not None, coloring)


# -- Andrásfai-Erdős-Sós ---------------------------------------------------


@dataclass(frozen=True)
class AesVerdict:
    premises_hold: bool
    clique_free: bool
    min_degree: int
    degree_threshold: Fraction
    p_chromatic: Optional[bool]


def aes_check(g: Graph, p: int, cap: int = DEFAULT_COLORING_CAP) -> AesVerdict:
    """``K_{p+1}``-free with ``delta > (1 - 3/(3p-1)) n`` implies ``p``-colourable."""
    if p < 2:
        raise ValueError("p must be at least 2")
    clique_free = find_clique(g, p + 1) is None
    threshold = (1 - Fraction(3, 3 * p - 1)) * g.n
    delta = g.min_degree()
    premises = clique_free and delta > threshold
    verdict = is_p_colorable(g, p, cap).colorable
    if premises and verdict is False:
        raise ContractViolation(f"AES premises hold but graph is not {p}-colourable")
    return AesVerdict(premises, clique_free, delta, threshold, verdict)


# -- the deletion pass -----------------------------------------------------


@dataclass(frozen=True)
class StabilityResult:
    p: int
    alpha: float
    epsilon: float
    threshold: float
    deleted: VertexSet
    kept: VertexSet
    kept_graph: Graph
    edge_condition_met: bool
    alpha_admissible: bool
    clique_free: bool
    size_bound_met: bool
    degree_bound_met: bool
    p_chromatic: Optional[bool]
    coloring: Optional[tuple[int, ...]] = field(default=None, repr=False)

    @property
    def hypothesis_met(self) -> bool:
        return self.edge_condition_met and self.alpha_admissible and self.clique_free


def extract_stable_subgraph(
    g: Graph, p: int, alpha: Real, cap: int = DEFAULT_COLORING_CAP
) -> StabilityResult:
    """Delete every vertex of degree below ``2m/n - eps n`` with ``eps = 2 alpha^(1/3)``.

    One pass over the original degrees, never iterated.  When the hypothesis
    holds (``m >= ((p-1)/(2p) - alpha) n^2`` exactly, ``alpha <= c(p)``,
    ``K_{p+1}``-free) the kept graph must have at least
    ``(1 - 2 alpha^(1/3)) n`` vertices, minimum degree at least
    ``(1 - 1/p - 4 alpha^(1/3)) n`` and be ``p``-colourable; a failure raises
    :class:`ContractViolation`.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if g.n == 0:
        raise ValueError("graph must be nonempty")
    n, m = g.n, g.edge_count
    a = float(alpha)
    root = a ** (1 / 3)
    eps = 2 * root
    threshold = 2 * m / n - eps * n
    deleted = 0
    for u, row in enumerate(g.rows):
        if row.bit_count() < threshold - THRESHOLD_TOL:
            deleted |= 1 << u
    kept = g.vertex_mask & ~deleted
    g0 = induced(g, VertexSet(kept))

    edge_ok = m >= (Fraction(p - 1, 2 * p) - exact_rational(alpha)) * n * n
    alpha_ok = a <= compute_c(p).c
    clique_free = find_clique(g, p + 1) is None
    size_ok = g0.n >= (1 - eps) * n - THRESHOLD_TOL
    degree_ok = g0.n > 0 and g0.min_degree() >= (1 - 1 / p - 4 * root) * n - THRESHOLD_TOL
    col = is_p_colorable(g0, p, cap)

    result = StabilityResult(
        p=p,
        alpha=a,
        epsilon=eps,
        threshold=threshold,
        deleted=VertexSet(deleted),
        kept=VertexSet(kept),
        kept_graph=g0,
        edge_condition_met=edge_ok,
        alpha_admissible=alpha_ok,
        clique_free=clique_free,
        size_bound_met=size_ok,
        degree_bound_met=degree_ok,
        p_chromatic=col.colorable,
        coloring=col.coloring,
    )
    if result.hypothesis_met:
        failed = [
            name
            for name, ok in (
                ("size", size_ok),
                ("min-degree", degree_ok),
                ("p-chromatic", col.colorable is not False),
            )
            if not ok
        ]
        if failed:
            raise ContractViolation(f"stability guarantee failed ({', '.join(failed)}): {result}")
    return result
