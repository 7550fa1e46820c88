"""epsilon-regular pairs, cluster graphs of a given partition, and the
counting lemmas used to bound books in the complement.

Densities are exact :class:`~fractions.Fraction` values.  Real parameters
(``eps``, ``d``, ...) are converted with :func:`exact_rational` before any
comparison with a density.  Partitions are supplied by the caller; nothing
here constructs a regularity partition.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Literal, NamedTuple, Optional, Sequence

from .catalog import clique_free_graphs
from .cliques import count_cliques, count_independent_rsets, find_clique, iter_cliques
from .graph import Graph, SetLike, VertexSet, as_mask, bits, induced
from .stability import ContractViolation, Real, compute_c, exact_rational

__all__ = [
    "Partition",
    "SrlParams",
    "ClusterGraphs",
    "RegularityVerdict",
    "RegularityCapError",
    "BadSetCount",
    "DleCount",
    "KeyLemmaResult",
    "RsetDensity",
    "DEFAULT_EXACT_CAP",
    "pair_density",
    "edge_count_between",
    "eps_regular_exact",
    "eps_regular_refute",
    "is_violating_pair",
    "select_srl_parameters",
    "classify_partition",
    "bad_rset_count",
    "counting_bound_dle",
    "key_lemma_check",
    "cluster_book_bound",
    "independent_rset_density",
    "ramsey_floor",
    "parse_partition",
    "format_partition",
]

DEFAULT_EXACT_CAP = 14
PARAM_TOL = 1e-12

Mode = Literal["exact", "randomized"]


class RegularityCapError(ValueError):
    """Pair too large for the exact checker; use :func:`eps_regular_refute`."""


# -- partitions --------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    exceptional: VertexSet
    parts: tuple[VertexSet, ...]

    @classmethod
    def of(cls, exceptional: SetLike, parts: Sequence[SetLike]) -> "Partition":
        return cls(VertexSet(as_mask(exceptional)), tuple(VertexSet(as_mask(p)) for p in parts))

    @property
    def k(self) -> int:
        return len(self.parts)

    def validate(self, n: int) -> None:
        if not self.parts:
            raise ValueError("partition has no parts")
        sizes = {len(p) for p in self.parts}
        if len(sizes) != 1 or 0 in sizes:
            raise ValueError(f"parts must be nonempty and of equal size, got sizes {sorted(sizes)}")
        seen = self.exceptional.mask
        for i, part in enumerate(self.parts):
            if seen & part.mask:
                raise ValueError(f"part {i} overlaps an earlier class")
            seen |= part.mask
        if seen != (1 << n) - 1:
            raise ValueError(f"partition does not cover [0, {n})")


def parse_partition(text: str) -> Partition:
    """Read the partition exchange format.

    One ``exceptional:`` line (possibly with no indices) and one ``part:``
    line per class, each followed by 0-based vertex indices separated by
    whitespace.  Blank lines and ``#`` comments are ignored.
    """
    exceptional: Optional[list[int]] = None
    parts: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise ValueError(f"line {lineno}: expected 'exceptional:' or 'part:'")
        try:
            members = [int(tok) for tok in rest.split()]
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        key = key.strip().lower()
        if key == "exceptional":
            if exceptional is not None:
                raise ValueError(f"line {lineno}: duplicate exceptional line")
            exceptional = members
        elif key == "part":
            parts.append(members)
        else:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
    return Partition.of(exceptional or [], parts)


def format_partition(part: Partition) -> str:
    lines = ["exceptional: " + " ".join(map(str, part.exceptional))]
    lines += ["part: " + " ".join(map(str, p)) for p in part.parts]
    return "\n".join(line.rstrip() for line in lines) + "\n"


# -- densities and regularity ---------------------------------------------


def edge_count_between(g: Graph, a: int, b: int) -> int:
    return sum((g.rows[u] & b).bit_count() for u in bits(a))


def _pair_masks(g: Graph, a: SetLike, b: SetLike) -> tuple[int, int]:
    am, bm = as_mask(a), as_mask(b)
    if not am or not bm:
        raise ValueError("pair sets must be nonempty")
    if am & bm:
        raise ValueError("pair sets must be disjoint")
    if (am | bm) >> g.n:
        raise ValueError("pair sets must lie in [n]")
    return am, bm


def pair_density(g: Graph, a: SetLike, b: SetLike) -> Fraction:
    am, bm = _pair_masks(g, a, b)
    return Fraction(edge_count_between(g, am, bm), am.bit_count() * bm.bit_count())


@dataclass(frozen=True)
class RegularityVerdict:
    regular: bool
    witness: Optional[tuple[VertexSet, VertexSet]]
    mode: Mode
    density: Fraction
    witness_density: Optional[Fraction] = None
    trials: Optional[int] = None


def _threshold_size(eps: Fraction, size: int) -> int:
    return max(1, math.ceil(eps * size))


def is_violating_pair(g: Graph, a: SetLike, b: SetLike, x: SetLike, y: SetLike, eps: Real) -> bool:
    """True iff ``(x, y)`` shows that ``(a, b)`` is not ``eps``-regular."""
    am, bm = _pair_masks(g, a, b)
    xm, ym = as_mask(x), as_mask(y)
    if not xm or not ym or xm & ~am or ym & ~bm:
        return False
    e = exact_rational(eps)
    if xm.bit_count() < e * am.bit_count() or ym.bit_count() < e * bm.bit_count():
        return False
    dev = pair_density(g, xm, ym) - pair_density(g, am, bm)
    return abs(dev) >= e


def _grow(g: Graph, am: int, bm: int, xm: int, ym: int, d_ab: Fraction, sign: int) -> tuple[int, int]:
    # add vertices while the signed deviation does not shrink: the witness
    # stays violating and becomes maximal
    def dev(x: int, y: int) -> Fraction:
        return sign * (Fraction(edge_count_between(g, x, y), x.bit_count() * y.bit_count()) - d_ab)

    current = dev(xm, ym)
    changed = True
    while changed:
        changed = False
        for v in bits(am & ~xm):
            trial = dev(xm | 1 << v, ym)
            if trial >= current:
                xm, current, changed = xm | 1 << v, trial, True
        for v in bits(bm & ~ym):
            trial = dev(xm, ym | 1 << v)
            if trial >= current:
                ym, current, changed = ym | 1 << v, trial, True
    return xm, ym


def _best_partner(g: Graph, xm: int, bm: int, t: int, sign: int) -> tuple[int, int]:
    # the t vertices of B with most (sign=+1) or fewest (sign=-1) neighbours in X
    counts = sorted(((-sign * (g.rows[v] & xm).bit_count(), v) for v in bits(bm)))
    chosen = counts[:t]
    ym = 0
    for _, v in chosen:
        ym |= 1 << v
    return ym, -sign * sum(c for c, _ in chosen)


def _scan_side(
    g: Graph, am: int, bm: int, s: int, t: int, d_ab: Fraction, eps: Fraction
) -> Optional[tuple[int, int, int]]:
    a_list = list(bits(am))
    st = s * t
    for xs in combinations(a_list, s):
        xm = 0
        for v in xs:
            xm |= 1 << v
        for sign in (1, -1):
            ym, e = _best_partner(g, xm, bm, t, sign)
            if sign * (Fraction(e, st) - d_ab) >= eps:
                return xm, ym, sign
    return None


def eps_regular_exact(
    g: Graph, a: SetLike, b: SetLike, eps: Real, cap: int = DEFAULT_EXACT_CAP
) -> RegularityVerdict:
    """Decide ``eps``-regularity of ``(a, b)`` exactly.

    Only subsets of the threshold sizes ``s = ceil(eps |A|)`` and
    ``t = ceil(eps |B|)`` are scanned.  This loses nothing: for fixed ``Y``
    the density ``d(X, Y)`` is the average of ``d(X', Y)`` over the
    ``s``-subsets ``X'`` of ``X``, so some ``X'`` deviates at least as much
    (same for ``Y``).  For each ``s``-subset ``X`` the extreme ``Y`` is
    read off by sorting ``B`` by neighbour count in ``X``, so only one side
    is enumerated (the one with fewer subsets).  A failing pair comes with
    a witness grown to be maximal.
    """
    am, bm = _pair_masks(g, a, b)
    e = exact_rational(eps)
    if e <= 0:
        raise ValueError("eps must be positive")
    na, nb = am.bit_count(), bm.bit_count()
    if max(na, nb) > cap:
        raise RegularityCapError(
            f"pair sizes ({na}, {nb}) exceed the exact cap {cap}; use eps_regular_refute"
        )
    d_ab = Fraction(edge_count_between(g, am, bm), na * nb)
    s, t = _threshold_size(e, na), _threshold_size(e, nb)
    if s > na or t > nb:
        return RegularityVerdict(True, None, "exact", d_ab)
    if math.comb(na, s) <= math.comb(nb, t):
        found = _scan_side(g, am, bm, s, t, d_ab, e)
        if found is not None:
            xm, ym, sign = found
    else:
        found = _scan_side(g, bm, am, t, s, d_ab, e)
        if found is not None:
            ym, xm, sign = found
    if found is None:
        return RegularityVerdict(True, None, "exact", d_ab)
    xm, ym = _grow(g, am, bm, xm, ym, d_ab, sign)
    return _irregular(g, am, bm, xm, ym, e, d_ab, "exact")


def _irregular(g, am, bm, xm, ym, e, d_ab, mode, trials=None) -> RegularityVerdict:
    if not is_violating_pair(g, am, bm, xm, ym, e):
        raise ContractViolation("regularity witness does not violate the definition")
    return RegularityVerdict(
        False,
        (VertexSet(xm), VertexSet(ym)),
        mode,
        d_ab,
        Fraction(edge_count_between(g, xm, ym), xm.bit_count() * ym.bit_count()),
        trials,
    )


def eps_regular_refute(
    g: Graph, a: SetLike, b: SetLike, eps: Real, trials: int = 10_000, seed: int = 0
) -> RegularityVerdict:
    """One-sided randomized regularity check for pairs above the exact cap.

    Each trial draws a threshold-size subset of one side (alternating) and
    pairs it with the most deviating threshold-size subset of the other.
    Returned witnesses are re-verified, so a regular pair is never refuted;
    ``regular=True`` only means no violation turned up in ``trials`` draws.
    """
    am, bm = _pair_masks(g, a, b)
    e = exact_rational(eps)
    if e <= 0:
        raise ValueError("eps must be positive")
    na, nb = am.bit_count(), bm.bit_count()
    d_ab = Fraction(edge_count_between(g, am, bm), na * nb)
    s, t = _threshold_size(e, na), _threshold_size(e, nb)
    if s > na or t > nb:
        return RegularityVerdict(True, None, "randomized", d_ab, trials=trials)
    rng = random.Random(seed)
    a_list, b_list = list(bits(am)), list(bits(bm))
    for trial in range(trials):
        flip = trial % 2 == 1
        src, dst, k, other_k = (b_list, am, t, s) if flip else (a_list, bm, s, t)
        sm = 0
        for v in rng.sample(src, k):
            sm |= 1 << v
        for sign in (1, -1):
            om, edges = _best_partner(g, sm, dst, other_k, sign)
            if sign * (Fraction(edges, s * t) - d_ab) >= e:
                xm, ym = (om, sm) if flip else (sm, om)
                xm, ym = _grow(g, am, bm, xm, ym, d_ab, sign)
                return _irregular(g, am, bm, xm, ym, e, d_ab, "randomized", trial + 1)
    return RegularityVerdict(True, None, "randomized", d_ab, trials=trials)


def _check_regular(
    g: Graph, a: int, b: int, eps: Real, mode: Mode, cap: int, trials: int, seed: int
) -> RegularityVerdict:
    if mode == "exact":
        return eps_regular_exact(g, a, b, eps, cap)
    if mode == "randomized":
        return eps_regular_refute(g, a, b, eps, trials, seed)
    raise ValueError(f"unknown regularity mode {mode!r}")


# -- parameters ----------------------------------------------------------------


@dataclass(frozen=True)
class SrlParams:
    p: int
    r: int
    xi: float
    c_pr: float
    delta: float
    d: float
    epsilon: float

    def violations(self) -> list[str]:
        out = []
        eps, d, delta, p = self.epsilon, self.d, self.delta, self.p
        if not (0 < 2 * eps < d < delta < 1):
            out.append("ordering 0 < 2eps < d < delta < 1")
        if not (d - eps) ** p > (p + 2) * eps:
            out.append("(d - eps)^p > (p + 2) eps")
        return out


def select_srl_parameters(p: int, r: int, xi: float, c_pr: float) -> SrlParams:
    """delta, d and eps for the regularity argument, validated.

    ``delta = min(xi^3/32, c(p)/4)``;
    ``d = min((delta/2)^(r+1) / (r/c_pr + 2r + 1 + 2p), p delta/(1 + p delta) / (r/c_pr + 2r + 1))``;
    ``eps = min(delta, d^p / (2(p+1)))``.
    """
    if p < 2 or r < 2:
        raise ValueError("p and r must be at least 2")
    if xi <= 0 or c_pr <= 0:
        raise ValueError("xi and c_pr must be positive")
    delta = min(xi**3 / 32, compute_c(p).c / 4)
    k = r / c_pr + 2 * r + 1
    d = min((delta / 2) ** (r + 1) / (k + 2 * p), p * delta / (1 + p * delta) / k)
    eps = min(delta, d**p / (2 * (p + 1)))
    params = SrlParams(p, r, float(xi), float(c_pr), delta, d, eps)
    bad = params.violations()
    if bad:
        raise ContractViolation(f"parameter invariants violated: {bad}")
    return params


# -- cluster graphs ------------------------------------------------------------


@dataclass(frozen=True)
class ClusterGraphs:
    k: int
    h_irr: Graph
    h_lo: Graph
    h_mid: Graph
    h_hi: Graph
    densities: dict[tuple[int, int], Fraction]

    def edge_counts(self) -> dict[str, int]:
        return {
            "irr": self.h_irr.edge_count,
            "lo": self.h_lo.edge_count,
            "mid": self.h_mid.edge_count,
            "hi": self.h_hi.edge_count,
        }


def classify_partition(
    g: Graph,
    part: Partition,
    params: SrlParams,
    mode: Mode = "exact",
    *,
    cap: int = DEFAULT_EXACT_CAP,
    trials: int = 2_000,
    seed: int = 0,
) -> ClusterGraphs:
    """Sort every pair of parts into irregular / low / mid / high density.

    low: regular with density <= d; mid: regular with d < density <= 1 - delta;
    high: regular with density > 1 - delta.
    """
    part.validate(g.n)
    k = part.k
    d_bar = exact_rational(params.d)
    hi_cut = 1 - exact_rational(params.delta)
    edges: dict[str, list[tuple[int, int]]] = {"irr": [], "lo": [], "mid": [], "hi": []}
    densities = {}
    for i, j in combinations(range(k), 2):
        a, b = part.parts[i].mask, part.parts[j].mask
        try:
            verdict = _check_regular(g, a, b, params.epsilon, mode, cap, trials, seed)
        except RegularityCapError as exc:
            raise RegularityCapError(f"pair ({i}, {j}): {exc}") from None
        dens = verdict.density
        densities[i, j] = dens
        if not verdict.regular:
            edges["irr"].append((i, j))
        elif dens <= d_bar:
            edges["lo"].append((i, j))
        elif dens <= hi_cut:
            edges["mid"].append((i, j))
        else:
            edges["hi"].append((i, j))
    cg = ClusterGraphs(
        k,
        Graph.from_edges(k, edges["irr"]),
        Graph.from_edges(k, edges["lo"]),
        Graph.from_edges(k, edges["mid"]),
        Graph.from_edges(k, edges["hi"]),
        densities,
    )
    if sum(cg.edge_counts().values()) != k * (k - 1) // 2:
        raise ContractViolation("cluster graphs do not partition the pairs")
    return cg


def cluster_book_bound(
    cg: ClusterGraphs, params: SrlParams, part_size_fraction: Optional[float] = None
) -> float:
    """Lower bound on ``bs^(r)(complement) / n`` from cluster statistics.

    ``f (1 - eps r / c_pr) [2 e_lo / k^2 (1 - d - eps)^r + 2 e_mid / k^2 (delta - eps)^r]``
    where ``f`` is the fraction of vertices covered by the parts, at least
    ``1 - eps`` for a regularity partition (used when not given).
    """
    eps, d, delta, r = params.epsilon, params.d, params.delta, params.r
    f = 1 - eps if part_size_fraction is None else part_size_fraction
    k2 = cg.k * cg.k
    lo = 2 * cg.h_lo.edge_count / k2 * (1 - d - eps) ** r
    mid = 2 * cg.h_mid.edge_count / k2 * (delta - eps) ** r
    return f * (1 - eps * r / params.c_pr) * (lo + mid)


# -- counting lemmas -------------------------------------------------------


class BadSetCount(NamedTuple):
    bad: int
    bound: float
    premise_ok: bool
    regular: Optional[bool]
    density: Fraction


def bad_rset_count(
    g: Graph,
    a: SetLike,
    y: SetLike,
    eps: Real,
    d: Real,
    r: int,
    b: Optional[SetLike] = None,
    *,
    cap: int = DEFAULT_EXACT_CAP,
) -> BadSetCount:
    """Count ``r``-subsets ``R`` of ``A`` whose common neighbourhood meets
    ``Y`` in at most ``(d - eps)^r |Y|`` vertices.

    ``b`` is the host side containing ``Y`` (defaults to ``Y``).  When
    ``(d - eps)^(r-1) |Y| > eps |B|``, ``0 < eps < d <= 1`` and ``(A, B)`` is
    ``eps``-regular with density at least ``d``, the count is at most
    ``eps r |A|^r``; a breach raises :class:`ContractViolation`.  Regularity
    is checked exactly when ``|A|, |B| <= cap`` and reported as None otherwise.
    """
    am, ym = as_mask(a), as_mask(y)
    bm = ym if b is None else as_mask(b)
    if ym & ~bm:
        raise ValueError("Y must be a subset of B")
    _pair_masks(g, am, bm)
    e, dd = exact_rational(eps), exact_rational(d)
    ny, nb, na = ym.bit_count(), bm.bit_count(), am.bit_count()
    cut = (dd - e) ** r * ny if dd > e else Fraction(-1)
    bad = 0
    rows = g.rows
    for rs in combinations(list(bits(am)), r):
        common = ym
        for u in rs:
            common &= rows[u]
        if common.bit_count() <= cut:
            bad += 1
    bound = float(e) * r * na**r
    premise_ok = 0 < e < dd <= 1 and (dd - e) ** (r - 1) * ny > e * nb
    density = pair_density(g, am, bm)
    regular: Optional[bool] = None
    if max(na, nb) <= cap:
        regular = eps_regular_exact(g, am, bm, e, cap).regular
    if premise_ok and regular and density >= dd and bad > e * r * na**r:
        raise ContractViolation(f"bad r-set count {bad} exceeds {bound}")
    return BadSetCount(bad, bound, premise_ok, regular, density)


class DleCount(NamedTuple):
    actual: int
    bound: float
    m: int
    pairs_ok: bool
    premise_weak: bool
    premise_strong: bool

    @property
    def premises_hold(self) -> bool:
        return self.pairs_ok and self.premise_strong


def counting_bound_dle(
    g: Graph,
    a: SetLike,
    bs: Sequence[SetLike],
    eps: Real,
    d: Real,
    r: int,
    *,
    cap: int = DEFAULT_EXACT_CAP,
) -> DleCount:
    """Count ``(r+1)``-cliques with ``r`` vertices in ``A`` and one in the ``B_i``.

    The lower bound is ``t |A| (m - eps r |A|^r) (d - eps)^r`` with ``m`` the
    number of ``r``-cliques inside ``A``.  Both forms of the side condition
    are reported: ``(d-eps)^(r-2) > eps`` (weak) and ``(d-eps)^(r-1) > eps``
    (strong, what the supporting count actually needs).  The bound is
    enforced when every pair is ``eps``-regular with density at least ``d``
    and the strong condition holds.
    """
    am = as_mask(a)
    b_masks = [as_mask(x) for x in bs]
    na = am.bit_count()
    if any(bm.bit_count() != na for bm in b_masks):
        raise ValueError("A and every B_i must have the same size")
    seen = am
    for bm in b_masks:
        if seen & bm:
            raise ValueError("A and the B_i must be pairwise disjoint")
        seen |= bm
    if seen >> g.n:
        raise ValueError("sets must lie in [n]")
    e, dd = exact_rational(eps), exact_rational(d)
    union = 0
    for bm in b_masks:
        union |= bm
    actual = sum(common.bit_count() for _, common in _cliques_with_common(g, am, r, union))
    m = count_cliques(induced(g, am), r) if na >= r else 0
    t = len(b_masks)
    bound = t * na * (m - float(e) * r * na**r) * float(dd - e) ** r
    exact_bound = t * na * (m - e * r * na**r) * (dd - e) ** r
    pairs_ok = 0 < e < dd <= 1 and all(
        pair_density(g, am, bm) >= dd and eps_regular_exact(g, am, bm, e, cap).regular
        for bm in b_masks
    )
    weak = dd > e and (dd - e) ** (r - 2) > e
    strong = dd > e and (dd - e) ** (r - 1) > e
    result = DleCount(actual, bound, m, pairs_ok, weak, strong)
    if result.premises_hold and actual < exact_bound:
        raise ContractViolation(f"(r+1)-clique count {actual} below bound {bound}")
    return result


def _cliques_with_common(g: Graph, within: int, r: int, target: int):
    for clique, common in iter_cliques(g, r, within=VertexSet(within)):
        yield clique, common & target


@dataclass(frozen=True)
class KeyLemmaResult:
    premises_hold: bool
    failed_premise: Optional[str]
    witness: Optional[tuple[int, ...]]


def key_lemma_check(
    g: Graph, parts: Sequence[SetLike], eps: Real, d: Real, *, cap: int = DEFAULT_EXACT_CAP
) -> KeyLemmaResult:
    """Find a transversal ``K_{p+1}`` across ``p + 1`` dense regular parts.

    Premises: ``0 < eps < d < 1``, every pair ``eps``-regular (exact) with
    density at least ``d``, and ``eps <= (d - eps)^p / (p + 2)``.  Under them
    a clique with one vertex per part must exist; not finding one raises
    :class:`ContractViolation`.
    """
    masks = [as_mask(x) for x in parts]
    if len(masks) < 2:
        raise ValueError("need at least two parts")
    sizes = {m.bit_count() for m in masks}
    if len(sizes) != 1 or 0 in sizes:
        raise ValueError("parts must be nonempty and of equal size")
    seen = 0
    for m in masks:
        if seen & m:
            raise ValueError("parts must be disjoint")
        seen |= m
    p = len(masks) - 1
    e, dd = exact_rational(eps), exact_rational(d)

    def fail(why: str) -> KeyLemmaResult:
        return KeyLemmaResult(False, why, None)

    if not 0 < e < dd < 1:
        return fail("0 < eps < d < 1")
    if e > (dd - e) ** p / (p + 2):
        return fail("eps <= (d - eps)^p / (p + 2)")
    for i, j in combinations(range(p + 1), 2):
        if pair_density(g, masks[i], masks[j]) < dd:
            return fail(f"density of pair ({i}, {j}) >= d")
        if not eps_regular_exact(g, masks[i], masks[j], e, cap).regular:
            return fail(f"pair ({i}, {j}) eps-regular")

    rows = g.rows

    def rec(i: int, allowed: int, chosen: tuple[int, ...]) -> Optional[tuple[int, ...]]:
        if i == len(masks):
            return chosen
        # most constrained vertices first keeps backtracking shallow
        cands = sorted(bits(masks[i] & allowed), key=lambda v: -(rows[v] & allowed).bit_count())
        for v in cands:
            found = rec(i + 1, allowed & rows[v], chosen + (v,))
            if found is not None:
                return found
        return None

    witness = rec(0, g.vertex_mask, ())
    if witness is None:
        raise ContractViolation("key lemma premises hold but no transversal clique exists")
    return KeyLemmaResult(True, None, witness)


# -- independent r-set density -------------------------------------------------

# r(K_a, K_b) for the small cases that are known exactly
_RAMSEY = {
    (3, 3): 6, (3, 4): 9, (3, 5): 14, (3, 6): 18, (3, 7): 23, (3, 8): 28, (3, 9): 36,
    (4, 4): 18, (4, 5): 25,
}


def ramsey_floor(a: int, b: int) -> int:
    """Classical ``r(K_a, K_b)`` where known."""
    a, b = sorted((a, b))
    if a <= 1:
        return 1
    if a == 2:
        return b
    try:
        return _RAMSEY[a, b]
    except KeyError:
        raise ValueError(f"r(K_{a}, K_{b}) is not tabulated") from None


class RsetDensity(NamedTuple):
    density: Fraction
    graph: Graph
    searched: int
    mode: str


def _greedy_clique_free(n: int, k: int, rng: random.Random) -> Graph:
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    rows = [0] * n
    for u, v in pairs:
        common = rows[u] & rows[v]
        # uv closes a K_k iff u and v share a (k-2)-clique
        if common.bit_count() >= k - 2 and find_clique(
            Graph(n, tuple(rows)), k - 2, within=VertexSet(common)
        ) is not None:
            continue
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def independent_rset_density(
    p: int,
    r: int,
    n: int,
    mode: Literal["exhaustive", "random"] = "exhaustive",
    budget: int = 200,
    seed: int = 0,
) -> RsetDensity:
    """Minimum of ``#independent r-sets / n^r`` over ``K_{p+1}``-free graphs of order ``n``.

    Exhaustive mode runs over every isomorphism class (``n <= 8``) and gives
    the exact minimum at this order.  Random mode takes the minimum over
    ``budget`` seeded random maximal ``K_{p+1}``-free graphs, an upper
    estimate of that minimum.  Either way the value is an order-``n``
    empirical figure, not the asymptotic constant.
    """
    if p < 2 or r < 2:
        raise ValueError("p and r must be at least 2")
    floor = ramsey_floor(p + 1, r)
    if n < floor:
        raise ValueError(f"n={n} is below r(K_{p + 1}, K_{r}) = {floor}")
    if mode == "exhaustive":
        if n > 8:
            raise ValueError("exhaustive mode is capped at n <= 8")
        graphs = clique_free_graphs(n, p + 1)
    elif mode == "random":
        rng = random.Random(seed)
        graphs = [_greedy_clique_free(n, p + 1, rng) for _ in range(budget)]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    best: Optional[tuple[int, Graph]] = None
    for h in graphs:
        cnt = count_independent_rsets(h, r)
        if best is None or cnt < best[0]:
            best = (cnt, h)
    assert best is not None
    return RsetDensity(Fraction(best[0], n**r), best[1], len(graphs), mode)
