"""Random lower-bound witnesses for ``r(K_m, B_{m^k}^(r))``.

The random model is ``G(N, 1 - P)`` with ``P = (C/m) log m`` and
``C = 2(k + r - 1)``, so the complement is ``G(N, P)``.  Logarithms are
natural throughout.  Bounds are evaluated in log space with ``lgamma``
binomials.

Sampling uses a fixed generator so results do not depend on platform or
library versions: xorshift64* seeded through splitmix64, with one
independent stream per trial index (``state = splitmix64(seed ^
splitmix64(stream))``).  Parallel and serial runs therefore see the same
graphs.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

import numpy as np

from .cliques import contains_book, find_clique
from .graph import Graph, complement
from .stability import ContractViolation

__all__ = [
    "LbParams",
    "TrialStats",
    "KmBound",
    "BookBound",
    "XorShift64Star",
    "splitmix64",
    "lb_parameters",
    "chernoff_tail",
    "empirical_tail",
    "bound_km_probability",
    "bound_book_probability",
    "sample_random_graph",
    "monte_carlo_witness",
    "MAX_SAMPLE_ORDER",
]

MASK64 = (1 << 64) - 1
MAX_SAMPLE_ORDER = 400


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


class XorShift64Star:
    """xorshift64* (shifts 12, 25, 27; multiplier 0x2545F4914F6CDD1D)."""

    def __init__(self, seed: int, stream: int = 0):
        state = splitmix64((seed & MASK64) ^ splitmix64(stream & MASK64))
        self.state = state or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def random(self) -> float:
        """Uniform double in ``[0, 1)`` from the top 53 bits."""
        return (self.next_u64() >> 11) * 2.0**-53


def sample_random_graph(n: int, edge_prob: float, seed: int, stream: int = 0) -> Graph:
    """``G(n, edge_prob)``: pairs visited in row order, one draw per pair,
    edge present iff the draw is below ``edge_prob``."""
    if not 0 <= edge_prob <= 1:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = XorShift64Star(seed, stream)
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < edge_prob:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


@dataclass(frozen=True)
class LbParams:
    m: int
    k: int
    r: int
    C: int
    c: Fraction
    N: int
    edge_prob_complement: float

    @property
    def book_size(self) -> int:
        return self.m**self.k


def lb_parameters(m: int, k: int, r: int) -> LbParams:
    """``C = 2(k+r-1)``, ``c = 1/(3 C^r)``, ``N = floor(c m^(k+r) / (log m)^r)``,
    ``P = (C/m) log m``; rejected when ``P >= 1``."""
    if m < 3 or k < 1 or r < 2:
        raise ValueError("need m >= 3, k >= 1, r >= 2")
    C = 2 * (k + r - 1)
    c = Fraction(1, 3 * C**r)
    log_m = math.log(m)
    prob = C / m * log_m
    if prob >= 1:
        threshold = m
        while C * math.log(threshold) / threshold >= 1:
            threshold += 1
        raise ValueError(
            f"m too small for C={C}: edge probability {prob:.4f} >= 1 (need m >= {threshold})"
        )
    N = math.floor(float(c) * m ** (k + r) / log_m**r)
    if N < 1:
        raise ValueError(f"N = {N} < 1 for (m, k, r) = ({m}, {k}, {r})")
    return LbParams(m, k, r, C, c, N, prob)


def chernoff_tail(n: int, prob: float, M: float) -> float:
    """``(n prob e / M)^M``, an upper bound on ``P(Bin(n, prob) >= M)`` for ``M >= n prob``."""
    mean = n * prob
    if M < mean:
        raise ValueError(f"need M >= n*prob = {mean}")
    if M == 0:
        return 1.0
    if mean == 0:
        return 0.0
    return math.exp(M * math.log(mean * math.e / M))


def empirical_tail(n: int, prob: float, M: float, trials: int, seed: int) -> float:
    """Monte-Carlo frequency of ``Bin(n, prob) >= M`` (numpy PCG64)."""
    rng = np.random.default_rng(seed)
    draws = rng.binomial(n, prob, size=trials)
    return float(np.mean(draws >= M))


def _log_binom(n: int, k: int) -> float:
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


class KmBound(NamedTuple):
    value: float
    log_value: float
    weak_form: float
    log_weak_form: float


def bound_km_probability(params: LbParams) -> KmBound:
    """``binom(N, m) (1 - P)^C(m,2)`` and the cruder
    ``(N e^(1 + P/2) m^-(k+r-1) / m)^m`` that dominates it."""
    N, m, P = params.N, params.m, params.edge_prob_complement
    log_weak = m * (math.log(N) + 1 + P / 2 - (params.k + params.r - 1) * math.log(m) - math.log(m))
    if N < m:
        return KmBound(0.0, -math.inf, math.exp(log_weak), log_weak)
    log_value = _log_binom(N, m) + m * (m - 1) / 2 * math.log1p(-P)
    return KmBound(math.exp(log_value), log_value, math.exp(log_weak), log_weak)


class BookBound(NamedTuple):
    value: float
    log_value: float
    last_factor: float


def bound_book_probability(params: LbParams) -> BookBound:
    """``binom(N, r) P^(r(r-1)/2) ((N - r) P^r e / m^k)^(m^k)`` and its last factor.

    With ``c = 1/(3 C^r)`` the last factor is at most ``e/3``.
    """
    N, r, P = params.N, params.r, params.edge_prob_complement
    mk = params.book_size
    last = (N - r) * P**r * math.e / mk
    if N <= r:
        return BookBound(0.0, -math.inf, last)
    log_value = _log_binom(N, r) + r * (r - 1) / 2 * math.log(P) + mk * math.log(last)
    return BookBound(math.exp(log_value), log_value, last)


@dataclass(frozen=True)
class TrialStats:
    trials: int
    clique_hits: int
    book_hits: int
    witnesses: int
    best_witness: Optional[Graph]
    best_trial: Optional[int]
    seed: int


def _run_trials(
    params: LbParams, q_target: int, seed: int, start: int, stop: int
) -> tuple[int, int, int, Optional[int]]:
    clique_hits = book_hits = witnesses = 0
    first: Optional[int] = None
    edge_prob = 1 - params.edge_prob_complement
    for t in range(start, stop):
        g = sample_random_graph(params.N, edge_prob, seed, stream=t)
        has_clique = params.N >= params.m and find_clique(g, params.m) is not None
        has_book = contains_book(complement(g), q_target, params.r)
        clique_hits += has_clique
        book_hits += has_book
        if not has_clique and not has_book:
            witnesses += 1
            if first is None:
                first = t
    return clique_hits, book_hits, witnesses, first


def _chunk_task(args):
    return _run_trials(*args)


def monte_carlo_witness(
    params: LbParams,
    q_target: Optional[int] = None,
    trials: int = 100,
    seed: int = 0,
    *,
    threads: int = 1,
    max_order: int = MAX_SAMPLE_ORDER,
) -> TrialStats:
    """Sample ``G(N, 1 - P)`` and look for graphs with no ``K_m`` whose
    complement has no ``B_{q_target}^(r)``; each one shows
    ``r(K_m, B_{q_target}^(r)) > N``.  The lowest-index witness is kept and
    re-verified."""
    q = params.book_size if q_target is None else q_target
    if q < 1:
        raise ValueError("q_target must be positive")
    if params.N > max_order:
        raise ValueError(f"N = {params.N} exceeds the sampling cap {max_order}")
    if threads > 1 and trials > 1:
        step = -(-trials // threads)
        chunks = [(params, q, seed, s, min(s + step, trials)) for s in range(0, trials, step)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_chunk_task, chunks))
    else:
        parts = [_run_trials(params, q, seed, 0, trials)]
    clique_hits = sum(x[0] for x in parts)
    book_hits = sum(x[1] for x in parts)
    witnesses = sum(x[2] for x in parts)
    firsts = [x[3] for x in parts if x[3] is not None]
    best_trial = min(firsts) if firsts else None
    best = None
    if best_trial is not None:
        best = sample_random_graph(params.N, 1 - params.edge_prob_complement, seed, stream=best_trial)
        if (params.N >= params.m and find_clique(best, params.m) is not None) or contains_book(
            complement(best), q, params.r
        ):
            raise ContractViolation("retained witness fails re-verification")
    return TrialStats(trials, clique_hits, book_hits, witnesses, best, best_trial, seed)
