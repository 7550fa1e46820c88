"""Exact and randomized regularity checks, and a tiny cluster classification."""
from genbooks import Graph, complete_multipartite
from genbooks.regularity import (
    Partition,
    classify_partition,
    eps_regular_exact,
    eps_regular_refute,
    select_srl_parameters,
)


def half_split(h):
    edges = [(u, v) for u in range(h) for v in range(2 * h, 3 * h)]
    edges += [(u, v) for u in range(h, 2 * h) for v in range(3 * h, 4 * h)]
    return Graph.from_edges(4 * h, edges), range(2 * h), range(2 * h, 4 * h)


g, a, b = half_split(4)
v = eps_regular_exact(g, a, b, 0.3)
print("8+8 half split, eps=0.3:", "regular" if v.regular else "irregular", v.witness, v.witness_density)

g, a, b = half_split(16)
v = eps_regular_refute(g, a, b, 0.3, trials=10_000, seed=0)
print("32+32 half split refuted after", v.trials, "trials; witness density", v.witness_density)

# The proof's parameters are tiny even for friendly inputs.
s = select_srl_parameters(2, 2, 0.5, 1 / 6)
print(f"delta={s.delta:.3e} d={s.d:.3e} eps={s.epsilon:.3e}")

g = complete_multipartite([4, 4, 4])
cg = classify_partition(g, Partition.of([], [range(4), range(4, 8), range(8, 12)]), s)
print("K_3(4) cluster graphs:", cg.edge_counts())
