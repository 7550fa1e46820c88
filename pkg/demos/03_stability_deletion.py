"""The slack constant c(p) and the one-pass low-degree deletion."""
import random

from genbooks import Graph, complete_multipartite
from genbooks.stability import compute_c, extract_stable_subgraph

print(" p   c(p)          lower         upper         c/approx")
for p in range(2, 11):
    k = compute_c(p)
    print(f"{p:2d}   {k.c:.6e}  {k.lower:.6e}  {k.upper:.6e}  {k.c / k.approx:.3f}")
print("upper bound for p=2 is 20^-3:", compute_c(2).upper == 20.0**-3)

# K_{50,50} minus an edge sits exactly on the edge-count boundary for
# alpha = 1e-4.  That alpha is above c(2), so the deletion guarantee makes no promise,
# but the guarantees still hold here.
g = complete_multipartite([50, 50])
g = Graph.from_edges(100, [e for e in g.edges() if e != (0, 50)])
res = extract_stable_subgraph(g, 2, 1e-4)
print(
    f"K50,50-e: edges={g.edge_count} edge condition={res.edge_condition_met} "
    f"alpha admissible={res.alpha_admissible} deleted={len(res.deleted)} "
    f"threshold={res.threshold:.3f} bipartite={res.p_chromatic}"
)

# A tripartite graph with a few low-degree intruders attached: those get cut.
rng = random.Random(1)
base = complete_multipartite([30, 30, 30])
edges = list(base.edges()) + [(90 + i, rng.randrange(90)) for i in range(3)]
g = Graph.from_edges(93, edges)
res = extract_stable_subgraph(g, 3, 1e-4, cap=100)
print(f"tripartite + 3 pendants: deleted {res.deleted.to_list()}, kept 3-colourable={res.p_chromatic}")
