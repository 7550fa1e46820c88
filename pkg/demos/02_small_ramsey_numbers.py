"""Certify a few r(K_{p+1}, B_q^(r)) exactly and compare with p(q+r-1)+1."""
import time

from genbooks import serialize_graph6
from genbooks.ramsey import RamseySearchCapError, ramsey_number

for p, q, r in [(2, 1, 1), (2, 2, 1), (2, 1, 2), (2, 2, 2), (2, 3, 2), (2, 1, 3), (3, 1, 2)]:
    t = time.perf_counter()
    cert = ramsey_number(p, q, r)
    nodes = sum(v.graphs_examined for v in cert.search_log)
    print(
        f"r(K{p + 1}, B{q}^({r})) = {cert.value:2d}   formula {cert.formula:2d}   "
        f"witness {serialize_graph6(cert.witness):8s} {nodes:6d} nodes  {time.perf_counter() - t:.2f}s"
    )

# q = 1 is far from "sufficiently large": r(K3, K3) = 6 beats the formula's 5.
# Beyond the default cap the search stops and reports what it did establish:
# every order up to 9 has a verified counterexample for (2, 2, 3), so that
# value is at least 10, above the formula's 9.
try:
    ramsey_number(2, 2, 3)
except RamseySearchCapError as exc:
    print(exc, "- lower bound from the partial log:", exc.lower_bound)
