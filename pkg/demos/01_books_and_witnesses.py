"""Book sizes, and why K_p(q+r-1) is the natural extremal graph."""
from genbooks import book_size, complement, complete, cycle, serialize_graph6
from genbooks.ramsey import build_witness, formula_value, verify_witness

# A triangle is the book B_1^(2): an edge base with one page.
bm = book_size(complete(3), 2)
print("K3:", bm)

# In K_7 every triangle sees the other four vertices.
print("bs^(3)(K7) =", book_size(complete(7), 3).size)

# The 5-cycle has no triangle, so its 2-book size is 0 by convention.
print("bs^(2)(C5) =", book_size(cycle(5), 2).size)

# K_p(q+r-1) has no K_{p+1}, and its complement is p disjoint cliques of
# order q+r-1, where every r-clique has exactly q-1 common neighbours.
for p, q, r in [(2, 2, 2), (2, 3, 2), (3, 2, 3)]:
    g = build_witness(p, q, r)
    print(
        f"p={p} q={q} r={r}: order {g.n} = formula-1 = {formula_value(p, q, r) - 1}, "
        f"verified={verify_witness(g, p, q, r)}, "
        f"bs(complement)={book_size(complement(g), r).size}, graph6={serialize_graph6(g)}"
    )
