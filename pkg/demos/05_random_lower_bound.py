"""Parameters, probability bounds and Monte-Carlo witnesses for r(K_m, B_{m^k}^(r))."""
import math

from genbooks.lower_bound import (
    bound_book_probability,
    bound_km_probability,
    chernoff_tail,
    empirical_tail,
    lb_parameters,
    monte_carlo_witness,
)

for m, k, r in [(20, 1, 2), (50, 1, 2), (30, 1, 3)]:
    lp = lb_parameters(m, k, r)
    km, book = bound_km_probability(lp), bound_book_probability(lp)
    print(
        f"(m,k,r)=({m},{k},{r}) C={lp.C} c={lp.c} N={lp.N} P={lp.edge_prob_complement:.4f} "
        f"P(K_m)<={km.value:.3g} book bound={book.value:.3g} last factor={book.last_factor:.4f} (e/3={math.e / 3:.4f})"
    )

# The book bound only becomes useful once m is large: it grows until about
# m = 50 before the last factor's m^k-th power takes over.
for m in (20, 30, 40, 50, 60, 100, 200):
    print(f"  m={m:3d}  book bound {bound_book_probability(lb_parameters(m, 1, 2)).value:.4g}")

print("Chernoff (e/3)^30 =", chernoff_tail(100, 0.1, 30), " simulated:", empirical_tail(100, 0.1, 30, 10**5, 0))

stats = monte_carlo_witness(lb_parameters(20, 1, 2), trials=50, seed=0)
print(f"m=20: {stats.witnesses}/{stats.trials} samples show r(K20, B20^(2)) > 18; first at trial {stats.best_trial}")
