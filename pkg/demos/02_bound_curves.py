"""
Error-bound curves for the truncated translations
=================================================

Tabulate the closed-form approximation bounds for a hypothetical spectral
gap of 0.1, then ask for the smallest polynomial order reaching a target.
"""

from graph_translation import min_order_search, total_bound_adjacency, total_bound_laplacian

# Adjacency translation: the bound falls below one at K = 7
for K in range(0, 13):
    print(f"K={K:2d}  bound={total_bound_adjacency(K, 1.0):.4g}")

# Laplacian translation: each fixed Q levels off as P grows
print("\n P " + "".join(f"      Q={Q}" for Q in range(4)))
for P in range(0, 11):
    row = [total_bound_laplacian(P, Q, 1.0, rho=0.1).total_paper for Q in range(4)]
    print(f"{P:2d} " + "".join(f" {v:9.3g}" for v in row))

# Published, corrected and eigenvalue-exact bounds side by side
rep = total_bound_laplacian(5, 1, 1.0, rho=0.1)
print("\n(5,1): published", f"{rep.total_paper:.4g}", "corrected", rep.corrected_total, "dc term", f"{rep.dc_term:.4g}")

# Minimal P + Q for a few targets and diffusion factors
for alpha in (0.5, 1.0, 2.0):
    found = [min_order_search(xi, alpha, 0.1) for xi in (0.5, 0.1, 0.01, 1e-3, 1e-4)]
    print(f"alpha={alpha}:", [(r.order, r.P, r.Q) for r in found])
