"""
Translating a signal on a graph
===============================

Build a small graph, look at its graph frequencies and move an impulse
around with the exact translation operator of each kind.
"""

import numpy as np

from graph_translation import apply_exact, build_exact, frequencies, generate, graph_basis, operator_matrix

# On the two-vertex path the Laplacian translation swaps the vertices
k2 = generate("path", 2)
print("2-path, laplacian:\n", np.round(operator_matrix(build_exact(k2, "laplacian")).real, 12))
print("2-path, adjacency:\n", np.round(operator_matrix(build_exact(k2, "adjacency")).real, 12))

# A ring of 12 vertices: reduced frequencies of the three base matrices
g = generate("cycle", 12)
for kind in ("laplacian", "normalized_laplacian", "adjacency"):
    f = frequencies(graph_basis(g, kind))
    print(f"{kind:>21}: nu =", np.array2string(f.nu, precision=3))

# Translating an impulse preserves its energy but spreads it out
delta = np.zeros(g.n)
delta[0] = 1.0
op = build_exact(g, "laplacian", alpha=1.0)
y = apply_exact(op, delta)
print("energy per vertex:", np.array2string(np.abs(y) ** 2, precision=3))
print("norm before/after:", np.linalg.norm(delta), np.linalg.norm(y))

# Applying alpha then beta equals applying alpha + beta
y2 = apply_exact(build_exact(g, "laplacian", 0.4), apply_exact(build_exact(g, "laplacian", 0.6), delta))
print("group law residual:", np.max(np.abs(y2 - y)))
