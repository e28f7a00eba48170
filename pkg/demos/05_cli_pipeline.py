"""
End-to-end run through the command line
=======================================

Generate a graph, translate an impulse exactly and approximately, and
write the bound and localization tables as CSV in a scratch directory.
"""

import tempfile
from pathlib import Path

from graph_translation.cli import main

out = Path(tempfile.mkdtemp())
graph = out / "geo.edges"

main(["gen", "--type", "geometric", "--n", "60", "--radius", "0.25", "--seed", "4", "-o", str(graph)])
main(["translate", str(graph), "--exact", "--orders", "5,1", "--impulse", "3", "-o", str(out / "y.csv")])
main(["bounds", "--kind", "laplacian", "--rho", "0.1", "--p-range", "0:10", "--q-range", "0:4",
      "-o", str(out / "laplacian_bounds.csv")])
main(["bounds", "--kind", "adjacency", "--k-range", "0:12", "-o", str(out / "adjacency_bounds.csv")])
main(["minorder", "--xi", "0.5,0.1,0.01,0.001,0.0001", "--alpha", "1,2,4", "-o", str(out / "min_orders.csv")])
main(["localize", str(graph), "--vertex", "3", "-o", str(out / "profile.csv")])

for p in sorted(out.iterdir()):
    print(f"--- {p.name}")
    print("\n".join(p.read_text().splitlines()[:6]))
