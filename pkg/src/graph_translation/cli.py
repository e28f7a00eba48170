"""Command line front end.

Every subcommand writes CSV (or an edge list for ``gen``) to ``-o`` or to
stdout. Exit codes: 0 success, 2 invalid input, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from . import io
from .approx import apply_approx, scaled_matrix
from .bounds import (
    empirical_sup_error,
    min_order_search,
    total_bound_adjacency,
    total_bound_laplacian,
)
from .exact import apply_exact, from_basis
from .graph import GENERATORS, GraphError, generate, require_connected
from .localization import decay_report, impulse_profile
from .spectral import KINDS, LAPLACIAN_KINDS, SpectralError, frequencies, graph_basis, spectral_gap

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC = 0, 2, 3

FORMATS = """\
file formats:
  edge list   one 'u v [w]' per line, 0-based ids, w defaults to 1, '#' comments,
              optional 'n <count>' line
  signal CSV  index,re,im
  floats are written with 17 significant digits
"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _int_range(text: str) -> range:
    """Inclusive ``a:b`` (or a single integer)."""
    try:
        if ":" in text:
            a, b = (int(t) for t in text.split(":"))
        else:
            a = b = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a:b', got {text!r}") from None
    if a < 0 or b < a:
        raise argparse.ArgumentTypeError(f"range must satisfy 0 <= a <= b, got {text!r}")
    return range(a, b + 1)


def _float_list(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _orders(text: str) -> tuple[int, int]:
    try:
        P, Q = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'P,Q', got {text!r}") from None
    if P < 0 or Q < 0:
        raise argparse.ArgumentTypeError("orders must be nonnegative")
    return P, Q


def _positive(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return v


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="graph-translation",
        description="Graph translation operators, their polynomial approximations and error bounds.",
        epilog=FORMATS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_, extra=""):
        return sub.add_parser(
            name, help=help_, description=help_, epilog=(extra + "\n" + FORMATS).strip() + "\n",
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )

    g = add("gen", "generate a connected graph as an edge list",
            "random kinds use numpy's default_rng(seed) and retry seed+1, seed+2, ... until connected")
    g.add_argument("--type", required=True, choices=list(GENERATORS) + ["erdos"])
    g.add_argument("--n", type=int, help="vertex count (all kinds except grid)")
    g.add_argument("--rows", type=int)
    g.add_argument("--cols", type=int)
    g.add_argument("--p", type=float, help="edge probability (erdos)")
    g.add_argument("--radius", type=float, help="connection radius in the unit square (geometric)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--weight-range", type=_float_list, metavar="LO,HI",
                   help="uniform random weights instead of unit weights")
    g.add_argument("-o", "--output")

    t = add("translate", "apply the exact or truncated translation to a signal",
            "with --exact and an approximation order, the approximation is written and the\n"
            "normalized error ||y_exact - y_approx|| / ||x|| is printed with the bounds")
    t.add_argument("graph")
    t.add_argument("--kind", choices=KINDS, default="laplacian")
    t.add_argument("--alpha", type=_positive, default=1.0)
    t.add_argument("--exact", action="store_true")
    t.add_argument("--orders", type=_orders, metavar="P,Q", help="Laplacian kinds: trig and square-root orders")
    t.add_argument("--order", type=int, metavar="K", help="adjacency kind truncation order")
    src = t.add_mutually_exclusive_group(required=True)
    src.add_argument("--signal", help="input signal CSV")
    src.add_argument("--impulse", type=int, metavar="I", help="unit impulse at vertex I")
    t.add_argument("-o", "--output")

    b = add("bounds", "tabulate error bounds over a grid of orders",
            "ranges are inclusive 'a:b'; Laplacian kinds take --p-range/--q-range, adjacency --k-range;\n"
            "--graph adds the eigenvalue-exact oracle column")
    b.add_argument("--kind", choices=KINDS, default="laplacian")
    b.add_argument("--alpha", type=_positive, default=1.0)
    which = b.add_mutually_exclusive_group()
    which.add_argument("--rho", type=float, help="hypothetical spectral gap in (0, 1]")
    which.add_argument("--graph", help="edge list; its spectral gap is used and the oracle is added")
    b.add_argument("--p-range", type=_int_range, default=_int_range("0:10"))
    b.add_argument("--q-range", type=_int_range, default=_int_range("0:4"))
    b.add_argument("--k-range", type=_int_range, default=_int_range("0:12"))
    b.add_argument("-o", "--output")

    m = add("minorder", "minimal P+Q meeting target errors xi")
    m.add_argument("--xi", type=_float_list, required=True, help="comma-separated targets in (0, 1]")
    m.add_argument("--alpha", type=_float_list, default=[1.0], help="comma-separated alphas")
    m.add_argument("--rho", type=float, default=0.1)
    m.add_argument("--cap", type=int, default=512)
    m.add_argument("-o", "--output")

    lz = add("localize", "hop-radius energy profile of a translated impulse")
    lz.add_argument("graph")
    lz.add_argument("--kind", choices=KINDS, default="laplacian")
    lz.add_argument("--alpha", type=_positive, default=1.0)
    lz.add_argument("--vertex", type=int, default=0)
    lz.add_argument("--radius", type=int, default=None, help="report at least this many hops")
    lz.add_argument("-o", "--output")

    s = add("spectrum", "eigenvalues and reduced frequencies of a graph")
    s.add_argument("graph")
    s.add_argument("--kind", choices=KINDS, default="laplacian")
    s.add_argument("-o", "--output")
    return p


def cmd_gen(args) -> int:
    wr = args.weight_range
    if wr is not None and len(wr) != 2:
        raise GraphError("--weight-range needs LO,HI")
    g = generate(args.type, args.n, rows=args.rows, cols=args.cols, p=args.p, radius=args.radius,
                 seed=args.seed, weight_range=tuple(wr) if wr else None)
    _emit(io.dump_graph(g), args.output)
    return EXIT_OK


def cmd_translate(args) -> int:
    g = io.read_graph(args.graph)
    require_connected(g)
    adjacency = args.kind == "adjacency"
    if adjacency and args.orders is not None:
        raise GraphError("--orders applies to the Laplacian kinds; use --order K")
    if not adjacency and args.order is not None:
        raise GraphError("--order applies to the adjacency kind; use --orders P,Q")
    order = args.order if adjacency else args.orders
    if order is None and not args.exact:
        raise GraphError("request --exact and/or an approximation order")
    if args.impulse is not None:
        if not 0 <= args.impulse < g.n:
            raise GraphError(f"impulse vertex {args.impulse} outside [0, {g.n})")
        x = np.zeros(g.n, dtype=complex)
        x[args.impulse] = 1.0
    else:
        x = io.load_signal(Path(args.signal).read_text(), g.n)

    basis = graph_basis(g, args.kind)
    y_exact = apply_exact(from_basis(basis, args.alpha), x) if args.exact else None
    if order is None:
        _emit(io.dump_signal(y_exact), args.output)
        return EXIT_OK
    M = scaled_matrix(g, args.kind, basis)
    y = apply_approx(M, order, args.alpha, x)
    _emit(io.dump_signal(y), args.output)
    if y_exact is not None:
        norm = np.linalg.norm(x)
        err = np.linalg.norm(y_exact - y) / norm if norm > 0 else 0.0
        eigs = basis.scaled_eigenvalues()
        if adjacency:
            oracle = empirical_sup_error("adjacency", order, args.alpha, eigs)
            published = total_bound_adjacency(order, args.alpha)
        else:
            rep = total_bound_laplacian(*order, args.alpha, M.epsilon, scaled_eigenvalues=eigs)
            dc = abs(basis.gft(x)[0]) / norm if norm > 0 else 0.0
            oracle = rep.oracle + rep.dc_term * dc
            published = rep.total_paper
        stream = sys.stderr if args.output in (None, "-") else sys.stdout
        print(f"error {io.fmt(err)}", file=stream)
        print(f"oracle_bound {io.fmt(oracle)}", file=stream)
        print(f"paper_bound {io.fmt(published)}", file=stream)
    return EXIT_OK


def cmd_bounds(args) -> int:
    eigs = None
    rho = args.rho
    if args.graph is not None:
        g = io.read_graph(args.graph)
        require_connected(g)
        basis = graph_basis(g, args.kind)
        eigs = basis.scaled_eigenvalues()
        if args.kind in LAPLACIAN_KINDS:
            rho, _ = spectral_gap(basis)

    if args.kind == "adjacency":
        header = ["K", "alpha", "bound"] + (["oracle"] if eigs is not None else [])
        rows = []
        for K in args.k_range:
            row = [K, args.alpha, total_bound_adjacency(K, args.alpha)]
            if eigs is not None:
                row.append(empirical_sup_error("adjacency", K, args.alpha, eigs))
            rows.append(row)
        _emit(io.dump_csv(header, rows), args.output)
        return EXIT_OK

    if rho is None:
        raise GraphError("Laplacian kinds need --rho or --graph")
    if not 0.0 < rho <= 1.0:
        raise GraphError(f"--rho must lie in (0, 1], got {rho}")
    header = ["P", "Q", "alpha", "rho", "kappa_C", "kappa_S", "kappa_R", "total_paper",
              "corrected_total", "dc_term"] + (["oracle"] if eigs is not None else [])
    rows = []
    for P in args.p_range:
        for Q in args.q_range:
            rep = total_bound_laplacian(P, Q, args.alpha, rho=rho, scaled_eigenvalues=eigs)
            row = [P, Q, args.alpha, rho, rep.kappa_C, rep.kappa_S, rep.kappa_R, rep.total_paper,
                   rep.corrected_total, rep.dc_term]
            if eigs is not None:
                row.append(rep.oracle)
            rows.append(row)
    _emit(io.dump_csv(header, rows), args.output)
    return EXIT_OK


def cmd_minorder(args) -> int:
    if any(not 0.0 < xi <= 1.0 for xi in args.xi):
        raise GraphError("--xi values must lie in (0, 1]")
    if any(not a > 0 for a in args.alpha):
        raise GraphError("--alpha values must be positive")
    rows = []
    for alpha in args.alpha:
        for xi in args.xi:
            found = min_order_search(xi, alpha, args.rho, cap=args.cap)
            if found is None:
                rows.append([alpha, xi, "unsolved", "", "", ""])
            else:
                rows.append([alpha, xi, found.order, found.P, found.Q, found.total])
    _emit(io.dump_csv(["alpha", "xi", "min_order", "P", "Q", "total"], rows), args.output)
    return EXIT_OK


def cmd_localize(args) -> int:
    g = io.read_graph(args.graph)
    require_connected(g)
    if not 0 <= args.vertex < g.n:
        raise GraphError(f"vertex {args.vertex} outside [0, {g.n})")
    profile = impulse_profile(g, args.kind, args.alpha, args.vertex, r_max=args.radius)
    rows = [(r.hop, r.energy, r.cum_fraction, r.one_minus_cum, r.envelope_oracle, r.envelope_paper)
            for r in decay_report(profile)]
    header = ["hop", "energy", "cum_fraction", "one_minus_cum", "envelope_oracle", "envelope_paper"]
    _emit(io.dump_csv(header, rows), args.output)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    g = io.read_graph(args.graph)
    require_connected(g)
    basis = graph_basis(g, args.kind)
    f = frequencies(basis)
    _emit(io.dump_spectrum(basis.eigenvalues, f.nu, f.theta), args.output)
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "translate": cmd_translate,
    "bounds": cmd_bounds,
    "minorder": cmd_minorder,
    "localize": cmd_localize,
    "spectrum": cmd_spectrum,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (SpectralError, np.linalg.LinAlgError, FloatingPointError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
