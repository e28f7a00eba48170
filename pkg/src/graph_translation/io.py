"""Text formats: edge lists and the CSV tables written by the command line."""

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, GraphError


def fmt(x: float) -> str:
    """Round-trippable float text (17 significant digits)."""
    return format(float(x), ".17g")


def load_graph(text: str) -> Graph:
    """Parse an edge-list document.

    One edge per line as ``u v [w]`` with 0-based ids and ``w`` defaulting to
    1.0. ``#`` starts a comment. An optional ``n <count>`` line fixes the
    vertex count, otherwise it is one more than the largest id.
    """
    edges = []
    n_header = None
    comments = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line, _, note = raw.partition("#")
        if note.strip() and not line.strip():
            comments.append(note.strip())
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "n":
            if len(parts) != 2 or n_header is not None:
                raise GraphError(f"line {lineno}: malformed 'n <count>' header")
            n_header = int(parts[1])
            continue
        if len(parts) not in (2, 3):
            raise GraphError(f"line {lineno}: expected 'u v [w]', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
            w = float(parts[2]) if len(parts) == 3 else 1.0
        except ValueError as exc:
            raise GraphError(f"line {lineno}: {exc}") from None
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex id")
        edges.append((u, v, w))
    n = n_header if n_header is not None else 1 + max((max(u, v) for u, v, _ in edges), default=-1)
    return Graph(n, tuple(edges), " ".join(comments))


def read_graph(path: str | Path) -> Graph:
    return load_graph(Path(path).read_text())


def dump_graph(g: Graph) -> str:
    lines = []
    if g.comment:
        lines.append(f"# {g.comment}")
    if not g.edges or g.n != 1 + max(v for _, v, _ in g.edges):
        lines.append(f"n {g.n}")
    lines += [f"{u} {v} {fmt(w)}" for u, v, w in g.edges]
    return "\n".join(lines) + "\n"


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(dump_graph(g))


def dump_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(x) if isinstance(x, (float, np.floating)) else x for x in row])
    return buf.getvalue()


def write_csv(path: str | Path, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    Path(path).write_text(dump_csv(header, rows))


def dump_signal(x: np.ndarray) -> str:
    x = np.asarray(x, dtype=complex)
    return dump_csv(("index", "re", "im"), ((i, v.real, v.imag) for i, v in enumerate(x)))


def load_signal(text: str, n: int | None = None) -> np.ndarray:
    """Parse ``index,re,im`` rows (``im`` optional) into a complex vector."""
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None or not {"index", "re"} <= set(reader.fieldnames):
        raise ValueError("signal CSV needs an 'index,re,im' header")
    values = {}
    for row in reader:
        i = int(row["index"])
        if i in values:
            raise ValueError(f"signal index {i} appears twice")
        values[i] = complex(float(row["re"]), float(row.get("im") or 0.0))
    size = n if n is not None else (max(values) + 1 if values else 0)
    if any(i < 0 or i >= size for i in values):
        raise ValueError(f"signal index outside [0, {size})")
    x = np.zeros(size, dtype=complex)
    for i, v in values.items():
        x[i] = v
    return x


def dump_operator(T: np.ndarray) -> str:
    n = T.shape[0]
    return dump_csv(
        ("i", "j", "re", "im"),
        ((i, j, T[i, j].real, T[i, j].imag) for i in range(n) for j in range(n)),
    )


def dump_spectrum(eigenvalues: np.ndarray, nu: np.ndarray, theta: np.ndarray) -> str:
    return dump_csv(
        ("l", "eigenvalue", "nu", "theta"),
        ((l, float(e), float(f), float(t)) for l, (e, f, t) in enumerate(zip(eigenvalues, nu, theta))),
    )
