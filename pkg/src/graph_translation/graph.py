"""Undirected weighted graphs, generators and degree-based quantities."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np
from scipy import sparse


class GraphError(ValueError):
    """Invalid graph input (self-loop, duplicate edge, bad weight, ...)."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with strictly positive edge weights.

    Edges are stored once per unordered pair, canonicalized to ``u < v`` and
    sorted, so two graphs built from the same edge set in any order compare
    (and hash) equal.
    """

    n: int
    edges: tuple[tuple[int, int, float], ...]
    comment: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if int(self.n) != self.n or self.n < 2:
            raise GraphError(f"graph needs at least 2 vertices, got n={self.n}")
        seen: dict[tuple[int, int], float] = {}
        for u, v, w in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) has a vertex outside [0, {self.n})")
            w = float(w)
            if not math.isfinite(w) or w <= 0.0:
                raise GraphError(f"edge ({u}, {v}) has invalid weight {w!r}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen[key] = w
        canon = tuple((u, v, w) for (u, v), w in sorted(seen.items()))
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "edges", canon)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable, comment: str = "") -> "Graph":
        """Build from ``(u, v)`` or ``(u, v, w)`` tuples; missing weights are 1."""
        triples = []
        for e in edges:
            if len(e) == 2:
                triples.append((int(e[0]), int(e[1]), 1.0))
            else:
                triples.append((int(e[0]), int(e[1]), float(e[2])))
        return cls(n, tuple(triples), comment)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def weight(self, i: int, j: int) -> float:
        return float(self.adjacency_sparse[i, j])

    @cached_property
    def adjacency_sparse(self) -> sparse.csr_matrix:
        if not self.edges:
            return sparse.csr_matrix((self.n, self.n))
        u, v, w = (np.array(c) for c in zip(*self.edges))
        rows = np.concatenate([u, v])
        cols = np.concatenate([v, u])
        vals = np.concatenate([w, w]).astype(float)
        return sparse.csr_matrix((vals, (rows, cols)), shape=(self.n, self.n))

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def is_connected(self) -> bool:
        return bool(np.all(hop_distances(self, 0) >= 0))


@dataclass(frozen=True)
class DegreeData:
    degrees: np.ndarray
    mean_neighbor_degrees: np.ndarray


def degree_data(g: Graph) -> DegreeData:
    """Degrees ``d_i`` and neighbor-averaged degrees ``sum_j A_ij d_j / d_i``."""
    A = g.adjacency_sparse
    d = np.asarray(A.sum(axis=1)).ravel()
    if np.any(d <= 0):
        raise GraphError("graph has an isolated vertex (zero degree)")
    dbar = (A @ d) / d
    return DegreeData(d, dbar)


def rho_G(g: Graph) -> float:
    """Scale constant ``sqrt(max_i 2 d_i (d_i + dbar_i))``.

    Upper-bounds the largest Laplacian eigenvalue, so ``L / rho_G`` has its
    spectrum inside ``[0, 1]``.
    """
    dd = degree_data(g)
    return float(np.sqrt(np.max(2.0 * dd.degrees * (dd.degrees + dd.mean_neighbor_degrees))))


def matrices(g: Graph) -> dict[str, np.ndarray]:
    """Dense adjacency, Laplacian ``D - A`` and normalized Laplacian."""
    A = g.adjacency_sparse.toarray()
    d = A.sum(axis=1)
    L = np.diag(d) - A
    out = {"adjacency": A, "laplacian": L}
    if np.any(d <= 0):
        raise GraphError("normalized Laplacian undefined with a zero-degree vertex")
    s = 1.0 / np.sqrt(d)
    N = s[:, None] * L * s[None, :]
    N = 0.5 * (N + N.T)
    np.fill_diagonal(N, 1.0)
    out["normalized_laplacian"] = N
    return out


def hop_distances(g: Graph, i: int) -> np.ndarray:
    """Breadth-first hop counts from ``i``; unreachable vertices get -1."""
    if not 0 <= i < g.n:
        raise GraphError(f"vertex {i} outside [0, {g.n})")
    dist = np.full(g.n, -1, dtype=int)
    dist[i] = 0
    queue = deque([i])
    nbrs = g.neighbors
    while queue:
        u = queue.popleft()
        for v in nbrs[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise GraphError("graph is not connected")


# --- generators -------------------------------------------------------------

GENERATORS = ("path", "cycle", "grid", "complete", "star", "erdos_renyi", "geometric")


def _weights(rng: np.random.Generator | None, m: int, weight_range) -> np.ndarray:
    if weight_range is None:
        return np.ones(m)
    lo, hi = map(float, weight_range)
    if not (0 < lo <= hi and math.isfinite(hi)):
        raise GraphError(f"weight range must satisfy 0 < low <= high, got {weight_range}")
    if rng is None:
        rng = np.random.default_rng(0)
    return rng.uniform(lo, hi, size=m)


def _deterministic(kind: str, n: int, rows: int | None, cols: int | None) -> tuple[int, list]:
    if kind == "path":
        return n, [(i, i + 1) for i in range(n - 1)]
    if kind == "cycle":
        if n < 3:
            raise GraphError("cycle needs n >= 3")
        return n, [(i, (i + 1) % n) for i in range(n)]
    if kind == "complete":
        return n, [(i, j) for i in range(n) for j in range(i + 1, n)]
    if kind == "star":
        return n, [(0, j) for j in range(1, n)]
    if kind == "grid":
        if rows is None or cols is None or rows < 1 or cols < 1 or rows * cols < 2:
            raise GraphError("grid needs rows, cols >= 1 with rows*cols >= 2")
        idx = lambda r, c: r * cols + c  # noqa: E731
        e = [(idx(r, c), idx(r, c + 1)) for r in range(rows) for c in range(cols - 1)]
        e += [(idx(r, c), idx(r + 1, c)) for r in range(rows - 1) for c in range(cols)]
        return rows * cols, e
    raise GraphError(f"unknown graph kind {kind!r}")


def generate(
    kind: str,
    n: int | None = None,
    *,
    rows: int | None = None,
    cols: int | None = None,
    p: float | None = None,
    radius: float | None = None,
    seed: int = 0,
    weight_range: tuple[float, float] | None = None,
    max_retries: int = 100,
) -> Graph:
    """Generate a connected graph.

    Random kinds draw from ``numpy.random.default_rng(seed)``; a disconnected
    draw is discarded and redrawn with ``seed + 1``, ``seed + 2``, ... up to
    ``max_retries`` attempts. The seed actually used is recorded in the
    graph comment, which is written as a header when the graph is saved.
    """
    if kind == "erdos":
        kind = "erdos_renyi"
    if kind not in GENERATORS:
        raise GraphError(f"unknown graph kind {kind!r}; expected one of {GENERATORS}")
    if kind != "grid" and (n is None or n < 2):
        raise GraphError(f"{kind} needs n >= 2")

    if kind in ("erdos_renyi", "geometric"):
        if kind == "erdos_renyi" and (p is None or not 0.0 < p <= 1.0):
            raise GraphError(f"edge probability p must lie in (0, 1], got {p}")
        if kind == "geometric" and (radius is None or not radius > 0.0):
            raise GraphError(f"connection radius must be positive, got {radius}")
        for attempt in range(max_retries):
            s = seed + attempt
            rng = np.random.default_rng(s)
            if kind == "erdos_renyi":
                iu, ju = np.triu_indices(n, k=1)
                keep = rng.random(iu.size) < p
                pairs = list(zip(iu[keep].tolist(), ju[keep].tolist()))
                params = f"kind=erdos_renyi n={n} p={p!r} seed={seed} used_seed={s}"
            else:
                pts = rng.random((n, 2))
                diff = pts[:, None, :] - pts[None, :, :]
                close = np.sqrt((diff**2).sum(-1)) <= radius
                iu, ju = np.nonzero(np.triu(close, k=1))
                pairs = list(zip(iu.tolist(), ju.tolist()))
                params = f"kind=geometric n={n} radius={radius!r} seed={seed} used_seed={s}"
            w = _weights(rng, len(pairs), weight_range)
            if weight_range is not None:
                params += f" weight_range={weight_range[0]!r},{weight_range[1]!r}"
            g = Graph.from_edges(n, [(u, v, x) for (u, v), x in zip(pairs, w)], params)
            if g.is_connected():
                return g
        raise GraphError(f"no connected {kind} graph within {max_retries} seeds from {seed}")

    n_, pairs = _deterministic(kind, n if n is not None else 0, rows, cols)
    params = f"kind={kind} n={n_}" + (f" rows={rows} cols={cols}" if kind == "grid" else "")
    rng = np.random.default_rng(seed) if weight_range is not None else None
    w = _weights(rng, len(pairs), weight_range)
    if weight_range is not None:
        params += f" seed={seed} weight_range={weight_range[0]!r},{weight_range[1]!r}"
    return Graph.from_edges(n_, [(u, v, x) for (u, v), x in zip(pairs, w)], params)
