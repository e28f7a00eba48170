"""Truncated-series translations applied with sparse mat-vecs only.

A degree-``d`` polynomial in the scaled matrix moves energy at most ``d``
hops, so these operators have compactly supported impulse responses: the
``(P, Q)`` Laplacian approximation reaches ``P + Q`` hops and the order-``K``
adjacency approximation reaches ``2K + 1`` hops.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from .bounds import cos_coefficients, sin_coefficients, sqrt_coefficients
from .graph import Graph, degree_data, require_connected
from .spectral import LAPLACIAN_KINDS, SpectralBasis, graph_basis, spectral_gap


@dataclass(frozen=True)
class ScaledMatrix:
    """``L / rho_G``, ``L_norm / 2`` or ``I - A / gamma_max`` as a sparse operator."""

    kind: str
    M: sparse.csr_matrix
    scale: float
    epsilon: float | None = None

    @property
    def n(self) -> int:
        return self.M.shape[0]

    @property
    def interval(self) -> tuple[float, float]:
        return (0.0, 2.0) if self.kind == "adjacency" else (0.0, 1.0)

    def matvec(self, y: np.ndarray) -> np.ndarray:
        return self.M @ y

    def dense(self) -> np.ndarray:
        return self.M.toarray()


def scaled_matrix(g: Graph, kind: str, basis: SpectralBasis | None = None) -> ScaledMatrix:
    """Sparse scaled base matrix; the dense ``basis`` supplies scale and gap."""
    require_connected(g)
    if basis is None:
        basis = graph_basis(g, kind)
    A = g.adjacency_sparse
    n = g.n
    if kind == "adjacency":
        M = sparse.identity(n, format="csr") - A / basis.scale
        return ScaledMatrix(kind, M.tocsr(), basis.scale)
    d = degree_data(g).degrees
    L = sparse.diags(d) - A
    if kind == "laplacian":
        M = L / basis.scale
    else:
        s = sparse.diags(1.0 / np.sqrt(d))
        M = (s @ L @ s) / 2.0
    _, eps = spectral_gap(basis)
    return ScaledMatrix(kind, sparse.csr_matrix(M), basis.scale, eps)


def _horner(M: ScaledMatrix, coeffs: np.ndarray, x: np.ndarray, shift: float = 0.0, gain: float = 1.0) -> np.ndarray:
    """``sum_k coeffs[k] B^k x`` with ``B = gain * M - shift * I``."""
    out = coeffs[-1] * x
    for c in coeffs[-2::-1]:
        Bout = M.matvec(out)
        if gain != 1.0:
            Bout = gain * Bout
        if shift:
            Bout = Bout - shift * out
        out = Bout + c * x
    return out


def _as_scaled(target: Graph | ScaledMatrix, kind: str) -> ScaledMatrix:
    if isinstance(target, ScaledMatrix):
        if target.kind != kind:
            raise ValueError(f"scaled matrix is {target.kind!r}, expected {kind!r}")
        return target
    return scaled_matrix(target, kind)


def apply_laplacian_approx(
    target: Graph | ScaledMatrix,
    kind: str,
    P: int,
    Q: int,
    alpha: float,
    x: np.ndarray,
) -> np.ndarray:
    """``C^(P)(M) x - i R^(Q)(M) S^(P)(M) x``; accepts a vector or column batch.

    ``target`` is a graph or a prebuilt :class:`ScaledMatrix` (reuse one when
    applying many orders, since building it needs the spectral gap).
    """
    if kind not in LAPLACIAN_KINDS:
        raise ValueError(f"{kind!r} is not a Laplacian kind")
    M = _as_scaled(target, kind)
    if P < 0 or Q < 0:
        raise ValueError("orders must be nonnegative")
    x = np.asarray(x, dtype=complex)
    eps = M.epsilon
    c = _horner(M, cos_coefficients(P, alpha), x)
    s = _horner(M, sin_coefficients(P, alpha), x)
    r = _horner(M, sqrt_coefficients(Q, eps), s, shift=1.0, gain=1.0 + eps)
    return c - 1j * r


def apply_adjacency_approx(target: Graph | ScaledMatrix, K: int, alpha: float, x: np.ndarray) -> np.ndarray:
    """Order-``K`` cosine/sine truncation of ``exp(-i alpha pi M)``.

    Accumulates ``t_m = (alpha pi M)^m x / m!`` for ``m = 0 .. 2K+1``, adding
    even ``m`` to the real part and odd ``m`` to the imaginary part with
    alternating signs.
    """
    M = _as_scaled(target, "adjacency")
    if K < 0:
        raise ValueError("order must be nonnegative")
    x = np.asarray(x, dtype=complex)
    a = alpha * math.pi
    term = x
    out = x.copy()
    for m in range(1, 2 * K + 2):
        term = (a / m) * M.matvec(term)
        k = m // 2
        sign = -1.0 if k % 2 else 1.0
        out = out + sign * term if m % 2 == 0 else out - 1j * sign * term
    return out


def apply_approx(M: ScaledMatrix, order, alpha: float, x: np.ndarray) -> np.ndarray:
    """Dispatch on kind: ``order`` is ``K`` (adjacency) or ``(P, Q)``."""
    if M.kind == "adjacency":
        return apply_adjacency_approx(M, int(order), alpha, x)
    P, Q = order
    return apply_laplacian_approx(M, M.kind, P, Q, alpha, x)


def reach(kind: str, order) -> int:
    """Hop radius covered by the polynomial of the given order."""
    if kind == "adjacency":
        return 2 * int(order) + 1
    P, Q = order
    return P + Q
