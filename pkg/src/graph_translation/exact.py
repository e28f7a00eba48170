"""Exact graph translation operators, stored in spectral form."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, require_connected
from .spectral import SpectralBasis, frequencies, graph_basis

OPERATOR_MATRIX_CAP = 512


@dataclass(frozen=True)
class ExactTranslation:
    """Translation ``U diag(exp(-i alpha theta_l)) U*`` for one framework.

    ``alpha = 1`` gives the plain operators ``exp(-i pi sqrt(L / rho_G))``,
    ``exp(-i pi sqrt(L_norm / 2))`` and ``exp(-i pi (I - A / gamma_max))``.
    """

    kind: str
    basis: SpectralBasis
    alpha: float
    phases: np.ndarray

    @property
    def n(self) -> int:
        return self.basis.n


def build_exact(g: Graph, kind: str, alpha: float = 1.0, basis: SpectralBasis | None = None) -> ExactTranslation:
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    require_connected(g)
    if basis is None:
        basis = graph_basis(g, kind)
    return from_basis(basis, alpha)


def from_basis(basis: SpectralBasis, alpha: float = 1.0) -> ExactTranslation:
    theta = frequencies(basis).theta
    phases = np.exp(-1j * alpha * theta)
    # theta_0 == 0 exactly for the Laplacian kinds; keep the DC phase exactly 1
    phases[theta == 0.0] = 1.0
    phases.flags.writeable = False
    return ExactTranslation(basis.kind, basis, float(alpha), phases)


def apply_exact(op: ExactTranslation, x: np.ndarray) -> np.ndarray:
    """Apply to a signal of length ``n`` (or to the columns of an ``n x m`` batch)."""
    x = np.asarray(x)
    if x.shape[0] != op.n:
        raise ValueError(f"signal length {x.shape[0]} != {op.n}")
    xhat = op.basis.gft(x.astype(complex))
    scaled = op.phases * xhat if xhat.ndim == 1 else op.phases[:, None] * xhat
    return op.basis.igft(scaled)


def operator_matrix(op: ExactTranslation, cap: int = OPERATOR_MATRIX_CAP) -> np.ndarray:
    if op.n > cap:
        raise ValueError(f"n={op.n} exceeds the dense operator cap {cap}")
    U = op.basis.eigenvectors
    return (U * op.phases) @ U.conj().T
