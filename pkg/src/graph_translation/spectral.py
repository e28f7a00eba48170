"""Eigendecomposition, graph Fourier transform and reduced graph frequencies."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np
import scipy.linalg

from .graph import Graph, matrices, rho_G

Kind = Literal["laplacian", "normalized_laplacian", "adjacency"]
KINDS: tuple[str, ...] = ("laplacian", "normalized_laplacian", "adjacency")
LAPLACIAN_KINDS: tuple[str, ...] = ("laplacian", "normalized_laplacian")

# relative size below which a Laplacian eigenvalue counts as zero
ZERO_TOL = 1e-12


class SpectralError(ValueError):
    pass


@dataclass(frozen=True)
class SpectralBasis:
    """Ascending eigenvalues and orthonormal eigenvectors (columns) of a base matrix.

    ``scale`` maps eigenvalues onto the unit interval of the chosen
    framework: ``rho_G`` for the Laplacian, 2 for the normalized Laplacian,
    and the largest adjacency eigenvalue for the adjacency matrix.
    """

    kind: str
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    scale: float = 1.0

    @property
    def n(self) -> int:
        return self.eigenvalues.size

    def gft(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x)
        if x.shape[0] != self.n:
            raise ValueError(f"signal length {x.shape[0]} != {self.n}")
        return self.eigenvectors.conj().T @ x

    def igft(self, xhat: np.ndarray) -> np.ndarray:
        xhat = np.asarray(xhat)
        if xhat.shape[0] != self.n:
            raise ValueError(f"spectrum length {xhat.shape[0]} != {self.n}")
        return self.eigenvectors @ xhat

    def scaled_eigenvalues(self) -> np.ndarray:
        """Eigenvalues of the scaled matrix ``M`` used by the series approximations.

        ``L / rho_G`` and ``L_norm / 2`` land in ``[0, 1]`` (tiny negatives
        clamped); ``I - A / gamma_max`` lands in ``[0, 2]``.
        """
        lam = self.eigenvalues
        if self.kind == "adjacency":
            return np.clip(1.0 - lam / self.scale, 0.0, 2.0)
        return np.clip(lam / self.scale, 0.0, 1.0)


def eig_sym(M: np.ndarray, kind: str = "laplacian", scale: float = 1.0) -> SpectralBasis:
    """Dense symmetric eigendecomposition with a deterministic sign convention.

    Each eigenvector is flipped so that its largest-magnitude entry (first one
    on ties) is positive.
    """
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise SpectralError(f"expected a square matrix, got shape {M.shape}")
    norm = np.max(np.abs(M)) if M.size else 0.0
    if np.max(np.abs(M - M.T), initial=0.0) > 1e-12 * max(norm, 1.0):
        raise SpectralError("matrix is not symmetric")
    try:
        w, U = scipy.linalg.eigh(0.5 * (M + M.T))
    except np.linalg.LinAlgError as exc:
        raise SpectralError(f"eigensolver did not converge: {exc}") from exc
    pivots = np.argmax(np.abs(U), axis=0)
    signs = np.sign(U[pivots, np.arange(U.shape[1])])
    signs[signs == 0] = 1.0
    U = U * signs
    w.flags.writeable = False
    U.flags.writeable = False
    return SpectralBasis(kind, w, U, float(scale))


def graph_basis(g: Graph, kind: str) -> SpectralBasis:
    """Spectral basis of ``g`` for one of the three frameworks, with its scale."""
    if kind not in KINDS:
        raise SpectralError(f"unknown kind {kind!r}; expected one of {KINDS}")
    mats = matrices(g)
    basis = eig_sym(mats[kind], kind)
    if kind in LAPLACIAN_KINDS:
        lam = basis.eigenvalues.copy()
        # the DC eigenvalue is 0 by construction; snap round-off so theta_0 == 0
        if abs(lam[0]) <= 1e-10 * max(abs(lam[-1]), 1e-300):
            lam[0] = 0.0
        lam.flags.writeable = False
        basis = SpectralBasis(kind, lam, basis.eigenvectors)
    if kind == "laplacian":
        scale = rho_G(g)
    elif kind == "normalized_laplacian":
        scale = 2.0
    else:
        scale = float(basis.eigenvalues[-1])
        if scale <= 0:
            raise SpectralError("largest adjacency eigenvalue must be positive")
    return SpectralBasis(kind, basis.eigenvalues, basis.eigenvectors, scale)


@dataclass(frozen=True)
class FrequencySet:
    nu: np.ndarray
    theta: np.ndarray


def frequencies(basis: SpectralBasis, scale: float | None = None) -> FrequencySet:
    """Reduced frequencies ``nu`` and the phase angles ``theta`` used for translation.

    Laplacian kinds: ``nu = sqrt(lam / scale) / 2`` and ``theta = 2 pi nu``.
    Adjacency: ``nu = 1 - gamma / gamma_max`` and ``theta = pi nu``.
    """
    scale = basis.scale if scale is None else float(scale)
    lam = np.asarray(basis.eigenvalues, dtype=float)
    if basis.kind == "adjacency":
        if scale <= 0:
            raise SpectralError("gamma_max must be positive")
        nu = np.clip(1.0 - lam / scale, 0.0, 2.0)
        return FrequencySet(nu, np.pi * nu)
    lam_max = max(np.max(np.abs(lam)), 1e-300)
    if np.any(lam < -ZERO_TOL * lam_max):
        raise SpectralError("Laplacian has a significantly negative eigenvalue")
    ratio = np.clip(lam, 0.0, None) / scale
    if np.any(ratio > 1.0 + 1e-9):
        raise SpectralError(f"eigenvalue/scale ratio {ratio.max()} exceeds 1")
    ratio = np.minimum(ratio, 1.0)
    root = np.sqrt(ratio)
    return FrequencySet(0.5 * root, np.pi * root)


def spectral_gap(basis: SpectralBasis, scale: float | None = None) -> tuple[float, float]:
    """Spectral gap ``varrho = lam_1 / scale`` and ``epsilon = (1 - varrho)/(1 + varrho)``."""
    if basis.kind not in LAPLACIAN_KINDS:
        raise SpectralError("spectral gap is defined for the Laplacian kinds only")
    scale = basis.scale if scale is None else float(scale)
    lam = basis.eigenvalues
    if lam.size < 2 or lam[1] <= ZERO_TOL * max(abs(lam[-1]), 1e-300):
        raise SpectralError("second eigenvalue is zero: the graph is disconnected")
    varrho = min(float(lam[1] / scale), 1.0)
    return varrho, epsilon_from_gap(varrho)


def epsilon_from_gap(varrho: float) -> float:
    if not 0.0 < varrho <= 1.0:
        raise SpectralError(f"spectral gap must lie in (0, 1], got {varrho}")
    return (1.0 - varrho) / (1.0 + varrho)
