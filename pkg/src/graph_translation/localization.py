"""Hop-radius energy profiles of translated impulses and their decay envelopes.

If a polynomial of degree ``d`` approximates the translation with operator
error ``e``, the translated impulse keeps at most ``e**2`` of its (unit)
energy outside the ``d``-hop ball, since the polynomial output vanishes
there. Minimizing ``e`` over all orders reaching at most ``r`` hops gives
an envelope on the outside-ball energy at radius ``r``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .bounds import (
    adjacency_scalar_error,
    kappa_C,
    kappa_R,
    kappa_S,
    laplacian_error_table,
    total_bound_adjacency,
    total_paper,
)
from .exact import apply_exact, from_basis
from .graph import Graph, hop_distances, require_connected
from .spectral import LAPLACIAN_KINDS, SpectralBasis, graph_basis, spectral_gap


@dataclass(frozen=True)
class LocalizationProfile:
    center: int
    kind: str
    alpha: float
    hop_energy: np.ndarray
    cumulative_fraction: np.ndarray
    envelope_oracle: np.ndarray
    envelope_paper: np.ndarray

    @property
    def r_max(self) -> int:
        return self.hop_energy.size - 1

    @property
    def outside_fraction(self) -> np.ndarray:
        """``1 - C(r)``, clipped at zero against round-off."""
        return np.clip(1.0 - self.cumulative_fraction, 0.0, None)


def _best_by_radius(bound: np.ndarray, r_max: int) -> np.ndarray:
    """``bound[P, Q]`` -> squared envelope ``min(1, min_{P+Q<=r} bound)**2`` per radius."""
    rows, cols = bound.shape
    best = np.full(r_max + 1, np.inf)
    for s in range(min(r_max, rows + cols - 2) + 1):
        P = np.arange(max(0, s - cols + 1), min(s, rows - 1) + 1)
        best[s] = bound[P, s - P].min()
    best = np.minimum.accumulate(best)
    return np.minimum(best, 1.0) ** 2


def laplacian_oracle_envelope(
    scaled_eigs: np.ndarray, dc_weight: float, alpha: float, epsilon: float, r_max: int
) -> np.ndarray:
    """Squared oracle envelope for the Laplacian kinds.

    ``scaled_eigs[0]`` must be the DC eigenvalue 0; ``dc_weight`` is the
    magnitude of the signal's DC coefficient relative to its norm.
    """
    err = laplacian_error_table(alpha, epsilon, scaled_eigs, r_max, r_max)
    bound = err[:, :, 1:].max(axis=2, initial=0.0) + err[:, :, 0] * dc_weight
    return _best_by_radius(bound, r_max)


def paper_envelope(alpha: float, rho: float, r_max: int) -> np.ndarray:
    """Squared published-bound envelope for spectral gap ``rho``."""
    eps = (1.0 - rho) / (1.0 + rho)
    kC = np.array([kappa_C(p, alpha) for p in range(r_max + 1)])
    kS = np.array([kappa_S(p, alpha) for p in range(r_max + 1)])
    kR = np.array([kappa_R(q, eps) for q in range(r_max + 1)])
    bound = total_paper(kC[:, None], kS[:, None], kR[None, :])
    return _best_by_radius(bound, r_max)


def adjacency_envelopes(scaled_eigs: np.ndarray, alpha: float, r_max: int) -> tuple[np.ndarray, np.ndarray]:
    oracle = np.ones(r_max + 1)
    published = np.ones(r_max + 1)
    best_o = best_p = 1.0
    for r in range(1, r_max + 1):
        if r % 2 == 1:
            K = (r - 1) // 2
            best_o = min(best_o, float(adjacency_scalar_error(K, alpha, scaled_eigs).max()))
            best_p = min(best_p, total_bound_adjacency(K, alpha))
        oracle[r] = best_o**2
        published[r] = best_p**2
    return oracle, published


def impulse_profile(
    g: Graph,
    kind: str,
    alpha: float,
    i: int,
    basis: SpectralBasis | None = None,
    r_max: int | None = None,
) -> LocalizationProfile:
    """Hop-energy profile of the exactly translated impulse at vertex ``i``.

    Radii run from 0 to ``max(eccentricity of i, r_max)``; ``r_max``
    defaults to 10 so that envelopes stay visible on small-diameter graphs.
    Energies past the eccentricity are zero.
    """
    require_connected(g)
    if basis is None:
        basis = graph_basis(g, kind)
    op = from_basis(basis, alpha)
    delta = np.zeros(g.n)
    delta[i] = 1.0
    y = apply_exact(op, delta)
    dist = hop_distances(g, i)
    r_max = max(int(dist.max()), 10 if r_max is None else r_max)
    energy = np.bincount(dist, weights=np.abs(y) ** 2, minlength=r_max + 1)
    cum = np.cumsum(energy)
    cum = cum / cum[-1]
    x = basis.scaled_eigenvalues()
    if kind in LAPLACIAN_KINDS:
        rho, eps = spectral_gap(basis)
        dc_weight = abs(basis.eigenvectors[i, 0])
        env_o = laplacian_oracle_envelope(x, dc_weight, alpha, eps, r_max)
        env_p = paper_envelope(alpha, rho, r_max)
    else:
        env_o, env_p = adjacency_envelopes(x, alpha, r_max)
    return LocalizationProfile(i, kind, float(alpha), energy, cum, env_o, env_p)


def support_radius(g: Graph, signal: np.ndarray, i: int, tol: float = 0.0) -> int:
    """Smallest hop radius around ``i`` outside which ``signal`` has energy ``<= tol``."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    dist = hop_distances(g, i)
    e = np.abs(np.asarray(signal)) ** 2
    r_max = int(dist.max())
    energy = np.bincount(dist[dist >= 0], weights=e[dist >= 0], minlength=r_max + 1)
    # energy strictly beyond radius r
    beyond = np.concatenate([np.cumsum(energy[::-1])[::-1][1:], [0.0]])
    return int(np.argmax(beyond <= tol))


class DecayRow(NamedTuple):
    hop: int
    energy: float
    cum_fraction: float
    one_minus_cum: float
    envelope_oracle: float
    envelope_paper: float
    oracle_ratio: float


def decay_report(profile: LocalizationProfile) -> list[DecayRow]:
    """Per-radius table; ``oracle_ratio`` compares consecutive envelopes below 1."""
    rows = []
    env = profile.envelope_oracle
    outside = profile.outside_fraction
    for r in range(profile.r_max + 1):
        ratio = math.nan
        if r > 0 and 0.0 < env[r - 1] < 1.0 and env[r] < 1.0:
            ratio = float(env[r] / env[r - 1])
        rows.append(
            DecayRow(
                r,
                float(profile.hop_energy[r]),
                float(profile.cumulative_fraction[r]),
                float(outside[r]),
                float(env[r]),
                float(profile.envelope_paper[r]),
                ratio,
            )
        )
    return rows
