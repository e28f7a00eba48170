"""Error bounds for the truncated translation series.

Three families of numbers live here and are kept apart on purpose:

* the closed-form bounds exactly as published (``kappa_C``, ``kappa_S``,
  ``kappa_R``, ``total_bound_laplacian``, ``total_bound_adjacency``);
* a corrected composition (``corrected_kappa_R``, ``corrected_total``) built
  only from inequalities that always hold;
* the eigenvalue-exact oracle (``empirical_sup_error``), which maximizes the
  scalar approximation error over a concrete spectrum and is therefore the
  tightest valid operator-norm bound for that matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

# admissible eigenvalue interval of the scaled matrix, per kind
INTERVALS = {"laplacian": (0.0, 1.0), "normalized_laplacian": (0.0, 1.0), "adjacency": (0.0, 2.0)}
# scaled eigenvalues at or below this are the DC mode
DC_TOL = 1e-12


def _exp_capped(log_value: float) -> float:
    if log_value > 709.0:
        return math.inf
    return math.exp(log_value)


def _check_alpha(alpha: float) -> None:
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")


# --- series coefficients ----------------------------------------------------

def cos_coefficients(P: int, alpha: float) -> np.ndarray:
    """Coefficients of ``C^(P)(x) = sum_k (-1)^k (alpha pi)^(2k) x^k / (2k)!``."""
    k = np.arange(P + 1)
    logs = 2 * k * math.log(alpha * math.pi) - np.array([math.lgamma(2 * j + 1) for j in k])
    return np.where(k % 2 == 0, 1.0, -1.0) * np.exp(logs)


def sin_coefficients(P: int, alpha: float) -> np.ndarray:
    """Coefficients of ``S^(P)(x) = sum_k (-1)^k (alpha pi)^(2k+1) x^k / (2k+1)!``."""
    k = np.arange(P + 1)
    logs = (2 * k + 1) * math.log(alpha * math.pi) - np.array([math.lgamma(2 * j + 2) for j in k])
    return np.where(k % 2 == 0, 1.0, -1.0) * np.exp(logs)


def sqrt_coefficients(Q: int, epsilon: float) -> np.ndarray:
    """Coefficients of ``R^(Q)`` as a polynomial in ``y = (1 + eps) x - 1``.

    These are the binomial series coefficients of ``sqrt(1 + y)`` scaled by
    ``sqrt(1 / (1 + eps))``; ``binom(1/2, k)`` equals
    ``(-1)^k (2k)! / ((1 - 2k) (k!)^2 4^k)``.
    """
    b = np.empty(Q + 1)
    b[0] = 1.0
    for k in range(1, Q + 1):
        b[k] = b[k - 1] * (0.5 - (k - 1)) / k
    return math.sqrt(1.0 / (1.0 + epsilon)) * b


def _polyval(coeffs: np.ndarray, x: np.ndarray) -> np.ndarray:
    return np.polynomial.polynomial.polyval(x, coeffs)


def C_series(P: int, alpha: float, x) -> np.ndarray:
    return _polyval(cos_coefficients(P, alpha), np.asarray(x, dtype=float))


def S_series(P: int, alpha: float, x) -> np.ndarray:
    return _polyval(sin_coefficients(P, alpha), np.asarray(x, dtype=float))


def R_series(Q: int, epsilon: float, x) -> np.ndarray:
    y = (1.0 + epsilon) * np.asarray(x, dtype=float) - 1.0
    return _polyval(sqrt_coefficients(Q, epsilon), y)


# --- published closed-form bounds ----------------------------------------

def kappa_C(P: int, alpha: float = 1.0) -> float:
    """First omitted cosine-series term, ``(alpha pi)^(2P+2) / (2P+2)!``."""
    _check_alpha(alpha)
    return _exp_capped((2 * P + 2) * math.log(alpha * math.pi) - math.lgamma(2 * P + 3))


def kappa_S(P: int, alpha: float = 1.0) -> float:
    """First omitted sine-series term, ``(alpha pi)^(2P+3) / (2P+3)!``."""
    _check_alpha(alpha)
    return _exp_capped((2 * P + 3) * math.log(alpha * math.pi) - math.lgamma(2 * P + 4))


def kappa_R(Q: int, epsilon: float) -> float:
    """Published square-root series bound at truncation order ``Q``.

    The published expression is indexed by ``Q - 1``; here ``q = Q + 1`` is
    substituted so that ``kappa_R(Q)`` pairs with ``R^(Q)``::

        sqrt(1/(1-eps^2)) (2q)! / ((2q-1) (q!)^2 4^q) (eps (1-eps))^q
    """
    if not 0.0 <= epsilon < 1.0:
        raise ValueError(f"epsilon must lie in [0, 1), got {epsilon}")
    if epsilon == 0.0:
        return 0.0
    q = Q + 1
    log_v = (
        -0.5 * math.log1p(-epsilon * epsilon)
        + math.lgamma(2 * q + 1)
        - math.log(2 * q - 1)
        - 2 * math.lgamma(q + 1)
        - q * math.log(4.0)
        + q * math.log(epsilon * (1.0 - epsilon))
    )
    return _exp_capped(log_v)


def kappa_RS(kR: float, kS: float) -> float:
    return product_bound(kR, kS, 1.0, 1.0)


def total_paper(kC: float, kS: float, kR: float) -> float:
    return kC + kS + kR * (1.0 + 2.0 * kS)


def total_bound_adjacency(K: int, alpha: float = 1.0) -> float:
    """``(2 alpha pi)^(2K+2) / (2K+2)! * (1 + 2 alpha pi / (2K+3))``."""
    _check_alpha(alpha)
    t = 2.0 * alpha * math.pi
    return _exp_capped((2 * K + 2) * math.log(t) - math.lgamma(2 * K + 3)) * (1.0 + t / (2 * K + 3))


def adjacency_monotone(K: int, alpha: float = 1.0) -> bool:
    """Whether the omitted terms decrease from order ``2K+2`` on, over ``[0, 2]``."""
    return 2 * K + 3 >= 2.0 * alpha * math.pi


def laplacian_monotone(P: int, alpha: float = 1.0) -> bool:
    """Whether the omitted C and S terms decrease on ``[0, 1]`` past order ``P``."""
    return (alpha * math.pi) ** 2 <= (2 * P + 3) * (2 * P + 4)


# --- generic remainder estimates ------------------------------------------

def lagrange_remainder_bound(max_deriv: float, max_dist: float, K: int) -> float:
    """Taylor remainder bound ``max|f^(K+1)| * max|x - a|^(K+1) / (K+1)!``."""
    if max_deriv < 0 or max_dist < 0:
        raise ValueError("inputs must be nonnegative")
    if max_deriv == 0 or max_dist == 0:
        return 0.0
    return _exp_capped(math.log(max_deriv) + (K + 1) * math.log(max_dist) - math.lgamma(K + 2))


def alternating_tail(next_coefficient: float, max_dist: float, K: int) -> float:
    """First omitted term ``|f_(K+1)| |x - a|^(K+1)`` of an alternating series.

    Valid only where the terms decrease monotonically in magnitude.
    """
    return abs(next_coefficient) * max_dist ** (K + 1)


def product_bound(kg: float, kh: float, max_g: float, max_h: float) -> float:
    """Bound for approximating ``g h`` by the product of the two approximations."""
    return kg * max_h + kh * (max_g + kg)


# --- corrected composition --------------------------------------------------

def _abs_tail(log_base: float, start: int, parity: int) -> float:
    """``sum_{k >= start} base^(2k+parity) / (2k+parity)!`` evaluated stably."""
    total = 0.0
    k = start
    while True:
        m = 2 * k + parity
        term = _exp_capped(m * log_base - math.lgamma(m + 1))
        total += term
        if m > 2.0 * math.exp(log_base) and term <= 1e-17 * total:
            return total
        if term == 0.0 and m > math.exp(log_base):
            return total
        k += 1


def corrected_kappa_C(P: int, alpha: float = 1.0) -> float:
    """Full absolute tail of the cosine series on ``[0, 1]`` (no monotonicity needed)."""
    _check_alpha(alpha)
    return _abs_tail(math.log(alpha * math.pi), P + 1, 0)


def corrected_kappa_S(P: int, alpha: float = 1.0) -> float:
    _check_alpha(alpha)
    return _abs_tail(math.log(alpha * math.pi), P + 1, 1)


def sqrt_lagrange_remainder(Q: int, epsilon: float) -> float:
    """Lagrange bound on ``|sqrt(x) - R^(Q)(x)|`` over ``[varrho, 1]``.

    ``f(y) = sqrt(1 + y)`` has ``|f^(Q+1)|`` largest at ``y = -eps``, which
    gives ``sqrt(1/(1+eps)) |binom(1/2, Q+1)| sqrt(1-eps) (eps/(1-eps))^(Q+1)``.
    """
    if not 0.0 <= epsilon < 1.0:
        raise ValueError(f"epsilon must lie in [0, 1), got {epsilon}")
    if epsilon == 0.0:
        return 0.0
    q = Q + 1
    log_binom = math.lgamma(2 * q + 1) - math.log(2 * q - 1) - 2 * math.lgamma(q + 1) - q * math.log(4.0)
    log_v = (
        -0.5 * math.log1p(epsilon)
        + log_binom
        + 0.5 * math.log1p(-epsilon)
        + q * (math.log(epsilon) - math.log1p(-epsilon))
    )
    return _exp_capped(log_v)


def corrected_kappa_R(Q: int, epsilon: float) -> float:
    """Lagrange-form square-root bound, or ``inf`` when it cannot converge.

    For ``eps >= 1/2`` the geometric factor ``eps / (1 - eps)`` is at least 1
    and the bound grows with ``Q``; those cases report ``math.inf``.
    """
    if not 0.0 <= epsilon < 1.0:
        raise ValueError(f"epsilon must lie in [0, 1), got {epsilon}")
    if epsilon >= 0.5:
        return math.inf
    return sqrt_lagrange_remainder(Q, epsilon)


def max_abs_S(alpha: float, epsilon: float) -> float:
    """Upper bound on ``|sin(alpha pi sqrt(x)) / sqrt(x)|`` over ``[varrho, 1]``."""
    varrho = (1.0 - epsilon) / (1.0 + epsilon)
    return min(alpha * math.pi, 1.0 / math.sqrt(varrho))


def corrected_total(P: int, Q: int, alpha: float, epsilon: float) -> float:
    """Valid bound on the DC-free operator error.

    ``sqrt(x) S - R S_P = (sqrt(x) - R) S + R (S - S_P)`` with
    ``|R| <= 1 + kappa_R``; C and S use their full absolute tails.
    """
    kR = corrected_kappa_R(Q, epsilon)
    if math.isinf(kR):
        return math.inf
    kC = corrected_kappa_C(P, alpha)
    kS = corrected_kappa_S(P, alpha)
    return kC + product_bound(kR, kS, 1.0, max_abs_S(alpha, epsilon))


def dc_error_term(P: int, Q: int, alpha: float, epsilon: float) -> float:
    """Scalar error of the truncated series at eigenvalue 0.

    ``C^(P)(0) = 1`` is exact but ``S^(P)(0) = alpha pi`` while the exact
    sine term vanishes there, so the zero mode carries ``|R^(Q)(0) S^(P)(0)|``.
    """
    _check_alpha(alpha)
    return float(abs(R_series(Q, epsilon, 0.0)) * abs(S_series(P, alpha, 0.0)))


# --- bound report -----------------------------------------------------------

@dataclass(frozen=True)
class BoundReport:
    P: int
    Q: int
    alpha: float
    epsilon: float
    kappa_C: float
    kappa_S: float
    kappa_R: float
    kappa_RS: float
    total_paper: float
    dc_term: float
    corrected_kappa_R: float
    corrected_total: float
    monotone: bool
    oracle: float | None = None

    @property
    def rho(self) -> float:
        return (1.0 - self.epsilon) / (1.0 + self.epsilon)


def total_bound_laplacian(
    P: int,
    Q: int,
    alpha: float = 1.0,
    epsilon: float | None = None,
    *,
    rho: float | None = None,
    scaled_eigenvalues: Sequence[float] | None = None,
) -> BoundReport:
    """All bound components for ``T^alpha ~ C^(P) - i R^(Q) S^(P)``.

    Give either ``epsilon`` or the spectral gap ``rho``. When the scaled
    spectrum of a concrete graph is supplied, ``oracle`` holds its DC-free
    eigenvalue-exact sup error.
    """
    if epsilon is None:
        if rho is None:
            raise ValueError("give epsilon or rho")
        epsilon = (1.0 - rho) / (1.0 + rho)
    kC, kS, kR = kappa_C(P, alpha), kappa_S(P, alpha), kappa_R(Q, epsilon)
    oracle = None
    if scaled_eigenvalues is not None:
        oracle = empirical_sup_error(
            "laplacian", (P, Q), alpha, scaled_eigenvalues, include_zero_mode=False, epsilon=epsilon
        )
    return BoundReport(
        P=P,
        Q=Q,
        alpha=alpha,
        epsilon=epsilon,
        kappa_C=kC,
        kappa_S=kS,
        kappa_R=kR,
        kappa_RS=kappa_RS(kR, kS),
        total_paper=total_paper(kC, kS, kR),
        dc_term=dc_error_term(P, Q, alpha, epsilon),
        corrected_kappa_R=corrected_kappa_R(Q, epsilon),
        corrected_total=corrected_total(P, Q, alpha, epsilon),
        monotone=laplacian_monotone(P, alpha),
        oracle=oracle,
    )


# --- eigenvalue-exact oracle ------------------------------------------------

def _validate_eigs(kind: str, eigenvalues) -> np.ndarray:
    if kind not in INTERVALS:
        raise ValueError(f"unknown kind {kind!r}")
    x = np.atleast_1d(np.asarray(eigenvalues, dtype=float))
    lo, hi = INTERVALS[kind]
    if np.any(x < lo - 1e-9) or np.any(x > hi + 1e-9):
        raise ValueError(f"eigenvalue outside the admissible interval [{lo}, {hi}]")
    return np.clip(x, lo, hi)


def _epsilon_from_eigs(x: np.ndarray) -> float:
    nonzero = x[x > DC_TOL]
    if nonzero.size == 0:
        return 0.0
    varrho = float(nonzero.min())
    return (1.0 - varrho) / (1.0 + varrho)


def adjacency_scalar_error(K: int, alpha: float, x) -> np.ndarray:
    """``|exp(-i alpha pi x) - sum_{m <= 2K+1} (-i alpha pi x)^m / m!|``."""
    x = np.asarray(x, dtype=float)
    t = alpha * math.pi * x
    c = _polyval(_even_coeffs(K), t)
    s = _polyval(_odd_coeffs(K), t)
    return np.hypot(np.cos(t) - c, np.sin(t) - s)


def _even_coeffs(K: int) -> np.ndarray:
    c = np.zeros(2 * K + 2)
    for k in range(K + 1):
        c[2 * k] = (-1) ** k / math.factorial(2 * k)
    return c


def _odd_coeffs(K: int) -> np.ndarray:
    c = np.zeros(2 * K + 2)
    for k in range(K + 1):
        c[2 * k + 1] = (-1) ** k / math.factorial(2 * k + 1)
    return c


def laplacian_scalar_error(P: int, Q: int, alpha: float, epsilon: float, x) -> np.ndarray:
    """``|exp(-i alpha pi sqrt(x)) - (C^(P)(x) - i R^(Q)(x) S^(P)(x))|``."""
    x = np.asarray(x, dtype=float)
    root = np.sqrt(x)
    re = np.cos(alpha * math.pi * root) - C_series(P, alpha, x)
    im = np.sin(alpha * math.pi * root) - R_series(Q, epsilon, x) * S_series(P, alpha, x)
    return np.hypot(re, im)


def empirical_sup_error(
    kind: str,
    order,
    alpha: float,
    eigenvalues,
    include_zero_mode: bool = True,
    epsilon: float | None = None,
) -> float:
    """Largest scalar approximation error over a set of scaled eigenvalues.

    ``order`` is ``K`` for the adjacency kind and ``(P, Q)`` otherwise.
    Eigenvalues are those of the scaled matrix ``M`` (``[0, 1]`` or
    ``[0, 2]``). For the Laplacian kinds ``epsilon`` defaults to the value
    implied by the smallest nonzero eigenvalue, and ``include_zero_mode=False``
    skips the DC eigenvalue.
    """
    _check_alpha(alpha)
    x = _validate_eigs(kind, eigenvalues)
    if kind == "adjacency":
        return float(np.max(adjacency_scalar_error(int(order), alpha, x), initial=0.0))
    P, Q = order
    if epsilon is None:
        epsilon = _epsilon_from_eigs(x)
    if not include_zero_mode:
        x = x[x > DC_TOL]
    if x.size == 0:
        return 0.0
    return float(np.max(laplacian_scalar_error(P, Q, alpha, epsilon, x)))


def laplacian_error_table(alpha: float, epsilon: float, x, P_max: int, Q_max: int) -> np.ndarray:
    """Scalar errors for every ``P <= P_max``, ``Q <= Q_max`` at points ``x``.

    Returns an array of shape ``(P_max + 1, Q_max + 1, len(x))``.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    powers = x[None, :] ** np.arange(max(P_max, 0) + 1)[:, None]
    C = np.cumsum(cos_coefficients(P_max, alpha)[:, None] * powers, axis=0)
    S = np.cumsum(sin_coefficients(P_max, alpha)[:, None] * powers, axis=0)
    y = (1.0 + epsilon) * x - 1.0
    ypow = y[None, :] ** np.arange(Q_max + 1)[:, None]
    R = np.cumsum(sqrt_coefficients(Q_max, epsilon)[:, None] * ypow, axis=0)
    root = np.sqrt(x)
    re = np.cos(alpha * math.pi * root)[None, :] - C
    im = np.sin(alpha * math.pi * root)[None, None, :] - R[None, :, :] * S[:, None, :]
    return np.hypot(re[:, None, :], im)


# --- order search -----------------------------------------------------------

@dataclass(frozen=True)
class MinOrder:
    P: int
    Q: int
    total: float

    @property
    def order(self) -> int:
        return self.P + self.Q


def min_order_search(xi: float, alpha: float, rho: float, cap: int = 512) -> MinOrder | None:
    """Smallest ``P + Q`` whose published total bound is at most ``xi``.

    Among splits with the same ``P + Q`` the smallest total wins, then the
    smaller ``Q``. Returns ``None`` when nothing up to ``P + Q = cap`` works.
    """
    if not xi > 0:
        raise ValueError(f"xi must be positive, got {xi}")
    if not 0.0 < rho <= 1.0:
        raise ValueError(f"rho must lie in (0, 1], got {rho}")
    epsilon = (1.0 - rho) / (1.0 + rho)
    kC = [kappa_C(p, alpha) for p in range(cap + 1)]
    kS = [kappa_S(p, alpha) for p in range(cap + 1)]
    kR = [kappa_R(q, epsilon) for q in range(cap + 1)]
    for s in range(cap + 1):
        best = None
        for Q in range(s + 1):
            P = s - Q
            t = total_paper(kC[P], kS[P], kR[Q])
            if t <= xi and (best is None or t < best.total):
                best = MinOrder(P, Q, t)
        if best is not None:
            return best
    return None
