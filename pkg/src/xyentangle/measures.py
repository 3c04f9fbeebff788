"""Entanglement measures: von Neumann entropy, concurrence, entanglement of formation.

All entropies are in bits, so one qubit ranges over [0, 1].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ShapeError, SpectrumError
from .reduced import Y, TwoSiteState, check_eigenvalues

__all__ = [
    "EntanglementResult",
    "binary_entropy",
    "von_neumann_entropy",
    "spin_flip",
    "wootters_margin",
    "concurrence_general",
    "concurrence_x_state",
    "eof_from_concurrence",
    "two_site_entanglement",
]

_YY = np.kron(Y, Y)
_X_MASK = np.eye(4, dtype=bool) | np.eye(4, dtype=bool)[::-1]


def binary_entropy(p):
    """``h(p) = -p log2 p - (1-p) log2 (1-p)`` with ``0 log 0 = 0``."""
    p = np.asarray(p, dtype=float)
    q = 1.0 - p
    with np.errstate(divide="ignore", invalid="ignore"):
        h = -np.where(p > 0, p * np.log2(p), 0.0) - np.where(q > 0, q * np.log2(q), 0.0)
    h = h + 0.0  # drop the sign of -0.0
    return h if h.ndim else float(h)


def von_neumann_entropy(rho: np.ndarray) -> float:
    p = check_eigenvalues(np.asarray(rho))
    p = p[p > 0]
    return float(-np.sum(p * np.log2(p)))


def spin_flip(rho: np.ndarray) -> np.ndarray:
    """``(Y x Y) rho* (Y x Y)``."""
    rho = np.asarray(rho)
    out = _YY @ rho.conj() @ _YY
    return out.real if np.isrealobj(rho) else out


def wootters_margin(rho: np.ndarray, tol: float = 1e-10) -> float:
    """``l1 - l2 - l3 - l4``, the concurrence before clipping at 0.

    The ``l_i`` are the square roots of the eigenvalues of
    ``rho @ spin_flip(rho)``. That spectrum is checked (real and
    non-negative up to ``tol``), but the ``l_i`` themselves are taken as the
    singular values of ``W^T (Y x Y) W`` with ``rho = W W^dagger``, which
    avoids square roots of round-off-sized eigenvalues on low-rank states.
    """
    rho = np.asarray(rho)
    if rho.shape != (4, 4):
        raise ShapeError(f"expected a 4x4 matrix, got {rho.shape}")
    ev = np.linalg.eigvals(rho @ spin_flip(rho))
    if np.max(np.abs(ev.imag)) > tol or ev.real.min() < -tol:
        raise SpectrumError(f"rho*rho~ spectrum not real non-negative: {ev}")
    w, v = np.linalg.eigh(0.5 * (rho + rho.conj().T))
    half = v * np.sqrt(np.clip(w, 0.0, None))
    lam = np.linalg.svd(half.T @ _YY @ half, compute_uv=False)
    return float(lam[0] - lam[1] - lam[2] - lam[3])


def concurrence_general(rho: np.ndarray, tol: float = 1e-10) -> float:
    """Two-qubit concurrence of an arbitrary density matrix."""
    return float(np.clip(wootters_margin(rho, tol), 0.0, 1.0))


def concurrence_x_state(state, tol: float = 1e-12) -> float:
    """Closed-form concurrence for matrices supported on the diagonal and anti-diagonal."""
    rho = state.matrix if isinstance(state, TwoSiteState) else np.asarray(state)
    if rho.shape != (4, 4):
        raise ShapeError(f"expected a 4x4 matrix, got {rho.shape}")
    if np.max(np.abs(rho[~_X_MASK])) > tol:
        raise ShapeError("matrix is not an X-state")
    d = np.clip(np.diag(rho).real, 0.0, None)
    a = abs(rho[0, 3]) - np.sqrt(d[1] * d[2])
    b = abs(rho[1, 2]) - np.sqrt(d[0] * d[3])
    return float(min(1.0, 2.0 * max(0.0, a, b)))


def eof_from_concurrence(c: float) -> float:
    """Entanglement of formation (bits) of a two-qubit state with concurrence ``c``."""
    if not 0.0 <= c <= 1.0:
        raise DomainError(f"concurrence must lie in [0, 1], got {c}")
    return binary_entropy(0.5 * (1.0 + np.sqrt(1.0 - c * c)))


@dataclass(frozen=True)
class EntanglementResult:
    entropy: float
    concurrence: float
    eof: float


def two_site_entanglement(state: TwoSiteState) -> EntanglementResult:
    c = concurrence_x_state(state)
    return EntanglementResult(von_neumann_entropy(state.matrix), c, eof_from_concurrence(c))
