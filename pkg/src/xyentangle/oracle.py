"""Finite-chain exact diagonalisation, used to validate the infinite-chain formulas.

Sites are numbered 0..N-1 with site 0 the most significant bit of the
computational-basis index (the same ordering as ``np.kron``), and bit value
0 meaning ``Z = +1``.

Temperature convention
----------------------
The infinite-chain kernel carries ``tanh(beta*omega/2)``, whereas the
fermionic modes of ``H`` have excitation energy ``2*omega``. The kernel's
``beta`` therefore describes ``exp(-beta*H/2)``; :func:`chain_beta`
performs this conversion and :func:`oracle_report` applies it, so the two
routes describe the same physical ensemble.
"""

from __future__ import annotations

import math
from functools import lru_cache
from dataclasses import dataclass, field

import numpy as np

from .errors import SizeError
from .measures import von_neumann_entropy, wootters_margin
from .reduced import X, Y, Z
from .xymodel import ModelParams

__all__ = [
    "MAX_SITES",
    "ChainSpec",
    "LatticeState",
    "OracleRow",
    "build_hamiltonian",
    "chain_beta",
    "thermal_state",
    "reduce",
    "phase_flip_diagonal",
    "oracle_report",
]

MAX_SITES = 14
DEGENERACY_TOL = 1e-8


@dataclass(frozen=True)
class ChainSpec:
    n_sites: int
    params: ModelParams

    def __post_init__(self):
        if not 2 <= self.n_sites <= MAX_SITES:
            raise SizeError(f"n_sites must be in [2, {MAX_SITES}], got {self.n_sites}")


@dataclass
class LatticeState:
    matrix: np.ndarray
    energies: np.ndarray | None = field(default=None, repr=False)

    @property
    def n_sites(self) -> int:
        return int(round(math.log2(self.matrix.shape[0])))


def _bits(n: int) -> np.ndarray:
    idx = np.arange(2 ** n)
    return (idx[:, None] >> (n - 1 - np.arange(n))[None, :]) & 1


def build_hamiltonian(spec: ChainSpec) -> np.ndarray:
    """Dense real symmetric periodic XY Hamiltonian.

    ``(1+g) XX + (1-g) YY`` flips both bits of a bond with amplitude
    ``2g`` on parallel pairs and ``2`` on antiparallel ones.
    """
    n = spec.n_sites
    g, lam = spec.params.gamma, spec.params.lam
    dim = 2 ** n
    bits = _bits(n)
    idx = np.arange(dim)
    h = np.zeros((dim, dim))
    h[idx, idx] = -(n - 2 * bits.sum(axis=1))
    bonds = [(j, (j + 1) % n) for j in range(n)] if n > 2 else [(0, 1), (1, 0)]
    for i, j in bonds:
        mask = (1 << (n - 1 - i)) | (1 << (n - 1 - j))
        amp = np.where(bits[:, i] == bits[:, j], 2.0 * g, 2.0)
        np.add.at(h, (idx ^ mask, idx), -0.5 * lam * amp)
    return h


def chain_beta(params: ModelParams) -> float:
    """Lattice inverse temperature matching the kernel's ``beta``."""
    return params.beta / 2.0


def _eigh_by_parity(h: np.ndarray):
    # H conserves prod_j Z_j, so the two parity blocks diagonalise separately
    n = int(round(math.log2(h.shape[0])))
    parity = phase_flip_diagonal(n)
    e_parts, v_parts = [], []
    for sign in (1.0, -1.0):
        idx = np.flatnonzero(parity == sign)
        block = h[np.ix_(idx, idx)]
        if np.any(h[np.ix_(idx, np.flatnonzero(parity != sign))]):
            return np.linalg.eigh(h)
        e, v = np.linalg.eigh(block)
        full = np.zeros((h.shape[0], len(idx)))
        full[idx] = v
        e_parts.append(e)
        v_parts.append(full)
    e = np.concatenate(e_parts)
    order = np.argsort(e, kind="stable")
    return e[order], np.hstack(v_parts)[:, order]


def thermal_state(h: np.ndarray, beta: float) -> LatticeState:
    """``exp(-beta*H)/Z``; for ``beta = inf`` the equal mixture over the ground space."""
    if not beta > 0:
        raise ValueError("beta must be > 0")
    return _state_from_spectrum(*_eigh_by_parity(h), beta)


@lru_cache(maxsize=2)
def _chain_spectrum(n_sites: int, gamma: float, lam: float):
    h = build_hamiltonian(ChainSpec(n_sites, ModelParams(gamma, lam)))
    return _eigh_by_parity(h)


def _state_from_spectrum(e: np.ndarray, v: np.ndarray, beta: float) -> LatticeState:
    if math.isinf(beta):
        p = (e - e[0] <= DEGENERACY_TOL).astype(float)
    else:
        p = np.exp(-beta * (e - e[0]))
    p /= p.sum()
    keep = p > 0
    vk = v[:, keep] * np.sqrt(p[keep])
    return LatticeState(vk @ vk.T, e)


def reduce(state, sites) -> np.ndarray:
    """Partial trace onto ``sites``, in the given order."""
    rho = state.matrix if isinstance(state, LatticeState) else np.asarray(state)
    n = int(round(math.log2(rho.shape[0])))
    sites = [int(s) for s in sites]
    if len(set(sites)) != len(sites):
        raise IndexError(f"sites must be distinct: {sites}")
    if any(s < 0 or s >= n for s in sites):
        raise IndexError(f"site outside chain of length {n}: {sites}")
    rest = [s for s in range(n) if s not in sites]
    k = len(sites)
    t = rho.reshape((2,) * (2 * n))
    t = t.transpose(sites + rest + [n + s for s in sites] + [n + s for s in rest])
    t = t.reshape(2 ** k, 2 ** (n - k), 2 ** k, 2 ** (n - k))
    return np.einsum("ajbj->ab", t)


def phase_flip_diagonal(n: int) -> np.ndarray:
    """Diagonal of ``prod_j Z_j``."""
    return 1.0 - 2.0 * (_bits(n).sum(axis=1) % 2)


@dataclass(frozen=True)
class OracleRow:
    n_sites: int
    r: int
    sz: float
    xx: float
    yy: float
    zz: float
    entropy: float
    concurrence: float
    margin: float


def _expect(rho2: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
    return float(np.real(np.trace(rho2 @ np.kron(a, b))))


def oracle_report(spec: ChainSpec, r_max: int) -> list[OracleRow]:
    """Translation-averaged one- and two-site quantities for ``r = 1..r_max``."""
    n = spec.n_sites
    if not 1 <= r_max < n / 2:
        raise ValueError(f"r_max must satisfy 1 <= r_max < N/2 = {n / 2}")
    e, v = _chain_spectrum(n, spec.params.gamma, spec.params.lam)
    state = _state_from_spectrum(e, v, chain_beta(spec.params))
    rho1 = sum(reduce(state, [j]) for j in range(n)) / n
    sz = float(np.real(np.trace(rho1 @ Z)))
    s1 = von_neumann_entropy(rho1)
    rows = []
    for r in range(1, r_max + 1):
        rho2 = sum(reduce(state, [j, (j + r) % n]) for j in range(n)) / n
        rho2 = 0.5 * (rho2 + rho2.T)
        m = wootters_margin(rho2)
        rows.append(OracleRow(n, r, sz, _expect(rho2, X, X), _expect(rho2, Y, Y),
                              _expect(rho2, Z, Z), s1, min(1.0, max(0.0, m)), m))
    return rows
