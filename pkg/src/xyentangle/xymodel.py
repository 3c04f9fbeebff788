"""Thermodynamic-limit observables of the anisotropic XY chain.

Hamiltonian (cyclic, N -> infinity)::

    H = -sum_j [ (lam/2) ((1+gamma) X_j X_{j+1} + (1-gamma) Y_j Y_{j+1}) + Z_j ]

Everything here is built from one kernel, ``G_k``, a pair of integrals over
the Brillouin half-zone ``[0, pi]``. Spin-spin correlators along x and y are
Toeplitz determinants of ``G``; the zz correlator and the transverse
magnetisation are simple functions of it.

Conventions
-----------
* ``<Z> = +G_0`` so that the field-only ground state has ``<Z> = 1``.
* ``<Z_0 Z_r> = <Z>^2 - G_r G_{-r}`` (no factor 4; that factor belongs to a
  spin-1/2 normalisation ``S = sigma/2``).
* ``beta = inf`` means zero temperature: ``tanh(beta*omega/2)`` is replaced
  by 1 identically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import toeplitz

from .errors import CorrelatorRangeError, DomainError, InsufficientG
from .quadrature import DEFAULT_SPEC, IntegrationSpec, integrate, integrate_many

__all__ = [
    "ModelParams",
    "GVector",
    "CorrelatorSet",
    "CRITICAL",
    "dispersion",
    "g_coefficient",
    "build_gvector",
    "transverse_magnetisation",
    "x_magnetisation_ground",
    "xx_correlator",
    "yy_correlator",
    "zz_correlator",
    "correlators",
    "critical_xx",
    "critical_gvector",
    "critical_correlators",
    "critical_zz_single_term",
    "ground_energy_density",
]

RANGE_SLACK = 1e-8


@dataclass(frozen=True)
class ModelParams:
    """Anisotropy ``gamma``, inverse field ``lam``, inverse temperature ``beta``."""

    gamma: float
    lam: float
    beta: float = math.inf

    def __post_init__(self):
        if not 0.0 <= self.gamma <= 1.0:
            raise DomainError(f"gamma must lie in [0, 1], got {self.gamma}")
        if not (self.lam >= 0.0 and math.isfinite(self.lam)):
            raise DomainError(f"lambda must be finite and >= 0, got {self.lam}")
        if not self.beta > 0.0:
            raise DomainError(f"beta must be > 0 or inf, got {self.beta}")

    @classmethod
    def from_temperature(cls, gamma: float, lam: float, temperature: float) -> "ModelParams":
        """``T = 0`` maps to ``beta = inf``."""
        if temperature < 0 or not math.isfinite(temperature):
            raise DomainError(f"temperature must be finite and >= 0, got {temperature}")
        beta = math.inf if temperature == 0 else 1.0 / temperature
        return cls(gamma, lam, beta)

    @property
    def temperature(self) -> float:
        return 0.0 if math.isinf(self.beta) else 1.0 / self.beta

    @property
    def zero_temperature(self) -> bool:
        return math.isinf(self.beta)


CRITICAL = ModelParams(1.0, 1.0, math.inf)


def dispersion(phi, params: ModelParams):
    """Single-mode energy ``omega(phi)``; vectorised over ``phi``."""
    phi = np.asarray(phi, dtype=float)
    g, lam = params.gamma, params.lam
    return np.hypot(g * lam * np.sin(phi), 1.0 + lam * np.cos(phi))


def _thermal_weight(phi: np.ndarray, params: ModelParams) -> np.ndarray:
    # tanh(beta*omega/2)/omega, which stays finite (-> beta/2) as omega -> 0
    omega = dispersion(phi, params)
    if params.zero_temperature:
        return 1.0 / omega
    half = 0.5 * params.beta * omega
    with np.errstate(invalid="ignore", divide="ignore"):
        w = np.tanh(half) / omega
    return np.where(omega > 0, w, 0.5 * params.beta)


def _kernel_rows(ks: np.ndarray, params: ModelParams):
    g, lam = params.gamma, params.lam

    def f(phi):
        w = _thermal_weight(phi, params) / math.pi
        kp = ks[:, None] * phi[None, :]
        return (np.cos(kp) * (1.0 + lam * np.cos(phi))
                - g * lam * np.sin(kp) * np.sin(phi)) * w

    return f


def g_coefficient(k: int, params: ModelParams,
                  spec: IntegrationSpec = DEFAULT_SPEC) -> float:
    """Kernel value ``G_k`` for integer separation ``k``."""
    f = _kernel_rows(np.array([float(k)]), params)
    return integrate(lambda phi: f(phi)[0], 0.0, math.pi, spec)


@dataclass(frozen=True)
class GVector:
    """``G_k`` for ``k = -r_max .. r_max`` at fixed parameters."""

    params: ModelParams
    r_max: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.values.setflags(write=False)

    def __getitem__(self, k: int) -> float:
        if abs(k) > self.r_max:
            raise InsufficientG(f"G_{k} requested but r_max={self.r_max}")
        return float(self.values[k + self.r_max])

    def window(self, lo: int, hi: int) -> np.ndarray:
        """``G_lo .. G_hi`` inclusive."""
        if max(abs(lo), abs(hi)) > self.r_max:
            raise InsufficientG(f"G_{lo}..G_{hi} requested but r_max={self.r_max}")
        return self.values[lo + self.r_max: hi + self.r_max + 1]


def build_gvector(r_max: int, params: ModelParams,
                  spec: IntegrationSpec = DEFAULT_SPEC) -> GVector:
    """All kernel values up to ``|k| = r_max`` from a single stacked quadrature."""
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    ks = np.arange(-r_max, r_max + 1, dtype=float)
    vals = integrate_many(_kernel_rows(ks, params), len(ks), 0.0, math.pi, spec)
    return GVector(params, int(r_max), np.asarray(vals, dtype=float))


def transverse_magnetisation(params: ModelParams,
                             spec: IntegrationSpec = DEFAULT_SPEC) -> float:
    """``<Z>``, equal to ``G_0``."""
    lam = params.lam

    def f(phi):
        return (1.0 + lam * np.cos(phi)) * _thermal_weight(phi, params) / math.pi

    return integrate(f, 0.0, math.pi, spec)


def x_magnetisation_ground(lam: float, gamma: float = 1.0) -> float:
    """Order parameter ``<X>`` in the symmetry-broken Ising ground state."""
    if gamma != 1.0:
        raise DomainError("closed form for <X> is only available for gamma = 1")
    if lam < 0:
        raise DomainError(f"lambda must be >= 0, got {lam}")
    if lam <= 1.0:
        return 0.0
    if math.isinf(lam):
        return 1.0
    return (1.0 - lam ** -2) ** 0.125


def _check_r(r: int, gvec: GVector, need: int):
    if r < 1:
        raise ValueError("separation r must be >= 1")
    if gvec.r_max < need:
        raise InsufficientG(f"separation {r} needs r_max >= {need}, have {gvec.r_max}")


def xx_correlator(r: int, gvec: GVector) -> float:
    """``<X_0 X_r>`` as the determinant of ``M[i, j] = G_{i-j-1}``."""
    _check_r(r, gvec, r)
    col = gvec.window(-1, r - 2)
    row = gvec.window(-r, -1)[::-1]
    return float(np.linalg.det(toeplitz(col, row)))


def yy_correlator(r: int, gvec: GVector) -> float:
    """``<Y_0 Y_r>`` as the determinant of ``M[i, j] = G_{i-j+1}``."""
    _check_r(r, gvec, r)
    col = gvec.window(1, r)
    row = gvec.window(2 - r, 1)[::-1]
    return float(np.linalg.det(toeplitz(col, row)))


def zz_correlator(r: int, gvec: GVector, sz: float) -> float:
    _check_r(r, gvec, r)
    return float(sz * sz - gvec[r] * gvec[-r])


@dataclass(frozen=True)
class CorrelatorSet:
    r: int
    sz: float
    sx: float
    xx: float
    yy: float
    zz: float

    def __post_init__(self):
        for name in ("sz", "sx", "xx", "yy", "zz"):
            v = getattr(self, name)
            if not (math.isfinite(v) and abs(v) <= 1.0 + RANGE_SLACK):
                raise CorrelatorRangeError(f"{name}={v!r} outside [-1, 1] at r={self.r}")

    def clamped(self) -> "CorrelatorSet":
        """Copy with entries clipped to [-1, 1]; for reporting only."""
        c = lambda v: min(1.0, max(-1.0, v))  # noqa: E731
        return CorrelatorSet(self.r, c(self.sz), c(self.sx), c(self.xx),
                             c(self.yy), c(self.zz))


def correlators(r: int, params: ModelParams, spec: IntegrationSpec = DEFAULT_SPEC,
                gvec: GVector | None = None) -> CorrelatorSet:
    """Thermal-state correlators at separation ``r`` (``sx`` is 0 by symmetry)."""
    if gvec is None:
        gvec = build_gvector(r, params, spec)
    sz = gvec[0]
    return CorrelatorSet(r, sz, 0.0, xx_correlator(r, gvec), yy_correlator(r, gvec),
                         zz_correlator(r, gvec, sz))


def _log_h(n: int) -> float:
    # H(n) = 1^(n-1) 2^(n-2) ... (n-1)^1
    return sum((n - k) * math.log(k) for k in range(1, n))


def critical_xx(r: int) -> float:
    """Closed-form ``<X_0 X_r>`` at the Ising critical point, in log space."""
    if r < 1:
        raise ValueError("separation r must be >= 1")
    log_val = (r * math.log(2.0 / math.pi) + 2 * r * (r - 1) * math.log(2.0)
               + 4 * _log_h(r) - _log_h(2 * r))
    return math.exp(log_val)


def critical_zz_single_term(r: int) -> float:
    """The single-term ``(4/pi)/(4r^2-1)`` form of the critical ZZ correlator; comparison only.

    It does not match ``<Z>^2 - G_r G_-r`` and is never used to build states.
    """
    return 4.0 / math.pi / (4 * r * r - 1)


def critical_gvector(r_max: int) -> GVector:
    """Exact kernel at the Ising critical point: ``G_k = 2 (-1)^k / (pi (2k+1))``."""
    ks = np.arange(-r_max, r_max + 1)
    return GVector(CRITICAL, int(r_max), 2.0 * (-1.0) ** ks / (math.pi * (2 * ks + 1)))


def critical_correlators(r: int) -> CorrelatorSet:
    """Correlators at ``gamma = lam = 1``, ``T = 0`` without quadrature."""
    xx = critical_xx(r)
    sz = 2.0 / math.pi
    zz = zz_correlator(r, critical_gvector(r), sz)
    return CorrelatorSet(r, sz, 0.0, xx, -xx / (4 * r * r - 1), zz)


def ground_energy_density(params: ModelParams,
                          spec: IntegrationSpec = DEFAULT_SPEC) -> float:
    """Ground-state energy per site, ``-(1/pi) * int_0^pi omega``."""
    return -integrate(lambda phi: dispersion(phi, params), 0.0, math.pi, spec) / math.pi
