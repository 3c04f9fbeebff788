"""One- and two-site reduced density matrices of the infinite chain.

Basis ordering is ``|00>, |01>, |10>, |11>`` with ``|0>`` the ``Z = +1``
eigenstate and the left factor the site at 0. Concurrence extraction from
the anti-diagonal relies on this ordering.

Two-site states are only built for the thermal ensemble (including its
``T = 0`` limit, the equal mixture over degenerate ground states). A
symmetry-broken two-site ground state would need ``<X_0 Z_r>``, which has
no kernel representation, so none is offered; the single-site ground
state is available through :func:`one_site_ground`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PositivityError
from .quadrature import DEFAULT_SPEC, IntegrationSpec
from .xymodel import (CorrelatorSet, GVector, ModelParams, correlators,
                      transverse_magnetisation, x_magnetisation_ground)

__all__ = [
    "PAULI",
    "OneSiteState",
    "TwoSiteState",
    "one_site_thermal",
    "one_site_ground",
    "two_site_thermal",
    "two_site_from_correlators",
    "check_eigenvalues",
]

EIG_FLOOR = 1e-9

I2 = np.eye(2)
X = np.array([[0.0, 1.0], [1.0, 0.0]])
Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
Z = np.array([[1.0, 0.0], [0.0, -1.0]])
PAULI = {"I": I2, "X": X, "Y": Y, "Z": Z}


def check_eigenvalues(rho: np.ndarray, floor: float = EIG_FLOOR) -> np.ndarray:
    """Eigenvalues of a Hermitian ``rho`` with ``[-floor, 0)`` clamped to 0.

    Raises :class:`PositivityError` for anything more negative.
    """
    w = np.linalg.eigvalsh(rho)
    if w.min() < -floor:
        raise PositivityError(f"density matrix eigenvalue {w.min():.3e} < -{floor:g}")
    return np.clip(w, 0.0, None)


@dataclass(frozen=True)
class OneSiteState:
    """``(I + bx X + bz Z) / 2``; ``<Y>`` vanishes because H is real."""

    bx: float
    bz: float

    def __post_init__(self):
        if self.bx ** 2 + self.bz ** 2 > 1.0 + EIG_FLOOR:
            raise PositivityError(f"Bloch vector ({self.bx}, {self.bz}) longer than 1")

    @property
    def matrix(self) -> np.ndarray:
        return 0.5 * (I2 + self.bx * X + self.bz * Z)

    def eigenvalues(self) -> np.ndarray:
        n = min(1.0, math.hypot(self.bx, self.bz))
        return np.array([(1.0 - n) / 2.0, (1.0 + n) / 2.0])


@dataclass(frozen=True)
class TwoSiteState:
    """``(I + z (Z0 + Zr) + xx X0Xr + yy Y0Yr + zz Z0Zr) / 4``."""

    z: float
    xx: float
    yy: float
    zz: float
    r: int = 1

    @property
    def matrix(self) -> np.ndarray:
        z, xx, yy, zz = self.z, self.xx, self.yy, self.zz
        m = np.zeros((4, 4))
        m[0, 0] = 1.0 + 2.0 * z + zz
        m[1, 1] = m[2, 2] = 1.0 - zz
        m[3, 3] = 1.0 - 2.0 * z + zz
        m[0, 3] = m[3, 0] = xx - yy
        m[1, 2] = m[2, 1] = xx + yy
        return 0.25 * m

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix)

    def partial_trace(self, keep: int = 0) -> OneSiteState:
        """Reduced state of site 0 (``keep=0``) or site r (``keep=1``)."""
        t = self.matrix.reshape(2, 2, 2, 2)
        rho = np.einsum("ajbj->ab", t) if keep == 0 else np.einsum("jajb->ab", t)
        return OneSiteState(float(2.0 * rho[0, 1].real), float(rho[0, 0] - rho[1, 1]))

    def swapped(self) -> np.ndarray:
        """Matrix with the two sites exchanged."""
        return self.matrix.reshape(2, 2, 2, 2).transpose(1, 0, 3, 2).reshape(4, 4)


def one_site_thermal(params: ModelParams,
                     spec: IntegrationSpec = DEFAULT_SPEC) -> OneSiteState:
    return OneSiteState(0.0, transverse_magnetisation(params, spec))


def one_site_ground(lam: float, gamma: float = 1.0,
                    spec: IntegrationSpec = DEFAULT_SPEC) -> OneSiteState:
    """Single site of the symmetry-broken Ising ground state ``|0+>``.

    ``lam = inf`` gives the fully polarised ``|->`` product limit.
    """
    if gamma != 1.0:
        raise DomainError("ground-state single-site matrix requires gamma = 1")
    bx = x_magnetisation_ground(lam, gamma)
    if math.isinf(lam):
        return OneSiteState(bx, 0.0)
    return OneSiteState(bx, transverse_magnetisation(ModelParams(1.0, lam), spec))


def two_site_from_correlators(c: CorrelatorSet) -> TwoSiteState:
    state = TwoSiteState(c.sz, c.xx, c.yy, c.zz, c.r)
    check_eigenvalues(state.matrix)
    return state


def two_site_thermal(r: int, params: ModelParams, spec: IntegrationSpec = DEFAULT_SPEC,
                     gvec: GVector | None = None) -> TwoSiteState:
    """Sites 0 and r of the thermal state (``beta = inf``: thermal ground state)."""
    return two_site_from_correlators(correlators(r, params, spec, gvec))
