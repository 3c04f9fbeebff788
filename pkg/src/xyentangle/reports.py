"""Tabular reports: critical-point correlators and oracle comparisons."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .measures import concurrence_x_state
from .oracle import ChainSpec, oracle_report
from .quadrature import DEFAULT_SPEC, IntegrationSpec
from .reduced import two_site_from_correlators
from .sweep import ResultRow, evaluate_point
from .xymodel import (CRITICAL, ModelParams, build_gvector, correlators,
                      critical_correlators, critical_zz_single_term)

__all__ = ["CriticalRow", "critical_report", "first_unentangled", "oracle_rows"]


@dataclass(frozen=True)
class CriticalRow:
    r: int
    xx_closed: float
    xx_quad: float
    yy_closed: float
    yy_quad: float
    zz: float
    zz_single_term: float
    concurrence: float

    @property
    def xx_diff(self) -> float:
        return abs(self.xx_closed - self.xx_quad)

    @property
    def yy_diff(self) -> float:
        return abs(self.yy_closed - self.yy_quad)

    def as_dict(self) -> dict:
        d = asdict(self)
        d.update(xx_diff=self.xx_diff, yy_diff=self.yy_diff)
        return d


def critical_report(r_max: int, spec: IntegrationSpec = DEFAULT_SPEC) -> list[CriticalRow]:
    """Closed-form and quadrature correlators at ``gamma = lam = 1``, ``T = 0``."""
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    gvec = build_gvector(r_max, CRITICAL, spec)
    rows = []
    for r in range(1, r_max + 1):
        closed = critical_correlators(r)
        quad = correlators(r, CRITICAL, spec, gvec)
        c = concurrence_x_state(two_site_from_correlators(quad))
        rows.append(CriticalRow(r, closed.xx, quad.xx, closed.yy, quad.yy, quad.zz,
                                critical_zz_single_term(r), c))
    return rows


def first_unentangled(rows) -> int | None:
    return next((row.r for row in rows if row.concurrence == 0.0), None)


def oracle_rows(n_sites: int, gamma: float, lam: float, temperature: float,
                r_max: int, spec: IntegrationSpec = DEFAULT_SPEC):
    """Oracle rows at ``n_sites`` followed by the matching infinite-chain rows.

    Returns ``(rows, n_sites_column)``; limit rows carry ``inf`` there.
    """
    params = ModelParams.from_temperature(gamma, lam, temperature)
    report = oracle_report(ChainSpec(n_sites, params), r_max)
    rows = [ResultRow(gamma, lam, temperature, 0, "sz", report[0].sz),
            ResultRow(gamma, lam, temperature, 0, "entropy_thermal", report[0].entropy)]
    for o in report:
        for q in ("concurrence", "xx", "yy", "zz"):
            rows.append(ResultRow(gamma, lam, temperature, o.r, q, getattr(o, q)))
    limit = evaluate_point(gamma, lam, temperature, range(1, r_max + 1),
                           ("sz", "entropy_thermal", "concurrence", "xx", "yy", "zz"), spec)
    limit.sort()
    rows.sort()
    return rows + limit, [n_sites] * len(rows) + ["inf"] * len(limit)

