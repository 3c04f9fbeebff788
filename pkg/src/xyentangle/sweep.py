"""Parameter sweeps and the CSV/JSON record format.

A sweep is the Cartesian product of gamma, lambda, temperature and
separation lists. Every grid point yields one :class:`ResultRow` per
requested quantity. Rows are sorted by ``(gamma, lambda, temperature, r,
quantity)`` before output, so results do not depend on evaluation order.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import DomainError, SchemaError
from .measures import concurrence_x_state, eof_from_concurrence, von_neumann_entropy
from .quadrature import DEFAULT_SPEC, IntegrationSpec
from .reduced import OneSiteState, two_site_from_correlators
from .xymodel import ModelParams, build_gvector, correlators, x_magnetisation_ground

__all__ = [
    "QUANTITIES",
    "ONE_SITE",
    "TWO_SITE",
    "CSV_HEADER",
    "ResultRow",
    "SweepSpec",
    "parse_values",
    "applicable",
    "evaluate_point",
    "run_sweep",
    "format_csv",
    "write_csv",
    "read_csv",
]

ONE_SITE = ("entropy_ground", "entropy_thermal", "sx", "sz")
TWO_SITE = ("concurrence", "eof", "xx", "yy", "zz")
QUANTITIES = ONE_SITE + TWO_SITE
CSV_HEADER = ("gamma", "lambda", "temperature", "r", "quantity", "value")


@dataclass(frozen=True, order=True)
class ResultRow:
    gamma: float
    lam: float
    temperature: float
    r: int
    quantity: str
    value: float = field(compare=False)

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise SchemaError(f"non-finite value for {self.quantity}")
        if (self.quantity in ONE_SITE) != (self.r == 0):
            raise SchemaError(f"quantity {self.quantity!r} inconsistent with r={self.r}")


def parse_values(text) -> list[float]:
    """Parse ``"a:b:step"`` (inclusive), ``"a,b,c"``, a number, or a list."""
    if isinstance(text, (int, float)):
        return [float(text)]
    if isinstance(text, (list, tuple)):
        return [float(v) for v in text]
    text = str(text).strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"range must look like a:b:step, got {text!r}")
        a, b, step = (float(p) for p in parts)
        if not step > 0:
            raise ValueError(f"step must be > 0 in {text!r}")
        if b < a:
            raise ValueError(f"empty range {text!r}")
        n = int(math.floor((b - a) / step + 1e-9))
        # round away accumulated binary error so grid values print cleanly
        return [round(a + i * step, 12) for i in range(n + 1)]
    vals = [float(v) for v in text.split(",") if v.strip()]
    if not vals:
        raise ValueError("empty value list")
    return vals


@dataclass(frozen=True)
class SweepSpec:
    gammas: tuple[float, ...]
    lambdas: tuple[float, ...]
    temperatures: tuple[float, ...]
    r_list: tuple[int, ...]
    quantities: tuple[str, ...]

    def __post_init__(self):
        for name in ("gammas", "lambdas", "temperatures", "r_list", "quantities"):
            if not getattr(self, name):
                raise ValueError(f"{name} must be non-empty")
        if any(not 0 <= g <= 1 for g in self.gammas):
            raise ValueError("gamma values must lie in [0, 1]")
        if any(v < 0 for v in self.lambdas + self.temperatures):
            raise ValueError("lambda and temperature values must be >= 0")
        if any(r < 1 for r in self.r_list):
            raise ValueError("separations must be >= 1")
        bad = set(self.quantities) - set(QUANTITIES)
        if bad:
            raise ValueError(f"unknown quantities {sorted(bad)}; choose from {QUANTITIES}")
        for g in self.gammas:
            for t in self.temperatures:
                for q in self.quantities:
                    if not applicable(q, g, t):
                        raise ValueError(
                            f"{q} is only defined for gamma = 1 and T = 0 (got gamma={g}, T={t})")

    @classmethod
    def build(cls, gamma, lam, temperature=0.0, r=(1,), quantities=("concurrence",)):
        if isinstance(r, str):
            r = [int(v) for v in r.split(",") if v.strip()]
        elif isinstance(r, int):
            r = [r]
        if isinstance(quantities, str):
            quantities = [q.strip() for q in quantities.split(",") if q.strip()]
        return cls(tuple(parse_values(gamma)), tuple(parse_values(lam)),
                   tuple(parse_values(temperature)), tuple(sorted({int(v) for v in r})),
                   tuple(quantities))

    @classmethod
    def from_job(cls, path) -> "SweepSpec":
        """Load a JSON job file with keys gamma, lambda, temperature, r, quantities."""
        job = json.loads(Path(path).read_text())
        unknown = set(job) - {"gamma", "lambda", "temperature", "r", "quantities", "out",
                              "description"}
        if unknown:
            raise ValueError(f"unknown job keys {sorted(unknown)}")
        return cls.build(job["gamma"], job["lambda"], job.get("temperature", 0.0),
                         job.get("r", [1]), job.get("quantities", ["concurrence"]))

    def points(self):
        for g in self.gammas:
            for lam in self.lambdas:
                for t in self.temperatures:
                    yield g, lam, t


def applicable(quantity: str, gamma: float, temperature: float) -> bool:
    if quantity in ("entropy_ground", "sx"):
        return gamma == 1.0 and temperature == 0.0
    return True


def evaluate_point(gamma: float, lam: float, temperature: float, r_list,
                   quantities=QUANTITIES, spec: IntegrationSpec = DEFAULT_SPEC,
                   strict: bool = True) -> list[ResultRow]:
    """All requested quantities at one parameter point.

    With ``strict=False`` quantities that do not apply (ground-state ones
    away from the Ising line or at ``T > 0``) are skipped instead of raising.
    """
    params = ModelParams.from_temperature(gamma, lam, temperature)
    wanted = []
    for q in quantities:
        if applicable(q, gamma, temperature):
            wanted.append(q)
        elif strict:
            raise DomainError(f"{q} undefined at gamma={gamma}, T={temperature}")
    rows = []
    r_list = sorted(set(int(r) for r in r_list))
    gvec = build_gvector(max(r_list), params, spec)
    sz = gvec[0]

    def add(r, q, v):
        rows.append(ResultRow(gamma, lam, temperature, r, q, float(v)))

    for q in wanted:
        if q == "sz":
            add(0, q, sz)
        elif q == "sx":
            add(0, q, x_magnetisation_ground(lam, gamma))
        elif q == "entropy_thermal":
            add(0, q, von_neumann_entropy(OneSiteState(0.0, sz).matrix))
        elif q == "entropy_ground":
            state = OneSiteState(x_magnetisation_ground(lam, gamma), sz)
            add(0, q, von_neumann_entropy(state.matrix))
    two = [q for q in wanted if q in TWO_SITE]
    if two:
        for r in r_list:
            cs = correlators(r, params, spec, gvec)
            state = two_site_from_correlators(cs)
            c = concurrence_x_state(state) if {"concurrence", "eof"} & set(two) else 0.0
            values = {"concurrence": c, "xx": cs.xx, "yy": cs.yy, "zz": cs.zz}
            for q in two:
                add(r, q, eof_from_concurrence(c) if q == "eof" else values[q])
    return rows


def _eval_task(args):
    return evaluate_point(*args)


def run_sweep(sweep: SweepSpec, spec: IntegrationSpec = DEFAULT_SPEC,
              jobs: int = 1) -> list[ResultRow]:
    tasks = [(g, lam, t, sweep.r_list, sweep.quantities, spec)
             for g, lam, t in sweep.points()]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_eval_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        chunks = [_eval_task(t) for t in tasks]
    return sorted(row for chunk in chunks for row in chunk)


def _fmt(v: float) -> str:
    return f"{v:.12g}"


def format_csv(rows, extra: dict | None = None) -> str:
    """Render rows in the fixed schema; ``extra`` appends constant-per-row columns."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    extra_cols = list(extra or {})
    w.writerow(list(CSV_HEADER) + extra_cols)
    for i, row in enumerate(rows):
        cells = [_fmt(row.gamma), _fmt(row.lam), _fmt(row.temperature), str(row.r),
                 row.quantity, _fmt(row.value)]
        cells += [str(extra[c][i]) for c in extra_cols]
        w.writerow(cells)
    return buf.getvalue()


def write_csv(text: str, path) -> None:
    """Atomically write ``text``; nothing is left behind on failure."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        umask = os.umask(0)
        os.umask(umask)
        os.chmod(tmp, 0o666 & ~umask)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_csv(path) -> list[ResultRow]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or tuple(header[:6]) != CSV_HEADER:
            raise SchemaError(f"{path}: header must start with {','.join(CSV_HEADER)}")
        rows = []
        for lineno, cells in enumerate(reader, start=2):
            try:
                g, lam, t, r, q, v = cells[:6]
                if q not in QUANTITIES:
                    raise ValueError(f"unknown quantity {q!r}")
                rows.append(ResultRow(float(g), float(lam), float(t), int(r), q, float(v)))
            except (ValueError, SchemaError) as exc:
                raise SchemaError(f"{path}:{lineno}: {exc}") from exc
    return rows


def rows_to_array(rows, quantity: str, r: int, temperature: float | None = None):
    """``(lambdas, values)`` for one curve, sorted by lambda."""
    sel = [x for x in rows if x.quantity == quantity and x.r == r
           and (temperature is None or x.temperature == temperature)]
    sel.sort(key=lambda x: x.lam)
    return np.array([x.lam for x in sel]), np.array([x.value for x in sel])
