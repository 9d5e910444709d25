"""Tabular figure data and its CSV / JSON serialization.

Every table is a list of rows under named columns, plus ``meta`` (written as a
``#`` header) and optional ``summary`` records (written as a ``#`` footer in
CSV, a separate array in JSON).  Floats use 17 significant digits so a parsed
file reproduces the doubles exactly.  Nothing time-dependent is written.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import __version__
from .covariant import boosted_wavefunction, squeeze_ellipse
from .entanglement import entanglement_entropy, expansion_coefficients
from .grid import GridSpec
from .momentum import parton_profile


@dataclass
class Table:
    command: str
    columns: list[str]
    rows: list[tuple] = field(default_factory=list)
    meta: dict = field(default_factory=dict)
    summary: list[dict] = field(default_factory=list)


def fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return str(value)


def to_csv(table: Table) -> str:
    buf = io.StringIO()
    buf.write(f"# command={table.command} version={__version__}\n")
    for key, value in table.meta.items():
        buf.write(f"# {key}={fmt_meta(value)}\n")
    buf.write(",".join(table.columns) + "\n")
    for row in table.rows:
        buf.write(",".join(fmt(v) for v in row) + "\n")
    for rec in table.summary:
        buf.write("# summary " + " ".join(f"{k}={fmt(v)}" for k, v in rec.items()) + "\n")
    return buf.getvalue()


def fmt_meta(value) -> str:
    if isinstance(value, (list, tuple)):
        return ",".join(fmt(v) for v in value)
    return fmt(value)


def _plain(value):
    if isinstance(value, (np.floating, np.integer, np.bool_)):
        return value.item()
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def to_json(table: Table) -> str:
    doc = {
        "command": table.command,
        "version": __version__,
        "meta": {k: _plain(v) for k, v in table.meta.items()},
        "columns": table.columns,
        "rows": [dict(zip(table.columns, map(_plain, row))) for row in table.rows],
        "summary": [{k: _plain(v) for k, v in rec.items()} for rec in table.summary],
    }
    return json.dumps(doc, indent=1) + "\n"


def render(table: Table, fmt_tag: str) -> str:
    if fmt_tag == "csv":
        return to_csv(table)
    if fmt_tag == "json":
        return to_json(table)
    raise ValueError(f"unknown output format {fmt_tag!r}")


def read_csv(text: str) -> tuple[list[str], np.ndarray]:
    """Column names and float data of a CSV written by :func:`to_csv`."""
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    columns = lines[0].split(",")
    data = np.array([[float(v) for v in ln.split(",")] for ln in lines[1:]])
    return columns, data


def squeeze_tables(etas: Sequence[float], grid: GridSpec) -> tuple[Table, Table]:
    """Density grid per eta and the matching 1/e ellipse descriptors."""
    meta = {"eta": list(etas), "grid_n": grid.n_z, "extent": grid.z_max}
    density = Table("squeeze", ["eta", "z", "t", "density"], meta=dict(meta))
    ellipse = Table("squeeze-ellipse", ["eta", "semi_u", "semi_v", "area", "aspect_ratio"], meta=dict(meta))
    z, t = grid.mesh()
    zf, tf = z.ravel(), t.ravel()
    for eta in etas:
        rho = boosted_wavefunction(eta, zf, tf) ** 2
        density.rows.extend(zip([float(eta)] * rho.size, zf, tf, rho))
        density.summary.append({"eta": float(eta), "riemann_sum": float(rho.sum() * grid.dz * grid.dt)})
        e = squeeze_ellipse(eta)
        ellipse.rows.append((float(eta), e.semi_u, e.semi_v, e.area, e.aspect_ratio))
    return density, ellipse


def entangle_table(etas: Sequence[float], kmax: int) -> Table:
    table = Table("entangle", ["eta", "k", "c_k", "p_k"], meta={"eta": list(etas), "kmax": kmax})
    for eta in etas:
        series = expansion_coefficients(eta, kmax)
        for k, c in enumerate(series.coefficients):
            table.rows.append((float(eta), k, float(c), float(c * c)))
        table.summary.append(
            {
                "eta": float(eta),
                "entropy": entanglement_entropy(eta),
                "lambda": series.lam,
                "sum_p": float(np.sum(series.coefficients**2)),
                "truncation_deficit": series.truncation_deficit,
            }
        )
    return table


def parton_table(etas: Sequence[float], grid: GridSpec) -> Table:
    table = Table(
        "parton",
        ["eta", "x", "position_density", "momentum_density"],
        meta={"eta": list(etas), "grid_n": grid.n_z, "extent": grid.z_max},
    )
    for eta in etas:
        prof = parton_profile(eta, grid)
        for x, a, b in zip(prof.axis, prof.position_density, prof.momentum_density):
            table.rows.append((float(eta), float(x), float(a), float(b)))
        table.summary.append({"eta": float(eta), "sigma_z": prof.sigma_z, "sigma_q": prof.sigma_q})
    return table
