"""Command-line front end.

Exit codes: 0 success, 1 validation failure, 2 domain error, 3 I/O error.
Negative rapidities need the ``=`` form, e.g. ``--eta=-1,0,1``.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import figures, validate
from .coupled import OscillatorParams, eigenfrequency_oracle, normal_modes
from .errors import CovoscError
from .grid import GridSpec
from .momentum import fourier_duality_check

EXIT_OK, EXIT_VALIDATION, EXIT_DOMAIN, EXIT_IO = 0, 1, 2, 3

DEFAULT_ETAS = {
    "squeeze": "0,1,2,4",
    "entangle": "0,0.5,1,2",
    "parton": "0,1,2,3,4",
    "fourier-check": "0,1,-1,2,-2",
    "validate": "0,1,-1,2,-2",
}
DEFAULT_GRID = {
    "squeeze": (201, 6.0),
    "parton": (801, 40.0),
    "fourier-check": (384, 12.0),
    "validate": (384, 12.0),
}


@dataclass
class RunConfig:
    command: str
    etas: list[float] = field(default_factory=list)
    kmax: int = 20
    grid_n: int = 201
    extent: float = 6.0
    quad_order: int = 96
    output: Path | None = None
    fmt: str = "csv"
    inject: str | None = None

    def grid(self) -> GridSpec:
        return GridSpec.square(self.extent, self.grid_n)


def parse_etas(text: str) -> list[float]:
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad eta list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="covosc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, grid=True, kmax=True, quad=False):
        p.add_argument("--eta", type=parse_etas, default=None, help="comma-separated rapidities")
        if grid:
            p.add_argument("--grid-n", type=int, default=None)
            p.add_argument("--extent", type=float, default=None)
        if kmax:
            p.add_argument("--kmax", type=int, default=None)
        if quad:
            p.add_argument("--quad-order", type=int, default=96)
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", type=Path, default=None)

    modes = sub.add_parser("modes", help="normal-mode data of the coupled oscillators")
    modes.add_argument("--m", type=float, required=True)
    modes.add_argument("--a", type=float, required=True)
    modes.add_argument("--c", type=float, required=True)
    modes.add_argument("--format", choices=("csv", "json"), default="csv")
    modes.add_argument("--output", type=Path, default=None)

    common(sub.add_parser("squeeze", help="boosted densities and ellipse contours"), kmax=False)
    common(sub.add_parser("entangle", help="Schmidt coefficients and entropy"), grid=False)
    common(sub.add_parser("parton", help="longitudinal position and momentum marginals"), kmax=False)
    common(sub.add_parser("fourier-check", help="numerical transform vs momentum wave function"), kmax=False)
    val = sub.add_parser("validate", help="run the oracle suite")
    common(val, quad=True)
    val.add_argument("--inject", choices=validate.FAULTS, default=None, help="deliberately break one code path")
    return parser


def make_config(args) -> RunConfig:
    n, extent = DEFAULT_GRID.get(args.command, (201, 6.0))
    etas = args.eta if getattr(args, "eta", None) is not None else parse_etas(DEFAULT_ETAS.get(args.command, "0"))
    grid_n = getattr(args, "grid_n", None)
    ext = getattr(args, "extent", None)
    kmax = getattr(args, "kmax", None)
    return RunConfig(
        command=args.command,
        etas=etas,
        kmax=20 if kmax is None else kmax,
        grid_n=n if grid_n is None else grid_n,
        extent=extent if ext is None else ext,
        quad_order=getattr(args, "quad_order", 96),
        output=args.output,
        fmt=args.format,
        inject=getattr(args, "inject", None),
    )


def _sibling(path: Path, tag: str) -> Path:
    return path.with_name(f"{path.stem}.{tag}{path.suffix}")


def emit(tables: list[tuple[figures.Table, str | None]], cfg: RunConfig) -> None:
    for table, tag in tables:
        text = figures.render(table, cfg.fmt)
        if cfg.output is None:
            sys.stdout.write(text)
        else:
            path = cfg.output if tag is None else _sibling(cfg.output, tag)
            with open(path, "w", newline="\n") as fh:
                fh.write(text)


def cmd_modes(args, cfg: RunConfig) -> int:
    params = OscillatorParams(args.m, args.a, args.c)
    modes = normal_modes(params)
    oracle = sorted(eigenfrequency_oracle(params))
    got = sorted((modes.omega_slow, modes.omega_fast))
    delta = max(abs(a - b) for a, b in zip(got, oracle))
    table = figures.Table(
        "modes",
        ["m", "A", "C", "K", "eta", "omega", "omega_slow", "omega_fast", "oracle_delta"],
        rows=[(params.m, params.A, params.C, modes.K, modes.eta, modes.omega, modes.omega_slow, modes.omega_fast, delta)],
    )
    emit([(table, None)], cfg)
    return EXIT_OK


def cmd_squeeze(args, cfg: RunConfig) -> int:
    density, ellipse = figures.squeeze_tables(cfg.etas, cfg.grid())
    emit([(density, None), (ellipse, "ellipse")], cfg)
    return EXIT_OK


def cmd_entangle(args, cfg: RunConfig) -> int:
    emit([(figures.entangle_table(cfg.etas, cfg.kmax), None)], cfg)
    return EXIT_OK


def cmd_parton(args, cfg: RunConfig) -> int:
    emit([(figures.parton_table(cfg.etas, cfg.grid()), None)], cfg)
    return EXIT_OK


def cmd_fourier_check(args, cfg: RunConfig) -> int:
    grid = cfg.grid()
    table = figures.Table(
        "fourier-check",
        ["eta", "max_deviation", "tolerance", "passed"],
        meta={"grid_n": cfg.grid_n, "extent": cfg.extent},
    )
    ok = True
    for eta in cfg.etas:
        dev = fourier_duality_check(eta, grid)
        passed = dev < 1e-6
        ok &= passed
        table.rows.append((float(eta), dev, 1e-6, passed))
    emit([(table, None)], cfg)
    return EXIT_OK if ok else EXIT_VALIDATION


def cmd_validate(args, cfg: RunConfig) -> int:
    suite = validate.SuiteConfig(
        quad_order=cfg.quad_order,
        kmax=cfg.kmax,
        fourier_etas=tuple(cfg.etas),
        fourier_extent=cfg.extent,
        fourier_n=cfg.grid_n,
        inject=cfg.inject,
    )
    results = validate.run_suite(suite)
    table = figures.Table(
        "validate",
        ["check", "measured", "tolerance", "passed"],
        rows=[(r.name, r.measured, r.tolerance, r.passed) for r in results],
        meta={"inject": cfg.inject or "none"},
    )
    emit([(table, None)], cfg)
    failed = [r for r in results if not r.passed]
    for r in failed:
        print(r.line(), file=sys.stderr)
    return EXIT_VALIDATION if failed else EXIT_OK


COMMANDS = {
    "modes": cmd_modes,
    "squeeze": cmd_squeeze,
    "entangle": cmd_entangle,
    "parton": cmd_parton,
    "fourier-check": cmd_fourier_check,
    "validate": cmd_validate,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = make_config(args)
        return COMMANDS[args.command](args, cfg)
    except CovoscError as exc:
        print(f"covosc {args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"covosc {args.command}: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
