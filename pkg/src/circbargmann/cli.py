"""Command-line entry point.

Commands
--------
eval-basis   level-``m`` basis function ``n`` on a polar grid (or one point)
eval-cs      coherent state ``<e^{i theta}|z>`` over ``z`` on a grid (or one point)
transform    transform of a ket combination on a grid (or one point)
verify       run the verification suite

Exit status: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from dataclasses import dataclass

import numpy as np

from . import bases, coherent, quadrature, transforms, verify
from .bases import ModelParams
from .errors import ConfigError, ParameterError
from .transforms import DiskGrid

__all__ = ["RunConfig", "parse_complex", "parse_config", "run", "emit", "main"]

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

COMMANDS = ("eval-basis", "eval-cs", "transform", "verify")
GRID_HEADER = ("re_z", "im_z", "re_value", "im_value", "abs_value")

# bulk grid evaluation trades the verification tolerance for speed
CLI_SERIES_TOL = 1e-9

_BARE_I = re.compile(r"(^|[+-])i$")


@dataclass
class RunConfig:
    command: str
    params: ModelParams
    n: int = 0
    z: complex | None = None
    theta: float = 0.0
    coeffs: tuple = ()
    n_radial: int = 16
    n_angular: int = 32
    max_radius: float = 0.85
    level: int = quadrature.DEFAULT_CIRCLE_LEVEL
    disk_size: tuple = quadrature.DEFAULT_DISK_SIZE
    method: str = "closed"
    tol: float | None = None
    seed: int = 42
    all_sets: bool = False
    timing: bool = False
    output: str | None = None
    fmt: str = "csv"


def parse_complex(text: str) -> complex:
    """Parse ``a+bi`` style literals (``j`` also accepted)."""
    t = text.strip().replace(" ", "")
    if not t:
        raise ValueError("empty complex literal")
    t = _BARE_I.sub(r"\g<1>1i", t).replace("i", "j")
    value = complex(t)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ValueError(f"non-finite complex literal {text!r}")
    return value


def _complex_arg(text: str) -> complex:
    try:
        return parse_complex(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid complex literal {text!r} (expected a+bi)")


def _coeffs_arg(text: str) -> tuple:
    return tuple(_complex_arg(part) for part in text.split(","))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circbargmann",
        description="Circular Bargmann transforms: evaluation and numerical verification.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--gamma", type=float, default=6.0, help="field strength (default 6)")
    parser.add_argument("--m", type=int, default=1, help="Landau level index (default 1)")
    parser.add_argument("--n", type=int, default=0, help="basis/ket index (default 0)")
    parser.add_argument("--z", type=_complex_arg, help="single disk point a+bi instead of a grid")
    parser.add_argument("--theta", type=float, default=0.0, help="circle angle in radians")
    parser.add_argument("--coeffs", type=_coeffs_arg,
                        help="comma-separated ket coefficients for transform (default: ket --n)")
    parser.add_argument("--radial", type=int, default=16, help="grid radii (default 16)")
    parser.add_argument("--angular", type=int, default=32, help="grid angles (default 32)")
    parser.add_argument("--max-radius", type=float, default=0.85, help="outer grid radius")
    parser.add_argument("--level", type=int, default=quadrature.DEFAULT_CIRCLE_LEVEL,
                        help="circle rule level (about 2**(level+1) nodes)")
    parser.add_argument("--disk-radial", type=int, default=quadrature.DEFAULT_DISK_SIZE[0])
    parser.add_argument("--disk-angular", type=int, default=quadrature.DEFAULT_DISK_SIZE[1])
    parser.add_argument("--method", choices=("closed", "series"), default="closed",
                        help="eval-cs evaluation method")
    parser.add_argument("--tol", type=float, default=None,
                        help="series truncation tolerance (default 1e-9 for eval-cs, "
                             "1e-12 for verify)")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--all-sets", action="store_true",
                        help="verify: run the full default parameter sets")
    parser.add_argument("--timing", action="store_true",
                        help="verify: record runtime_ms (output no longer reproducible)")
    parser.add_argument("--output", "-o", help="output file (default stdout)")
    parser.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    return parser


def parse_config(argv=None) -> RunConfig:
    """Parse and validate ``argv``; usage errors exit with status 2."""
    parser = _build_parser()
    a = parser.parse_args(argv)
    try:
        params = ModelParams(a.gamma, a.m)
    except ParameterError as exc:
        parser.error(f"argument --gamma/--m: {exc}")
    checks = [
        ("--n", a.n >= 0, "must be >= 0"),
        ("--radial", a.radial >= 1, "must be >= 1"),
        ("--angular", a.angular >= 1, "must be >= 1"),
        ("--max-radius", 0 < a.max_radius < 1, "must lie in (0, 1)"),
        ("--level", 1 <= a.level <= 20, "must lie in [1, 20]"),
        ("--disk-radial", a.disk_radial >= 1, "must be >= 1"),
        ("--disk-angular", a.disk_angular >= 1, "must be >= 1"),
        ("--tol", a.tol is None or a.tol > 0, "must be > 0"),
        ("--theta", math.isfinite(a.theta), "must be finite"),
        ("--z", a.z is None or abs(a.z) < 1, "must satisfy |z| < 1"),
    ]
    for flag, ok, msg in checks:
        if not ok:
            parser.error(f"argument {flag}: {msg}")
    return RunConfig(
        command=a.command,
        params=params,
        n=a.n,
        z=a.z,
        theta=a.theta,
        coeffs=a.coeffs or (),
        n_radial=a.radial,
        n_angular=a.angular,
        max_radius=a.max_radius,
        level=a.level,
        disk_size=(a.disk_radial, a.disk_angular),
        method=a.method,
        tol=a.tol,
        seed=a.seed,
        all_sets=a.all_sets,
        timing=a.timing,
        output=a.output,
        fmt=a.fmt,
    )


def _points(cfg: RunConfig) -> np.ndarray:
    if cfg.z is not None:
        return np.array([cfg.z])
    return transforms.polar_grid(cfg.n_radial, cfg.n_angular, cfg.max_radius)


def run(cfg: RunConfig):
    """Compute the result of ``cfg``: a :class:`DiskGrid` or a list of reports."""
    p = cfg.params
    if cfg.command == "verify":
        kwargs = dict(seed=cfg.seed, circle_level=cfg.level, disk_size=cfg.disk_size,
                      series_tol=cfg.tol or coherent.SERIES_TOL, record_timing=cfg.timing)
        if cfg.all_sets:
            suite = verify.SuiteConfig(**kwargs)
        else:
            suite = verify.SuiteConfig.single(p.gamma, p.m, **kwargs)
        return verify.run_suite(suite)

    pts = _points(cfg)
    if cfg.command == "eval-basis":
        if p.m == 0:
            values = bases.phi_bergman(cfg.n, p.gamma, pts)
        else:
            values = bases.phi_eigen(cfg.n, p, pts)
        label = "phi_eigen"
    elif cfg.command == "eval-cs":
        if cfg.method == "series":
            tol = cfg.tol or CLI_SERIES_TOL
            values = np.array([coherent.cs_series(p, z, cfg.theta, tol=tol).value for z in pts])
        else:
            values = coherent.cs_closed_m(p, pts, cfg.theta)
        label = f"coherent_state_{cfg.method}"
    else:
        rule = quadrature.build_circle_rule(p.gamma_prime, cfg.level)
        coeffs = cfg.coeffs if cfg.coeffs else (0,) * cfg.n + (1,)
        phi = bases.ket_combination(coeffs, p.gamma_prime)
        return transforms.transform_grid(p, phi, pts, rule)
    return DiskGrid(pts, np.atleast_1d(values), p, provenance=label)


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _grid_text(grid: DiskGrid, fmt: str) -> str:
    rows = [
        (z.real, z.imag, v.real, v.imag, abs(v)) for z, v in zip(grid.points, grid.values)
    ]
    if fmt == "json":
        objs = [dict(zip(GRID_HEADER, map(float, r))) for r in rows]
        return json.dumps(objs, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(GRID_HEADER)
    for r in rows:
        w.writerow([_fmt(x) for x in r])
    return buf.getvalue()


REPORT_FIELDS = (
    "identity_name", "params", "max_defect", "tolerance", "passed", "n_samples", "runtime_ms",
)


def _reports_text(reports, fmt: str) -> str:
    dicts = [r.to_dict() for r in reports]
    if fmt == "json":
        return json.dumps(dicts, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPORT_FIELDS)
    for d in dicts:
        row = []
        for k in REPORT_FIELDS:
            v = d[k]
            if k == "params":
                v = json.dumps(v, sort_keys=True, separators=(",", ":"))
            elif isinstance(v, float):
                v = _fmt(v)
            elif v is None:
                v = ""
            row.append(v)
        w.writerow(row)
    return buf.getvalue()


def emit(result, cfg: RunConfig, stdout=None, stderr=None) -> int:
    """Write ``result`` in the configured format and return the exit status."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    if isinstance(result, DiskGrid):
        text = _grid_text(result, cfg.fmt)
        status = EXIT_OK
    else:
        text = _reports_text(result, cfg.fmt)
        bad = verify.failed(result)
        for r in bad:
            print(f"FAILED {r.identity_name} {json.dumps(r.params, sort_keys=True)} "
                  f"max_defect={r.max_defect:.3e} tolerance={r.tolerance:.3e}", file=stderr)
        status = EXIT_FAILED if bad else EXIT_OK
    if cfg.output is None:
        stdout.write(text)
        return status
    try:
        with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {cfg.output}: {exc.strerror or exc}", file=stderr)
        return EXIT_IO
    return status


def main(argv=None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        result = run(cfg)
    except (ConfigError, ParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return emit(result, cfg)


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
