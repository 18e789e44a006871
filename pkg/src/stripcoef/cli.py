"""Command-line front end.

Every computation of the library is exposed as a reproducible, scriptable
run emitting machine-readable reports.  JSON is the default output; CSV
is provided for table ingestion (one report per row, header mandatory,
17 significant digits so floats round-trip).

Exit status: 0 on success, 1 when any report verdicts as violated (or a
sharpness run misses equality), 2 on configuration errors.  Errors are
written to stderr as structured JSON records.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass

import numpy as np

from . import __version__
from .logcoef import (
    SchwarzSpec,
    extremal_dorff,
    extremal_strip,
    generate_member,
    random_schwarz_spec,
)
from .maps import DorffParam, StripParams
from .polylog import li4_quadrature, li4_symmetric_circle, polylog
from .verify import (
    EQUALITY,
    VIOLATED,
    BoundReport,
    audit_member,
    bound_dorff,
    bound_strip,
    per_n_bound_dorff,
    per_n_bound_strip,
    reference_constants,
    sharpness_dorff,
    sharpness_strip,
)

__all__ = ["main", "RunConfig"]

_COMMANDS = (
    "coeffs",
    "bounds",
    "verify-sharpness",
    "check-membership",
    "generate",
    "polylog",
)


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    alpha: float | None = None
    beta: float | None = None
    delta: float | None = None
    order: int = 256
    radius: float = 0.99
    grid_angles: int = 1024
    seed: int = 0
    samples: int = 10
    tolerance: float = 1e-9
    output_format: str = "json"
    output_path: str | None = None
    # polylog-command arguments
    s: int = 4
    z_re: float | None = None
    z_im: float | None = None
    theta: float | None = None
    # generate-command arguments (None kind -> seeded random draw)
    schwarz: str | None = None
    c_re: float = 1.0
    c_im: float = 0.0
    k: int = 2
    a_re: float = 0.0
    a_im: float = 0.0
    phi: float = 0.0

    def validate(self) -> None:
        if self.command not in _COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.order < 8:
            raise ConfigError("order must be >= 8")
        if not 0.0 < self.radius < 1.0:
            raise ConfigError("radius must lie in (0, 1)")
        if self.tolerance <= 0.0:
            raise ConfigError("tolerance must be positive")
        if self.grid_angles < 1:
            raise ConfigError("grid-angles must be >= 1")
        if self.samples < 1:
            raise ConfigError("samples must be >= 1")

    def target(self):
        """The class parameters; exactly one family must be selected."""
        has_strip = self.alpha is not None or self.beta is not None
        has_dorff = self.delta is not None
        if has_strip and has_dorff:
            raise ConfigError("give either --alpha/--beta or --delta, not both")
        if has_strip:
            if self.alpha is None or self.beta is None:
                raise ConfigError("--alpha and --beta must be given together")
            try:
                return StripParams(self.alpha, self.beta)
            except ValueError as exc:
                raise ConfigError(str(exc)) from None
        if has_dorff:
            try:
                return DorffParam(self.delta)
            except ValueError as exc:
                raise ConfigError(str(exc)) from None
        raise ConfigError("a class is required: --alpha/--beta or --delta")


def _json_safe(value):
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    raise TypeError(f"not JSON-serializable: {type(value)}")


def _emit(config: RunConfig, reports: list[BoundReport]) -> str:
    payload = {
        "command": config.command,
        "config": asdict(config),
        "reports": [r.as_dict() for r in reports],
        "version": __version__,
    }
    if config.output_format == "json":
        return json.dumps(payload, indent=2, sort_keys=True, default=_json_safe) + "\n"
    # CSV: fixed report columns plus the union of context keys
    keys = sorted({k for r in reports for k in r.context})
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["lhs", "rhs", "tail_estimate", "verdict", *keys])
    for r in reports:
        row = [_fmt(r.lhs), _fmt(r.rhs), _fmt(r.tail_estimate), r.verdict]
        row += [_fmt(r.context.get(k, "")) for k in keys]
        writer.writerow(row)
    return buf.getvalue()


def _fmt(value) -> str:
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return str(value)


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _exit_code(reports: list[BoundReport]) -> int:
    return 1 if any(r.verdict == VIOLATED for r in reports) else 0


# -- commands ----------------------------------------------------------------


def _cmd_bounds(config: RunConfig) -> tuple[list[BoundReport], int]:
    target = config.target()
    context = dict(reference_constants())
    if isinstance(target, StripParams):
        context.update(alpha=target.alpha, beta=target.beta, kind="bound_strip")
        rhs = bound_strip(target)
    else:
        context.update(delta=target.delta, kind="bound_dorff")
        rhs = bound_dorff(target)
    report = BoundReport(0.0, float(rhs), 0.0, "holds", context)
    return [report], 0


def _cmd_coeffs(config: RunConfig) -> tuple[list[BoundReport], int]:
    target = config.target()
    if isinstance(target, StripParams):
        _, vec = extremal_strip(target, config.order)
        bounds = [per_n_bound_strip(target, n) for n in range(1, config.order + 1)]
    else:
        _, vec = extremal_dorff(target, config.order)
        bounds = [per_n_bound_dorff(n) for n in range(1, config.order + 1)]
    reports = []
    for n in range(1, config.order + 1):
        g = vec.gamma(n)
        lhs, rhs = abs(g), float(bounds[n - 1])
        context = {
            "n": n,
            "gamma_re": g.real,
            "gamma_im": g.imag,
            "slack": rhs - lhs,
        }
        verdict = VIOLATED if lhs - rhs > config.tolerance else "holds"
        reports.append(BoundReport(lhs, rhs, 0.0, verdict, context))
    return reports, _exit_code(reports)


def _cmd_verify_sharpness(config: RunConfig) -> tuple[list[BoundReport], int]:
    target = config.target()
    if isinstance(target, StripParams):
        report = sharpness_strip(target, config.order)
    else:
        report = sharpness_dorff(target, config.order)
    return [report], 0 if report.verdict == EQUALITY else 1


def _cmd_check_membership(config: RunConfig) -> tuple[list[BoundReport], int]:
    target = config.target()
    min_order = int(np.ceil(14.0 / np.log(1.0 / config.radius)))
    if config.order < max(64, min_order):
        raise ConfigError(
            f"order {config.order} too small for radius {config.radius}: "
            f"membership needs order >= {max(64, min_order)}"
        )
    rng = np.random.default_rng(config.seed)
    reports: list[BoundReport] = []
    for index in range(config.samples):
        spec = random_schwarz_spec(rng)
        member = generate_member(target, spec, config.order)
        for r in audit_member(
            member, target, config.radius, config.grid_angles, tolerance=config.tolerance
        ):
            context = dict(r.context)
            context.update(sample=index, seed=config.seed, **spec.describe())
            reports.append(BoundReport(r.lhs, r.rhs, r.tail_estimate, r.verdict, context))
    return reports, _exit_code(reports)


def _schwarz_from_config(config: RunConfig) -> SchwarzSpec:
    if config.schwarz is None:
        return random_schwarz_spec(np.random.default_rng(config.seed))
    if config.schwarz == "identity":
        return SchwarzSpec.identity()
    if config.schwarz == "scaled-rotation":
        return SchwarzSpec.scaled_rotation(complex(config.c_re, config.c_im))
    if config.schwarz == "power":
        return SchwarzSpec.power(complex(config.c_re, config.c_im), config.k)
    if config.schwarz == "blaschke-factor":
        return SchwarzSpec.blaschke(complex(config.a_re, config.a_im), config.phi)
    raise ConfigError(f"unknown Schwarz family {config.schwarz!r}")


def _cmd_generate(config: RunConfig) -> tuple[list[BoundReport], int]:
    target = config.target()
    try:
        spec = _schwarz_from_config(config)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    member = generate_member(target, spec, config.order)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "re", "im"])
    for n, c in enumerate(member.coeffs):
        writer.writerow([n, _fmt(c.real), _fmt(c.imag)])
    _write(buf.getvalue(), config.output_path)
    return [], 0


def _cmd_polylog(config: RunConfig) -> tuple[list[BoundReport], int]:
    if config.theta is not None and (config.z_re is not None or config.z_im is not None):
        raise ConfigError("give either --theta or --z-re/--z-im, not both")
    context: dict = {"s": config.s}
    if config.theta is not None:
        theta = config.theta
        if not 0.0 <= theta <= 2.0 * np.pi:
            raise ConfigError("theta must lie in [0, 2*pi]")
        z = complex(np.cos(theta), np.sin(theta))
        context["theta"] = theta
    elif config.z_re is not None or config.z_im is not None:
        z = complex(config.z_re or 0.0, config.z_im or 0.0)
    else:
        raise ConfigError("polylog needs --theta or --z-re/--z-im")
    try:
        result = polylog(config.s, z, config.tolerance)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    context.update(
        z_re=z.real,
        z_im=z.imag,
        series_re=result.value.real,
        series_im=result.value.imag,
        terms_used=result.terms_used,
        tail_bound=result.tail_bound,
    )
    deviation = 0.0
    if config.s == 4 and z != 1.0:
        quad_value = li4_quadrature(z)
        context.update(quadrature_re=quad_value.real, quadrature_im=quad_value.imag)
        deviation = abs(result.value - quad_value)
        context["series_vs_quadrature"] = deviation
    if config.theta is not None and config.s == 4:
        closed = li4_symmetric_circle(config.theta)
        symmetric = 2.0 * result.value.real
        context.update(
            symmetric_closed_form=closed,
            symmetric_from_series=symmetric,
            symmetric_deviation=abs(closed - symmetric),
        )
        deviation = max(deviation, abs(closed - symmetric))
    tol = max(config.tolerance, 1e-8)
    verdict = VIOLATED if deviation > tol else "holds"
    report = BoundReport(deviation, tol, result.tail_bound, verdict, context)
    return [report], _exit_code([report])


_DISPATCH = {
    "coeffs": _cmd_coeffs,
    "bounds": _cmd_bounds,
    "verify-sharpness": _cmd_verify_sharpness,
    "check-membership": _cmd_check_membership,
    "generate": _cmd_generate,
    "polylog": _cmd_polylog,
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", type=float, help="lower strip edge (alpha < 1)")
    common.add_argument("--beta", type=float, help="upper strip edge (beta > 1)")
    common.add_argument("--delta", type=float, help="Dorff angle in [pi/2, pi), radians")
    common.add_argument("--order", type=int, default=256, help="truncation order")
    common.add_argument("--radius", type=float, default=0.99, help="audit radius in (0, 1)")
    common.add_argument("--grid-angles", type=int, default=1024, dest="grid_angles")
    common.add_argument("--seed", type=int, default=0, help="RNG seed (64-bit)")
    common.add_argument("--samples", type=int, default=10)
    common.add_argument("--tolerance", type=float, default=1e-9)
    common.add_argument(
        "--output-format", choices=("json", "csv"), default="json", dest="output_format"
    )
    common.add_argument("--output-path", default=None, dest="output_path")

    parser = argparse.ArgumentParser(
        prog="stripcoef",
        description="Logarithmic-coefficient bounds for vertical-strip starlike classes",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("coeffs", parents=[common], help="extremal gammas with per-n bounds")
    sub.add_parser("bounds", parents=[common], help="coefficient-sum bound of a class")
    sub.add_parser(
        "verify-sharpness", parents=[common], help="extremal sum vs bound at given order"
    )
    sub.add_parser(
        "check-membership",
        parents=[common],
        help="audit seeded random members: membership, Rogosinski, per-n bounds",
    )
    gen = sub.add_parser(
        "generate", parents=[common], help="emit Taylor coefficients of one member"
    )
    gen.add_argument(
        "--schwarz",
        choices=("identity", "scaled-rotation", "power", "blaschke-factor"),
        default=None,
        help="Schwarz family (default: seeded random draw)",
    )
    gen.add_argument("--c-re", type=float, default=1.0, dest="c_re")
    gen.add_argument("--c-im", type=float, default=0.0, dest="c_im")
    gen.add_argument("--k", type=int, default=2, help="power-family exponent")
    gen.add_argument("--a-re", type=float, default=0.0, dest="a_re")
    gen.add_argument("--a-im", type=float, default=0.0, dest="a_im")
    gen.add_argument("--phi", type=float, default=0.0, help="Blaschke rotation, radians")
    pl = sub.add_parser(
        "polylog", parents=[common], help="polylog evaluators with mutual deviations"
    )
    pl.add_argument("--s", type=int, default=4, help="polylog weight (integer >= 2)")
    pl.add_argument("--z-re", type=float, default=None, dest="z_re")
    pl.add_argument("--z-im", type=float, default=None, dest="z_im")
    pl.add_argument("--theta", type=float, default=None, help="circle angle in [0, 2*pi]")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    config = RunConfig(**vars(args))
    try:
        config.validate()
        reports, code = _DISPATCH[config.command](config)
    except ConfigError as exc:
        record = {"error": str(exc), "kind": "config"}
        print(json.dumps(record, sort_keys=True), file=sys.stderr)
        return 2
    except ValueError as exc:
        record = {"error": str(exc), "kind": "value"}
        print(json.dumps(record, sort_keys=True), file=sys.stderr)
        return 2
    if config.command != "generate":
        _write(_emit(config, reports), config.output_path)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
