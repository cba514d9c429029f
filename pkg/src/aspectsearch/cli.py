"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 quadrature contract violated
(too few nodes), 4 a verification reported ``holds: false``.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

import numpy as np

from .errors import NumericalContractError, ValidationError
from .optimize import grid_search, lattice_values, local_minimize
from .profile import load_profile
from .quadrature import AngleVector, QuadratureRule, gradient, no_detection_probability
from .simulate import SimulationConfig, simulate
from .strategy import (
    StrategySpec,
    g_tilde,
    g_tilde_closed_form_sin2_exact,
    lambda_chain,
    parse_strategy_descriptor,
    strategy_angles,
    verify_lower_bound,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NUMERICAL = 3
EXIT_VERIFY_FAILED = 4


def parse_angles(text: str, degrees: bool = False) -> AngleVector:
    """Angles as ``0,1.57``, a JSON array, or ``{"angles": [...]}``."""
    text = text.strip()
    try:
        if text.startswith(("[", "{")):
            data = json.loads(text)
            if isinstance(data, dict):
                data = data.get("angles")
            if not isinstance(data, list):
                raise ValidationError(f"cannot read angles from {text!r}")
            values = [float(v) for v in data]
        else:
            values = [float(v) for v in text.split(",") if v.strip()]
    except (ValueError, TypeError) as exc:
        raise ValidationError(f"cannot read angles from {text!r}") from exc
    if degrees:
        values = [math.radians(v) for v in values]
    return AngleVector(tuple(values))


def parse_strategy(text: str) -> StrategySpec:
    """``m,n`` or ``{"m": .., "n": ..}``."""
    text = text.strip()
    if text.startswith("{"):
        spec = parse_strategy_descriptor(text)
        if not isinstance(spec, StrategySpec):
            raise ValidationError("expected an (m, n) strategy, got explicit angles")
        return spec
    parts = text.split(",")
    if len(parts) != 2:
        raise ValidationError(f"strategy must look like 'm,n', got {text!r}")
    try:
        m, n = (int(p) for p in parts)
    except ValueError as exc:
        raise ValidationError(f"strategy must look like 'm,n', got {text!r}") from exc
    return StrategySpec(m, n)


def _rule(args):
    return None if args.nodes is None else QuadratureRule(args.nodes)


def _emit(record: dict, fmt: str, out):
    if fmt == "json":
        out.write(json.dumps(record) + "\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(record.keys())
    writer.writerow(json.dumps(v) if isinstance(v, (list, dict)) else v for v in record.values())


def cmd_evaluate(args, out):
    profile = load_profile(args.profile)
    rule = _rule(args)
    record = {}
    if args.strategy is not None:
        text = args.strategy.strip()
        desc = parse_strategy_descriptor(text) if text.startswith("{") else parse_strategy(text)
        if isinstance(desc, AngleVector):
            angles = desc
        else:
            angles = strategy_angles(desc, 0.0)
            record.update(m=desc.m, n=desc.n, g_tilde=g_tilde(desc, profile, rule))
    else:
        angles = parse_angles(args.angles, args.degrees)
    value = no_detection_probability(profile, angles, rule)
    grad = gradient(profile, angles, rule)
    record = {
        "value": value,
        "gradient_norm": float(np.max(np.abs(grad))),
        "angles": list(angles.angles),
        **record,
    }
    _emit(record, args.format, out)
    return EXIT_OK


def cmd_closed_form(args, out):
    spec = parse_strategy(args.strategy)
    exact = g_tilde_closed_form_sin2_exact(spec)
    _emit({"rational": str(exact), "decimal": float(exact), "m": spec.m, "n": spec.n, "p": spec.p},
          args.format, out)
    return EXIT_OK


def cmd_verify_bound(args, out):
    profile = load_profile(args.profile)
    spec = parse_strategy(args.strategy)
    rule = _rule(args)
    report = verify_lower_bound(spec, profile, rule)
    chain = lambda_chain(spec, profile, rule)
    _emit({
        "g_tilde_mn": report.g_tilde_mn,
        "g_tilde_1n": report.g_tilde_1n,
        "holds": report.holds,
        "chain": chain,
    }, args.format, out)
    return EXIT_OK if report.holds else EXIT_VERIFY_FAILED


def cmd_optimize(args, out):
    profile = load_profile(args.profile)
    rule = _rule(args)
    if args.grid:
        resolution = math.radians(args.resolution) if args.degrees else args.resolution
        result = grid_search(profile, args.n, resolution, rule)
    else:
        init = "random" if args.init == "random" else parse_angles(args.init, args.degrees)
        result = local_minimize(profile, args.n, init, rule, max_iter=args.max_iter,
                                tol=args.tol, seed=args.seed)
    _emit(result.to_dict(), args.format, out)
    return EXIT_OK


def cmd_simulate(args, out):
    profile = load_profile(args.profile)
    angles = parse_angles(args.angles, args.degrees)
    config = SimulationConfig(args.trials, args.seed, angles, profile, shards=args.shards)
    _emit(simulate(config).to_dict(), args.format, out)
    return EXIT_OK


def cmd_sweep(args, out):
    profile = load_profile(args.profile)
    resolution = math.radians(args.resolution) if args.degrees else args.resolution
    grid, values = lattice_values(profile, args.n, resolution, _rule(args))
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([f"mu_{i}" for i in range(1, args.n)] + ["G"])
    for index in np.ndindex(values.shape):
        writer.writerow([repr(float(grid[k])) for k in index] + [repr(float(values[index]))])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aspectsearch",
        description="Multi-aspect search strategies against symmetric targets.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--nodes", type=int, help="quadrature node count override")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--degrees", action="store_true", help="read input angles in degrees")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evaluate", parents=[common], help="no-detection probability at given angles")
    p.add_argument("--profile", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--angles")
    group.add_argument("--strategy")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("closed-form", parents=[common], help="exact sin^2 value of an (m, n) strategy")
    p.add_argument("--strategy", required=True)
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("verify-bound", parents=[common], help="check the (1, n) lower bound")
    p.add_argument("--profile", required=True)
    p.add_argument("--strategy", required=True)
    p.set_defaults(func=cmd_verify_bound)

    p = sub.add_parser("optimize", parents=[common], help="local descent or lattice search")
    p.add_argument("--profile", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--init", default="random")
    p.add_argument("--seed", type=int)
    p.add_argument("--max-iter", type=int, default=500)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--grid", action="store_true")
    p.add_argument("--resolution", type=float, default=math.pi / 360)
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("simulate", parents=[common], help="Monte-Carlo estimate")
    p.add_argument("--profile", required=True)
    p.add_argument("--angles", required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--shards", type=int, default=1)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("sweep", parents=[common], help="CSV of the objective over an angle lattice")
    p.add_argument("--profile", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--resolution", type=float, required=True)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except ValidationError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID
    except NumericalContractError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_NUMERICAL


run = main
