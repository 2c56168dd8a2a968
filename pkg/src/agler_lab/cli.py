"""Command-line entry point: `agler-lab <command> --config <path.json>`.

Commands: analyze, pick, grammian, carleson, realize, verify-theorem.
Exit codes: 0 success / feasible / verdict true, 1 infeasible / verdict
false, 2 input error, 3 indeterminate. Reports are byte-identical across
runs with identical configs (seeded RNG, sorted JSON keys, no timestamps).
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import serialize
from .agler import (
    InterpolationProblem,
    SolverIndeterminate,
    agler_feasibility,
    minimal_norm,
)
from .colligation import random_unitary_colligation, transfer_eval
from .errors import AglerLabError, ConfigError
from .grammian import bounds_over_cone, normalized_grammian, truncation_trend
from .kernels import PointConfig, base_kernel, verify_admissible
from .separation import carleson_products
from .sequences import SequenceSpec, generate
from .test_functions import DISC, Point, disc_point, symmetrize
from .theorem import verify_theorem

SCHEMA_VERSION = 1

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_INDETERMINATE = 3


def _load_config(path: str) -> dict:
    try:
        raw = sys.stdin.read() if path == "-" else Path(path).read_text()
        obj = json.loads(raw)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"config: {exc}") from exc
    if not isinstance(obj, dict):
        raise ConfigError("config: top level must be a JSON object")
    return obj


def _family_and_points(cfg: dict):
    family = serialize.family_from_json(cfg.get("family", {"domain": "disc"}))
    if "points" in cfg:
        points = serialize.points_from_json(cfg["points"], family.domain)
    elif "sequence" in cfg:
        points = generate(_sequence_spec(cfg["sequence"]))
        if points.domain != family.domain:
            raise ConfigError("sequence: generated domain does not match family")
    else:
        raise ConfigError("config: either 'points' or 'sequence' is required")
    return family, points


def _sequence_spec(obj) -> SequenceSpec:
    if not isinstance(obj, dict) or "family" not in obj or "depth" not in obj:
        raise ConfigError("sequence: needs 'family' and 'depth'")
    try:
        return SequenceSpec(
            family=obj["family"],
            depth=int(obj["depth"]),
            base=float(obj.get("base", 0.5)),
            power=float(obj.get("power", 1.0)),
            pair_ratio=float(obj.get("pair_ratio", 0.5)),
        )
    except AglerLabError as exc:
        raise ConfigError(f"sequence: {exc}") from exc


def _finite(x: float):
    return x if math.isfinite(x) else None


def _write_report(report: dict, out_dir: str | None, name: str) -> None:
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if out_dir:
        Path(out_dir).mkdir(parents=True, exist_ok=True)
        (Path(out_dir) / name).write_text(text)
    else:
        sys.stdout.write(text)


def _write_csv(rows: list[dict], columns: list[str], out_dir: str | None, name: str) -> None:
    if not out_dir:
        return
    Path(out_dir).mkdir(parents=True, exist_ok=True)
    with open(Path(out_dir) / name, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=columns)
        writer.writeheader()
        for row in rows:
            writer.writerow({c: row.get(c, "") for c in columns})


def cmd_analyze(cfg: dict, args) -> int:
    family, points = _family_and_points(cfg)
    sample = base_kernel(points)
    report = verify_admissible(sample, family, cfg.get("tol"))
    diag = normalized_grammian(sample)
    out = {
        "schema_version": SCHEMA_VERSION,
        "command": "analyze",
        "family": serialize.family_to_json(family),
        "points": serialize.points_to_json(points),
        "kernel_provenance": sample.provenance,
        "admissible": report.admissible,
        "worst_margin": report.worst_margin,
        "grid_size": report.grid_size,
        "lambda_min": diag.lambda_min,
        "lambda_max": diag.lambda_max,
        "route": "EXACT" if points.domain == DISC else f"GRID({report.grid_size})"
        if report.grid_size
        else "SAMPLED",
    }
    _write_report(out, args.out, "analyze.json")
    return EXIT_TRUE if report.admissible else EXIT_FALSE


def cmd_pick(cfg: dict, args) -> int:
    family, points = _family_and_points(cfg)
    if "targets" not in cfg:
        raise ConfigError("pick: 'targets' is required")
    targets = serialize.vector_from_json(cfg["targets"])
    if "C" in cfg:
        problem = InterpolationProblem(points, targets, float(cfg["C"]), family)
        result = agler_feasibility(problem)
        out = {
            "schema_version": SCHEMA_VERSION,
            "command": "pick",
            "family": serialize.family_to_json(family),
            "points": serialize.points_to_json(points),
            "targets": serialize.vector_to_json(targets),
            "C": problem.bound,
            "status": result.status,
            "iterations": result.iterations,
            "route": result.diagnostics.get("route"),
        }
        if family.grid_size:
            out["grid_size"] = family.grid_size
        if result.certificate is not None:
            out["certificate"] = {
                "residual": result.certificate.residual,
                "gammas": [serialize.matrix_to_json(g) for g in result.certificate.gammas],
            }
        if result.witness is not None:
            out["witness"] = {
                "violation": result.witness.violation,
                "W": serialize.matrix_to_json(result.witness.W),
            }
        _write_report(out, args.out, "pick.json")
        if result.status == "feasible":
            return EXIT_TRUE
        if result.status == "infeasible":
            return EXIT_FALSE
        return EXIT_INDETERMINATE
    # No bound supplied: compute the minimal norm instead.
    try:
        c_star = minimal_norm(points, targets, family, tol=float(cfg.get("tol", 1e-7)))
    except SolverIndeterminate as exc:
        _write_report(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "pick",
                "status": "indeterminate",
                "detail": str(exc),
            },
            args.out,
            "pick.json",
        )
        return EXIT_INDETERMINATE
    out = {
        "schema_version": SCHEMA_VERSION,
        "command": "pick",
        "family": serialize.family_to_json(family),
        "points": serialize.points_to_json(points),
        "targets": serialize.vector_to_json(targets),
        "minimal_norm": _finite(c_star),
        "status": "minimal-norm",
    }
    _write_report(out, args.out, "pick.json")
    return EXIT_TRUE if math.isfinite(c_star) else EXIT_FALSE


def cmd_grammian(cfg: dict, args) -> int:
    family, points = _family_and_points(cfg)
    if "targets" in cfg:
        raise ConfigError("grammian: 'targets' is not accepted here")
    n_samples = int(cfg.get("n_samples", args.samples))
    seed = int(cfg.get("seed", args.seed))
    nested = [
        PointConfig(points.domain, points.points[:k]) for k in range(1, len(points) + 1)
    ]
    rows = truncation_trend(nested, family)
    cone = bounds_over_cone(points, family, n_samples, seed)
    csv_rows = [
        {
            "n": r.n,
            "lambda_min": repr(r.lambda_min),
            "lambda_max": repr(r.lambda_max),
            "N_estimate": repr(r.N_estimate) if math.isfinite(r.N_estimate) else "inf",
            "M_estimate": repr(r.M_estimate),
            "provenance": r.provenance,
        }
        for r in rows
    ]
    _write_csv(
        csv_rows,
        ["n", "lambda_min", "lambda_max", "N_estimate", "M_estimate", "provenance"],
        args.out,
        "grammian.csv",
    )
    out = {
        "schema_version": SCHEMA_VERSION,
        "command": "grammian",
        "family": serialize.family_to_json(family),
        "n_samples": n_samples,
        "seed": seed,
        "route": cone.route,
        "worst_lambda_min": cone.worst_lambda_min,
        "worst_lambda_max": cone.worst_lambda_max,
        "worst_case_at_base": cone.worst_case_at_base,
        "trend": [
            {
                "n": r.n,
                "lambda_min": r.lambda_min,
                "lambda_max": r.lambda_max,
                "N_estimate": _finite(r.N_estimate),
                "M_estimate": r.M_estimate,
            }
            for r in rows
        ],
    }
    _write_report(out, args.out, "grammian.json")
    return EXIT_TRUE if cone.worst_lambda_min > 0 else EXIT_FALSE


def cmd_carleson(cfg: dict, args) -> int:
    family, points = _family_and_points(cfg)
    index = int(cfg.get("descriptor", 0))
    if not 0 <= index < len(family.descriptors):
        raise ConfigError("carleson: 'descriptor' index out of range")
    report = carleson_products(points, family, family.descriptors[index])
    csv_rows = [
        {"index": m, "product": repr(v)} for m, v in enumerate(report.per_index_detail)
    ]
    _write_csv(csv_rows, ["index", "product"], args.out, "carleson.csv")
    out = {
        "schema_version": SCHEMA_VERSION,
        "command": "carleson",
        "family": serialize.family_to_json(family),
        "descriptor": index,
        "epsilon": report.constant,
        "verdict": report.verdict,
        "per_index": list(report.per_index_detail),
    }
    _write_report(out, args.out, "carleson.json")
    return EXIT_TRUE if report.verdict else EXIT_FALSE


def cmd_realize(cfg: dict, args) -> int:
    family = serialize.family_from_json(cfg.get("family", {"domain": "disc"}))
    state_dim = int(cfg.get("state_dim", 4))
    seed = int(cfg.get("seed", args.seed))
    n_points = int(cfg.get("n_points", 100))
    col = random_unitary_colligation(state_dim, family, seed)
    pts = _sample_points(family, n_points, seed + 1)
    values = [transfer_eval(col, family, p) for p in pts]
    max_mod = max(float(np.abs(v[0, 0])) for v in values)
    out = {
        "schema_version": SCHEMA_VERSION,
        "command": "realize",
        "colligation": serialize.colligation_to_json(col, family),
        "n_points": n_points,
        "max_modulus": max_mod,
        "contractive": max_mod <= 1.0 + 1e-10,
    }
    _write_report(out, args.out, "realize.json")
    return EXIT_TRUE if max_mod <= 1.0 + 1e-10 else EXIT_FALSE


def _sample_points(family, n_points: int, seed: int) -> list[Point]:
    rng = np.random.Generator(np.random.Philox(seed))

    def disc_draw():
        r = math.sqrt(rng.uniform(0.0, 0.96))
        theta = rng.uniform(0.0, 2.0 * math.pi)
        return r * complex(math.cos(theta), math.sin(theta))

    pts = []
    for _ in range(n_points):
        if family.domain.kind == "g2":
            pts.append(symmetrize(disc_draw(), disc_draw()))
        elif family.domain.kind == "polydisc":
            pts.append(Point(family.domain, tuple(disc_draw() for _ in range(family.domain.n))))
        else:
            pts.append(disc_point(disc_draw()))
    return pts


def cmd_verify_theorem(cfg: dict, args) -> int:
    family, points = _family_and_points(cfg)
    depth = int(cfg.get("depth", len(points)))
    if depth < 1 or depth > len(points):
        raise ConfigError("verify-theorem: 'depth' out of range")
    nested = [
        PointConfig(points.domain, points.points[:k]) for k in range(1, depth + 1)
    ]
    report = verify_theorem(
        nested,
        family,
        n_samples=int(cfg.get("n_samples", args.samples)),
        seed=int(cfg.get("seed", args.seed)),
    )
    rows = [
        {
            "n": r.n,
            "strong_constant": _finite(r.strong_constant),
            "lambda_min_worst": r.lambda_min_worst,
            "lambda_max_worst": r.lambda_max_worst,
            "route": r.route,
            "carleson_epsilon": r.carleson_epsilon,
            "sqrt_MN": _finite(r.sqrt_MN),
            "flags": r.flags,
        }
        for r in report.rows
    ]
    csv_rows = [
        {
            "n": r.n,
            "strong_constant": repr(r.strong_constant),
            "lambda_min_worst": repr(r.lambda_min_worst),
            "lambda_max_worst": repr(r.lambda_max_worst),
            "route": r.route,
            "carleson_epsilon": repr(r.carleson_epsilon),
            "sqrt_MN": repr(r.sqrt_MN),
        }
        for r in report.rows
    ]
    _write_csv(
        csv_rows,
        [
            "n",
            "strong_constant",
            "lambda_min_worst",
            "lambda_max_worst",
            "route",
            "carleson_epsilon",
            "sqrt_MN",
        ],
        args.out,
        "verify_theorem.csv",
    )
    out = {
        "schema_version": SCHEMA_VERSION,
        "command": "verify-theorem",
        "family": serialize.family_to_json(family),
        "rows": rows,
        "consistent": report.consistent,
    }
    _write_report(out, args.out, "verify_theorem.json")
    return EXIT_TRUE if report.consistent else EXIT_FALSE


COMMANDS = {
    "analyze": cmd_analyze,
    "pick": cmd_pick,
    "grammian": cmd_grammian,
    "carleson": cmd_carleson,
    "realize": cmd_realize,
    "verify-theorem": cmd_verify_theorem,
}


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="agler-lab")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--config", required=True, help="config JSON path, or - for stdin")
    parser.add_argument("--out", default=None, help="report output directory")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=50)
    parser.add_argument("--grid", type=int, default=None, help="override g2 grid size")
    args = parser.parse_args(argv)
    try:
        cfg = _load_config(args.config)
        if args.grid is not None and cfg.get("family", {}).get("domain") == "g2":
            cfg["family"]["grid_size"] = args.grid
        return COMMANDS[args.command](cfg, args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AglerLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
