"""JSON wire formats: complex numbers as [re, im] pairs throughout.

Families: {"domain": "disc" | "polydisc" | "g2", "n": int?, "grid_size": int?}
Points:   one array of [re, im] pairs per point.
Kernel samples: {"points": ..., "gram": [[[re, im], ...], ...], "provenance": str}
Problems: {"family": ..., "points": ..., "targets": [[re, im], ...], "C": real}
Colligations: dimensions, flattened complex blocks, rep_assignment, family.
"""

from __future__ import annotations

import numpy as np

from .colligation import Colligation
from .errors import ConfigError
from .kernels import KernelSample, PointConfig
from .test_functions import (
    DISC,
    G2,
    DomainTag,
    Point,
    TestFunctionFamily,
    disc_family,
    g2_family,
    polydisc,
    polydisc_family,
)


def complex_to_json(z: complex) -> list[float]:
    return [float(np.real(z)), float(np.imag(z))]


def complex_from_json(pair) -> complex:
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise ConfigError(f"expected [re, im] pair, got {pair!r}")
    return complex(float(pair[0]), float(pair[1]))


def matrix_to_json(m) -> list:
    return [[complex_to_json(z) for z in row] for row in np.asarray(m, dtype=complex)]


def matrix_from_json(rows):
    return np.array([[complex_from_json(z) for z in row] for row in rows], dtype=complex)


def vector_to_json(v) -> list:
    return [complex_to_json(z) for z in np.asarray(v, dtype=complex).reshape(-1)]


def vector_from_json(pairs):
    return np.array([complex_from_json(p) for p in pairs], dtype=complex)


def family_to_json(family: TestFunctionFamily) -> dict:
    out = {"domain": family.domain.kind}
    if family.domain.kind == "polydisc":
        out["n"] = family.domain.n
    if family.domain.kind == "g2":
        out["grid_size"] = family.grid_size
    return out


def family_from_json(obj) -> TestFunctionFamily:
    if not isinstance(obj, dict) or "domain" not in obj:
        raise ConfigError("family: expected an object with a 'domain' field")
    kind = obj["domain"]
    if kind == "disc":
        return disc_family()
    if kind == "polydisc":
        n = obj.get("n")
        if not isinstance(n, int) or n < 1:
            raise ConfigError("family.n: polydisc needs a positive integer 'n'")
        return polydisc_family(n)
    if kind == "g2":
        grid = obj.get("grid_size", 64)
        if not isinstance(grid, int) or grid < 1:
            raise ConfigError("family.grid_size: expected a positive integer")
        return g2_family(grid)
    raise ConfigError(f"family.domain: unknown domain {kind!r}")


def domain_of(family: TestFunctionFamily) -> DomainTag:
    return family.domain


def points_to_json(config: PointConfig) -> list:
    return [[complex_to_json(c) for c in p.coords] for p in config.points]


def points_from_json(obj, domain: DomainTag) -> PointConfig:
    if not isinstance(obj, list) or not obj:
        raise ConfigError("points: expected a nonempty array")
    pts = []
    for entry in obj:
        coords = tuple(complex_from_json(c) for c in entry)
        pts.append(Point(domain, coords))
    return PointConfig(domain, tuple(pts))


def kernel_to_json(sample: KernelSample) -> dict:
    return {
        "points": points_to_json(sample.points),
        "domain": sample.points.domain.kind,
        "gram": matrix_to_json(sample.gram),
        "provenance": sample.provenance,
    }


def colligation_to_json(col: Colligation, family: TestFunctionFamily) -> dict:
    return {
        "state_dim": col.state_dim,
        "in_dim": col.in_dim,
        "out_dim": col.out_dim,
        "A": matrix_to_json(col.A),
        "B": matrix_to_json(col.B),
        "C": matrix_to_json(col.C),
        "D": matrix_to_json(col.D),
        "rep_assignment": list(col.rep_assignment),
        "family": family_to_json(family),
    }


def colligation_from_json(obj) -> Colligation:
    try:
        return Colligation(
            matrix_from_json(obj["A"]),
            matrix_from_json(obj["B"]),
            matrix_from_json(obj["C"]),
            matrix_from_json(obj["D"]),
            tuple(obj["rep_assignment"]),
        )
    except KeyError as exc:
        raise ConfigError(f"colligation: missing field {exc}") from exc
