"""Pseudohyperbolic geometry and separation diagnostics on finite truncations.

The Carleson-type products, and the weak/strong separation constants computed
through minimal-norm interpolation solves, are all finite-truncation
quantities: the package reports exact constants for the given points and
leaves uniformity-in-n to trend inspection across truncations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .agler import SolverConfig, SolverIndeterminate, minimal_norm
from .errors import NotInDisc
from .kernels import PointConfig
from .test_functions import Descriptor, TestFunctionFamily, evaluate

#: Carleson products below this are reported as a failed verdict.
CARLESON_TOL = 1e-8


def pseudohyperbolic(z: complex, w: complex) -> float:
    """rho(z, w) = |z - w| / |1 - z conj(w)| on the open unit disc."""
    z, w = complex(z), complex(w)
    if abs(z) >= 1.0 or abs(w) >= 1.0:
        raise NotInDisc(f"pseudohyperbolic distance needs disc points, got {z}, {w}")
    return abs(z - w) / abs(1.0 - z * w.conjugate())


@dataclass(frozen=True)
class SeparationReport:
    kind: str  # "weak" | "strong" | "carleson"
    constant: float
    per_index_detail: tuple
    verdict: bool
    notes: tuple[str, ...] = ()


def carleson_products(
    points: PointConfig, family: TestFunctionFamily, descriptor: Descriptor
) -> SeparationReport:
    """prod_{j != m} rho(psi(w_j), psi(w_m)) for each m, in log space.

    A repeated image makes some product zero and the verdict false; the
    minimum product over m is the reported constant.
    """
    images = [evaluate(family, descriptor, p) for p in points.points]
    n = len(images)
    details = []
    for m in range(n):
        log_product = 0.0
        zero = False
        for j in range(n):
            if j == m:
                continue
            rho = pseudohyperbolic(images[j], images[m])
            if rho == 0.0:
                zero = True
                break
            log_product += math.log(rho)
        details.append(0.0 if zero else math.exp(log_product))
    constant = min(details) if details else 1.0
    return SeparationReport(
        kind="carleson",
        constant=constant,
        per_index_detail=tuple(details),
        verdict=constant > CARLESON_TOL,
    )


def _sub_config(points: PointConfig, indices) -> PointConfig:
    return PointConfig(points.domain, tuple(points.points[i] for i in indices))


def weak_separation_constant(
    points: PointConfig,
    family: TestFunctionFamily,
    C_max: float,
    tol: float = 1e-7,
    config: SolverConfig | None = None,
) -> SeparationReport:
    """Largest minimal norm over ordered pairs of the 2-point (1, 0) problem."""
    if C_max < 1:
        raise ValueError("C_max must be >= 1")
    n = len(points)
    if n < 2:
        raise ValueError("weak separation needs at least 2 points")
    details = []
    notes = []
    constant = 0.0
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            pair = _sub_config(points, (i, j))
            try:
                r_ij = minimal_norm(pair, [1.0, 0.0], family, tol=tol, config=config)
            except SolverIndeterminate as exc:
                notes.append(f"pair ({i},{j}): {exc}")
                r_ij = math.nan
            details.append(((i, j), r_ij))
            if not math.isnan(r_ij):
                constant = max(constant, r_ij)
    if any(math.isinf(r) for _, r in details):
        constant = math.inf
    elif notes:
        constant = math.nan  # an uncertified pair leaves the maximum unknown
    return SeparationReport(
        kind="weak",
        constant=constant,
        per_index_detail=tuple(details),
        verdict=math.isfinite(constant) and constant <= C_max,
        notes=tuple(notes),
    )


def strong_separation_certificate(
    points: PointConfig,
    family: TestFunctionFamily,
    C_max: float,
    tol: float = 1e-7,
    config: SolverConfig | None = None,
) -> SeparationReport:
    """Largest minimal norm over the n basis-vector target problems.

    Index i solves the full n-point problem with targets delta_{i, .}; the
    constant is the maximum over i.
    """
    if C_max < 1:
        raise ValueError("C_max must be >= 1")
    n = len(points)
    details = []
    notes = []
    constant = 0.0
    for i in range(n):
        targets = np.zeros(n, dtype=complex)
        targets[i] = 1.0
        try:
            norm_i = minimal_norm(points, targets, family, tol=tol, config=config)
        except SolverIndeterminate as exc:
            notes.append(f"index {i}: {exc}")
            norm_i = math.nan
        details.append((i, norm_i))
        if not math.isnan(norm_i):
            constant = max(constant, norm_i)
    if any(math.isinf(r) for _, r in details):
        constant = math.inf
    elif notes:
        constant = math.nan  # an uncertified index leaves the maximum unknown
    return SeparationReport(
        kind="strong",
        constant=constant,
        per_index_detail=tuple(details),
        verdict=math.isfinite(constant) and constant <= C_max,
        notes=tuple(notes),
    )
