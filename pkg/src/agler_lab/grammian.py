"""Normalized Grammians and uniform-bound diagnostics over the admissible cone.

The normalized Grammian G[i][j] = k(w_i,w_j)/sqrt(k(w_i,w_i) k(w_j,w_j)) has
unit diagonal, so its spectrum straddles 1; the extremal eigenvalues feed the
lower-bound estimate N = 1/lambda_min and upper-bound estimate M = lambda_max.

On the disc with the coordinate family the base Szego kernel is extremal for
both bounds (any admissible kernel is a PSD Schur multiple of it), so results
there carry the EXACT route label; elsewhere the cone can only be sampled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from . import linalg
from .errors import DegenerateDiagonal
from .kernels import KernelSample, PointConfig, base_kernel, scale_by_random_psd
from .test_functions import DISC, Coordinate, TestFunctionFamily

#: lambda_min at or below this reports N_estimate = inf (condition failed).
LAMBDA_FLOOR = 1e-12


@dataclass(frozen=True)
class GrammianDiagnostics:
    G: NDArray
    lambda_min: float
    lambda_max: float
    N_estimate: float  # 1/lambda_min, or inf when lambda_min <= floor
    M_estimate: float  # lambda_max
    kernel_provenance: str


def normalized_grammian(k: KernelSample) -> GrammianDiagnostics:
    """Normalize a kernel sample to unit diagonal and report its extremal spectrum."""
    diag = np.real(np.diagonal(k.gram))
    if np.any(diag <= 1e-14):
        raise DegenerateDiagonal("kernel diagonal entry below 1e-14")
    scale = 1.0 / np.sqrt(diag)
    g = k.gram * np.outer(scale, scale)
    np.fill_diagonal(g, 1.0)
    report = linalg.min_max_eigenvalues(g)
    lam_min = report.min_eig
    n_est = math.inf if lam_min <= LAMBDA_FLOOR else 1.0 / lam_min
    return GrammianDiagnostics(
        G=g,
        lambda_min=lam_min,
        lambda_max=report.max_eig,
        N_estimate=n_est,
        M_estimate=report.max_eig,
        kernel_provenance=k.provenance,
    )


def exact_route_available(points: PointConfig, family: TestFunctionFamily) -> bool:
    """True when the Szego base kernel is provably extremal (disc, family {z})."""
    return points.domain == DISC and all(
        isinstance(d, Coordinate) for d in family.descriptors
    )


@dataclass(frozen=True)
class ConeBounds:
    worst_lambda_min: float
    worst_lambda_max: float
    worst_case_at_base: bool
    route: str  # "EXACT" or "SAMPLED"
    per_sample: tuple[GrammianDiagnostics, ...]


def bounds_over_cone(
    points: PointConfig,
    family: TestFunctionFamily,
    n_samples: int,
    seed: int,
) -> ConeBounds:
    """Worst-case Grammian spectrum over the base kernel plus random cone samples.

    The reduction is index-ordered so reports are bit-stable for a fixed seed.
    """
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    samples = [base_kernel(points)]
    for i in range(n_samples):
        samples.append(scale_by_random_psd(samples[0], seed + i))
    table = tuple(normalized_grammian(s) for s in samples)
    worst_min = min(d.lambda_min for d in table)
    worst_max = max(d.lambda_max for d in table)
    base = table[0]
    at_base = (base.lambda_min <= worst_min + 1e-12) and (
        base.lambda_max >= worst_max - 1e-12
    )
    route = "EXACT" if exact_route_available(points, family) else "SAMPLED"
    return ConeBounds(
        worst_lambda_min=worst_min,
        worst_lambda_max=worst_max,
        worst_case_at_base=at_base,
        route=route,
        per_sample=table,
    )


def schur_reduction_check(
    base: KernelSample, n_trials: int, seed: int, tol: float = 1e-9
) -> tuple[bool, float]:
    """Check that Schur scaling by random PSD factors contracts the spectrum.

    For each trial with factor G_g: with c = lambda_max and d = lambda_min of
    the base normalized Grammian, both c*I - G_scaled and G_scaled - d*I must
    stay PSD. Returns (all trials passed, worst margin seen).
    """
    base_diag = normalized_grammian(base)
    c, d = base_diag.lambda_max, base_diag.lambda_min
    worst = math.inf
    ok = True
    for t in range(n_trials):
        scaled = scale_by_random_psd(base, seed + t)
        g = normalized_grammian(scaled)
        upper = c - g.lambda_max
        lower = g.lambda_min - d
        margin = min(upper, lower)
        worst = min(worst, margin)
        if margin < -tol:
            ok = False
    return ok, worst


@dataclass(frozen=True)
class TrendRow:
    n: int
    lambda_min: float
    lambda_max: float
    N_estimate: float
    M_estimate: float
    provenance: str


def truncation_trend(prefixes, family: TestFunctionFamily) -> list[TrendRow]:
    """Grammian diagnostics for nested point-configuration prefixes.

    Eigenvalue interlacing for principal submatrices makes lambda_min
    non-increasing and lambda_max non-decreasing along the rows.
    """
    rows = []
    for config in prefixes:
        diag = normalized_grammian(base_kernel(config))
        rows.append(
            TrendRow(
                n=len(config),
                lambda_min=diag.lambda_min,
                lambda_max=diag.lambda_max,
                N_estimate=diag.N_estimate,
                M_estimate=diag.M_estimate,
                provenance=diag.kernel_provenance,
            )
        )
    return rows
