"""Positive kernels restricted to finite point sets, and admissibility checks.

A kernel sample is the Gram matrix ``gram[i][j] = k(w_i, w_j)`` of a positive
kernel at a finite point configuration. The built-in candidates are the Szego
kernel on the disc, its coordinatewise product on the polydisc, and the
symmetrized two-fold product on G2. Random cone samples are produced by Schur
multiplication with a seeded random PSD factor, which preserves admissibility
for any family (Schur product theorem).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from . import linalg
from .errors import AdmissibilityFailure, DomainMismatch, DuplicatePoints, NotInDisc
from .test_functions import (
    DISC,
    G2,
    Descriptor,
    DomainTag,
    Point,
    TestFunctionFamily,
    disc_point,
    evaluate,
    polydisc,
    split_g2,
    symmetrize,
)

#: Points closer than this (Euclidean on coordinates) are rejected as duplicates.
DISTINCT_TOL = 1e-10


@dataclass(frozen=True)
class PointConfig:
    """A finite list of pairwise-distinct points on one domain."""

    domain: DomainTag
    points: tuple[Point, ...]

    def __post_init__(self):
        for p in self.points:
            if p.domain != self.domain:
                raise DomainMismatch(
                    f"point on {p.domain.describe()} in a {self.domain.describe()} config"
                )
        n = len(self.points)
        for i in range(n):
            for j in range(i + 1, n):
                d = np.linalg.norm(
                    np.array(self.points[i].coords) - np.array(self.points[j].coords)
                )
                if d < DISTINCT_TOL:
                    raise DuplicatePoints(f"points {i} and {j} coincide within {DISTINCT_TOL}")

    def __len__(self) -> int:
        return len(self.points)


def disc_config(zs) -> PointConfig:
    return PointConfig(DISC, tuple(disc_point(z) for z in zs))


def polydisc_config(coord_lists) -> PointConfig:
    pts = tuple(Point(polydisc(len(c)), tuple(complex(z) for z in c)) for c in coord_lists)
    return PointConfig(pts[0].domain, pts)


@dataclass(frozen=True)
class AdmissibilityReport:
    """Per-test-function PSD margins of the masked kernel matrices."""

    admissible: bool
    per_test_margin: tuple[tuple[Descriptor, float], ...]
    worst_descriptor: Descriptor
    worst_margin: float
    grid_size: int = 0


@dataclass(frozen=True)
class KernelSample:
    """A positive kernel restricted to a finite point configuration."""

    points: PointConfig
    gram: NDArray
    provenance: str
    admissibility: AdmissibilityReport | None = field(default=None, compare=False)

    def __post_init__(self):
        gram = linalg.ensure_hermitian(self.gram)
        if gram.shape[0] != len(self.points):
            raise DuplicatePoints(
                f"gram dimension {gram.shape[0]} != point count {len(self.points)}"
            )
        diag = np.real(np.diagonal(gram))
        if np.any(diag <= 0):
            raise AdmissibilityFailure("kernel diagonal must be strictly positive")
        ok, report = linalg.is_psd(gram, linalg.default_psd_tol(gram))
        if not ok:
            raise AdmissibilityFailure(
                f"gram is not PSD (min eigenvalue {report.min_eig:.3e})"
            )
        object.__setattr__(self, "gram", gram)


def _szego(z: complex, w: complex) -> complex:
    return 1.0 / (1.0 - z * np.conj(w))


def szego_gram(points: PointConfig) -> KernelSample:
    """Szego Gram matrix 1/(1 - w_i * conj(w_j)) on a disc configuration."""
    if points.domain != DISC:
        raise DomainMismatch("szego_gram needs a disc configuration")
    zs = [p.coords[0] for p in points.points]
    gram = np.array([[_szego(zi, zj) for zj in zs] for zi in zs], dtype=complex)
    return KernelSample(points, gram, "Szego")


def product_szego_gram(points: PointConfig) -> KernelSample:
    """Coordinatewise product of Szego kernels on a polydisc configuration."""
    if points.domain.kind not in ("disc", "polydisc"):
        raise NotInDisc("product_szego_gram needs (poly)disc points")
    n = len(points)
    gram = np.ones((n, n), dtype=complex)
    for i, pi in enumerate(points.points):
        for j, pj in enumerate(points.points):
            for zi, zj in zip(pi.coords, pj.coords):
                gram[i, j] *= _szego(zi, zj)
    return KernelSample(points, gram, "ProductSzego")


def symmetrized_szego_gram(
    disc_pairs,
    family: TestFunctionFamily | None = None,
    grid_size: int = 64,
    tol: float | None = None,
) -> KernelSample:
    """Permanental Szego product on symmetrized pairs, tagged as a G2 sample.

    gram[i][j] = s(z_i1,z_j1) s(z_i2,z_j2) + s(z_i1,z_j2) s(z_i2,z_j1).
    The result carries an admissibility report over the alpha grid and is
    rejected (AdmissibilityFailure) if any grid margin dips below -tol: the
    candidate is verified per instance, never assumed.
    """
    from .test_functions import g2_family  # local import to avoid cycle at module load

    pairs = [tuple(complex(z) for z in pair) for pair in disc_pairs]
    pts = tuple(symmetrize(z1, z2) for z1, z2 in pairs)
    config = PointConfig(G2, pts)
    n = len(pairs)
    gram = np.empty((n, n), dtype=complex)
    for i, (a1, a2) in enumerate(pairs):
        for j, (b1, b2) in enumerate(pairs):
            gram[i, j] = _szego(a1, b1) * _szego(a2, b2) + _szego(a1, b2) * _szego(a2, b1)
    sample = KernelSample(config, gram, "SymmetrizedSzego")
    fam = family if family is not None else g2_family(grid_size)
    report = verify_admissible(sample, fam, tol)
    if not report.admissible:
        raise AdmissibilityFailure(
            f"symmetrized Szego candidate rejected: margin {report.worst_margin:.3e} "
            f"at grid size {fam.grid_size}"
        )
    return KernelSample(config, gram, "SymmetrizedSzego", admissibility=report)


def symmetrized_szego_from_points(points: PointConfig, **kwargs) -> KernelSample:
    """Same kernel, but recovering disc pairs from (s, p) coordinates.

    The sample is attached to the configuration passed in (round-tripping the
    pairs through the symmetrization map would build an equal-but-distinct
    configuration and break identity checks downstream).
    """
    pairs = [split_g2(p) for p in points.points]
    sample = symmetrized_szego_gram(pairs, **kwargs)
    return KernelSample(
        points, sample.gram, sample.provenance, admissibility=sample.admissibility
    )


def random_psd_factor(n: int, seed: int, rank: int | None = None) -> NDArray:
    """Random PSD matrix V*V with unit mean diagonal, counter-seeded RNG."""
    rng = np.random.Generator(np.random.Philox(seed))
    r = n if rank is None else rank
    v = rng.standard_normal((r, n)) + 1j * rng.standard_normal((r, n))
    g = v.conj().T @ v
    mean_diag = float(np.real(np.trace(g))) / n
    return g / mean_diag


def scale_by_random_psd(base: KernelSample, seed: int, rank: int | None = None) -> KernelSample:
    """Schur-multiply a kernel sample by a seeded random PSD factor.

    Stays in the admissible cone for any family: masked PSD matrices remain
    PSD after a Schur product with a PSD factor.
    """
    g = random_psd_factor(len(base.points), seed, rank)
    gram = linalg.schur_product(base.gram, g)
    return KernelSample(base.points, gram, f"ScaledBy({seed})")


def mask_matrix(family: TestFunctionFamily, descriptor: Descriptor, points: PointConfig) -> NDArray:
    """The masking matrix D[i][j] = 1 - psi(w_i) * conj(psi(w_j))."""
    vals = np.array([evaluate(family, descriptor, p) for p in points.points])
    return 1.0 - np.outer(vals, vals.conj())


def verify_admissible(
    k: KernelSample, family: TestFunctionFamily, tol: float | None = None
) -> AdmissibilityReport:
    """PSD margin of (1 - psi(w_i) conj(psi(w_j))) o gram for every descriptor."""
    if k.points.domain != family.domain:
        raise DomainMismatch(
            f"kernel on {k.points.domain.describe()}, family on {family.domain.describe()}"
        )
    if tol is None:
        tol = linalg.default_psd_tol(k.gram)
    margins = []
    for d in family.descriptors:
        masked = linalg.schur_product(mask_matrix(family, d, k.points), k.gram)
        report = linalg.min_max_eigenvalues(masked)
        margins.append((d, report.min_eig))
    worst_d, worst_m = min(margins, key=lambda dm: dm[1])
    return AdmissibilityReport(
        admissible=all(m >= -tol for _, m in margins),
        per_test_margin=tuple(margins),
        worst_descriptor=worst_d,
        worst_margin=worst_m,
        grid_size=family.grid_size,
    )


def base_kernel(points: PointConfig) -> KernelSample:
    """Canonical base kernel for each domain (Szego / product / symmetrized)."""
    if points.domain == DISC:
        return szego_gram(points)
    if points.domain.kind == "polydisc":
        return product_szego_gram(points)
    return symmetrized_szego_from_points(points)


def cone_samples(
    points: PointConfig, n_samples: int, seed: int, rank: int | None = None
) -> list[KernelSample]:
    """The base kernel followed by ``n_samples`` random PSD scalings of it."""
    base = base_kernel(points)
    out = [base]
    for i in range(n_samples):
        out.append(scale_by_random_psd(base, seed + i, rank))
    return out
