"""Finite interpolation feasibility via semidefinite decomposition certificates.

A problem (points w_j, targets x_j, bound C, family) is feasible exactly when
the matrix F with F[i][j] = C^2 - x_i * conj(x_j) splits as

    F = sum_t Gamma_t o D_t,    D_t[i][j] = 1 - psi_t(w_i) * conj(psi_t(w_j)),

with every slice Gamma_t PSD. Feasible verdicts carry the slices; infeasible
verdicts carry an admissible kernel sample W (PSD, trace 1, all masked
matrices PSD) at which the Pick matrix F o W fails to be PSD, quantified by
the all-ones quadratic form sum_ij F[i][j] * W[i][j] < 0. Both certificate
kinds re-verify from scratch with plain eigenvalue computations, so no trust
in the solver is required.

When every descriptor induces the same mask D (single test function on the
disc, or diagonal bidisc configurations) the affine constraint pins the slice
sum down uniquely as F o (1/D), and the verdict is a single PSD check; the
1/D matrix is itself an admissible sample (a Szego Gram matrix at the mapped
points), which furnishes the witness on the infeasible side. Otherwise the
solver runs a Douglas-Rachford splitting between the affine slice set and
the product of PSD cones, extracting a dual witness candidate from the
stalled residual direction.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray
from scipy.linalg import pinv

from . import linalg
from .errors import AglerLabError, DimensionMismatch, PointMismatch
from .kernels import KernelSample, PointConfig, cone_samples, mask_matrix
from .test_functions import TestFunctionFamily


class SolverIndeterminate(AglerLabError):
    """Neither a primal nor a dual certificate was found within budget."""


@dataclass(frozen=True)
class InterpolationProblem:
    points: PointConfig
    targets: NDArray
    bound: float
    family: TestFunctionFamily

    def __post_init__(self):
        targets = np.asarray(self.targets, dtype=complex).reshape(-1)
        if len(targets) != len(self.points):
            raise DimensionMismatch(
                f"{len(targets)} targets for {len(self.points)} points"
            )
        if self.bound <= 0:
            raise ValueError("bound C must be positive")
        object.__setattr__(self, "targets", targets)


def target_matrix(problem: InterpolationProblem) -> NDArray:
    """F[i][j] = C^2 - x_i * conj(x_j)."""
    x = problem.targets
    n = len(x)
    return problem.bound**2 * np.ones((n, n), dtype=complex) - np.outer(x, x.conj())


def masks(problem: InterpolationProblem) -> list[NDArray]:
    return [
        mask_matrix(problem.family, d, problem.points)
        for d in problem.family.descriptors
    ]


def pick_matrix(problem: InterpolationProblem, k: KernelSample) -> NDArray:
    """The matrix ((C^2 - x_i conj(x_j)) * k(w_i, w_j))."""
    if k.points != problem.points:
        raise PointMismatch("kernel sample is on a different point configuration")
    return linalg.schur_product(target_matrix(problem), k.gram)


def pairing(a: NDArray, b: NDArray) -> float:
    """Real bilinear pairing sum_ij a[i][j] * b[i][j] of two Hermitian matrices.

    Equals the quadratic form of the Schur product a o b at the all-ones
    vector, which is how dual witnesses exhibit a failed Pick condition.
    """
    return float(np.real(np.sum(a * b)))


@dataclass(frozen=True)
class AglerCertificate:
    gammas: tuple[NDArray, ...]
    residual: float


@dataclass(frozen=True)
class DualWitness:
    W: NDArray
    violation: float


@dataclass(frozen=True)
class FeasibilityResult:
    status: str  # "feasible" | "infeasible" | "indeterminate"
    certificate: AglerCertificate | None
    witness: DualWitness | None
    iterations: int
    wall_time: float
    diagnostics: dict = field(default_factory=dict, compare=False)

    @property
    def feasible(self) -> bool:
        return self.status == "feasible"


@dataclass(frozen=True)
class SolverConfig:
    max_iter: int = 50_000
    check_every: int = 200
    n_dual_samples: int = 16
    residual_scale: float = 1e-9  # residual target = scale * max(1, C^2)
    dual_threshold: float = 1e-8


def residual_target(problem: InterpolationProblem, config: SolverConfig) -> float:
    return config.residual_scale * max(1.0, problem.bound**2)


# ---------------------------------------------------------------------------
# Hermitian <-> real vector packing (Frobenius isometry)


def _hvec(h: NDArray) -> NDArray:
    n = h.shape[0]
    iu = np.triu_indices(n, 1)
    return np.concatenate(
        [
            np.real(np.diagonal(h)),
            math.sqrt(2.0) * np.real(h[iu]),
            math.sqrt(2.0) * np.imag(h[iu]),
        ]
    )


def _hunvec(v: NDArray, n: int) -> NDArray:
    iu = np.triu_indices(n, 1)
    m = len(iu[0])
    h = np.zeros((n, n), dtype=complex)
    np.fill_diagonal(h, v[:n])
    upper = (v[n : n + m] + 1j * v[n + m : n + 2 * m]) / math.sqrt(2.0)
    h[iu] = upper
    h[(iu[1], iu[0])] = upper.conj()
    return h


def _mask_operator(d: NDArray) -> NDArray:
    """Real matrix of the map hvec(G) -> hvec(G o D)."""
    n = d.shape[0]
    dim = n * n
    cols = np.empty((dim, dim))
    for k in range(dim):
        e = np.zeros(dim)
        e[k] = 1.0
        cols[:, k] = _hvec(_hunvec(e, n) * d)
    return cols


# ---------------------------------------------------------------------------
# Witness construction and verification


def _build_witness(
    problem: InterpolationProblem, v_sample: NDArray, f: NDArray
) -> DualWitness | None:
    """Fold the worst eigendirection of F o V into a trace-one witness."""
    pick = linalg.ensure_hermitian(f * v_sample, atol=np.inf)
    report = linalg.min_max_eigenvalues(pick)
    if report.min_eig >= 0:
        return None
    c_bar = report.witness_vector.conj()
    w = v_sample * np.outer(c_bar, c_bar.conj())
    w = 0.5 * (w + w.conj().T)
    tr = float(np.real(np.trace(w)))
    if tr <= 0:
        return None
    w = w / tr
    return DualWitness(W=w, violation=-pairing(f, w))


def verify_witness(
    witness: DualWitness,
    problem: InterpolationProblem,
    tol: float = 1e-8,
) -> tuple[bool, dict]:
    """Re-check the witness invariants using only eigenvalue computations."""
    w = linalg.ensure_hermitian(witness.W, atol=1e-10)
    detail: dict = {}
    min_w = linalg.min_max_eigenvalues(w).min_eig
    detail["min_eig_W"] = min_w
    detail["trace_error"] = abs(float(np.real(np.trace(w))) - 1.0)
    mask_margins = [
        linalg.min_max_eigenvalues(linalg.schur_product(w, d)).min_eig
        for d in masks(problem)
    ]
    detail["worst_mask_margin"] = min(mask_margins)
    violation = -pairing(target_matrix(problem), w)
    detail["violation"] = violation
    ok = (
        min_w >= -tol
        and detail["trace_error"] <= 1e-8
        and detail["worst_mask_margin"] >= -tol
        and violation > tol
        and abs(violation - witness.violation) <= 1e-8 * max(1.0, abs(violation))
    )
    return ok, detail


def verify_certificate(
    cert: AglerCertificate,
    problem: InterpolationProblem,
    tol: float | None = None,
) -> tuple[bool, float, float]:
    """Recompute the decomposition residual and slice spectra from scratch.

    Returns (passes, residual, min slice eigenvalue). Independent of any
    solver state: only the problem data and the certificate are consulted.
    """
    ds = masks(problem)
    if len(cert.gammas) != len(ds):
        raise DimensionMismatch(
            f"{len(cert.gammas)} slices for {len(ds)} descriptors"
        )
    if tol is None:
        tol = 1e-8 * max(1.0, problem.bound**2)
    f = target_matrix(problem)
    acc = np.zeros_like(f)
    min_slice = math.inf
    for gamma, d in zip(cert.gammas, ds):
        g = linalg.ensure_hermitian(gamma, atol=1e-10)
        min_slice = min(min_slice, linalg.min_max_eigenvalues(g).min_eig)
        acc = acc + g * d
    residual = float(np.max(np.abs(acc - f)))
    return (residual <= tol and min_slice >= -1e-9), residual, min_slice


# ---------------------------------------------------------------------------
# The solver


def _group_masks(ds: list[NDArray]) -> list[list[int]]:
    """Group descriptor indices whose masks coincide entrywise."""
    groups: list[list[int]] = []
    reps: list[NDArray] = []
    for i, d in enumerate(ds):
        for g, r in zip(groups, reps):
            if d.shape == r.shape and np.max(np.abs(d - r)) < 1e-13:
                g.append(i)
                break
        else:
            groups.append([i])
            reps.append(d)
    return groups


def _single_mask_solve(
    problem: InterpolationProblem,
    ds: list[NDArray],
    config: SolverConfig,
    started: float,
) -> FeasibilityResult:
    """Exact path: one effective mask determines the slice sum F o (1/D)."""
    d = ds[0]
    f = target_matrix(problem)
    inv_mask = 1.0 / d
    gamma_sum = linalg.ensure_hermitian(f * inv_mask, atol=1e-8)
    ok, report = linalg.is_psd(gamma_sum, linalg.default_psd_tol(gamma_sum))
    n_slices = len(ds)
    if ok:
        slice_t = linalg.psd_clip(gamma_sum) / n_slices
        gammas = tuple(slice_t.copy() for _ in range(n_slices))
        residual = float(np.max(np.abs(sum(g * dd for g, dd in zip(gammas, ds)) - f)))
        cert = AglerCertificate(gammas=gammas, residual=residual)
        return FeasibilityResult(
            "feasible", cert, None, 0, time.perf_counter() - started,
            {"route": "exact-single-mask"},
        )
    # 1/D is the Szego Gram matrix of the mapped points psi(w_j): an
    # admissible sample in its own right, and extremal for this mask.
    witness = _build_witness(problem, inv_mask, f)
    if witness is not None:
        return FeasibilityResult(
            "infeasible", None, witness, 0, time.perf_counter() - started,
            {"route": "exact-single-mask", "min_eig": report.min_eig},
        )
    return FeasibilityResult(
        "indeterminate", None, None, 0, time.perf_counter() - started,
        {"route": "exact-single-mask", "min_eig": report.min_eig},
    )


def _sampled_witness_search(
    problem: InterpolationProblem, config: SolverConfig, f: NDArray
) -> DualWitness | None:
    """Scan seeded admissible cone samples for a failed Pick condition."""
    try:
        samples = cone_samples(problem.points, config.n_dual_samples, seed=20_240_601)
    except AglerLabError:
        return None
    for s in samples:
        witness = _build_witness(problem, s.gram, f)
        if witness is None:
            continue
        ok, _ = verify_witness(witness, problem, tol=config.dual_threshold)
        if ok:
            return witness
    return None


def _polish_mask_memberships(
    w: NDArray, ds: list[NDArray], sweeps: int = 40
) -> NDArray:
    """Quasi-projection onto {W PSD, W o D_t PSD}: clip in each masked metric."""
    for _ in range(sweeps):
        moved = 0.0
        w = linalg.psd_clip(w)
        for d in ds:
            masked = w * d
            clipped = linalg.psd_clip(masked)
            delta = (clipped - masked) / d
            moved = max(moved, float(np.max(np.abs(delta))))
            w = w + delta
            w = 0.5 * (w + w.conj().T)
        if moved < 1e-14:
            break
    return linalg.psd_clip(w)


def _polish_trace_one(w: NDArray, ds: list[NDArray]) -> NDArray:
    """Polish a witness candidate and renormalize it back to unit trace."""
    out = _polish_mask_memberships(w, ds, sweeps=10)
    tr = float(np.real(np.trace(out)))
    return out / tr if tr > 1e-12 else out


def agler_feasibility(
    problem: InterpolationProblem, config: SolverConfig | None = None
) -> FeasibilityResult:
    """Decide feasibility with an independently re-verifiable certificate.

    Deterministic given the problem and solver config. ``indeterminate`` is
    an honest terminal status reached only after the iteration budget with
    both the primal and dual searches stalled.
    """
    if config is None:
        config = SolverConfig()
    started = time.perf_counter()
    ds = masks(problem)
    groups = _group_masks(ds)
    if len(groups) == 1:
        return _single_mask_solve(problem, ds, config, started)

    f = target_matrix(problem)
    n = len(problem.points)
    dim = n * n
    target = residual_target(problem, config)
    cert_tol = 1e-8 * max(1.0, problem.bound**2)

    # Cheap dual pass first: infeasibility is often visible at a sampled kernel.
    witness = _sampled_witness_search(problem, config, f)
    if witness is not None:
        return FeasibilityResult(
            "infeasible", None, witness, 0, time.perf_counter() - started,
            {"route": "sampled-kernel"},
        )

    # One representative mask per group; duplicate masks share a slice that is
    # split evenly when the certificate is assembled.
    rep_ds = [ds[g[0]] for g in groups]
    t_eff = len(rep_ds)
    ops = [_mask_operator(d) for d in rep_ds]
    m_op = np.hstack(ops)  # dim x (t_eff * dim)
    m_pinv = pinv(m_op)
    f_vec = _hvec(f)

    def project_affine(gamma_vec: NDArray) -> NDArray:
        return gamma_vec - m_pinv @ (m_op @ gamma_vec - f_vec)

    def project_cone(gamma_vec: NDArray) -> NDArray:
        out = np.empty_like(gamma_vec)
        for t in range(t_eff):
            block = gamma_vec[t * dim : (t + 1) * dim]
            out[t * dim : (t + 1) * dim] = _hvec(linalg.psd_clip(_hunvec(block, n)))
        return out

    def assemble(cone_vec: NDArray) -> tuple[tuple[NDArray, ...], float]:
        reps = [linalg.psd_clip(_hunvec(cone_vec[t * dim : (t + 1) * dim], n)) for t in range(t_eff)]
        gammas: list[NDArray] = [np.zeros((n, n), dtype=complex)] * len(ds)
        for rep, group in zip(reps, groups):
            share = rep / len(group)
            for idx in group:
                gammas[idx] = share
        residual = float(np.max(np.abs(sum(g * d for g, d in zip(gammas, ds)) - f)))
        return tuple(gammas), residual

    z = np.zeros(t_eff * dim)
    best_residual = math.inf
    prev_residual = math.inf
    iterations = 0
    for it in range(1, config.max_iter + 1):
        iterations = it
        y = project_cone(z)
        x = project_affine(2.0 * y - z)
        z = z + x - y
        if it % config.check_every == 0 or it == config.max_iter:
            gammas, residual = assemble(y)
            best_residual = min(best_residual, residual)
            if residual <= target:
                cert = AglerCertificate(gammas=gammas, residual=residual)
                ok, res2, _ = verify_certificate(cert, problem, tol=cert_tol)
                if ok:
                    return FeasibilityResult(
                        "feasible", cert, None, it, time.perf_counter() - started,
                        {"route": "splitting", "residual": res2},
                    )
            # Dual candidate: once the residual stalls short of the target,
            # the minimal gap between the affine set and the cone separates
            # them. The gap direction lives in the range of the adjoint mask
            # operator; pulling it back gives the separating witness W with
            # W o D_t PSD and a negative pairing against F.
            stalled = residual > 0.99 * prev_residual
            prev_residual = residual
            if stalled:
                u = m_pinv.T @ (x - y)
                w_cand = -_hunvec(u, n).conj()
                w_cand = 0.5 * (w_cand + w_cand.conj().T)
                tr = float(np.real(np.trace(w_cand)))
                if tr > 1e-12:
                    w_cand = w_cand / tr
                    for candidate in (w_cand, _polish_trace_one(w_cand, ds)):
                        witness = DualWitness(
                            W=candidate, violation=-pairing(f, candidate)
                        )
                        ok, _ = verify_witness(witness, problem, tol=config.dual_threshold)
                        if ok:
                            return FeasibilityResult(
                                "infeasible", None, witness, it,
                                time.perf_counter() - started,
                                {"route": "splitting-dual"},
                            )
    return FeasibilityResult(
        "indeterminate", None, None, iterations, time.perf_counter() - started,
        {"route": "splitting", "best_residual": best_residual},
    )


# ---------------------------------------------------------------------------
# Minimal norm and necessary-condition sampling


#: Doubling cap for the upper bracket; beyond this the problem is reported
#: infeasible at every bound (constant = inf).
_BRACKET_CAP = 2.0**60


def minimal_norm(
    points: PointConfig,
    targets,
    family: TestFunctionFamily,
    tol: float = 1e-7,
    config: SolverConfig | None = None,
) -> float:
    """Bisect the smallest bound C at which interpolation stays feasible.

    The lower bracket starts at max|x_j| (the sup norm never exceeds the
    multiplier norm); the upper bracket doubles adaptively. Returns inf when
    no finite bound is feasible, and raises SolverIndeterminate if the solver
    cannot certify a bracket endpoint.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    targets = np.asarray(targets, dtype=complex).reshape(-1)
    floor = float(np.max(np.abs(targets))) if len(targets) else 0.0
    if floor == 0.0:
        return 0.0

    def status_at(c: float) -> str:
        result = agler_feasibility(
            InterpolationProblem(points, targets, c, family), config
        )
        if result.status == "indeterminate":
            raise SolverIndeterminate(f"cannot certify feasibility at C={c}")
        return result.status

    lo = floor
    if status_at(lo) == "feasible":
        return lo
    hi = max(2.0 * lo, 1.0)
    while status_at(hi) == "infeasible":
        hi *= 2.0
        if hi > _BRACKET_CAP:
            return math.inf
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if status_at(mid) == "feasible":
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def kernel_necessary_check(
    problem: InterpolationProblem, samples
) -> list[tuple[str, float]]:
    """Minimum Pick-matrix eigenvalue at each sampled admissible kernel.

    Any margin below -tol is a standalone proof of infeasibility at the
    problem's bound; consistency with the solver verdict is a test target,
    not an assumption.
    """
    table = []
    for s in samples:
        p = pick_matrix(problem, s)
        table.append((s.provenance, linalg.min_max_eigenvalues(p).min_eig))
    return table
