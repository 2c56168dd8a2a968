"""Dense complex Hermitian linear algebra used by every other module.

All inputs are plain ``numpy`` complex arrays. Matrices within 1e-12 of
Hermitian are symmetrized to ``(H + H*)/2`` before factorization; anything
further off raises :class:`~agler_lab.errors.NonHermitianInput`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .errors import DimensionMismatch, NonHermitianInput

HERMITIAN_ATOL = 1e-12


def ensure_hermitian(h: NDArray, atol: float = HERMITIAN_ATOL) -> NDArray:
    """Return the symmetrized copy ``(H + H*)/2`` of a Hermitian matrix.

    Raises ``NonHermitianInput`` if any entry of ``H - H*`` exceeds ``atol``
    in absolute value, or if ``H`` is not square.
    """
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise NonHermitianInput(f"expected a square matrix, got shape {h.shape}")
    defect = np.max(np.abs(h - h.conj().T)) if h.size else 0.0
    if defect > atol:
        raise NonHermitianInput(f"Hermitian defect {defect:.3e} exceeds {atol:.1e}")
    return 0.5 * (h + h.conj().T)


@dataclass(frozen=True)
class SpectralReport:
    """Extremal eigenvalues plus a unit eigenvector for the minimum."""

    min_eig: float
    max_eig: float
    witness_vector: NDArray


def min_max_eigenvalues(h: NDArray) -> SpectralReport:
    """Extremal eigenvalues of a Hermitian matrix with a min-eigenvector witness.

    Deterministic for identical input (LAPACK ``heevd`` via ``numpy.linalg.eigh``).
    """
    hs = ensure_hermitian(h)
    vals, vecs = np.linalg.eigh(hs)
    return SpectralReport(
        min_eig=float(vals[0]),
        max_eig=float(vals[-1]),
        witness_vector=vecs[:, 0].copy(),
    )


def default_psd_tol(h: NDArray) -> float:
    """Relative PSD tolerance: 1e-9 * max(1, max diagonal entry)."""
    diag = np.real(np.diagonal(np.asarray(h)))
    return 1e-9 * max(1.0, float(np.max(diag)) if diag.size else 1.0)


def is_psd(h: NDArray, tol: float) -> tuple[bool, SpectralReport]:
    """True iff the minimum eigenvalue is >= -tol; the report is always attached."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    report = min_max_eigenvalues(h)
    return report.min_eig >= -tol, report


def schur_product(a: NDArray, b: NDArray) -> NDArray:
    """Entrywise (Schur) product of two same-size Hermitian matrices."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes {a.shape} and {b.shape} differ")
    return ensure_hermitian(a * b, atol=np.inf)


def psd_clip(h: NDArray) -> NDArray:
    """Nearest PSD matrix in Frobenius norm (eigenvalue clipping)."""
    hs = ensure_hermitian(h, atol=np.inf)
    vals, vecs = np.linalg.eigh(hs)
    vals = np.clip(vals, 0.0, None)
    return (vecs * vals) @ vecs.conj().T


@dataclass(frozen=True)
class LeastSquaresResult:
    x: NDArray
    residual: float
    rank: int
    rank_deficient: bool  # warning carried in metadata, never fatal


def solve_least_squares(a: NDArray, b: NDArray) -> LeastSquaresResult:
    """Minimum-norm least-squares solution of ``A x = b`` with residual report."""
    a = np.asarray(a)
    b = np.asarray(b)
    x, _, rank, _ = np.linalg.lstsq(a, b, rcond=None)
    residual = float(np.linalg.norm(a @ x - b))
    return LeastSquaresResult(
        x=x,
        residual=residual,
        rank=int(rank),
        rank_deficient=rank < min(a.shape),
    )
