"""Finite unitary colligations and their transfer functions.

A colligation is a unitary block operator V = [[A, B], [C, D]] together with
an assignment of one test function to each state coordinate; the state-space
representation is diagonal, rho(x) = diag(psi_{t_i}(x)). The transfer function

    f(x) = D + C rho(x) (I - A rho(x))^{-1} B

is then a contractive-valued function on the domain, and the numerical
membership test checks the block Pick condition (C^2 I - S_i S_j*) k_ij >= 0
against sampled admissible kernels.

Only diagonal finite-dimensional representations are supported: each state
coordinate evaluates a single test function. This is the computable subclass
and covers everything this package generates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from . import linalg
from .errors import DimensionMismatch, FamilyMismatch, PointMismatch, SingularResolvent
from .kernels import KernelSample, PointConfig
from .test_functions import Point, TestFunctionFamily, evaluate

#: Condition-number estimate above which the resolvent solve is refused.
RESOLVENT_COND_LIMIT = 1e12


@dataclass(frozen=True)
class Colligation:
    """Unitary block operator (A, B, C, D) with a diagonal representation."""

    A: NDArray
    B: NDArray
    C: NDArray
    D: NDArray
    rep_assignment: tuple[int, ...]

    def __post_init__(self):
        a = np.asarray(self.A, dtype=complex)
        b = np.asarray(self.B, dtype=complex)
        c = np.asarray(self.C, dtype=complex)
        d = np.asarray(self.D, dtype=complex)
        s = a.shape[0]
        if a.shape != (s, s):
            raise DimensionMismatch("A must be square")
        if b.shape[0] != s or c.shape[1] != s:
            raise DimensionMismatch("B/C state dimensions inconsistent with A")
        if d.shape != (c.shape[0], b.shape[1]):
            raise DimensionMismatch("D shape inconsistent with B and C")
        if len(self.rep_assignment) != s:
            raise DimensionMismatch("rep_assignment length must equal state_dim")
        object.__setattr__(self, "A", a)
        object.__setattr__(self, "B", b)
        object.__setattr__(self, "C", c)
        object.__setattr__(self, "D", d)
        object.__setattr__(self, "rep_assignment", tuple(int(i) for i in self.rep_assignment))

    @property
    def state_dim(self) -> int:
        return self.A.shape[0]

    @property
    def in_dim(self) -> int:
        return self.B.shape[1]

    @property
    def out_dim(self) -> int:
        return self.C.shape[0]

    def block(self) -> NDArray:
        return np.block([[self.A, self.B], [self.C, self.D]])


def is_unitary(col: Colligation, tol: float = 1e-10) -> tuple[bool, float]:
    """Max-entry defect of V*V - I and VV* - I against the tolerance."""
    v = col.block()
    if v.shape[0] != v.shape[1]:
        raise DimensionMismatch("colligation block must be square (in_dim == out_dim)")
    eye = np.eye(v.shape[0])
    defect = max(
        float(np.max(np.abs(v.conj().T @ v - eye))),
        float(np.max(np.abs(v @ v.conj().T - eye))),
    )
    return defect <= tol, defect


def _rho(col: Colligation, family: TestFunctionFamily, x: Point) -> NDArray:
    vals = [
        evaluate(family, family.descriptors[t], x) for t in col.rep_assignment
    ]
    return np.diag(np.array(vals, dtype=complex))


def transfer_eval(col: Colligation, family: TestFunctionFamily, x: Point) -> NDArray:
    """Evaluate D + C rho(x) (I - A rho(x))^{-1} B at a domain point."""
    for t in col.rep_assignment:
        if not 0 <= t < len(family.descriptors):
            raise FamilyMismatch(f"rep index {t} invalid for this family")
    if col.state_dim == 0:
        return col.D.copy()
    ok, defect = is_unitary(col, tol=1e-8)
    if not ok:
        raise DimensionMismatch(f"colligation is not unitary (defect {defect:.3e})")
    rho = _rho(col, family, x)
    resolvent_arg = np.eye(col.state_dim) - col.A @ rho
    if np.linalg.cond(resolvent_arg) > RESOLVENT_COND_LIMIT:
        raise SingularResolvent("I - A rho(x) is numerically singular")
    return col.D + col.C @ rho @ np.linalg.solve(resolvent_arg, col.B)


def membership_test(
    points: PointConfig,
    values: list[NDArray],
    kernel_samples: list[KernelSample],
    bound: float,
    tol: float = 1e-8,
) -> tuple[bool, float]:
    """Block Pick condition (C^2 I - S_i S_j*) k_ij >= 0 over kernel samples.

    ``values`` are out x in matrices aligned with the point configuration.
    Returns (all samples PSD within tol, worst margin).
    """
    vals = [np.atleast_2d(np.asarray(v, dtype=complex)) for v in values]
    if len(vals) != len(points):
        raise DimensionMismatch("one value matrix per point required")
    out_dim = vals[0].shape[0]
    n = len(points)
    worst = np.inf
    for sample in kernel_samples:
        if sample.points != points:
            raise PointMismatch("kernel sample on a different point configuration")
        block = np.zeros((n * out_dim, n * out_dim), dtype=complex)
        for i in range(n):
            for j in range(n):
                cell = (
                    bound**2 * np.eye(out_dim) - vals[i] @ vals[j].conj().T
                ) * sample.gram[i, j]
                block[i * out_dim : (i + 1) * out_dim, j * out_dim : (j + 1) * out_dim] = cell
        margin = linalg.min_max_eigenvalues(block).min_eig
        worst = min(worst, margin)
    return worst >= -tol, worst


def diag_direct_sum(cols: list[Colligation]) -> Colligation:
    """Block-diagonal direct sum of scalar colligations.

    The transfer function of the sum is diag(f_1(x), ..., f_m(x)) acting on
    C^m; inputs must all be scalar (in_dim == out_dim == 1) and unitary.
    """
    if not cols:
        raise DimensionMismatch("need at least one colligation")
    for col in cols:
        if col.in_dim != 1 or col.out_dim != 1:
            raise DimensionMismatch("direct sum requires scalar colligations")
        ok, defect = is_unitary(col)
        if not ok:
            raise DimensionMismatch(f"summand is not unitary (defect {defect:.3e})")
    from scipy.linalg import block_diag

    a = block_diag(*[c.A for c in cols])
    b = block_diag(*[c.B for c in cols])
    c_blk = block_diag(*[c.C for c in cols])
    d = block_diag(*[c.D for c in cols])
    rep = tuple(t for col in cols for t in col.rep_assignment)
    return Colligation(a, b, c_blk, d, rep)


def transpose(col: Colligation) -> Colligation:
    """Swap input and output roles: blocks become (A^t, C^t; B^t, D^t).

    The transfer values of the result pair with the original entrywise:
    <f^t(x) e_out, e_in> = <f(x) e_in, e_out> in the standard bases. For a
    diagonal representation the transposed representation coincides with the
    original, so the assignment is reused.
    """
    return Colligation(
        col.A.T, col.C.T, col.B.T, col.D.T, col.rep_assignment
    )


def pointwise_product(
    points: PointConfig,
    f_values: list[NDArray],
    g_values: list[NDArray],
    kernel_samples: list[KernelSample],
    bound: float = 1.0,
    tol: float = 1e-8,
) -> tuple[list[NDArray], tuple[bool, float]]:
    """Pointwise products f(x) g(x) plus a membership report for the product.

    Both factors are expected to pass the membership test individually at the
    same bound; the product is then checked on the same samples.
    """
    fv = [np.atleast_2d(np.asarray(v, dtype=complex)) for v in f_values]
    gv = [np.atleast_2d(np.asarray(v, dtype=complex)) for v in g_values]
    if len(fv) != len(gv):
        raise DimensionMismatch("value lists differ in length")
    products = []
    for a, b in zip(fv, gv):
        if a.shape[1] != b.shape[0]:
            raise DimensionMismatch(f"cannot compose shapes {a.shape} and {b.shape}")
        products.append(a @ b)
    report = membership_test(points, products, kernel_samples, bound, tol)
    return products, report


def random_unitary_colligation(
    state_dim: int,
    family: TestFunctionFamily,
    seed: int,
    io_dim: int = 1,
) -> Colligation:
    """Seeded Haar-approximate unitary colligation with random rep assignment.

    Uses the counter-based Philox generator so results are reproducible
    regardless of call interleaving.
    """
    rng = np.random.Generator(np.random.Philox(seed))
    total = state_dim + io_dim
    z = rng.standard_normal((total, total)) + 1j * rng.standard_normal((total, total))
    q, r = np.linalg.qr(z)
    # Fix the phase ambiguity so the distribution is Haar, not QR-biased.
    q = q @ np.diag(np.diagonal(r) / np.abs(np.diagonal(r)))
    rep = tuple(int(i) for i in rng.integers(0, len(family.descriptors), size=state_dim))
    return Colligation(
        q[:state_dim, :state_dim],
        q[:state_dim, state_dim:],
        q[state_dim:, :state_dim],
        q[state_dim:, state_dim:],
        rep,
    )
