import math

from agler_lab import sequences as sq
from agler_lab.theorem import verify_theorem
from agler_lab.test_functions import disc_family


def test_exponential_radial_consistency():
    spec = sq.SequenceSpec("exponential_radial", 5)
    report = verify_theorem(sq.prefixes(spec), disc_family(), n_samples=5, seed=0)
    assert report.consistent
    assert [r.n for r in report.rows] == [1, 2, 3, 4, 5]
    for row in report.rows:
        assert row.route == "EXACT"
        assert row.flags["strong_finite"]
        assert row.flags["lambda_min_positive"]
        assert row.flags["carleson_positive"]


def test_single_point_row_is_trivial():
    spec = sq.SequenceSpec("exponential_radial", 1)
    report = verify_theorem(sq.prefixes(spec), disc_family(), n_samples=2, seed=0)
    row = report.rows[0]
    assert row.strong_constant == 1.0
    assert row.carleson_epsilon == 1.0


def test_strong_bounded_by_sqrt_mn_on_exact_route():
    spec = sq.SequenceSpec("exponential_radial", 6)
    report = verify_theorem(sq.prefixes(spec), disc_family(), n_samples=5, seed=0)
    for row in report.rows[1:]:
        assert math.isfinite(row.sqrt_MN)
        assert row.flags["strong_le_sqrt_MN"]
        assert row.strong_constant <= row.sqrt_MN * (1 + 1e-6)


def test_adverse_trend_polynomial_radial():
    spec = sq.SequenceSpec("polynomial_radial", 8, power=1.0)
    report = verify_theorem(sq.prefixes(spec, start=2), disc_family(), n_samples=3, seed=0)
    lam = [r.lambda_min_worst for r in report.rows]
    strong = [r.strong_constant for r in report.rows]
    # the two diagnostics move adversely together as points crowd the boundary
    assert lam[-1] < lam[0]
    assert strong[-1] > strong[0]
