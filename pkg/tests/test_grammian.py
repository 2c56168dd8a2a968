import math

import numpy as np
import pytest

from agler_lab import grammian, kernels
from agler_lab.test_functions import disc_family, polydisc_family


def test_normalized_grammian_hand_values():
    # points {0, 1/2}: G12 = (4/3) / sqrt(1 * 16/9)? no -- k12 = 1, k22 = 4/3,
    # so G12 = 1/sqrt(4/3) = sqrt(3)/2 and the eigenvalues are 1 +- sqrt(3)/2.
    sample = kernels.szego_gram(kernels.disc_config([0.0, 0.5]))
    diag = grammian.normalized_grammian(sample)
    g12 = math.sqrt(3.0) / 2.0
    assert diag.G[0, 1] == pytest.approx(g12, abs=1e-14)
    assert diag.lambda_min == pytest.approx(1.0 - g12, abs=1e-12)
    assert diag.lambda_max == pytest.approx(1.0 + g12, abs=1e-12)
    assert diag.N_estimate == pytest.approx(1.0 / (1.0 - g12), rel=1e-10)
    assert diag.M_estimate == diag.lambda_max


def test_unit_diagonal():
    sample = kernels.szego_gram(kernels.disc_config([0.3, -0.2j, 0.7]))
    diag = grammian.normalized_grammian(sample)
    np.testing.assert_allclose(np.diagonal(diag.G), 1.0, atol=1e-15)


def test_exact_route_detection():
    disc_pts = kernels.disc_config([0.1, 0.2])
    assert grammian.exact_route_available(disc_pts, disc_family())
    poly_pts = kernels.polydisc_config([[0.1, 0.2]])
    assert not grammian.exact_route_available(poly_pts, polydisc_family(2))


def test_bounds_over_cone_routes_and_extremality():
    pts = kernels.disc_config([0.1, 0.5, -0.3])
    cone = grammian.bounds_over_cone(pts, disc_family(), n_samples=20, seed=0)
    assert cone.route == "EXACT"
    base = cone.per_sample[0]
    # every cone sample's spectrum sits inside the base spectrum on the disc
    for d in cone.per_sample[1:]:
        assert d.lambda_min >= base.lambda_min - 1e-9
        assert d.lambda_max <= base.lambda_max + 1e-9
    assert cone.worst_case_at_base


def test_bounds_over_cone_sampled_route():
    pts = kernels.polydisc_config([[0.1, 0.2], [0.3, -0.2]])
    cone = grammian.bounds_over_cone(pts, polydisc_family(2), n_samples=5, seed=1)
    assert cone.route == "SAMPLED"


def test_bounds_over_cone_rejects_zero_samples():
    pts = kernels.disc_config([0.1, 0.2])
    with pytest.raises(ValueError):
        grammian.bounds_over_cone(pts, disc_family(), n_samples=0, seed=0)


def test_schur_reduction_check_small():
    base = kernels.szego_gram(kernels.disc_config([0.2, -0.4, 0.1 + 0.5j]))
    ok, worst = grammian.schur_reduction_check(base, n_trials=50, seed=7)
    assert ok
    assert worst >= -1e-9


def test_truncation_trend_interlacing():
    zs = [1.0 - 0.5**j for j in range(1, 8)]
    prefixes = [kernels.disc_config(zs[:k]) for k in range(1, 8)]
    rows = grammian.truncation_trend(prefixes, disc_family())
    assert [r.n for r in rows] == list(range(1, 8))
    for a, b in zip(rows, rows[1:]):
        # Cauchy interlacing for principal submatrices
        assert b.lambda_min <= a.lambda_min + 1e-12
        assert b.lambda_max >= a.lambda_max - 1e-12


def test_degenerate_n_estimate():
    # nearly coincident points drive lambda_min toward 0 and N upward
    tight = grammian.normalized_grammian(
        kernels.szego_gram(kernels.disc_config([0.5, 0.5 + 1e-7]))
    )
    wide = grammian.normalized_grammian(
        kernels.szego_gram(kernels.disc_config([0.0, 0.9]))
    )
    assert tight.N_estimate > wide.N_estimate * 100
