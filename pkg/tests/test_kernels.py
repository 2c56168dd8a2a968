import numpy as np
import pytest

from agler_lab import kernels, linalg
from agler_lab.errors import AdmissibilityFailure, DomainMismatch, DuplicatePoints
from agler_lab.test_functions import disc_family, g2_family, polydisc_family


def test_point_config_rejects_duplicates():
    with pytest.raises(DuplicatePoints):
        kernels.disc_config([0.5, 0.5])
    with pytest.raises(DuplicatePoints):
        kernels.disc_config([0.5, 0.5 + 1e-12])


def test_szego_gram_hand_values():
    # oracle by hand: points {0, 1/2} give [[1, 1], [1, 4/3]]
    sample = kernels.szego_gram(kernels.disc_config([0.0, 0.5]))
    np.testing.assert_allclose(
        sample.gram, [[1.0, 1.0], [1.0, 4.0 / 3.0]], atol=1e-14
    )
    assert sample.provenance == "Szego"


def test_szego_gram_needs_disc():
    with pytest.raises(DomainMismatch):
        kernels.szego_gram(kernels.polydisc_config([[0.1, 0.2]]))


def test_product_szego_factorizes():
    # at diagonal bidisc points the product kernel is the square of the disc one
    zs = [0.0, 0.3, -0.4j]
    disc = kernels.szego_gram(kernels.disc_config(zs)).gram
    prod = kernels.product_szego_gram(
        kernels.polydisc_config([[z, z] for z in zs])
    ).gram
    np.testing.assert_allclose(prod, disc**2, atol=1e-13)


def test_szego_admissible_for_coordinate_family():
    pts = kernels.disc_config([0.1, 0.5 + 0.2j, -0.6, 0.3j])
    rep = kernels.verify_admissible(kernels.szego_gram(pts), disc_family())
    assert rep.admissible
    # masked Szego matrix is rank-lowered but exactly PSD:
    # (1 - z_i conj(z_j)) * 1/(1 - z_i conj(z_j)) = all-ones
    assert rep.worst_margin >= -1e-12


def test_mask_matrix_values():
    pts = kernels.disc_config([0.0, 0.5])
    fam = disc_family()
    d = kernels.mask_matrix(fam, fam.descriptors[0], pts)
    np.testing.assert_allclose(d, [[1.0, 1.0], [1.0, 0.75]], atol=1e-14)


def test_symmetrized_szego_verified_not_assumed():
    sample = kernels.symmetrized_szego_gram([(0.1, 0.2), (-0.3, 0.1j), (0.4, -0.2)])
    assert sample.admissibility is not None
    assert sample.admissibility.admissible
    assert sample.admissibility.grid_size == 64
    # hand value of the permanental formula at a single pair against itself
    a1, a2 = 0.1, 0.2
    s = lambda a, b: 1.0 / (1.0 - a * np.conj(b))
    expected = s(a1, a1) * s(a2, a2) + s(a1, a2) * s(a2, a1)
    assert sample.gram[0, 0] == pytest.approx(expected, abs=1e-14)


def test_symmetrized_rejects_impossible_tolerance():
    with pytest.raises(AdmissibilityFailure):
        kernels.symmetrized_szego_gram([(0.1, 0.2), (0.5, -0.3)], tol=-1.0)


def test_random_psd_factor_properties():
    g = kernels.random_psd_factor(5, seed=3)
    assert np.linalg.eigvalsh(0.5 * (g + g.conj().T)).min() >= -1e-12
    assert np.real(np.trace(g)) / 5 == pytest.approx(1.0)
    # counter-based seeding: same seed, same matrix
    np.testing.assert_array_equal(g, kernels.random_psd_factor(5, seed=3))
    assert np.max(np.abs(g - kernels.random_psd_factor(5, seed=4))) > 1e-3


@pytest.mark.parametrize("seed", range(6))
def test_scaling_preserves_admissibility(seed):
    pts = kernels.disc_config([0.2, -0.5, 0.1 + 0.6j])
    base = kernels.szego_gram(pts)
    scaled = kernels.scale_by_random_psd(base, seed)
    rep = kernels.verify_admissible(scaled, disc_family())
    assert rep.admissible


def test_scaling_preserves_admissibility_polydisc():
    pts = kernels.polydisc_config([[0.1, 0.3], [-0.2, 0.4], [0.5j, -0.1]])
    base = kernels.product_szego_gram(pts)
    for seed in range(4):
        rep = kernels.verify_admissible(
            kernels.scale_by_random_psd(base, seed), polydisc_family(2)
        )
        assert rep.admissible


def test_base_kernel_dispatch():
    assert kernels.base_kernel(kernels.disc_config([0.1])).provenance == "Szego"
    assert (
        kernels.base_kernel(kernels.polydisc_config([[0.1, 0.2]])).provenance
        == "ProductSzego"
    )


def test_cone_samples_shape_and_determinism():
    pts = kernels.disc_config([0.1, -0.4])
    a = kernels.cone_samples(pts, 3, seed=9)
    b = kernels.cone_samples(pts, 3, seed=9)
    assert len(a) == 4  # base + 3
    for sa, sb in zip(a, b):
        np.testing.assert_array_equal(sa.gram, sb.gram)


def test_kernel_sample_rejects_indefinite():
    pts = kernels.disc_config([0.0, 0.5])
    with pytest.raises(AdmissibilityFailure):
        kernels.KernelSample(pts, np.array([[1.0, 2.0], [2.0, 1.0]]), "bogus")
