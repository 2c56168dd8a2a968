import numpy as np
import pytest

from agler_lab import serialize as sz
from agler_lab.colligation import random_unitary_colligation
from agler_lab.errors import ConfigError
from agler_lab.kernels import disc_config, szego_gram
from agler_lab.test_functions import DISC, disc_family, g2_family, polydisc_family


def test_complex_round_trip():
    z = 1.5 - 2.25j
    assert sz.complex_from_json(sz.complex_to_json(z)) == z


def test_complex_rejects_malformed():
    with pytest.raises(ConfigError):
        sz.complex_from_json([1.0])
    with pytest.raises(ConfigError):
        sz.complex_from_json("1+2j")


def test_matrix_vector_round_trip():
    m = np.array([[1.0, 2j], [-2j, 3.0]])
    np.testing.assert_array_equal(sz.matrix_from_json(sz.matrix_to_json(m)), m)
    v = np.array([0.5, -1j])
    np.testing.assert_array_equal(sz.vector_from_json(sz.vector_to_json(v)), v)


@pytest.mark.parametrize(
    "fam", [disc_family(), polydisc_family(3), g2_family(16)]
)
def test_family_round_trip(fam):
    back = sz.family_from_json(sz.family_to_json(fam))
    assert back == fam


def test_family_validation():
    with pytest.raises(ConfigError):
        sz.family_from_json({"domain": "ball"})
    with pytest.raises(ConfigError):
        sz.family_from_json({"domain": "polydisc"})
    with pytest.raises(ConfigError):
        sz.family_from_json({"domain": "g2", "grid_size": 0})
    with pytest.raises(ConfigError):
        sz.family_from_json([])


def test_points_round_trip():
    pts = disc_config([0.1, -0.5j])
    back = sz.points_from_json(sz.points_to_json(pts), DISC)
    assert back == pts


def test_points_rejects_empty():
    with pytest.raises(ConfigError):
        sz.points_from_json([], DISC)


def test_kernel_to_json_fields():
    sample = szego_gram(disc_config([0.0, 0.5]))
    obj = sz.kernel_to_json(sample)
    assert obj["provenance"] == "Szego"
    assert obj["domain"] == "disc"
    np.testing.assert_array_equal(sz.matrix_from_json(obj["gram"]), sample.gram)


def test_colligation_round_trip():
    col = random_unitary_colligation(3, disc_family(), seed=5)
    obj = sz.colligation_to_json(col, disc_family())
    back = sz.colligation_from_json(obj)
    np.testing.assert_allclose(back.block(), col.block(), atol=1e-15)
    assert back.rep_assignment == col.rep_assignment


def test_colligation_missing_field():
    with pytest.raises(ConfigError):
        sz.colligation_from_json({"A": [[[0.0, 0.0]]]})
