"""Built-in generators for the canonical point sequences used in docs and tests."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SpecError
from .kernels import PointConfig, disc_config
from .test_functions import G2, Point, polydisc, symmetrize


@dataclass(frozen=True)
class SequenceSpec:
    """Declarative description of a canonical sequence family.

    family:
      - "exponential_radial": lambda_j = 1 - base**j          (base in (0, 1))
      - "polynomial_radial":  lambda_j = 1 - j**(-power)      (power > 0, j >= 1)
      - "diagonal_bidisc":    lifts an inner disc spec to (lambda_j, lambda_j)
      - "symmetrized_pairs":  maps pairs (lambda_j, r * lambda_j) through the
                              symmetrization map into G2 (|r| < 1)
    """

    family: str
    depth: int
    base: float = 0.5
    power: float = 1.0
    inner: "SequenceSpec | None" = None
    pair_ratio: float = 0.5

    def __post_init__(self):
        if self.depth < 1:
            raise SpecError("depth must be >= 1")
        if self.family == "exponential_radial" and not 0.0 < self.base < 1.0:
            raise SpecError("exponential_radial base must lie in (0, 1)")
        if self.family == "polynomial_radial" and self.power <= 0:
            raise SpecError("polynomial_radial power must be positive")
        if self.family in ("diagonal_bidisc", "symmetrized_pairs") and self.inner is None:
            object.__setattr__(
                self, "inner", SequenceSpec("exponential_radial", self.depth)
            )
        if self.family == "symmetrized_pairs" and not abs(self.pair_ratio) < 1.0:
            raise SpecError("pair_ratio must have modulus < 1")


def _radial_values(spec: SequenceSpec) -> list[float]:
    if spec.family == "exponential_radial":
        return [1.0 - spec.base ** j for j in range(1, spec.depth + 1)]
    if spec.family == "polynomial_radial":
        return [1.0 - j ** (-spec.power) for j in range(1, spec.depth + 1)]
    raise SpecError(f"not a radial family: {spec.family!r}")


def generate(spec: SequenceSpec) -> PointConfig:
    """Materialize the sequence as a validated point configuration."""
    if spec.family in ("exponential_radial", "polynomial_radial"):
        return disc_config(_radial_values(spec))
    if spec.family == "diagonal_bidisc":
        inner = generate(spec.inner)
        pts = tuple(
            Point(polydisc(2), (p.coords[0], p.coords[0])) for p in inner.points
        )
        return PointConfig(polydisc(2), pts)
    if spec.family == "symmetrized_pairs":
        inner = generate(spec.inner)
        pts = tuple(
            symmetrize(p.coords[0], spec.pair_ratio * p.coords[0])
            for p in inner.points
        )
        return PointConfig(G2, pts)
    raise SpecError(f"unknown sequence family {spec.family!r}")


def prefixes(spec: SequenceSpec, start: int = 1) -> list[PointConfig]:
    """Nested truncations: the spec at depths start..depth."""
    return [
        generate(SequenceSpec(spec.family, d, spec.base, spec.power, spec.inner, spec.pair_ratio))
        for d in range(start, spec.depth + 1)
    ]
