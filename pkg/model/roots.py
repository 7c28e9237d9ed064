from fractions import Fraction
from typing import Annotated, Literal, Optional

from pydantic import BaseModel, BeforeValidator, ConfigDict


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise ValueError("floating point values are not exact; pass an int, a string or a Fraction")
    return Fraction(value)


Rational = Annotated[Fraction, BeforeValidator(to_fraction)]
Weight = tuple[Rational, ...]
Series = Literal["A", "B", "C", "D", "G2"]


def weight(*coords) -> Weight:
    """Build a weight from ints, ``"p/q"`` strings or fractions."""
    return tuple(to_fraction(c) for c in coords)


def zero_weight(dim: int) -> Weight:
    return (Fraction(0),) * dim


class BilinearForm(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    gram: tuple[tuple[Rational, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.gram)


class RootSystem(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    # None for a subsystem extracted from a parent
    series: Optional[Series] = None
    rank: int
    simple_roots: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    ambient_dim: int
    form: BilinearForm
    label: str

    @property
    def roots(self) -> tuple[Weight, ...]:
        return self.positive_roots + tuple(tuple(-x for x in a) for a in self.positive_roots)

    @property
    def is_torus(self) -> bool:
        return not self.positive_roots
