from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, PrivateAttr

from .roots import Rational, Weight


class WeylElement(BaseModel):
    """A Weyl group element as an exact matrix acting on ambient coordinates (x -> M x)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    matrix: tuple[tuple[Rational, ...], ...]
    length_parity_sign: Literal[1, -1]

    def apply(self, w: Weight) -> Weight:
        return tuple(sum((m * x for m, x in zip(row, w)), Fraction(0)) for row in self.matrix)

    def compose(self, other: "WeylElement") -> "WeylElement":
        """The element ``self o other`` (apply ``other`` first)."""
        cols = tuple(zip(*other.matrix))
        matrix = tuple(
            tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols) for row in self.matrix
        )
        return WeylElement.model_construct(
            matrix=matrix, length_parity_sign=self.length_parity_sign * other.length_parity_sign
        )

    @property
    def is_identity(self) -> bool:
        return all(x == (i == j) for i, row in enumerate(self.matrix) for j, x in enumerate(row))


class WeylGroup(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    system_label: str
    generators: tuple[WeylElement, ...]
    elements: tuple[WeylElement, ...]

    _index: dict = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        self._index.update({e.matrix: e for e in self.elements})

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    def find(self, matrix) -> WeylElement | None:
        return self._index.get(matrix)

    def __contains__(self, element: WeylElement) -> bool:
        return element.matrix in self._index
