from typing import Iterator, Mapping

from pydantic import BaseModel, ConfigDict, Field

from .roots import RootSystem, Weight


class VirtualCharacter:
    """Finite formal sum of weights with integer (possibly negative) coefficients.

    Zero coefficients are never stored, so two characters are equal exactly when their
    term maps are equal.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Weight, int] | None = None):
        self._terms: dict[Weight, int] = {w: m for w, m in (terms or {}).items() if m}

    @classmethod
    def point(cls, w: Weight, multiplicity: int = 1) -> "VirtualCharacter":
        return cls({w: multiplicity})

    @property
    def terms(self) -> dict[Weight, int]:
        return dict(self._terms)

    def __getitem__(self, w: Weight) -> int:
        return self._terms.get(w, 0)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __add__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        out = dict(self._terms)
        for w, m in other._terms.items():
            out[w] = out.get(w, 0) + m
        return VirtualCharacter(out)

    def __neg__(self) -> "VirtualCharacter":
        return VirtualCharacter({w: -m for w, m in self._terms.items()})

    def __sub__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        return self + (-other)

    def scaled(self, k: int) -> "VirtualCharacter":
        return VirtualCharacter({w: k * m for w, m in self._terms.items()})

    @property
    def dimension(self) -> int:
        """Sum of coefficients; the dimension for a genuine representation."""
        return sum(self._terms.values())

    @property
    def mass(self) -> int:
        return sum(abs(m) for m in self._terms.values())

    @property
    def support(self) -> list[Weight]:
        return sorted(self._terms)

    @property
    def ambient_dim(self) -> int | None:
        return len(next(iter(self._terms))) if self._terms else None

    def __repr__(self) -> str:
        body = ", ".join(
            f"({', '.join(str(x) for x in w)}): {m}" for w, m in sorted(self._terms.items())
        )
        return f"VirtualCharacter({{{body}}})"


class IrrepLabel(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    highest_weight: Weight
    system: RootSystem = Field(exclude=True, repr=False)
