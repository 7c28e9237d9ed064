from pydantic import BaseModel, ConfigDict

from .character import IrrepLabel, VirtualCharacter
from .roots import Rational, RootSystem, Weight
from .weyl import WeylElement


class EqualRankPair(BaseModel):
    """A Lie algebra g with an equal-rank subalgebra eta sharing its Cartan subalgebra."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    g: RootSystem
    eta: RootSystem
    m_positive_roots: tuple[Weight, ...]
    rho_g: Weight
    rho_eta: Weight

    @property
    def label(self) -> str:
        return f"{self.g.label}/{self.eta.label}"


class SpinModules(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    s_plus: VirtualCharacter
    s_minus: VirtualCharacter


class SpectralLine(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    irrep: IrrepLabel
    energy: Rational
    degeneracy: int
    frobenius_multiplicity: int

    @property
    def highest_weight(self) -> Weight:
        return self.irrep.highest_weight


class KostantLowest(BaseModel):
    """Lowest level predicted by the Weyl-conjugation recipe, and the element that realizes it."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    irrep: IrrepLabel
    energy: Rational
    multiplicity: int
    element: WeylElement

    @property
    def highest_weight(self) -> Weight:
        return self.irrep.highest_weight
