from typing import Literal

from pydantic import BaseModel, ConfigDict

from .character import IrrepLabel, VirtualCharacter
from .weyl import WeylElement


class GkrsTerm(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    element: WeylElement
    sign: Literal[1, -1]
    irrep: IrrepLabel


class GkrsReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    irrep: IrrepLabel
    lhs: VirtualCharacter
    rhs_terms: tuple[GkrsTerm, ...]
    verified: bool
    discrepancy: VirtualCharacter
