from .roots import BilinearForm, Rational, RootSystem, Series, Weight, to_fraction, weight, zero_weight
from .weyl import WeylElement, WeylGroup
from .character import IrrepLabel, VirtualCharacter
from .space import EqualRankPair, KostantLowest, SpectralLine, SpinModules
from .gkrs import GkrsReport, GkrsTerm
from .report import (
    FrobeniusRecord,
    GkrsPayload,
    GkrsRow,
    GkrsTermRow,
    KostantRecord,
    LowestPayload,
    Provenance,
    Report,
    SpaceSpec,
    SpectrumPayload,
    SpectrumRow,
    WeylInfoPayload,
)

__all__ = [
    "BilinearForm", "Rational", "RootSystem", "Series", "Weight", "to_fraction", "weight", "zero_weight",
    "WeylElement", "WeylGroup", "IrrepLabel", "VirtualCharacter",
    "EqualRankPair", "KostantLowest", "SpectralLine", "SpinModules", "GkrsReport", "GkrsTerm",
    "FrobeniusRecord", "GkrsPayload", "GkrsRow", "GkrsTermRow", "KostantRecord", "LowestPayload",
    "Provenance", "Report", "SpaceSpec", "SpectrumPayload", "SpectrumRow", "WeylInfoPayload",
]
