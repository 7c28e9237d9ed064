from fractions import Fraction
from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_serializer

from .roots import Rational, Series, Weight


def rational_json(value: Fraction) -> dict:
    return {"num": value.numerator, "den": value.denominator}


def weight_json(value: Optional[Weight]) -> Optional[list[dict]]:
    if value is None:
        return None
    return [rational_json(x) for x in value]


class SpaceSpec(BaseModel):
    """A parsed ``<series><rank>/<eta>[;mu=...][;scale=...]`` query."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    series: Series
    rank: int
    # exactly one of eta_name / eta_roots is set
    eta_name: Optional[str] = None
    eta_roots: Optional[tuple[Weight, ...]] = None
    mu: Optional[Weight] = None
    scale: Rational = Fraction(1)

    @field_serializer('eta_roots')
    def serialize_roots(self, value: Optional[tuple[Weight, ...]]) -> Optional[list]:
        if value is None:
            return None
        return [weight_json(r) for r in value]

    @field_serializer('mu')
    def serialize_mu(self, value: Optional[Weight]) -> Optional[list[dict]]:
        return weight_json(value)

    @field_serializer('scale')
    def serialize_scale(self, value: Fraction) -> dict:
        return rational_json(value)


class SpectrumRow(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    highest_weight: Weight
    energy: Rational
    degeneracy: int
    frobenius_multiplicity: int

    @field_serializer('highest_weight')
    def serialize_weight(self, value: Weight) -> list[dict]:
        return weight_json(value)

    @field_serializer('energy')
    def serialize_energy(self, value: Fraction) -> dict:
        return rational_json(value)


class SpectrumPayload(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    kind: Literal["spectrum"] = "spectrum"
    lines: list[SpectrumRow]


class KostantRecord(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    label: str = "kostant (Thm 4)"
    attained: bool
    highest_weight: Optional[Weight] = None
    energy: Optional[Rational] = None
    multiplicity: Optional[int] = None

    @field_serializer('highest_weight')
    def serialize_weight(self, value: Optional[Weight]) -> Optional[list[dict]]:
        return weight_json(value)

    @field_serializer('energy')
    def serialize_energy(self, value: Optional[Fraction]) -> Optional[dict]:
        return None if value is None else rational_json(value)


class FrobeniusRecord(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    label: str = "frobenius (Peter-Weyl)"
    highest_weight: Weight
    energy: Rational
    multiplicity: int
    frobenius_multiplicity: int

    @field_serializer('highest_weight')
    def serialize_weight(self, value: Weight) -> list[dict]:
        return weight_json(value)

    @field_serializer('energy')
    def serialize_energy(self, value: Fraction) -> dict:
        return rational_json(value)


class LowestPayload(BaseModel):
    kind: Literal["lowest"] = "lowest"
    kostant: KostantRecord
    frobenius: FrobeniusRecord


class GkrsTermRow(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    sign: int
    highest_weight: Weight

    @field_serializer('highest_weight')
    def serialize_weight(self, value: Weight) -> list[dict]:
        return weight_json(value)


class GkrsRow(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    highest_weight: Weight
    dimension: int
    verified: bool
    terms: list[GkrsTermRow]
    discrepancy_mass: int

    @field_serializer('highest_weight')
    def serialize_weight(self, value: Weight) -> list[dict]:
        return weight_json(value)


class GkrsPayload(BaseModel):
    kind: Literal["gkrs-check"] = "gkrs-check"
    dim_bound: int
    checked: int
    verified: int
    all_verified: bool
    rows: list[GkrsRow]


class WeylInfoPayload(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    kind: Literal["weyl-info"] = "weyl-info"
    order_g: int
    order_eta: int
    transversal_size: int
    rho_g: Weight
    rho_eta: Weight
    m_positive_roots: list[Weight]

    @field_serializer('rho_g', 'rho_eta')
    def serialize_weight(self, value: Weight) -> list[dict]:
        return weight_json(value)

    @field_serializer('m_positive_roots')
    def serialize_roots(self, value: list[Weight]) -> list:
        return [weight_json(r) for r in value]


class Provenance(BaseModel):
    version: str
    normalization: str


class Report(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    command: str
    query: str
    spec: SpaceSpec
    payload: Union[SpectrumPayload, LowestPayload, GkrsPayload, WeylInfoPayload] = Field(discriminator="kind")
    provenance: Optional[Provenance] = None
