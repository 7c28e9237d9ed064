from engine import kostant_lowest, spectrum
from engine.errors import NonPositiveScale
from model import EqualRankPair, FrobeniusRecord, KostantRecord, LowestPayload, SpaceSpec

from .parsing import resolve_mu


def run_lowest(pair: EqualRankPair, spec: SpaceSpec) -> LowestPayload:
    """
    Lowest level computed both ways, side by side.

    The Weyl-conjugation record is "not attained" when mu + rho_eta is singular for g.
    The Peter-Weyl record is the first Frobenius-reciprocity spectral line and always
    exists below the cutoff. The two generally disagree; neither is silently preferred.

    Args:
        pair: the equal-rank pair built from the query
        spec: the parsed query, supplying mu and the Landau scale

    Returns:
        LowestPayload with a kostant record and a frobenius record, energies scaled

    Raises:
        NonPositiveScale: scale <= 0
        CutoffBeforeFirstLine: no Frobenius line below the cutoff
    """
    if spec.scale <= 0:
        raise NonPositiveScale(f"scale must be positive, got {spec.scale}")
    mu = resolve_mu(spec, pair)

    found = kostant_lowest(pair, mu)
    if found is None:
        kostant = KostantRecord(attained=False)
    else:
        kostant = KostantRecord(
            attained=True,
            highest_weight=found.highest_weight,
            energy=found.energy * spec.scale,
            multiplicity=found.multiplicity,
        )

    first = spectrum(pair, mu, 1)[0]
    frobenius = FrobeniusRecord(
        highest_weight=first.highest_weight,
        energy=first.energy * spec.scale,
        multiplicity=first.degeneracy,
        frobenius_multiplicity=first.frobenius_multiplicity,
    )
    return LowestPayload(kostant=kostant, frobenius=frobenius)
