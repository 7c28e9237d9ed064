from engine import landau_levels, spectrum
from model import EqualRankPair, SpectrumPayload, SpectrumRow, SpaceSpec

from .parsing import resolve_mu


def run_spectrum(pair: EqualRankPair, spec: SpaceSpec, lines: int) -> SpectrumPayload:
    """
    First spectral lines of the Laplacian on sections of G x_H U_mu.

    Args:
        pair: the equal-rank pair built from the query
        spec: the parsed query, supplying mu and the Landau scale
        lines: number of lines to emit

    Returns:
        SpectrumPayload with lines in increasing energy, energies multiplied by the scale

    Raises:
        CutoffBeforeFirstLine: nothing contains U_mu below the search cutoff
        NonPositiveScale: scale <= 0
    """
    found = landau_levels(spectrum(pair, resolve_mu(spec, pair), lines), spec.scale)
    return SpectrumPayload(
        lines=[
            SpectrumRow(
                highest_weight=line.highest_weight,
                energy=line.energy,
                degeneracy=line.degeneracy,
                frobenius_multiplicity=line.frobenius_multiplicity,
            )
            for line in found
        ]
    )
