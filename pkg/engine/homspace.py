"""Laplacian spectra on an equal-rank homogeneous space G/H.

The Laplacian acting on sections of the bundle induced from U_mu is the Casimir of g
minus the Casimir of eta, so every quantity here is a statement about weights:
eigenvalues, lowest-level data obtained by Weyl conjugation, and the
Frobenius-reciprocity spectrum enumerated in increasing energy.
"""

import heapq
import itertools
import logging
from collections import defaultdict
from fractions import Fraction
from math import prod
from typing import Iterator, Literal, Optional, Sequence

from model import (
    BilinearForm,
    EqualRankPair,
    IrrepLabel,
    KostantLowest,
    RootSystem,
    SpectralLine,
    SpinModules,
    VirtualCharacter,
    Weight,
)
from .errors import (
    ClosureViolation,
    CutoffBeforeFirstLine,
    DimensionMismatch,
    EmptyComplement,
    NonPositiveScale,
    NotDominant,
    NotIntegral,
)
from .reps import _dominant_multiplicities, _require_highest_weight, character, decompose, weyl_dimension
from .rootsys import _dot, _fmt, fundamental_weights, geometry, simple_coefficients, sub_root_system, weyl_vector
from .weyl import to_dominant, weyl_group

logger = logging.getLogger(__name__)

BranchingMethod = Literal["alternating", "decompose"]


def _add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def make_pair(
    g: RootSystem, eta_generators: Sequence[Weight], form: BilinearForm, label: Optional[str] = None
) -> EqualRankPair:
    """Build eta inside g from root generators and precompute the complement data."""
    if form.dim != g.ambient_dim:
        raise DimensionMismatch(f"form of dimension {form.dim} for {g.label} in dimension {g.ambient_dim}")
    eta = sub_root_system(g, eta_generators, label)

    g_roots = set(g.roots)
    eta_roots = set(eta.roots)
    for a in eta.roots:
        for b in eta.roots:
            total = _add(a, b)
            if total in g_roots and total not in eta_roots:
                raise ClosureViolation(
                    f"{_fmt(a)} + {_fmt(b)} is a root of {g.label} but not of the subsystem; "
                    "the generators do not span a subalgebra"
                )

    eta_positive = set(eta.positive_roots)
    m_positive = tuple(a for a in g.positive_roots if a not in eta_positive)
    rho_g = weyl_vector(g)
    rho_eta = weyl_vector(eta)
    half_m = tuple(sum((a[k] for a in m_positive), Fraction(0)) / 2 for k in range(g.ambient_dim))
    assert _sub(rho_g, rho_eta) == half_m

    pair = EqualRankPair(g=g, eta=eta, m_positive_roots=m_positive, rho_g=rho_g, rho_eta=rho_eta)
    logger.debug("pair %s: %d complement roots", pair.label, len(m_positive))
    return pair


def spin_modules(pair: EqualRankPair) -> SpinModules:
    """Half-spin eta-modules of the complement: half-sums of signed complement roots."""
    roots = pair.m_positive_roots
    if not roots:
        raise EmptyComplement(f"{pair.label} has an empty complement, so there is no spinor module")
    plus = defaultdict(int)
    minus = defaultdict(int)
    for signs in itertools.product((1, -1), repeat=len(roots)):
        w = tuple(sum((s * a[k] for s, a in zip(signs, roots)), Fraction(0)) / 2 for k in range(len(roots[0])))
        target = plus if signs.count(-1) % 2 == 0 else minus
        target[w] += 1
    return SpinModules(s_plus=VirtualCharacter(plus), s_minus=VirtualCharacter(minus))


def spin_dimension(pair: EqualRankPair) -> int:
    """dim S+ = dim S- = 2^(|complement positive roots| - 1)."""
    if not pair.m_positive_roots:
        raise EmptyComplement(f"{pair.label} has an empty complement, so there is no spinor module")
    return 2 ** (len(pair.m_positive_roots) - 1)


def _require_mu(pair: EqualRankPair, mu: Weight) -> None:
    if len(mu) != pair.g.ambient_dim:
        raise DimensionMismatch(f"mu has {len(mu)} coordinates, expected {pair.g.ambient_dim}")
    if simple_coefficients(pair.g, mu) is None:
        raise NotIntegral(f"mu = {_fmt(mu)} lies outside the weight space of {pair.g.label}")
    if not geometry(pair.eta).is_dominant(mu):
        raise NotDominant(f"mu = {_fmt(mu)} is not dominant for {pair.eta.label}")
    if not geometry(pair.g).is_integral(mu):
        raise NotIntegral(f"mu = {_fmt(mu)} is not integral for the coroots of {pair.g.label}")


def eigenvalue(pair: EqualRankPair, lam: Weight, mu: Weight) -> Fraction:
    """Casimir of g on V_lam minus Casimir of eta on U_mu."""
    _require_highest_weight(pair.g, pair.g.form, lam)
    _require_mu(pair, mu)
    return _energy(pair, lam, mu)


def _energy(pair: EqualRankPair, lam: Weight, mu: Weight) -> Fraction:
    geo = geometry(pair.g)
    return (
        geo.norm(_add(lam, pair.rho_g))
        - geo.norm(_add(mu, pair.rho_eta))
        - geo.norm(pair.rho_g)
        + geo.norm(pair.rho_eta)
    )


def ground_energy(pair: EqualRankPair) -> Fraction:
    """(rho_eta, rho_eta) - (rho_g, rho_g), the lower bound of every eigenvalue."""
    geo = geometry(pair.g)
    return geo.norm(pair.rho_eta) - geo.norm(pair.rho_g)


def kostant_lowest(pair: EqualRankPair, mu: Weight) -> Optional[KostantLowest]:
    """Lowest level from the Weyl element w with w(mu + rho_eta) - rho_g dominant.

    Returns None when mu + rho_eta lies on a wall of g, where no such w exists.
    """
    _require_mu(pair, mu)
    g = pair.g
    geo = geometry(g)
    shifted = _add(mu, pair.rho_eta)
    if not geo.is_regular(shifted):
        logger.info("mu + rho_eta = %s is singular for %s; lowest level not attained", _fmt(shifted), g.label)
        return None

    element, image = to_dominant(weyl_group(g), g, g.form, shifted)
    lam = _sub(image, pair.rho_g)
    if not geo.is_dominant(lam) or not geo.is_integral(lam):
        logger.info("w(mu + rho_eta) - rho_g = %s is not dominant integral for %s", _fmt(lam), g.label)
        return None

    numerator = prod((_dot(image, d) for d in geo.positive_duals), start=Fraction(1))
    denominator = prod((_dot(pair.rho_g, d) for d in geo.positive_duals), start=Fraction(1))
    multiplicity = numerator / denominator
    assert multiplicity.denominator == 1 and multiplicity > 0
    return KostantLowest(
        irrep=IrrepLabel(highest_weight=lam, system=g),
        energy=ground_energy(pair),
        multiplicity=int(multiplicity),
        element=element,
    )


def branching_multiplicity(
    pair: EqualRankPair, lam: Weight, mu: Weight, method: BranchingMethod = "alternating"
) -> int:
    """Multiplicity of U_mu in the restriction of V_lam to eta.

    ``alternating`` evaluates sum over v in W_eta of sign(v) m_lam(v(mu + rho_eta) - rho_eta);
    ``decompose`` peels the restricted character completely. Both give the same number.
    """
    g, eta = pair.g, pair.eta
    if method == "decompose":
        for label, mult in decompose(eta, g.form, character(g, g.form, lam)):
            if label.highest_weight == mu:
                return mult
        return 0

    _require_highest_weight(g, g.form, lam)
    dominant = dict(_dominant_multiplicities(g, lam))
    geo = geometry(g)
    shifted = _add(mu, pair.rho_eta)
    total = 0
    for v in weyl_group(eta).elements:
        w = _sub(shifted, v.apply(pair.rho_eta))
        total += v.length_parity_sign * dominant.get(geo.dominant_conjugate(w)[0], 0)
    return total


def default_cutoff(pair: EqualRankPair, mu: Weight) -> Fraction:
    """4 (mu + rho_eta, mu + rho_eta) + 100."""
    return geometry(pair.g).norm(_add(mu, pair.rho_eta)) * 4 + 100


def iter_spectrum(
    pair: EqualRankPair,
    mu: Weight,
    hard_cutoff: Optional[Fraction] = None,
    method: BranchingMethod = "alternating",
) -> Iterator[SpectralLine]:
    """Spectral lines of sections of G x_H U_mu, lazily, in increasing energy.

    Candidates lam are dominant integral weights congruent to mu modulo the root
    lattice, visited in increasing (lam + rho_g, lam + rho_g) with lexicographic ties.
    A candidate becomes a line when U_mu occurs in V_lam restricted to eta.
    """
    _require_mu(pair, mu)
    g = pair.g
    geo = geometry(g)
    cutoff = default_cutoff(pair, mu) if hard_cutoff is None else Fraction(hard_cutoff)
    omegas = fundamental_weights(g)
    start = tuple(Fraction(0) for _ in range(g.ambient_dim))
    heap = [(geo.norm(_add(start, pair.rho_g)), start)]
    visited = {start}
    scanned = 0
    while heap:
        norm, lam = heapq.heappop(heap)
        if norm > cutoff:
            logger.info("spectrum of %s stopped at cutoff %s after %d candidates", pair.label, cutoff, scanned)
            return
        for omega in omegas:
            nxt = _add(lam, omega)
            if nxt not in visited:
                visited.add(nxt)
                heapq.heappush(heap, (geo.norm(_add(nxt, pair.rho_g)), nxt))

        scanned += 1
        coeffs = simple_coefficients(g, _sub(lam, mu))
        if coeffs is None or any(c.denominator != 1 for c in coeffs):
            continue
        mult = branching_multiplicity(pair, lam, mu, method)
        if mult > 0:
            yield SpectralLine(
                irrep=IrrepLabel(highest_weight=lam, system=g),
                energy=_energy(pair, lam, mu),
                degeneracy=weyl_dimension(g, g.form, lam),
                frobenius_multiplicity=mult,
            )


def spectrum(
    pair: EqualRankPair,
    mu: Weight,
    max_lines: int,
    hard_cutoff: Optional[Fraction] = None,
    method: BranchingMethod = "alternating",
) -> list[SpectralLine]:
    """The first ``max_lines`` lines of ``iter_spectrum``; the first one is the global minimum."""
    lines = list(itertools.islice(iter_spectrum(pair, mu, hard_cutoff, method), max_lines))
    if not lines:
        raise CutoffBeforeFirstLine(
            f"no representation of {pair.g.label} contains U_{_fmt(mu)} below the cutoff "
            f"{default_cutoff(pair, mu) if hard_cutoff is None else hard_cutoff}"
        )
    return lines


def landau_levels(lines: Sequence[SpectralLine], scale) -> list[SpectralLine]:
    """Multiply every energy by the hbar^2 / 2M prefactor."""
    scale = Fraction(scale)
    if scale <= 0:
        raise NonPositiveScale(f"scale must be positive, got {scale}")
    return [line.model_copy(update={"energy": line.energy * scale}) for line in lines]
