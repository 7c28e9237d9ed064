"""Machine check of the multiplet identity

    V_lam (x) S+  -  V_lam (x) S-  =  sum over c in C of (-1)^c U_{c . lam}

in the representation ring of eta, compared as formal characters on the shared Cartan.
"""

import logging
from functools import lru_cache

from model import EqualRankPair, GkrsReport, GkrsTerm, IrrepLabel, VirtualCharacter, Weight, WeylElement
from .errors import NotInTransversal
from .homspace import spin_modules
from .reps import _require_highest_weight, character, dominant_weights_up_to_dimension, multiply, weyl_dimension
from .rootsys import _fmt, geometry
from .weyl import coset_transversal, weyl_group

logger = logging.getLogger(__name__)


@lru_cache(maxsize=64)
def transversal(pair: EqualRankPair) -> tuple[WeylElement, ...]:
    """The multiplet set C of the pair."""
    return tuple(coset_transversal(pair.g, pair.eta, pair.g.form, weyl_group(pair.g)))


def dotted_action(c: WeylElement, lam: Weight, pair: EqualRankPair) -> Weight:
    """c . lam = c(lam + rho_g) - rho_eta."""
    if not geometry(pair.eta).is_dominant(c.apply(pair.rho_g), strict=True):
        raise NotInTransversal(f"element does not carry the positive chamber of {pair.g.label} into that of {pair.eta.label}")
    _require_highest_weight(pair.g, pair.g.form, lam)
    image = c.apply(tuple(x + r for x, r in zip(lam, pair.rho_g)))
    return tuple(x - r for x, r in zip(image, pair.rho_eta))


def gkrs_check(pair: EqualRankPair, lam: Weight) -> GkrsReport:
    g, eta, form = pair.g, pair.eta, pair.g.form
    _require_highest_weight(g, form, lam)
    spin = spin_modules(pair)

    lhs = multiply(character(g, form, lam), spin.s_plus - spin.s_minus)
    terms = []
    rhs = VirtualCharacter()
    for c in transversal(pair):
        label = dotted_action(c, lam, pair)
        terms.append(GkrsTerm(element=c, sign=c.length_parity_sign, irrep=IrrepLabel(highest_weight=label, system=eta)))
        rhs = rhs + character(eta, form, label).scaled(c.length_parity_sign)

    discrepancy = lhs - rhs
    report = GkrsReport(
        irrep=IrrepLabel(highest_weight=lam, system=g),
        lhs=lhs,
        rhs_terms=tuple(terms),
        verified=not discrepancy,
        discrepancy=discrepancy,
    )
    if not report.verified:
        logger.warning("identity fails on %s at lambda = %s", pair.label, _fmt(lam))
    return report


def dimension_shadow(report: GkrsReport) -> int:
    """sum of (-1)^c dim U_{c . lam}; zero whenever the complement is nonempty."""
    return sum(
        term.sign * weyl_dimension(term.irrep.system, term.irrep.system.form, term.irrep.highest_weight)
        for term in report.rhs_terms
    )


def sweep(pair: EqualRankPair, dim_bound: int) -> list[GkrsReport]:
    """One report per dominant integral lam of g with dim V_lam <= dim_bound."""
    weights = dominant_weights_up_to_dimension(pair.g, pair.g.form, dim_bound)
    logger.debug("sweeping %d weights of %s up to dimension %d", len(weights), pair.g.label, dim_bound)
    return [gkrs_check(pair, lam) for lam in weights]
