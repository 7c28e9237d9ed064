from engine import transversal, weyl_group
from model import EqualRankPair, WeylInfoPayload


def run_weyl_info(pair: EqualRankPair) -> WeylInfoPayload:
    """Group orders, the multiplet count |C| and the Weyl vectors of a pair."""
    return WeylInfoPayload(
        order_g=len(weyl_group(pair.g)),
        order_eta=len(weyl_group(pair.eta)),
        transversal_size=len(transversal(pair)),
        rho_g=pair.rho_g,
        rho_eta=pair.rho_eta,
        m_positive_roots=list(pair.m_positive_roots),
    )
