from engine import sweep, weyl_dimension
from model import EqualRankPair, GkrsPayload, GkrsRow, GkrsTermRow


def run_gkrs_check(pair: EqualRankPair, dim_bound: int) -> GkrsPayload:
    """
    Verify the multiplet identity for every dominant lambda with dim V_lambda <= dim_bound.

    Args:
        pair: the equal-rank pair built from the query
        dim_bound: largest dimension of V_lambda included in the sweep

    Returns:
        GkrsPayload with one row per lambda; ``all_verified`` is False when any
        identity fails

    Raises:
        EmptyComplement: eta is all of g
    """
    g = pair.g
    rows = []
    for report in sweep(pair, dim_bound):
        lam = report.irrep.highest_weight
        rows.append(
            GkrsRow(
                highest_weight=lam,
                dimension=weyl_dimension(g, g.form, lam),
                verified=report.verified,
                terms=[GkrsTermRow(sign=t.sign, highest_weight=t.irrep.highest_weight) for t in report.rhs_terms],
                discrepancy_mass=report.discrepancy.mass,
            )
        )
    verified = sum(1 for row in rows if row.verified)
    return GkrsPayload(
        dim_bound=dim_bound,
        checked=len(rows),
        verified=verified,
        all_verified=verified == len(rows),
        rows=rows,
    )
