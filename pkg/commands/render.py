"""Deterministic text and JSON rendering of reports.

Rationals print as ``p/q`` in text and as ``{"num": p, "den": q}`` in JSON; no floats,
no timestamps.
"""

from fractions import Fraction
from typing import Sequence

from model import GkrsPayload, LowestPayload, Report, SpectrumPayload, Weight, WeylInfoPayload


def fmt_rational(value: Fraction) -> str:
    return str(value)


def fmt_weight(w: Weight) -> str:
    return "(" + ", ".join(fmt_rational(x) for x in w) + ")"


def table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> list[str]:
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    out = []
    for row in [list(headers), *rows]:
        out.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return out


def _spectrum_lines(payload: SpectrumPayload) -> list[str]:
    rows = [
        [str(i), fmt_weight(r.highest_weight), fmt_rational(r.energy), str(r.degeneracy), str(r.frobenius_multiplicity)]
        for i, r in enumerate(payload.lines, start=1)
    ]
    return table(["#", "lambda", "energy", "degeneracy", "frobenius"], rows)


def _lowest_lines(payload: LowestPayload) -> list[str]:
    k, f = payload.kostant, payload.frobenius
    if k.attained:
        kostant = f"lambda={fmt_weight(k.highest_weight)}  E={fmt_rational(k.energy)}  multiplicity={k.multiplicity}"
    else:
        kostant = "not attained (mu + rho_eta is singular)"
    frobenius = (
        f"lambda={fmt_weight(f.highest_weight)}  E={fmt_rational(f.energy)}  "
        f"multiplicity={f.multiplicity}  frobenius={f.frobenius_multiplicity}"
    )
    return table(["notion", "lowest level"], [[k.label, kostant], [f.label, frobenius]])


def _gkrs_lines(payload: GkrsPayload) -> list[str]:
    rows = []
    for r in payload.rows:
        terms = " ".join(("+" if t.sign > 0 else "-") + fmt_weight(t.highest_weight) for t in r.terms)
        status = "ok" if r.verified else f"FAILED (mass {r.discrepancy_mass})"
        rows.append([fmt_weight(r.highest_weight), str(r.dimension), status, terms])
    lines = table(["lambda", "dim", "status", "eta terms"], rows)
    lines.append(f"verified {payload.verified} of {payload.checked} up to dimension {payload.dim_bound}")
    return lines


def _weyl_info_lines(payload: WeylInfoPayload) -> list[str]:
    return [
        f"|W_g|: {payload.order_g}",
        f"|W_eta|: {payload.order_eta}",
        f"|C|: {payload.transversal_size}",
        f"rho_g: {fmt_weight(payload.rho_g)}",
        f"rho_eta: {fmt_weight(payload.rho_eta)}",
        "complement positive roots: " + " ".join(fmt_weight(a) for a in payload.m_positive_roots),
    ]


def render_text(report: Report) -> str:
    payload = report.payload
    lines = [f"{report.command} {report.query}"]
    if isinstance(payload, SpectrumPayload):
        lines.extend(_spectrum_lines(payload))
    elif isinstance(payload, LowestPayload):
        lines.extend(_lowest_lines(payload))
    elif isinstance(payload, GkrsPayload):
        lines.extend(_gkrs_lines(payload))
    elif isinstance(payload, WeylInfoPayload):
        lines.extend(_weyl_info_lines(payload))
    if report.provenance is not None:
        lines.append(f"version: {report.provenance.version}")
        lines.append(f"normalization: {report.provenance.normalization}")
    return "\n".join(lines)


def render_json(report: Report) -> str:
    return report.model_dump_json(indent=2)
