"""Grammar of homogeneous-space queries.

    <series><rank> "/" (<named> | "roots:" <root> ("|" <root>)*) [";mu=" <rationals>] [";scale=" <rational>]

A root or a weight is a comma separated list of rationals (``3``, ``-1/2``). Named
subalgebras are ``full``, ``torus``, ``D<k>`` inside ``B<k>``, and ``A1xA1`` or ``A2``
inside ``G2``.
"""

import re
from fractions import Fraction
from typing import Optional

from engine import build_root_system, check_series, make_pair
from engine.errors import ParseError
from model import EqualRankPair, SpaceSpec, Weight, zero_weight

_RATIONAL = re.compile(r"-?\d+(?:/\d+)?\Z")
_HEAD = re.compile(r"(G2|[A-Z])(\d*)\Z")
_NAMED = re.compile(r"(?:full|torus|D\d+|A1xA1|A2)\Z")


def parse_rational(text: str, position: int = 0) -> Fraction:
    """Parse ``p`` or ``p/q``; never a decimal."""
    if not _RATIONAL.match(text):
        raise ParseError(f"expected a rational like 3 or -1/2, got {text!r}", position)
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}", position)
    return Fraction(int(num), int(den) if den else 1)


def _parse_vector(text: str, position: int) -> Weight:
    if not text:
        raise ParseError("expected a comma separated list of rationals", position)
    coords = []
    offset = position
    for item in text.split(","):
        coords.append(parse_rational(item, offset))
        offset += len(item) + 1
    return tuple(coords)


def _parse_head(head: str) -> tuple[str, int]:
    match = _HEAD.match(head)
    if not match:
        raise ParseError(f"expected <series><rank> such as B3 or G2, got {head!r}", 0)
    series, digits = match.groups()
    if series == "G2":
        if digits:
            raise ParseError("G2 takes no separate rank", 2)
        rank = 2
    else:
        if not digits:
            raise ParseError(f"missing rank after {series}", 1)
        rank = int(digits)
    # E and F get the explanatory rejection; unknown letters are rejected too
    check_series(series, rank)
    return series, rank


def _check_named(name: str, series: str, rank: int, position: int) -> None:
    if name.startswith("D"):
        k = int(name[1:])
        if series != "B" or k != rank or k < 2:
            raise ParseError(f"{name} is only available inside B{k} with k >= 2", position)
    elif name in ("A1xA1", "A2") and series != "G2":
        raise ParseError(f"{name} is only available inside G2", position)


def parse_space_spec(text: str) -> SpaceSpec:
    """Parse a query such as ``B3/D3;mu=1/2,1/2,1/2``.

    Args:
        text: the query string

    Returns:
        SpaceSpec with either ``eta_name`` or ``eta_roots`` set; ``mu`` is None when
        omitted and ``scale`` defaults to 1

    Raises:
        ParseError: malformed query, with the offending position
        UnsupportedSeries: E or F series, or an unknown letter
    """
    head, slash, rest = text.partition("/")
    if not slash:
        raise ParseError("expected '/' between the group and the subalgebra", len(text))
    series, rank = _parse_head(head)

    position = len(head) + 1
    segments = rest.split(";")
    eta_text = segments[0]
    eta_name: Optional[str] = None
    eta_roots: Optional[tuple[Weight, ...]] = None
    if eta_text.startswith("roots:"):
        offset = position + len("roots:")
        roots = []
        for chunk in eta_text[len("roots:"):].split("|"):
            roots.append(_parse_vector(chunk, offset))
            offset += len(chunk) + 1
        eta_roots = tuple(roots)
    elif _NAMED.match(eta_text):
        _check_named(eta_text, series, rank, position)
        eta_name = eta_text
    else:
        raise ParseError(f"expected a named subalgebra or 'roots:', got {eta_text!r}", position)

    mu: Optional[Weight] = None
    scale = Fraction(1)
    seen = set()
    position += len(eta_text) + 1
    for segment in segments[1:]:
        key, eq, value = segment.partition("=")
        if not eq or key not in ("mu", "scale"):
            raise ParseError(f"expected 'mu=' or 'scale=', got {segment!r}", position)
        if key in seen:
            raise ParseError(f"{key} given twice", position)
        seen.add(key)
        if key == "mu":
            mu = _parse_vector(value, position + 3)
        else:
            scale = parse_rational(value, position + 6)
        position += len(segment) + 1

    return SpaceSpec(series=series, rank=rank, eta_name=eta_name, eta_roots=eta_roots, mu=mu, scale=scale)


def _vector_text(w: Weight) -> str:
    return ",".join(str(x) for x in w)


def serialize_space_spec(spec: SpaceSpec) -> str:
    """Inverse of ``parse_space_spec``; ``mu`` and a unit ``scale`` are omitted when absent."""
    head = "G2" if spec.series == "G2" else f"{spec.series}{spec.rank}"
    if spec.eta_roots is not None:
        eta = "roots:" + "|".join(_vector_text(r) for r in spec.eta_roots)
    else:
        eta = spec.eta_name
    text = f"{head}/{eta}"
    if spec.mu is not None:
        text += f";mu={_vector_text(spec.mu)}"
    if spec.scale != 1:
        text += f";scale={spec.scale}"
    return text


def _named_generators(name: str, g) -> list[Weight]:
    dim = g.ambient_dim
    if name == "full":
        return list(g.simple_roots)
    if name == "torus":
        return []
    if name.startswith("D"):
        # e_i - e_(i+1) and e_(n-1) + e_n: the long roots of B_n
        gens = list(g.simple_roots[:-1])
        tail = list(zero_weight(dim))
        tail[dim - 2] = Fraction(1)
        tail[dim - 1] = Fraction(1)
        gens.append(tuple(tail))
        return gens
    if name == "A1xA1":
        # long a2 and the orthogonal short root 2a1 + a2
        return [(Fraction(0), Fraction(1)), (Fraction(2), Fraction(1))]
    if name == "A2":
        return [(Fraction(0), Fraction(1)), (Fraction(3), Fraction(1))]
    raise ParseError(f"unknown subalgebra {name!r}", 0)


def build_pair(spec: SpaceSpec) -> EqualRankPair:
    """Root systems and complement data for a parsed query."""
    g = build_root_system(spec.series, spec.rank)
    if spec.eta_roots is not None:
        return make_pair(g, list(spec.eta_roots), g.form)
    label = g.label if spec.eta_name == "full" else spec.eta_name
    return make_pair(g, _named_generators(spec.eta_name, g), g.form, label)


def resolve_mu(spec: SpaceSpec, pair: EqualRankPair) -> Weight:
    """The requested mu, or the trivial eta-type when none was given."""
    return spec.mu if spec.mu is not None else zero_weight(pair.g.ambient_dim)
