"""Classical root systems in explicit rational coordinates.

A_n lives in the sum-zero hyperplane of an (n+1)-dimensional ambient space, B_n, C_n
and D_n in n-dimensional space with the usual epsilon basis, and G2 in its two
simple-root coordinates with a non-diagonal Gram matrix. Every form is scaled so that
long roots have squared length exactly 2.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from model import BilinearForm, RootSystem, Weight, weight, zero_weight
from .errors import DimensionMismatch, InvalidRank, NotARoot, UnsupportedSeries, ZeroRoot
from .linalg import inverse, matvec, solve_in_span

logger = logging.getLogger(__name__)

SUPPORTED_SERIES = ("A", "B", "C", "D", "G2")


def _dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def _unit(dim: int, i: int, scale=1) -> list[Fraction]:
    v = [Fraction(0)] * dim
    v[i] = Fraction(scale)
    return v


def _standard_data(series: str, rank: int) -> tuple[list[Weight], list[list[Fraction]]]:
    """Simple roots and the unnormalized Gram matrix for one series."""
    if series == "G2":
        # simple-root coordinates: a1 short, a2 long
        gram = [[Fraction(2, 3), Fraction(-1)], [Fraction(-1), Fraction(2)]]
        return [weight(1, 0), weight(0, 1)], gram

    dim = rank + 1 if series == "A" else rank
    gram = [_unit(dim, i) for i in range(dim)]
    simple = []
    for i in range(rank - 1):
        v = _unit(dim, i)
        v[i + 1] = Fraction(-1)
        simple.append(tuple(v))
    if series == "A":
        v = _unit(dim, rank - 1)
        v[rank] = Fraction(-1)
        simple.append(tuple(v))
    elif series == "B":
        simple.append(tuple(_unit(dim, rank - 1)))
    elif series == "C":
        simple.append(tuple(_unit(dim, rank - 1, 2)))
    elif series == "D":
        v = _unit(dim, rank - 1)
        v[rank - 2] = Fraction(1)
        simple.append(tuple(v))
    return simple, gram


def check_series(series: str, rank: int) -> None:
    if series not in SUPPORTED_SERIES:
        if series[:1] in ("E", "F"):
            raise UnsupportedSeries(
                f"series {series} is not supported: E and F Weyl groups are too large to "
                f"enumerate at desk scale; use one of {', '.join(SUPPORTED_SERIES)}"
            )
        raise UnsupportedSeries(f"unknown series {series!r}; use one of {', '.join(SUPPORTED_SERIES)}")
    if rank < 1:
        raise InvalidRank(f"rank must be positive, got {rank}")
    if series == "D" and rank < 2:
        raise InvalidRank("D series needs rank >= 2")
    if series == "G2" and rank != 2:
        raise InvalidRank(f"G2 has rank 2, got {rank}")


def _reflect_raw(gram, root: Weight, w: Weight) -> Weight:
    g_root = matvec(gram, root)
    coeff = 2 * _dot(w, g_root) / _dot(root, g_root)
    return tuple(x - coeff * a for x, a in zip(w, root))


def _close_under(gram, generators: Sequence[Weight]) -> set[Weight]:
    """All images of the generators (and their negatives) under reflections in the generators."""
    found = set(generators) | {tuple(-x for x in a) for a in generators}
    frontier = list(found)
    while frontier:
        fresh = []
        for beta in frontier:
            for alpha in generators:
                image = _reflect_raw(gram, alpha, beta)
                if image not in found:
                    found.add(image)
                    fresh.append(image)
        frontier = fresh
    return found


def standard_form(series: str, rank: int) -> BilinearForm:
    """The invariant form of the standard realization, long roots of squared length 2."""
    check_series(series, rank)
    simple, gram = _standard_data(series, rank)
    longest = max(_dot(a, matvec(gram, a)) for a in simple)
    scale = Fraction(2) / longest
    return BilinearForm(gram=tuple(tuple(scale * x for x in row) for row in gram))


def build_root_system(series: str, rank: int) -> RootSystem:
    """Standard coordinate realization of a classical (or G2) root system."""
    check_series(series, rank)
    simple, _ = _standard_data(series, rank)
    form = standard_form(series, rank)
    roots = _close_under(form.gram, simple)

    positive = []
    for beta in roots:
        coeffs = solve_in_span(simple, beta)
        if all(c >= 0 for c in coeffs):
            positive.append((sum(coeffs), beta))
    positive.sort()

    rs = RootSystem(
        series=series,
        rank=rank,
        simple_roots=tuple(simple),
        positive_roots=tuple(beta for _, beta in positive),
        ambient_dim=len(simple[0]),
        form=form,
        label="G2" if series == "G2" else f"{series}{rank}",
    )
    logger.debug("built %s with %d positive roots", rs.label, len(rs.positive_roots))
    return rs


def sub_root_system(parent: RootSystem, generators: Sequence[Weight], label: Optional[str] = None) -> RootSystem:
    """Smallest root subsystem of ``parent`` containing ``generators``.

    Positivity is inherited from the parent; an empty generator list gives the torus.
    """
    parent_roots = set(parent.roots)
    gens = [tuple(Fraction(x) for x in g) for g in generators]
    for g in gens:
        if g not in parent_roots:
            raise NotARoot(f"{_fmt(g)} is not a root of {parent.label}")

    found = _close_under(parent.form.gram, gens) if gens else set()
    positive = [a for a in parent.positive_roots if a in found]
    # simple roots are the positive roots that are not a sum of two positive roots
    sums = {tuple(x + y for x, y in zip(a, b)) for i, a in enumerate(positive) for b in positive[i + 1:]}
    simple = [a for a in positive if a not in sums]

    if label is None:
        label = "torus" if not positive else f"sub{len(simple)}({parent.label})"
    return RootSystem(
        series=None,
        rank=len(simple),
        simple_roots=tuple(simple),
        positive_roots=tuple(positive),
        ambient_dim=parent.ambient_dim,
        form=parent.form,
        label=label,
    )


def inner(form: BilinearForm, a: Weight, b: Weight) -> Fraction:
    if len(a) != form.dim or len(b) != form.dim:
        raise DimensionMismatch(f"weights of length {len(a)} and {len(b)} on a {form.dim}-dimensional space")
    return _dot(a, matvec(form.gram, b))


def weyl_vector(rs: RootSystem) -> Weight:
    """Half the sum of the positive roots."""
    total = list(zero_weight(rs.ambient_dim))
    for a in rs.positive_roots:
        total = [t + x for t, x in zip(total, a)]
    return tuple(t / 2 for t in total)


def coroot_pairing(form: BilinearForm, w: Weight, root: Weight) -> Fraction:
    """2 (w, root) / (root, root)."""
    norm = inner(form, root, root)
    if norm == 0:
        raise ZeroRoot("cannot pair against the zero vector")
    return 2 * inner(form, w, root) / norm


def simple_coefficients(rs: RootSystem, w: Weight) -> tuple[Fraction, ...] | None:
    """Coordinates of ``w`` in the simple roots, or None if ``w`` is outside the root span."""
    return solve_in_span(rs.simple_roots, w)


def fundamental_weights(rs: RootSystem) -> tuple[Weight, ...]:
    """Weights dual to the simple coroots, inside the span of the roots."""
    if rs.is_torus:
        return ()
    geo = geometry(rs)
    pairing = tuple(
        tuple(_dot(alpha, d) for d in geo.simple_coroot_duals) for alpha in rs.simple_roots
    )
    coeffs = inverse(pairing)
    dim = rs.ambient_dim
    return tuple(
        tuple(sum((c * alpha[k] for c, alpha in zip(row, rs.simple_roots)), Fraction(0)) for k in range(dim))
        for row in coeffs
    )


def _fmt(w: Weight) -> str:
    return "(" + ", ".join(str(x) for x in w) + ")"


class RootGeometry:
    """Dual vectors of one root system, so pairings against roots are plain dot products."""

    def __init__(self, rs: RootSystem):
        gram = rs.form.gram
        self.system = rs
        self.gram = gram
        self.simple = rs.simple_roots
        self.positive = rs.positive_roots
        self.root_set = frozenset(rs.roots)
        self.positive_duals = tuple(matvec(gram, a) for a in rs.positive_roots)
        self.simple_coroot_duals = tuple(
            tuple(2 * x / _dot(a, matvec(gram, a)) for x in matvec(gram, a)) for a in rs.simple_roots
        )
        self.rho = weyl_vector(rs)

    def norm(self, w: Weight) -> Fraction:
        return _dot(w, matvec(self.gram, w))

    def pair_simple(self, w: Weight, i: int) -> Fraction:
        return _dot(w, self.simple_coroot_duals[i])

    def reflect_simple(self, w: Weight, i: int) -> Weight:
        p = _dot(w, self.simple_coroot_duals[i])
        return tuple(x - p * a for x, a in zip(w, self.simple[i]))

    def is_dominant(self, w: Weight, strict: bool = False) -> bool:
        for d in self.simple_coroot_duals:
            p = _dot(w, d)
            if p < 0 or (strict and p == 0):
                return False
        return True

    def is_integral(self, w: Weight) -> bool:
        return all(_dot(w, d).denominator == 1 for d in self.simple_coroot_duals)

    def is_regular(self, w: Weight) -> bool:
        return all(_dot(w, d) != 0 for d in self.positive_duals)

    def dominant_conjugate(self, w: Weight) -> tuple[Weight, int]:
        """Dominant W-conjugate of ``w`` and the number of simple reflections used."""
        x = w
        steps = 0
        while True:
            for i, d in enumerate(self.simple_coroot_duals):
                p = _dot(x, d)
                if p < 0:
                    x = tuple(xi - p * ai for xi, ai in zip(x, self.simple[i]))
                    steps += 1
                    break
            else:
                return x, steps


@lru_cache(maxsize=256)
def geometry(rs: RootSystem) -> RootGeometry:
    return RootGeometry(rs)
