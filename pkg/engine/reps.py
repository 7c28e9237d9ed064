"""Highest-weight representation arithmetic: dimensions, characters, decompositions, Casimirs."""

import heapq
import logging
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import lcm, prod

from model import BilinearForm, IrrepLabel, RootSystem, VirtualCharacter, Weight, WeylGroup
from .errors import DimensionMismatch, NonIntegralPeel, NotDominant, NotIntegral, NotWInvariant
from .rootsys import _dot, _fmt, fundamental_weights, geometry, inner
from .weyl import parabolic_order, weyl_group, weyl_orbit

logger = logging.getLogger(__name__)


def _add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def _check_dim(form: BilinearForm, w: Weight) -> None:
    if len(w) != form.dim:
        raise DimensionMismatch(f"weight of length {len(w)} on a {form.dim}-dimensional space")


def is_integral(rs: RootSystem, w: Weight) -> bool:
    """Integer pairing with every simple coroot."""
    return geometry(rs).is_integral(w)


def _require_highest_weight(rs: RootSystem, form: BilinearForm, lam: Weight, integral: bool = True) -> None:
    _check_dim(form, lam)
    geo = geometry(rs)
    if not geo.is_dominant(lam):
        raise NotDominant(f"{_fmt(lam)} is not dominant for {rs.label}")
    if integral and not geo.is_integral(lam):
        raise NotIntegral(f"{_fmt(lam)} is not integral for {rs.label}")


def weyl_dimension(rs: RootSystem, form: BilinearForm, lam: Weight) -> int:
    """prod (lam + rho, a) / prod (rho, a) over the positive roots."""
    _require_highest_weight(rs, form, lam)
    geo = geometry(rs)
    shifted = _add(lam, geo.rho)
    numerator = prod((_dot(shifted, d) for d in geo.positive_duals), start=Fraction(1))
    denominator = prod((_dot(geo.rho, d) for d in geo.positive_duals), start=Fraction(1))
    dim = numerator / denominator
    assert dim.denominator == 1 and dim > 0, f"Weyl dimension {dim} is not a positive integer"
    return int(dim)


class _Labels:
    """Dynkin-label arithmetic for one root system.

    Inner products are scaled by a common denominator so the Freudenthal
    recursion runs on plain ints.
    """

    def __init__(self, rs: RootSystem):
        geo = geometry(rs)
        self.geo = geo
        self.rank = len(geo.simple)
        self.omegas = fundamental_weights(rs)
        self.cartan = tuple(tuple(int(geo.pair_simple(a, j)) for j in range(self.rank)) for a in geo.simple)
        self.positive = tuple(tuple(int(geo.pair_simple(a, j)) for j in range(self.rank)) for a in geo.positive)
        gram = [[inner(rs.form, a, b) for b in self.omegas] for a in self.omegas]
        pairs = [[inner(rs.form, w, a) for w in self.omegas] for a in geo.positive]
        scale = lcm(*(x.denominator for row in gram + pairs for x in row))
        self.gram = tuple(tuple(int(x * scale) for x in row) for row in gram)
        self.pairs = tuple(tuple(int(x * scale) for x in row) for row in pairs)

    def of(self, w: Weight) -> tuple[int, ...]:
        return tuple(int(self.geo.pair_simple(w, i)) for i in range(self.rank))

    def to_ambient(self, base: Weight, base_labels: tuple[int, ...], labels: tuple[int, ...]) -> Weight:
        """The weight with ``labels`` that differs from ``base`` by a root-span vector."""
        shift = [(n - t, w) for n, t, w in zip(labels, base_labels, self.omegas) if n != t]
        return tuple(x + sum((d * w[k] for d, w in shift), Fraction(0)) for k, x in enumerate(base))

    def shifted_norm(self, x: tuple[int, ...]) -> int:
        """Scaled (x + rho, x + rho) on the root span."""
        y = [v + 1 for v in x]
        return sum(a * sum(g * b for g, b in zip(row, y)) for a, row in zip(y, self.gram))

    def pair(self, x: tuple[int, ...], j: int) -> int:
        """Scaled (x, alpha_j) for the j-th positive root."""
        return sum(a * b for a, b in zip(x, self.pairs[j]))

    def dominant(self, x: tuple[int, ...]) -> tuple[int, ...]:
        while True:
            for i, li in enumerate(x):
                if li < 0:
                    x = tuple(v - li * c for v, c in zip(x, self.cartan[i]))
                    break
            else:
                return x


@lru_cache(maxsize=256)
def _labels(rs: RootSystem) -> _Labels:
    return _Labels(rs)


@lru_cache(maxsize=1024)
def _freudenthal(rs: RootSystem, top: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Freudenthal recursion on the dominant weights of V_top, in Dynkin labels, highest first."""
    lab = _labels(rs)
    found = {top}
    frontier = [top]
    while frontier:
        fresh = []
        for nu in frontier:
            for alpha in lab.positive:
                mu = tuple(x - a for x, a in zip(nu, alpha))
                if mu not in found and min(mu) >= 0:
                    found.add(mu)
                    fresh.append(mu)
        frontier = fresh

    norms = {nu: lab.shifted_norm(nu) for nu in found}
    # dominant mu > nu implies |mu + rho| > |nu + rho|, so this order visits higher weights first
    ordered = sorted(found, key=lambda nu: (-norms[nu], nu))
    top_norm = norms[top]
    mult = {top: 1}
    seen: dict[tuple[int, ...], int] = {}
    # tails[j, x] = sum over k >= 1 of m(x + k alpha_j) (x + k alpha_j, alpha_j)
    tails: dict[tuple[int, tuple[int, ...]], int] = {}

    def multiplicity(x):
        m = seen.get(x)
        if m is None:
            m = seen[x] = mult.get(lab.dominant(x), 0)
        return m

    def tail(j, x):
        alpha = lab.positive[j]
        path = []
        y = x
        while (j, y) not in tails:
            z = tuple(a + b for a, b in zip(y, alpha))
            m = multiplicity(z)
            if not m:
                tails[j, y] = 0
                break
            path.append((y, m * lab.pair(z, j)))
            y = z
        acc = tails[j, y]
        for y, term in reversed(path):
            acc += term
            tails[j, y] = acc
        return tails[j, x]

    for nu in ordered[1:]:
        total = sum(tail(j, nu) for j in range(len(lab.positive)))
        value, rest = divmod(2 * total, top_norm - norms[nu])
        assert rest == 0, f"non-integral multiplicity at labels {nu}"
        mult[nu] = value
    return tuple((nu, mult[nu]) for nu in ordered)


@lru_cache(maxsize=4096)
def _dominant_multiplicities(rs: RootSystem, lam: Weight) -> tuple[tuple[Weight, int], ...]:
    """Dominant weights of V_lam with their multiplicities, highest first."""
    if rs.is_torus:
        return ((lam, 1),)
    lab = _labels(rs)
    top = lab.of(lam)
    result = tuple((lab.to_ambient(lam, top, nu), m) for nu, m in _freudenthal(rs, top))
    logger.debug("Freudenthal for %s on %s: %d dominant weights", _fmt(lam), rs.label, len(result))
    return result


def dominant_character(rs: RootSystem, form: BilinearForm, lam: Weight) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of V_lam."""
    _require_highest_weight(rs, form, lam)
    return dict(_dominant_multiplicities(rs, lam))


def character_mass(rs: RootSystem, form: BilinearForm, lam: Weight) -> int:
    """sum of m(nu) |W nu| over the dominant weights nu of V_lam.

    Counts the weights of the full character without expanding any orbit.
    """
    _require_highest_weight(rs, form, lam)
    if rs.is_torus:
        return 1
    lab = _labels(rs)
    order = len(weyl_group(rs))
    total = 0
    for nu, m in _freudenthal(rs, lab.of(lam)):
        wall = frozenset(i for i, x in enumerate(nu) if x == 0)
        total += m * (order // parabolic_order(rs, wall))
    return total


def character(rs: RootSystem, form: BilinearForm, lam: Weight) -> VirtualCharacter:
    """Full weight multiplicity map of the irreducible representation V_lam."""
    _require_highest_weight(rs, form, lam)
    terms = {}
    for nu, m in _dominant_multiplicities(rs, lam):
        for w in weyl_orbit(rs, nu):
            terms[w] = m
    return VirtualCharacter(terms)


def multiply(a: VirtualCharacter, b: VirtualCharacter) -> VirtualCharacter:
    """Character of a tensor product: convolution of the weight maps."""
    if a.ambient_dim is not None and b.ambient_dim is not None and a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"characters on {a.ambient_dim}- and {b.ambient_dim}-dimensional spaces")
    out = defaultdict(int)
    for w1, m1 in a.items():
        for w2, m2 in b.items():
            out[_add(w1, w2)] += m1 * m2
    return VirtualCharacter(out)


def decompose(rs: RootSystem, form: BilinearForm, chi: VirtualCharacter) -> list[tuple[IrrepLabel, int]]:
    """Expand a W-invariant virtual character in irreducible characters.

    Peels the dominant weight with the largest |nu + rho| (ties: lexicographically
    largest) until nothing is left.
    """
    geo = geometry(rs)
    for w, m in chi.items():
        _check_dim(form, w)
        for i in range(len(geo.simple)):
            if chi[geo.reflect_simple(w, i)] != m:
                raise NotWInvariant(f"character is not invariant under W({rs.label}) at {_fmt(w)}")

    rho = geo.rho

    def key(w):
        return (-geo.norm(_add(w, rho)), tuple(-x for x in w), w)

    remainder = defaultdict(int, chi.terms)
    heap = [key(w) for w in remainder if geo.is_dominant(w)]
    heapq.heapify(heap)
    queued = {entry[2] for entry in heap}
    result = []
    while heap:
        top = heapq.heappop(heap)[2]
        coeff = remainder.get(top, 0)
        if not coeff:
            continue
        if not geo.is_integral(top):
            raise NonIntegralPeel(f"dominant weight {_fmt(top)} is not integral for {rs.label}")
        for nu, m in _dominant_multiplicities(rs, top):
            for w in weyl_orbit(rs, nu):
                remainder[w] -= coeff * m
            if nu not in queued:
                queued.add(nu)
                heapq.heappush(heap, key(nu))
        result.append((IrrepLabel(highest_weight=top, system=rs), coeff))

    if any(remainder.values()):
        raise NonIntegralPeel("remainder does not vanish after peeling every dominant weight")
    return result


def reconstruct(rs: RootSystem, form: BilinearForm, terms: list[tuple[IrrepLabel, int]]) -> VirtualCharacter:
    """Sum of mult * character over a decomposition."""
    total = VirtualCharacter()
    for label, mult in terms:
        total = total + character(rs, form, label.highest_weight).scaled(mult)
    return total


def casimir(rs: RootSystem, form: BilinearForm, lam: Weight) -> Fraction:
    """Quadratic Casimir eigenvalue (lam + rho, lam + rho) - (rho, rho)."""
    _require_highest_weight(rs, form, lam, integral=False)
    rho = geometry(rs).rho
    shifted = _add(lam, rho)
    return inner(form, shifted, shifted) - inner(form, rho, rho)


def alternating_sum(group: WeylGroup, x: Weight) -> VirtualCharacter:
    """sum over w of sign(w) e^{w x}."""
    out = defaultdict(int)
    for w in group.elements:
        out[w.apply(x)] += w.length_parity_sign
    return VirtualCharacter(out)


def dominant_weights_up_to_dimension(rs: RootSystem, form: BilinearForm, bound: int) -> list[Weight]:
    """Dominant integral weights with dim V_lam <= bound, ordered by dimension then coordinates."""
    omegas = fundamental_weights(rs)
    zero = tuple(Fraction(0) for _ in range(rs.ambient_dim))
    if bound < 1:
        return []
    found = {zero: 1}
    frontier = [zero]
    while frontier:
        fresh = []
        for lam in frontier:
            for omega in omegas:
                nxt = _add(lam, omega)
                if nxt in found:
                    continue
                dim = weyl_dimension(rs, form, nxt)
                if dim <= bound:
                    found[nxt] = dim
                    fresh.append(nxt)
        frontier = fresh
    return sorted(found, key=lambda lam: (found[lam], lam))
