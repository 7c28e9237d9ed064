"""Weyl groups as exact matrices, dominance tests and the multiplet transversal."""

import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Optional

from model import BilinearForm, RootSystem, Weight, WeylElement, WeylGroup
from . import config
from .errors import DimensionMismatch, GroupTooLarge, NotASubsystem, ZeroRoot
from .linalg import identity
from .rootsys import geometry, inner, sub_root_system

logger = logging.getLogger(__name__)


def reflect(form: BilinearForm, root: Weight, w: Weight) -> Weight:
    """w - 2 (w, root) / (root, root) * root."""
    norm = inner(form, root, root)
    if norm == 0:
        raise ZeroRoot("cannot reflect in the zero vector")
    coeff = 2 * inner(form, w, root) / norm
    return tuple(x - coeff * a for x, a in zip(w, root))


def weyl_order(rs: RootSystem) -> Optional[int]:
    """Closed-form |W| for a named series; None for extracted subsystems."""
    n = rs.rank
    if rs.series == "A":
        return factorial(n + 1)
    if rs.series in ("B", "C"):
        return 2**n * factorial(n)
    if rs.series == "D":
        return 2 ** (n - 1) * factorial(n)
    if rs.series == "G2":
        return 12
    return None


def _left_reflect(alpha: Weight, dual: Weight, matrix) -> tuple:
    """s_alpha o matrix, touching only the rows where alpha is nonzero."""
    nonzero = [k for k, d in enumerate(dual) if d]
    size = len(matrix)
    row = [sum((dual[k] * matrix[k][j] for k in nonzero), Fraction(0)) for j in range(size)]
    rows = list(matrix)
    for i, a in enumerate(alpha):
        if a:
            rows[i] = tuple(m - a * r for m, r in zip(rows[i], row))
    return tuple(rows)


def _simple_reflections(rs: RootSystem) -> list[WeylElement]:
    geo = geometry(rs)
    ident = identity(rs.ambient_dim)
    return [
        WeylElement.model_construct(matrix=_left_reflect(alpha, dual, ident), length_parity_sign=-1)
        for alpha, dual in zip(geo.simple, geo.simple_coroot_duals)
    ]


def enumerate_weyl(rs: RootSystem, limit: Optional[int] = None) -> WeylGroup:
    """Breadth-first closure of the simple reflections.

    Elements come out by word length, each length layer sorted by matrix entries; the
    sign of an element is (-1)^length.
    """
    limit = config.weyl_limit() if limit is None else limit
    expected = weyl_order(rs)
    if expected is not None and expected > limit:
        raise GroupTooLarge(f"|W({rs.label})| = {expected} exceeds the enumeration limit {limit}")

    geo = geometry(rs)
    ident = WeylElement.model_construct(matrix=identity(rs.ambient_dim), length_parity_sign=1)
    generators = _simple_reflections(rs)
    seen = {ident.matrix}
    elements = [ident]
    layer = [ident]
    sign = 1
    while layer:
        sign = -sign
        fresh = set()
        for w in layer:
            for alpha, dual in zip(geo.simple, geo.simple_coroot_duals):
                m = _left_reflect(alpha, dual, w.matrix)
                if m not in seen:
                    fresh.add(m)
        seen.update(fresh)
        layer = [WeylElement.model_construct(matrix=m, length_parity_sign=sign) for m in sorted(fresh)]
        elements.extend(layer)
        if len(elements) > limit:
            raise GroupTooLarge(f"W({rs.label}) has more than {limit} elements")

    logger.debug("enumerated W(%s): %d elements", rs.label, len(elements))
    return WeylGroup(system_label=rs.label, generators=tuple(generators), elements=tuple(elements))


def _check_dim(form: BilinearForm, w: Weight) -> None:
    if len(w) != form.dim:
        raise DimensionMismatch(f"weight of length {len(w)} on a {form.dim}-dimensional space")


def is_dominant(rs: RootSystem, form: BilinearForm, w: Weight, strict: bool = False) -> bool:
    """(w, a) >= 0 for every positive root a (> 0 when strict); always true for a torus."""
    _check_dim(form, w)
    return geometry(rs).is_dominant(w, strict)


def to_dominant(group: WeylGroup, rs: RootSystem, form: BilinearForm, w: Weight) -> tuple[WeylElement, Weight]:
    """(u, u w) with u w weakly dominant, found by reflecting through violated simple roots."""
    _check_dim(form, w)
    geo = geometry(rs)
    x = w
    matrix = identity(rs.ambient_dim)
    steps = 0
    while True:
        for i, dual in enumerate(geo.simple_coroot_duals):
            if geo.pair_simple(x, i) < 0:
                x = geo.reflect_simple(x, i)
                matrix = _left_reflect(geo.simple[i], dual, matrix)
                steps += 1
                break
        else:
            break
    element = group.find(matrix)
    if element is None:
        element = WeylElement.model_construct(matrix=matrix, length_parity_sign=(-1) ** steps)
    return element, x


def coset_transversal(g_sys: RootSystem, eta_sys: RootSystem, form: BilinearForm, group: WeylGroup) -> list[WeylElement]:
    """Elements c of W_g with c(rho_g) strictly dominant for eta, in group order."""
    g_roots = set(g_sys.roots)
    if eta_sys.ambient_dim != g_sys.ambient_dim or any(a not in g_roots for a in eta_sys.positive_roots):
        raise NotASubsystem(f"{eta_sys.label} is not a subsystem of {g_sys.label}")
    rho_g = geometry(g_sys).rho
    _check_dim(form, rho_g)
    eta_geo = geometry(eta_sys)
    chosen = [c for c in group.elements if eta_geo.is_dominant(c.apply(rho_g), strict=True)]
    logger.debug("transversal %s/%s: %d elements", g_sys.label, eta_sys.label, len(chosen))
    return chosen


@lru_cache(maxsize=65536)
def weyl_orbit(rs: RootSystem, w: Weight) -> tuple[Weight, ...]:
    """The W-orbit of a weight, generated by simple reflections, sorted."""
    geo = geometry(rs)
    orbit = {w}
    frontier = [w]
    while frontier:
        fresh = []
        for x in frontier:
            for i in range(len(geo.simple)):
                y = geo.reflect_simple(x, i)
                if y not in orbit:
                    orbit.add(y)
                    fresh.append(y)
        frontier = fresh
    return tuple(sorted(orbit))


@lru_cache(maxsize=64)
def _memo_group(rs: RootSystem, limit: int) -> WeylGroup:
    return enumerate_weyl(rs, limit)


def weyl_group(rs: RootSystem, limit: Optional[int] = None) -> WeylGroup:
    """Memoized ``enumerate_weyl``."""
    return _memo_group(rs, config.weyl_limit() if limit is None else limit)


@lru_cache(maxsize=1024)
def parabolic_order(rs: RootSystem, wall: frozenset[int]) -> int:
    """Order of the subgroup generated by the simple reflections indexed by ``wall``."""
    if not wall:
        return 1
    sub = sub_root_system(rs, [rs.simple_roots[i] for i in sorted(wall)])
    return len(weyl_group(sub))


def orbit_size(rs: RootSystem, w: Weight) -> int:
    """|W w|, as |W| over the stabilizer of the dominant conjugate."""
    geo = geometry(rs)
    dominant, _ = geo.dominant_conjugate(w)
    wall = frozenset(i for i in range(len(geo.simple)) if geo.pair_simple(dominant, i) == 0)
    return len(weyl_group(rs)) // parabolic_order(rs, wall)
