from .rootsys import (
    build_root_system,
    check_series,
    coroot_pairing,
    fundamental_weights,
    inner,
    simple_coefficients,
    standard_form,
    sub_root_system,
    weyl_vector,
)
from .weyl import (
    coset_transversal,
    enumerate_weyl,
    is_dominant,
    orbit_size,
    parabolic_order,
    reflect,
    to_dominant,
    weyl_group,
    weyl_orbit,
)
from .reps import casimir, character, character_mass, decompose, multiply, weyl_dimension
from .homspace import (
    branching_multiplicity,
    eigenvalue,
    iter_spectrum,
    kostant_lowest,
    landau_levels,
    make_pair,
    spectrum,
    spin_dimension,
    spin_modules,
)
from .gkrs import dimension_shadow, dotted_action, gkrs_check, sweep, transversal

__all__ = [
    "build_root_system", "check_series", "coroot_pairing", "fundamental_weights", "inner", "simple_coefficients",
    "standard_form", "sub_root_system", "weyl_vector",
    "coset_transversal", "enumerate_weyl", "is_dominant", "orbit_size", "parabolic_order", "reflect", "to_dominant",
    "weyl_group", "weyl_orbit",
    "casimir", "character", "character_mass", "decompose", "multiply", "weyl_dimension",
    "branching_multiplicity", "eigenvalue", "iter_spectrum", "kostant_lowest", "landau_levels",
    "make_pair", "spectrum", "spin_dimension", "spin_modules",
    "dimension_shadow", "dotted_action", "gkrs_check", "sweep", "transversal",
]
