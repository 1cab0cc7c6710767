"""Finite, exact laboratory for multiplicative patterns in return-time sets."""

from .natset import (
    ABS_BOUND,
    BoundError,
    CosetSpec,
    NatSet,
    PeriodicSet,
    SetFormatError,
    Window,
    emit_set_text,
    from_periodic,
    parse_set_file,
    parse_set_text,
    quotient,
    translate,
    write_set_file,
)
from .density import decide_thick_dilation, density_profile, gap_syndeticity, pigeonhole_select
from .patterns import ap_search, find_geo_arith, find_gp, gp_via_density
from .ipcalc import FsSpec, contains_ip_r, covering_translates, fs_expand, is_ip_r_star_window, rank_minimizing_N
from .dynsim import (
    Arcs,
    Box,
    FiniteRotation,
    Product,
    SkewProduct,
    TorusRotation,
    diagonal_orbit,
    eps_dense_coprime_check,
    kronecker_components,
    return_set,
    return_times,
    thickness_equivalence_check,
    total_visibility,
    translate_quotient_syndetic_check,
)
from .transfer import TranslateWitness, iprstar_bound_check, solve_translate_witness, verify_density_transfer
from .construct import build_example_8_2, build_example_8_4, poly_diophantine_set

__version__ = "0.1.0"

__all__ = [
    "ABS_BOUND",
    "BoundError",
    "CosetSpec",
    "NatSet",
    "PeriodicSet",
    "SetFormatError",
    "Window",
    "emit_set_text",
    "from_periodic",
    "parse_set_file",
    "parse_set_text",
    "quotient",
    "translate",
    "write_set_file",
    "decide_thick_dilation",
    "density_profile",
    "gap_syndeticity",
    "pigeonhole_select",
    "ap_search",
    "find_geo_arith",
    "find_gp",
    "gp_via_density",
    "FsSpec",
    "contains_ip_r",
    "covering_translates",
    "fs_expand",
    "is_ip_r_star_window",
    "rank_minimizing_N",
    "Arcs",
    "Box",
    "FiniteRotation",
    "Product",
    "SkewProduct",
    "TorusRotation",
    "diagonal_orbit",
    "eps_dense_coprime_check",
    "kronecker_components",
    "return_set",
    "return_times",
    "thickness_equivalence_check",
    "total_visibility",
    "translate_quotient_syndetic_check",
    "TranslateWitness",
    "iprstar_bound_check",
    "solve_translate_witness",
    "verify_density_transfer",
    "build_example_8_2",
    "build_example_8_4",
    "poly_diophantine_set",
]
