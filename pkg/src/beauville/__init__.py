"""Beauville structures on PGL2(p): triple enumeration, class-algebra
counting and the Galois action on the resulting surfaces."""

from .arith import admissible_params, check_admissible, euler_phi, is_prime, lcm, scan_primes
from .characters import character_table, count_ratio_diagnostic, frobenius_count, structure_constants
from .field import FieldContext, field_context
from .pgl2 import (
    PGL2,
    ClassKey,
    GroupElement,
    class_census,
    class_key,
    classify,
    element_order,
    group,
    in_psl,
    invert,
    make_element,
    multiply,
)
from .surfaces import (
    BeauvilleError,
    build_all_surfaces,
    galois_act_on_orbit,
    galois_orbit_table,
    genus,
    sigma_key_set,
    verify_beauville,
)
from .triples import (
    GeneratingTriple,
    complex_conjugate_triple,
    count_second_triples,
    enumerate_triples_brute,
    enumerate_triples_parametric,
    generates_group,
    orbit_representatives,
)

__version__ = "0.1.0"
