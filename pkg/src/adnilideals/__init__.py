"""Combinatorics of ideals in positive root systems (types A, B, G2):
minimal affine Weyl group elements, sign types, single moves and their
left-equivalence classes, left star operations, and generic Jordan types.
"""

from .affine import (
    AffineWeylElement,
    act,
    compose,
    first_layer_ideal,
    from_word,
    generators_via_affine,
    interior_point_image,
    inversion_set,
    is_dominant,
    is_minimal,
    left_descents,
    length,
    minimal_element,
    normalizer_via_affine,
    star_left,
)
from .equiv import (
    EquivalenceClasses,
    Move,
    VerificationError,
    classes_refine_orbit_fibers,
    left_equivalence_classes,
    pl_closure,
    single_moves,
    star_class_compatibility,
    star_witness_for_move,
)
from .ideals import (
    Ideal,
    bracket,
    enumerate_ideals,
    generators,
    ideal_from_generators,
    normalizer_simple_roots,
    power,
)
from .orbits import (
    MatrixPattern,
    OracleError,
    generic_jordan_type,
    ideal_from_partition,
    matrix_realization,
)
from .rootsys import Root, RootSystem, build_root_system, inner_product, reflect
from .signtypes import (
    SignType,
    is_dominant_sign_type,
    sign_type_of_element,
    sign_type_of_ideal,
)
from .typea import (
    AffinePermutation,
    chain_order,
    format_partition,
    from_element,
    green_partition,
    perm_from_word,
    to_element,
)

__version__ = "0.1.0"
