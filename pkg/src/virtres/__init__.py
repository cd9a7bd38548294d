"""Exact multigraded commutative algebra over products of projective spaces
and custom toric Cox rings: Groebner bases over F_p, minimal free and virtual
resolutions, sheaf and local cohomology, and punctual (points) constructions.
"""

from .ring import Multidegree, Polynomial, RingSpec, vadd, vleq, vsub
from .groebner import (
    FreeModule,
    ModuleElement,
    groebner_basis,
    minimal_generators,
    normal_form,
    syzygy_module,
)
from .ideals import (
    QuotientModule,
    Submodule,
    Subquotient,
    b_saturate,
    codim,
    hilbert_function,
    ideal,
    intersect,
    irrelevant_power,
    is_b_torsion,
    quotient,
    saturate,
    saturate_by_ideal,
    truncate,
)
from .complexes import (
    BettiTable,
    FreeComplex,
    free_resolution,
    is_virtual,
    koszul_pair_complex,
    minimalize,
    tensor_complex,
    virtual_of_pair,
    winnow,
)
from .cohomology import (
    BeilinsonShape,
    CohomologyProfile,
    RegularityReport,
    beilinson_shape,
    check_linear_truncation,
    delta_set,
    euler_char_line,
    line_bundle_cohomology,
    local_cohomology_dim,
    local_cohomology_dim_fast,
    regularity_check,
    sheaf_cohomology_exact,
    sheaf_euler_char,
)
from .punctual import (
    HilbertBurchCertificate,
    PointConfig,
    hilbert_burch,
    intersect_with_irrelevant_power,
    koszul_pair_for_points,
    point_ideal,
    points_ideal,
    random_points,
    search_short_resolution_exponent,
)

__version__ = "0.1.0"

__all__ = [
    "Multidegree",
    "Polynomial",
    "RingSpec",
    "vadd",
    "vleq",
    "vsub",
    "FreeModule",
    "ModuleElement",
    "groebner_basis",
    "minimal_generators",
    "normal_form",
    "syzygy_module",
    "QuotientModule",
    "Submodule",
    "Subquotient",
    "b_saturate",
    "codim",
    "is_b_torsion",
    "quotient",
    "hilbert_function",
    "ideal",
    "intersect",
    "irrelevant_power",
    "saturate",
    "saturate_by_ideal",
    "truncate",
    "BettiTable",
    "FreeComplex",
    "free_resolution",
    "is_virtual",
    "koszul_pair_complex",
    "minimalize",
    "tensor_complex",
    "virtual_of_pair",
    "winnow",
    "BeilinsonShape",
    "CohomologyProfile",
    "RegularityReport",
    "beilinson_shape",
    "check_linear_truncation",
    "delta_set",
    "euler_char_line",
    "line_bundle_cohomology",
    "local_cohomology_dim",
    "local_cohomology_dim_fast",
    "regularity_check",
    "sheaf_cohomology_exact",
    "sheaf_euler_char",
    "HilbertBurchCertificate",
    "PointConfig",
    "hilbert_burch",
    "intersect_with_irrelevant_power",
    "koszul_pair_for_points",
    "point_ideal",
    "points_ideal",
    "random_points",
    "search_short_resolution_exponent",
]
