"""pgext: presentations and extensions of finite abelian p-groups.

Exact integer linear algebra (Smith normal form with transforms), group
types as partitions, extension data with block presentation matrices, the
matrix criterion for equivalence of extensions, and an independent
brute-force diagram oracle, all at desk scale.
"""

from .abelian import (
    DEFAULT_MAX_ORDER,
    ExplicitGroup,
    PGroupType,
    cokernel_group,
    is_prime,
    module_action,
    primary_decompose,
    subgroup_generated,
)
from .autgroup import (
    DEFAULT_MAX_CANDIDATES,
    AutMatrix,
    aut_matrices,
    aut_search_space,
    conjugate_by_p_powers,
    enumerate_auts,
    is_valid_aut,
)
from .equivalence import (
    DEFAULT_MAX_TOTAL,
    DEFAULT_MAX_WITNESSES,
    OrbitClassification,
    Witness,
    apply_witness,
    are_equivalent,
    canonical_form,
    check_witness,
    classify_all,
)
from .errors import BoundExceededError, PgextError, ValidationError
from .exactmat import IntMatrix, SNFResult, p_valuation, snf
from .extension import (
    ExtensionData,
    change_lift,
    iter_normalized_extensions,
    middle_type,
    modulus_matrix,
    normalize,
    presentation_matrix,
    validate,
)
from .oracle import ExplicitExtension, diagram_equivalent, realize_extension

__version__ = "0.1.0"

__all__ = [
    "AutMatrix",
    "BoundExceededError",
    "DEFAULT_MAX_CANDIDATES",
    "DEFAULT_MAX_ORDER",
    "DEFAULT_MAX_TOTAL",
    "DEFAULT_MAX_WITNESSES",
    "ExplicitExtension",
    "ExplicitGroup",
    "ExtensionData",
    "IntMatrix",
    "OrbitClassification",
    "PGroupType",
    "PgextError",
    "SNFResult",
    "ValidationError",
    "Witness",
    "apply_witness",
    "are_equivalent",
    "aut_matrices",
    "aut_search_space",
    "canonical_form",
    "change_lift",
    "check_witness",
    "classify_all",
    "cokernel_group",
    "conjugate_by_p_powers",
    "diagram_equivalent",
    "enumerate_auts",
    "is_prime",
    "is_valid_aut",
    "iter_normalized_extensions",
    "middle_type",
    "module_action",
    "modulus_matrix",
    "normalize",
    "p_valuation",
    "presentation_matrix",
    "primary_decompose",
    "realize_extension",
    "snf",
    "subgroup_generated",
    "validate",
]
