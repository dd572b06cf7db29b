"""Exact-arithmetic exterior squares and multipliers of Lie superalgebras."""

from .catalog import (
    abelian,
    backhouse,
    backhouse_ids,
    heisenberg_odd,
    heisenberg_special,
    thm58,
)
from .hopf import (
    FreeNilpotentSuper,
    NotNilpotentError,
    Presentation,
    free_nilpotent_super,
    hopf_bogomolov,
    hopf_schur,
    presentation,
)
from .linalg import Matrix, Subspace, kernel_basis, quotient_coords, rref, subspace_sum
from .scalars import Q, format_scalar, parse_scalar
from .superlie import (
    EVEN,
    ODD,
    GradedSubspace,
    SuperAlgebra,
    algebra_from_brackets,
    bracket,
    center,
    derived,
    direct_sum,
    is_graded_ideal,
    lower_central_series,
    quotient,
    validate,
)
from .wedge import (
    B0Report,
    M0Witness,
    SaturationConfig,
    WedgeSpace,
    bogomolov,
    cp_check_central_extension,
    curly_square,
    exterior_product,
    m0_saturate,
    schur_multiplier,
    verify_witnesses,
)

__version__ = "0.1.0"
