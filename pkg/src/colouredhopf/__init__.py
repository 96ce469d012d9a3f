"""Coloured Hopf-superalgebra engine for the two-parameter quantum
superalgebra of gl(1/1), with symbolic and matrix-level verification."""

from .coefficients import (
    Colour,
    ParamPoint,
    SingularParameterError,
    colour_norm,
    cpow,
    sample_params,
)
from .colour_group import (
    ColourMap,
    GroupLawReport,
    check_group_laws,
    colour_map,
    sigma,
    sigma_inverse,
    sigma_pair,
)
from .coloured_hopf import (
    ColouredMapContext,
    antipode,
    coproduct,
    counit,
    default_probes,
    verify_antipode_axiom,
    verify_bialgebra,
    verify_coassociativity,
    verify_colour_transformations,
    verify_counit_axiom,
    verify_relation_preservation,
)
from .pbw_algebra import (
    AlgebraElement,
    Home,
    PBWMonomial,
    TensorElement,
    equal_upto_tol,
    generators,
    graded_twist,
    grading_automorphism,
    h_gen,
    multiply,
    psi_minus,
    psi_plus,
    residual_between,
    tensor_multiply,
    unit,
    z_gen,
)
from .representation import (
    GradedMatrix,
    RFactorisation,
    check_coloured_graded_ybe,
    check_hexagons,
    check_intertwiner,
    check_r_inverse,
    coloured_R_closed_form,
    coloured_R_from_universal,
    crossval_residual,
    embed,
    r_factorisation,
    rep,
    rep_tensor,
)

__all__ = [
    "AlgebraElement",
    "Colour",
    "ColourMap",
    "ColouredMapContext",
    "GradedMatrix",
    "GroupLawReport",
    "Home",
    "PBWMonomial",
    "ParamPoint",
    "RFactorisation",
    "SingularParameterError",
    "TensorElement",
    "antipode",
    "check_coloured_graded_ybe",
    "check_group_laws",
    "check_hexagons",
    "check_intertwiner",
    "check_r_inverse",
    "coloured_R_closed_form",
    "coloured_R_from_universal",
    "colour_map",
    "colour_norm",
    "coproduct",
    "counit",
    "cpow",
    "crossval_residual",
    "default_probes",
    "embed",
    "equal_upto_tol",
    "generators",
    "graded_twist",
    "grading_automorphism",
    "h_gen",
    "multiply",
    "psi_minus",
    "psi_plus",
    "r_factorisation",
    "rep",
    "rep_tensor",
    "residual_between",
    "sample_params",
    "sigma",
    "sigma_inverse",
    "sigma_pair",
    "tensor_multiply",
    "unit",
    "verify_antipode_axiom",
    "verify_bialgebra",
    "verify_coassociativity",
    "verify_colour_transformations",
    "verify_counit_axiom",
    "verify_relation_preservation",
    "z_gen",
]

__version__ = "0.1.0"
