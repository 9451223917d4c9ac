"""The almost-commuting variety: points, normal forms, classifiers and strata."""
from .flags import common_eigenvector, simultaneous_triangularize, spec_map_f
from .points import (
    NormalFormParams,
    Quadruple,
    classify_generic,
    co_cyclic_subspace,
    cyclic_subspace,
    epsilon,
    eval_two_var,
    invariant_trace,
    is_nil_point,
    moment_map,
    normal_form,
    on_variety,
    orbit_jacobian_rank,
    pairing_vanishes,
    phi,
    psi,
    stabilizer_dimension,
    subspace_dims,
)
from .strata import (
    ConormalSpace,
    StratumLabel,
    all_Y_nilpotent,
    centralizer_dimension,
    conormal_space,
    eigen_decomposition,
    is_regular,
    is_relevant,
    jordan_block,
    jordan_block_solve,
    stratum_label,
)

__all__ = [
    "ConormalSpace",
    "NormalFormParams",
    "Quadruple",
    "StratumLabel",
    "all_Y_nilpotent",
    "centralizer_dimension",
    "classify_generic",
    "co_cyclic_subspace",
    "common_eigenvector",
    "conormal_space",
    "cyclic_subspace",
    "eigen_decomposition",
    "epsilon",
    "eval_two_var",
    "invariant_trace",
    "is_nil_point",
    "is_regular",
    "is_relevant",
    "jordan_block",
    "jordan_block_solve",
    "moment_map",
    "normal_form",
    "on_variety",
    "orbit_jacobian_rank",
    "pairing_vanishes",
    "phi",
    "psi",
    "simultaneous_triangularize",
    "spec_map_f",
    "stabilizer_dimension",
    "stratum_label",
    "subspace_dims",
]
