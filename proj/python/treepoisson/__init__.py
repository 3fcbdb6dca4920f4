"""Poisson transforms on truncated trees of bounded degree.

Thin re-export of the pybind11 core module: trees, boundary measures,
the transform P_z and its inverse boundary-value map, limit recovery,
and Hoelder/growth diagnostics.
"""

from ._core import (
    BoundaryMeasure,
    ClopenSet,
    CylinderFunction,
    DomainError,
    EdgeCoefficients,
    EigenCharacterization,
    GrowthCrossReport,
    GrowthEnvelope,
    MuWSequence,
    NumericRegimeError,
    SectionMap,
    Tree,
    VertexFunction,
    beta,
    boundary_distance,
    chain_formula_residual,
    check_eigen_characterization,
    eigen_residual,
    max_relative_eigen_residual,
    envelope_holds_function,
    envelope_holds_measure,
    function_growth_envelope,
    hoelder_norm,
    laplacian,
    limit_recover_clopen,
    limit_recover_vertex,
    lipschitz_seminorm,
    measure_growth_envelope,
    mod_growth_crosscheck,
    mu_w_extension,
    poisson_transform,
    potential,
    read_measure_file,
    read_tree_file,
    read_vertex_function_file,
    reconstruct_function,
    roundtrip_measure,
    write_measure_file,
    write_tree_file,
    write_vertex_function_file,
)

__all__ = [
    "BoundaryMeasure",
    "ClopenSet",
    "CylinderFunction",
    "DomainError",
    "EdgeCoefficients",
    "EigenCharacterization",
    "GrowthCrossReport",
    "GrowthEnvelope",
    "MuWSequence",
    "NumericRegimeError",
    "SectionMap",
    "Tree",
    "VertexFunction",
    "beta",
    "boundary_distance",
    "chain_formula_residual",
    "check_eigen_characterization",
    "eigen_residual",
    "max_relative_eigen_residual",
    "envelope_holds_function",
    "envelope_holds_measure",
    "function_growth_envelope",
    "hoelder_norm",
    "laplacian",
    "limit_recover_clopen",
    "limit_recover_vertex",
    "lipschitz_seminorm",
    "measure_growth_envelope",
    "mod_growth_crosscheck",
    "mu_w_extension",
    "poisson_transform",
    "potential",
    "read_measure_file",
    "read_tree_file",
    "read_vertex_function_file",
    "reconstruct_function",
    "roundtrip_measure",
    "write_measure_file",
    "write_tree_file",
    "write_vertex_function_file",
]

__version__ = "0.1.0"
