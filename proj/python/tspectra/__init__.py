"""Exact spectra of the all-transpositions Cayley graph."""

from ._tspectra import (
    apply_recipe,
    arm_leg_decomposition,
    brute_spectrum,
    cayley_adjacency_spectrum,
    conjugate,
    content_sum,
    coverage,
    eigenvalue,
    hook_dimension,
    partition_count,
    partitions,
    recipe_catalog,
    small_value,
    spectrum_with_multiplicity,
    theorem_c_inequalities,
    validate,
    witness,
)

__all__ = [
    "apply_recipe",
    "arm_leg_decomposition",
    "brute_spectrum",
    "cayley_adjacency_spectrum",
    "conjugate",
    "content_sum",
    "coverage",
    "eigenvalue",
    "hook_dimension",
    "partition_count",
    "partitions",
    "recipe_catalog",
    "small_value",
    "spectrum_with_multiplicity",
    "theorem_c_inequalities",
    "validate",
    "witness",
]
