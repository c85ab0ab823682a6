"""Exact integer linear algebra over finitely generated abelian groups."""

from .groups import (
    AbGroup,
    AbHom,
    Canonicalization,
    GroupDecomposition,
    LatticePresentation,
    SubgroupPresentation,
    add,
    block_sum,
    canonical_form,
    cokernel,
    cokernel_group,
    compose,
    direct_sum,
    groups_isomorphic,
    identity,
    image_group,
    is_isomorphism,
    kernel_basis,
    kernel_group,
    multiplication,
    present_kernel,
    present_quotient,
    present_subgroup,
    raw_relations,
    reduce_vector,
    relation_columns,
    same_group,
    scalar_mul,
    subgroup_quotient,
    subquotient,
    zero_hom,
)
from .matrix import IntMatrix, Vector
from .snf import (
    SmithDecomposition,
    integer_kernel,
    invariant_factors,
    smith_decompose,
    smith_normal_form,
)

__all__ = [
    "AbGroup",
    "AbHom",
    "Canonicalization",
    "GroupDecomposition",
    "IntMatrix",
    "LatticePresentation",
    "SmithDecomposition",
    "SubgroupPresentation",
    "Vector",
    "add",
    "block_sum",
    "canonical_form",
    "cokernel",
    "cokernel_group",
    "compose",
    "direct_sum",
    "groups_isomorphic",
    "identity",
    "image_group",
    "integer_kernel",
    "invariant_factors",
    "is_isomorphism",
    "kernel_basis",
    "kernel_group",
    "multiplication",
    "present_kernel",
    "present_quotient",
    "present_subgroup",
    "raw_relations",
    "reduce_vector",
    "relation_columns",
    "same_group",
    "scalar_mul",
    "smith_decompose",
    "smith_normal_form",
    "subgroup_quotient",
    "subquotient",
    "zero_hom",
]
