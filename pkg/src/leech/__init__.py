"""Modules over the factorization category of a cyclic monoid."""

from .constructors import (
    constant_Z,
    direct_sum_modules,
    dual_module,
    free_basis,
    free_module,
    from_ordinary,
    trivial_module,
)
from .module import (
    LeechModule,
    act,
    homs_equal,
    is_morphism,
    is_symmetric,
    module_from_matrices,
    pull,
    push,
    validate,
)
from .random_modules import RandomModuleBounds, random_module, random_ordinary_module

__all__ = [
    "LeechModule",
    "RandomModuleBounds",
    "act",
    "constant_Z",
    "direct_sum_modules",
    "dual_module",
    "free_basis",
    "free_module",
    "from_ordinary",
    "homs_equal",
    "is_morphism",
    "is_symmetric",
    "module_from_matrices",
    "pull",
    "push",
    "random_module",
    "random_ordinary_module",
    "trivial_module",
    "validate",
]
