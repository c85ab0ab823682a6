"""The trace map T and the difference map S = 1_* - 1^* of a module.

Left module A, element x >= 1:
    T : A(x) -> A(m + (x - 1)),
    T = sum_{t < m+q} t^* (m+q-t-1)_*  -  sum_{s < m} s^* (m-s-1)_*
    S : A(x) -> A(x + 1)

Right module B, element x >= 1:
    T : B(m + (x - 1)) -> B(x), the same double sum read contravariantly
    S : B(x + 1) -> B(x)

When m = 0 the second sum is empty.
"""

from dataclasses import dataclass
from typing import Optional

from .abelian import (
    AbHom,
    GroupDecomposition,
    image_group,
    kernel_group,
    scalar_mul,
    zero_hom,
)
from .leech.module import LeechModule, first_difference, homs_equal, pull, push
from .models import Side, ValidationReport
from .utils.exceptions import XMustBePositiveError


def _require_positive(x: int) -> None:
    if x < 1:
        raise XMustBePositiveError(x)


def trace_target(module: LeechModule, x: int) -> int:
    # m + (x - 1): the element on the far side of T at x
    return module.monoid.add(module.monoid.index, x - 1)


def _double_sum(module: LeechModule, x: int) -> AbHom:
    monoid = module.monoid
    m, n = monoid.index, monoid.order
    far = trace_target(module, x)
    if module.is_left:
        source, target = module.groups[x], module.groups[far]
    else:
        source, target = module.groups[far], module.groups[x]
    total = zero_hom(source, target)
    for upper, sign in ((n, 1), (m, -1)):
        for t in range(upper):
            k = upper - t - 1
            if module.is_left:
                term = pull(module, t, monoid.add(x, k)) @ push(module, k, x)
            else:
                term = pull(module, t, x) @ push(module, k, monoid.add(x, t))
            total = total + scalar_mul(sign, term)
    return total


def trace_left(module: LeechModule, x: int) -> AbHom:
    module.require_side(Side.LEFT)
    _require_positive(x)
    return _double_sum(module, x)


def trace_right(module: LeechModule, x: int) -> AbHom:
    module.require_side(Side.RIGHT)
    _require_positive(x)
    return _double_sum(module, x)


def s_left(module: LeechModule, x: int) -> AbHom:
    module.require_side(Side.LEFT)
    return module.push1[x] - module.pull1[x]


def s_right(module: LeechModule, x: int) -> AbHom:
    module.require_side(Side.RIGHT)
    return module.push1[x] - module.pull1[x]


def trace(module: LeechModule, x: int) -> AbHom:
    return trace_left(module, x) if module.is_left else trace_right(module, x)


def s_map(module: LeechModule, x: int) -> AbHom:
    return s_left(module, x) if module.is_left else s_right(module, x)


def trace_symmetric_form(module: LeechModule, x: int) -> AbHom:
    """(m+q) (m+q-1)_* - m (m-1)_* at x; equals T on symmetric modules."""
    _require_positive(x)
    monoid = module.monoid
    m, n = monoid.index, monoid.order
    result = scalar_mul(n, push(module, n - 1, x))
    if m:
        # left: A(x) -> A(x + m - 1); right: B(x + m - 1) -> B(x)
        result = result - scalar_mul(m, push(module, m - 1, x))
    return result


def lemma_report(module: LeechModule) -> ValidationReport:
    """Commuting squares and semiexactness of S and T, as exact matrix identities.

    Checked over every pair (z, x) with x = z + 1 and x >= 1, and every x >= 1.
    """
    monoid = module.monoid
    report = ValidationReport(name=f"trace lemmas, {module.side.value} module over {monoid}")

    def check_zero(hom: AbHom, label: str, element: int) -> None:
        witness = first_difference(hom, zero_hom(hom.source, hom.target))
        report.record(hom.is_zero(), label, element, "composite is not zero", witness)

    def check_equal(f: AbHom, g: AbHom, label: str, element: int) -> None:
        report.record(
            homs_equal(f, g), label, element, "square does not commute", first_difference(f, g)
        )

    for x in monoid.elements():
        if x < 1:
            continue
        T = trace(module, x)
        far = trace_target(module, x)
        if module.is_left:
            check_zero(s_map(module, far) @ T, "S.T", x)
        else:
            check_zero(T @ s_map(module, far), "T.S", x)
            check_equal(T @ module.push1[far], T @ module.pull1[far], "T.1_* = T.1^*", x)

    for z in monoid.elements():
        x = monoid.add(z, 1)
        if x < 1:
            continue
        T = trace(module, x)
        if module.is_left:
            check_zero(T @ s_map(module, z), "T.S", z)
            check_equal(T @ module.push1[z], T @ module.pull1[z], "T.1_* = T.1^*", z)
        else:
            check_zero(s_map(module, z) @ T, "S.T", z)
        if z < 1:
            continue
        Tz = trace(module, z)
        before = trace_target(module, z)
        for name in ("push1", "pull1"):
            gens = getattr(module, name)
            if module.is_left:
                lhs, rhs = gens[before] @ Tz, T @ gens[z]
            else:
                lhs, rhs = gens[z] @ T, Tz @ gens[before]
            check_equal(lhs, rhs, f"{name} square", z)
    return report


@dataclass(frozen=True)
class SubgroupFamilies:
    """Kernels and images of T and S taken at the element x.

    Kernels sit in the source of each map and images in its target, so for a
    left module kernel_S is A^S(x) inside A(x) and image_S is A_S(x) inside
    A(x + 1). The trace entries are None at x = 0.
    """

    element: int
    kernel_T: Optional[GroupDecomposition]
    image_T: Optional[GroupDecomposition]
    kernel_S: GroupDecomposition
    image_S: GroupDecomposition


def subgroup_families(module: LeechModule, x: int) -> SubgroupFamilies:
    kernel_T = image_T = None
    if x >= 1:
        T = trace(module, x)
        kernel_T, image_T = kernel_group(T), image_group(T)
    S = s_map(module, x)
    return SubgroupFamilies(
        element=x,
        kernel_T=kernel_T,
        image_T=image_T,
        kernel_S=kernel_group(S),
        image_S=image_group(S),
    )
