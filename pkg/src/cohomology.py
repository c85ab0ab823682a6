"""Closed forms for H^n(C_(m,q), A) and H_n(C_(m,q), B).

Left module A, n = 2r+1 or 2r+2:
    H^0      = ker S(0)
    H^{2r+1} = ker T(r.m + 1) / im S(r.m)
    H^{2r+2} = ker S((r+1).m) / im T(r.m + 1)

Right module B:
    H_0      = B(0) / im S(0)
    H_{2r+1} = ker S(r.m) / im T(r.m + 1)
    H_{2r+2} = ker T(r.m + 1) / im S((r+1).m)
"""

from typing import Dict, Iterable, List, Tuple

from .abelian import (
    AbGroup,
    AbHom,
    GroupDecomposition,
    add,
    cokernel_group,
    compose,
    groups_isomorphic,
    identity,
    kernel_group,
    multiplication,
    same_group,
    subquotient,
    zero_hom,
)
from .complexes import (
    compare_complexes,
    comparison_hom,
    comparison_tensor,
    complex_homology,
    hom_complex_fast,
    hom_complex_oracle,
    tensor_complex_fast,
    tensor_complex_oracle,
)
from .leech.constructors import trivial_module
from .leech.module import LeechModule, homs_equal, is_symmetric
from .logging_utils import get_logger
from .models import Side, ValidationReport
from .monoid import CyclicMonoid
from .trace_maps import s_left, s_right, trace_left, trace_right, trace_symmetric_form
from .utils.exceptions import NotOrdinaryError, NotSymmetricError
from .utils.timing import measure_time

logger = get_logger()


def _degree_points(monoid: CyclicMonoid, n: int) -> Tuple[int, int, int]:
    # (r.m, r.m + 1, (r+1).m) for the r of degree n
    r = (n - 1) // 2
    low = monoid.scalar(r, monoid.index)
    return low, monoid.add(low, 1), monoid.scalar(r + 1, monoid.index)


def cohomology(module: LeechModule, n: int) -> GroupDecomposition:
    module.require_side(Side.LEFT)
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    if n == 0:
        return kernel_group(s_left(module, 0))
    low, odd, high = _degree_points(module.monoid, n)
    T = trace_left(module, odd)
    if n % 2:
        return subquotient(T, s_left(module, low))
    return subquotient(s_left(module, high), T)


def homology(module: LeechModule, n: int) -> GroupDecomposition:
    module.require_side(Side.RIGHT)
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    if n == 0:
        return cokernel_group(s_right(module, 0))
    low, odd, high = _degree_points(module.monoid, n)
    T = trace_right(module, odd)
    if n % 2:
        return subquotient(s_right(module, low), T)
    return subquotient(T, s_right(module, high))


def cohomology_table(module: LeechModule, max_degree: int) -> List[GroupDecomposition]:
    with measure_time() as elapsed:
        table = [cohomology(module, n) for n in range(max_degree + 1)]
    logger.info(f"H^0..H^{max_degree} of {module} in {elapsed()} ms")
    return table


def homology_table(module: LeechModule, max_degree: int) -> List[GroupDecomposition]:
    with measure_time() as elapsed:
        table = [homology(module, n) for n in range(max_degree + 1)]
    logger.info(f"H_0..H_{max_degree} of {module} in {elapsed()} ms")
    return table


def table_for(module: LeechModule, max_degree: int) -> List[GroupDecomposition]:
    """Cohomology for a left module, homology for a right one."""
    if module.is_left:
        return cohomology_table(module, max_degree)
    return homology_table(module, max_degree)


def oracle_table(module: LeechModule, max_degree: int) -> List[GroupDecomposition]:
    """Like table_for, read off the Hom or tensor complex of the free resolution."""
    with measure_time() as elapsed:
        if module.is_left:
            oracle = hom_complex_oracle(module, max_degree)
        else:
            oracle = tensor_complex_oracle(module, max_degree)
        table = [complex_homology(oracle, n) for n in range(max_degree + 1)]
    logger.info(f"oracle table to degree {max_degree} of {module} in {elapsed()} ms")
    return table


# Eilenberg-Mac Lane coefficients


def ordinary_action(module: LeechModule) -> AbHom:
    """The action P of a module built by from_ordinary, or NotOrdinaryError."""
    group = module.groups[0]
    if module.is_left:
        acting, trivial = module.push1, module.pull1
    else:
        acting, trivial = module.pull1, module.push1
    if any(not same_group(g, group) for g in module.groups):
        raise NotOrdinaryError("groups differ between elements")
    ident = identity(group)
    if any(not homs_equal(h, ident) for h in trivial):
        side = "1^*" if module.is_left else "1_*"
        raise NotOrdinaryError(f"{side} is not the identity")
    P = acting[0]
    if any(not homs_equal(h, P) for h in acting):
        raise NotOrdinaryError("the action differs between elements")
    return P


def _ordinary_maps(module: LeechModule) -> Tuple[AbHom, AbHom]:
    P = ordinary_action(module)
    monoid = module.monoid
    power = identity(P.source)
    for _ in range(monoid.index):
        power = compose(P, power)
    total = zero_hom(P.source, P.target)
    term = power
    for _ in range(monoid.period):
        total = add(total, term)
        term = compose(P, term)
    # s = P - I on the left, I - P on the right
    s = P - identity(P.source) if module.is_left else identity(P.source) - P
    return s, total


def cohomology_ordinary(module: LeechModule, n: int) -> GroupDecomposition:
    """H^0 = ker(P - I), then ker T / im s and ker s / im T with T = P^m (I + P + ... + P^(q-1))."""
    module.require_side(Side.LEFT)
    s, T = _ordinary_maps(module)
    if n == 0:
        return kernel_group(s)
    return subquotient(T, s) if n % 2 else subquotient(s, T)


def homology_ordinary(module: LeechModule, n: int) -> GroupDecomposition:
    module.require_side(Side.RIGHT)
    s, T = _ordinary_maps(module)
    if n == 0:
        return cokernel_group(s)
    return subquotient(s, T) if n % 2 else subquotient(T, s)


# symmetric coefficients: S = 0


def _require_symmetric(module: LeechModule) -> None:
    if not is_symmetric(module):
        for x in module.monoid.elements():
            if not homs_equal(module.push1[x], module.pull1[x]):
                raise NotSymmetricError(x)


def cohomology_symmetric(module: LeechModule, n: int) -> GroupDecomposition:
    module.require_side(Side.LEFT)
    _require_symmetric(module)
    if n == 0:
        return GroupDecomposition.of(module.groups[0])
    _, odd, _ = _degree_points(module.monoid, n)
    T = trace_symmetric_form(module, odd)
    return kernel_group(T) if n % 2 else cokernel_group(T)


def homology_symmetric(module: LeechModule, n: int) -> GroupDecomposition:
    module.require_side(Side.RIGHT)
    _require_symmetric(module)
    if n == 0:
        return GroupDecomposition.of(module.groups[0])
    _, odd, _ = _degree_points(module.monoid, n)
    T = trace_symmetric_form(module, odd)
    return cokernel_group(T) if n % 2 else kernel_group(T)


# trivial abelian coefficients


def cohomology_trivial(group: AbGroup, period: int, n: int) -> GroupDecomposition:
    """A, then ker(q) in odd and coker(q) in even positive degrees; the index plays no role."""
    group = AbGroup.of(group)
    if n == 0:
        return GroupDecomposition.of(group)
    times_q = multiplication(group, period)
    return kernel_group(times_q) if n % 2 else cokernel_group(times_q)


def homology_trivial(group: AbGroup, period: int, n: int) -> GroupDecomposition:
    group = AbGroup.of(group)
    if n == 0:
        return GroupDecomposition.of(group)
    times_q = multiplication(group, period)
    return cokernel_group(times_q) if n % 2 else kernel_group(times_q)


# checks


def _closed_form(module: LeechModule, n: int) -> GroupDecomposition:
    return cohomology(module, n) if module.is_left else homology(module, n)


def periodicity_check(module: LeechModule, degree_window: int) -> ValidationReport:
    """H(n) = H(n + 2q/gcd(m,q)) for n in [3, 3 + degree_window).

    With index 1, also H(n) = H(2) whenever n = 2 mod 2q.
    """
    monoid = module.monoid
    period = monoid.orbit_period()
    report = ValidationReport(name=f"periodicity over {monoid}, period {period}")
    cache: Dict[int, GroupDecomposition] = {}

    def group_at(n: int) -> GroupDecomposition:
        if n not in cache:
            cache[n] = _closed_form(module, n)
        return cache[n]

    for n in range(3, 3 + degree_window):
        here, there = group_at(n), group_at(n + period)
        report.record(
            groups_isomorphic(here, there),
            "period",
            n,
            f"{here} vs degree {n + period}: {there}",
        )
    if monoid.index == 1:
        step = 2 * monoid.period
        for n in range(2 + step, 3 + degree_window + period, step):
            here, base = group_at(n), group_at(2)
            report.record(
                groups_isomorphic(here, base), "index one", n, f"{here} vs degree 2: {base}"
            )
    return report


def index_independence_check(
    group: AbGroup, period: int, index_list: Iterable[int], max_degree: int
) -> ValidationReport:
    """Trivial coefficients give the same tables over C_(m,q) for every m."""
    group = AbGroup.of(group)
    report = ValidationReport(name=f"index independence for {group}, q = {period}")
    if period >= 2:
        reference = CyclicMonoid(index=0, period=period)
        left_ref = cohomology_table(trivial_module(reference, Side.LEFT, group), max_degree)
        right_ref = homology_table(trivial_module(reference, Side.RIGHT, group), max_degree)
    else:
        left_ref = [cohomology_trivial(group, period, n) for n in range(max_degree + 1)]
        right_ref = [homology_trivial(group, period, n) for n in range(max_degree + 1)]

    for m in index_list:
        monoid = CyclicMonoid(index=m, period=period)
        left = cohomology_table(trivial_module(monoid, Side.LEFT, group), max_degree)
        right = homology_table(trivial_module(monoid, Side.RIGHT, group), max_degree)
        for n in range(max_degree + 1):
            report.record(groups_isomorphic(left[n], left_ref[n]), "cohomology", m, f"degree {n}")
            report.record(groups_isomorphic(right[n], right_ref[n]), "homology", m, f"degree {n}")
    return report


def oracle_check(module: LeechModule, max_degree: int) -> ValidationReport:
    """Closed form against the homology of the first-principles complex, degree by degree."""
    kind = "cohomology" if module.is_left else "homology"
    report = ValidationReport(name=f"closed form vs oracle {kind} over {module.monoid}")
    with measure_time() as elapsed:
        if module.is_left:
            fast = hom_complex_fast(module, max_degree)
            oracle = hom_complex_oracle(module, max_degree)
            maps = comparison_hom(module, max_degree)
        else:
            fast = tensor_complex_fast(module, max_degree)
            oracle = tensor_complex_oracle(module, max_degree)
            maps = comparison_tensor(module, max_degree)
        for n in range(max_degree + 1):
            closed, computed = _closed_form(module, n), complex_homology(oracle, n)
            report.record(
                groups_isomorphic(closed, computed),
                "degree",
                n,
                f"closed form {closed}, oracle {computed}",
            )
        report.merge(compare_complexes(fast, oracle, maps))
    headline = report.summary().splitlines()[0]
    logger.info(f"oracle check to degree {max_degree}: {headline} in {elapsed()} ms")
    return report

