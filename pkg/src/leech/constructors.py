"""Standard modules: constant Z, ordinary (constant-on-objects) modules, free modules."""

from typing import Hashable, List, Sequence, Tuple

from ..abelian import (
    AbGroup,
    AbHom,
    IntMatrix,
    block_sum,
    compose,
    direct_sum,
    identity,
    same_group,
)
from ..models import Side
from ..monoid import CyclicMonoid
from ..utils.exceptions import (
    ActionViolatesCongruenceError,
    DimensionMismatchError,
    InvalidGroupError,
    WrongSideError,
)
from .module import LeechModule, module_from_matrices

# (u, point position, v) with u + pi(point) + v = x
BasisTriple = Tuple[int, int, int]


def constant_Z(monoid: CyclicMonoid, side: Side = Side.LEFT) -> LeechModule:
    z = AbGroup.free(1)
    ones = tuple(identity(z) for _ in monoid.elements())
    return LeechModule(monoid, Side(side), (z,) * monoid.order, ones, ones)


def _power(action: AbHom, k: int) -> AbHom:
    result = identity(action.source)
    for _ in range(k):
        result = compose(action, result)
    return result


def from_ordinary(
    monoid: CyclicMonoid, side: Side, group: AbGroup, action: AbHom
) -> LeechModule:
    """Constant-on-objects module: the action P is 1_* on the left and 1^* on the right.

    The other generator acts as the identity.
    """
    group = AbGroup.of(group)
    if not (same_group(action.source, group) and same_group(action.target, group)):
        raise DimensionMismatchError(
            "from_ordinary", str(group), (str(action.source), str(action.target))
        )
    stable = _power(action, monoid.index)
    if stable.matrix != compose(_power(action, monoid.period), stable).matrix:
        raise ActionViolatesCongruenceError(monoid.index, monoid.period)

    side = Side(side)
    acting = tuple(action for _ in monoid.elements())
    trivial = tuple(identity(group) for _ in monoid.elements())
    groups = (group,) * monoid.order
    if side is Side.LEFT:
        return LeechModule(monoid, side, groups, acting, trivial)
    return LeechModule(monoid, side, groups, trivial, acting)


def trivial_module(monoid: CyclicMonoid, side: Side, group: AbGroup) -> LeechModule:
    # trivial action: every translation is the identity
    return from_ordinary(monoid, side, group, identity(AbGroup.of(group)))


def free_basis(monoid: CyclicMonoid, pis: Sequence[int], x: int) -> List[BasisTriple]:
    """Basis of F S at x, lexicographic in (u, point position, v)."""
    return [
        (u, s, v)
        for u in monoid.elements()
        for s, pi in enumerate(pis)
        for v in monoid.elements()
        if monoid.project(u + pi + v) == x
    ]


def free_module(
    monoid: CyclicMonoid, points: Sequence[Tuple[Hashable, int]]
) -> LeechModule:
    """Free left module on points (label, pi).

    x_* (u, s, v) = (x + u, s, v) and x^* (u, s, v) = (u, s, v + x). Labels only
    name the generators; they are ordered as given.
    """
    pis = [monoid.project(pi) for _, pi in points]
    bases = [free_basis(monoid, pis, x) for x in monoid.elements()]
    index = [{b: i for i, b in enumerate(basis)} for basis in bases]
    push1, pull1 = [], []
    for x in monoid.elements():
        x1 = monoid.add(x, 1)
        push_cols, pull_cols = [], []
        for u, s, v in bases[x]:
            push_col = [0] * len(bases[x1])
            push_col[index[x1][(monoid.add(1, u), s, v)]] = 1
            pull_col = [0] * len(bases[x1])
            pull_col[index[x1][(u, s, monoid.add(v, 1))]] = 1
            push_cols.append(push_col)
            pull_cols.append(pull_col)
        push1.append(IntMatrix.from_columns(push_cols, len(bases[x1])))
        pull1.append(IntMatrix.from_columns(pull_cols, len(bases[x1])))
    groups = [AbGroup.free(len(b)) for b in bases]
    return module_from_matrices(monoid, Side.LEFT, groups, push1, pull1)


def dual_module(module: LeechModule) -> LeechModule:
    """Hom(-, Z) of a left module with free groups: a right module with transposed maps."""
    module.require_side(Side.LEFT)
    for g in module.groups:
        if g.torsion:
            raise InvalidGroupError(g.torsion, "dual_module needs torsion-free groups")
    return module_from_matrices(
        module.monoid,
        Side.RIGHT,
        module.groups,
        [h.matrix.transpose() for h in module.push1],
        [h.matrix.transpose() for h in module.pull1],
    )


def direct_sum_modules(first: LeechModule, second: LeechModule) -> LeechModule:
    if first.side is not second.side:
        raise WrongSideError(first.side.value, second.side.value)
    if first.monoid != second.monoid:
        raise DimensionMismatchError("direct_sum_modules", str(first.monoid), str(second.monoid))
    groups = tuple(direct_sum(a, b).group for a, b in zip(first.groups, second.groups))
    push1 = tuple(block_sum(f, g) for f, g in zip(first.push1, second.push1))
    pull1 = tuple(block_sum(f, g) for f, g in zip(first.pull1, second.pull1))
    return LeechModule(first.monoid, first.side, groups, push1, pull1)
