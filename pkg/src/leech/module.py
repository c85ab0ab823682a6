"""Left and right modules over the factorization category of C_(m,q).

Only the generating maps 1_* and 1^* are stored. For a left module A,
push1[x] and pull1[x] both go A(x) -> A(x + 1); for a right module B they go
B(x + 1) -> B(x). Every other x_*, x^* is an iterate of these.

For right modules, push1 is the action of the arrow (1, x, 0) and pull1 the
action of (0, x, 1), the same arrows as on the left side.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..abelian import AbGroup, AbHom, IntMatrix, identity, same_group
from ..logging_utils import get_logger
from ..models import Side, ValidationReport
from ..monoid import Arrow, CyclicMonoid
from ..utils.exceptions import DimensionMismatchError, WrongSideError

logger = get_logger()


@dataclass(frozen=True)
class LeechModule:
    monoid: CyclicMonoid
    side: Side
    groups: Tuple[AbGroup, ...]
    push1: Tuple[AbHom, ...]
    pull1: Tuple[AbHom, ...]
    # memoized iterates keyed by (kind, k, base); never part of equality
    _iterates: Dict[Tuple[str, int, int], AbHom] = field(
        default_factory=dict, compare=False, repr=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, "side", Side(self.side))
        object.__setattr__(self, "groups", tuple(AbGroup.of(g) for g in self.groups))
        object.__setattr__(self, "push1", tuple(self.push1))
        object.__setattr__(self, "pull1", tuple(self.pull1))
        size = self.monoid.order
        for name in ("groups", "push1", "pull1"):
            got = len(getattr(self, name))
            if got != size:
                raise DimensionMismatchError(f"LeechModule.{name}", size, got)
        for x in self.monoid.elements():
            source, target = self.generator_shape(x)
            for name in ("push1", "pull1"):
                hom = getattr(self, name)[x]
                if not (same_group(hom.source, source) and same_group(hom.target, target)):
                    raise DimensionMismatchError(
                        f"LeechModule.{name}[{x}]",
                        (str(source), str(target)),
                        (str(hom.source), str(hom.target)),
                    )

    def generator_shape(self, x: int) -> Tuple[AbGroup, AbGroup]:
        # (source, target) of push1[x] and pull1[x]
        here, there = self.groups[x], self.groups[self.monoid.add(x, 1)]
        if self.side is Side.LEFT:
            return here, there
        return there, here

    @property
    def is_left(self) -> bool:
        return self.side is Side.LEFT

    def require_side(self, side: Side) -> None:
        if self.side is not side:
            raise WrongSideError(side.value, self.side.value)

    def __str__(self) -> str:
        groups = ", ".join(str(g) for g in self.groups)
        return f"{self.side.value} module over {self.monoid}: [{groups}]"


def _iterate(module: LeechModule, kind: str, k: int, base: int) -> AbHom:
    key = (kind, k, base)
    cached = module._iterates.get(key)
    if cached is not None:
        return cached
    gens = module.push1 if kind == "push" else module.pull1
    monoid = module.monoid
    if k == 0:
        result = identity(module.groups[base])
    elif module.side is Side.LEFT:
        # A(base) -> A(base + k): generator at base + (k - 1) after the rest
        result = gens[monoid.add(base, k - 1)] @ _iterate(module, kind, k - 1, base)
    else:
        # B(base + k) -> B(base): generator at base last
        result = gens[base] @ _iterate(module, kind, k - 1, monoid.add(base, 1))
    module._iterates[key] = result
    return result


def push(module: LeechModule, k: int, base: int) -> AbHom:
    """k_* at base: A(base) -> A(base + k) on the left, B(base + k) -> B(base) on the right.

    k is a natural number and the iterate is taken literally, so
    push(m + q, y) and push(m, y) agree exactly when axiom (A) holds.
    """
    return _iterate(module, "push", k, base)


def pull(module: LeechModule, k: int, base: int) -> AbHom:
    """k^* at base, with the same variance as push()."""
    return _iterate(module, "pull", k, base)


def act(module: LeechModule, arrow: Arrow) -> AbHom:
    """The value of the module on an arrow (u, y, v): y -> u + y + v.

    Left: A(y) -> A(u + y + v), equal to u_* v^*.
    Right: B(u + y + v) -> B(y), again u_* v^*.
    """
    u, y, v = arrow
    monoid = module.monoid
    if module.is_left:
        return push(module, u, monoid.add(y, v)) @ pull(module, v, y)
    return pull(module, v, y) @ push(module, u, monoid.add(y, v))


def homs_equal(f: AbHom, g: AbHom) -> bool:
    return (
        same_group(f.source, g.source)
        and same_group(f.target, g.target)
        and f.matrix == g.matrix
    )


def first_difference(f: AbHom, g: AbHom) -> List[int]:
    # (row, col) of the first differing matrix entry, as a witness
    for i, (a, b) in enumerate(zip(f.matrix.entries, g.matrix.entries)):
        for j, (s, t) in enumerate(zip(a, b)):
            if s != t:
                return [i, j]
    return []


def _well_defined(hom: AbHom) -> Optional[str]:
    # re-derives the homomorphism condition from the stored matrix
    s_orders, t_orders = hom.source.orders, hom.target.orders
    for i, row in enumerate(hom.matrix.entries):
        e = t_orders[i]
        for j, a in enumerate(row):
            d = s_orders[j]
            if d and a and (e == 0 or (d * a) % e):
                return f"entry ({i}, {j}) = {a} does not respect orders {d} -> {e}"
    return None


def validate(module: LeechModule) -> ValidationReport:
    """Check axioms (A), (B), (C) at every element."""
    monoid = module.monoid
    m, period = monoid.index, monoid.period
    report = ValidationReport(name=f"axioms of {module.side.value} module over {monoid}")

    for x in monoid.elements():
        for name in ("push1", "pull1"):
            problem = _well_defined(getattr(module, name)[x])
            report.record(problem is None, "C", x, f"{name}: {problem}")

    for y in monoid.elements():
        for kind, op in (("1_*", push), ("1^*", pull)):
            long_way, short_way = op(module, m + period, y), op(module, m, y)
            report.record(
                homs_equal(long_way, short_way),
                "A",
                y,
                f"(m+q)-fold iterate of {kind} differs from the m-fold iterate",
                first_difference(long_way, short_way),
            )

        y1 = monoid.add(y, 1)
        if module.is_left:
            push_pull = module.push1[y1] @ module.pull1[y]
            pull_push = module.pull1[y1] @ module.push1[y]
        else:
            push_pull = module.push1[y] @ module.pull1[y1]
            pull_push = module.pull1[y] @ module.push1[y1]
        report.record(
            homs_equal(push_pull, pull_push),
            "B",
            y,
            "1_* and 1^* do not commute",
            first_difference(push_pull, pull_push),
        )

    if not report.passed:
        logger.info(f"Module failed validation with {len(report.violations)} violations")
    return report


def is_symmetric(module: LeechModule) -> bool:
    return all(homs_equal(a, b) for a, b in zip(module.push1, module.pull1))


def is_morphism(
    maps: Sequence[AbHom], source: LeechModule, target: LeechModule
) -> ValidationReport:
    """Naturality of a family f_x : source(x) -> target(x) against 1_* and 1^*."""
    report = ValidationReport(name="module morphism")
    if source.side is not target.side or source.monoid != target.monoid:
        report.record(False, "shape", None, "modules live over different sides or monoids")
        return report
    monoid = source.monoid
    if len(maps) != monoid.order:
        report.record(False, "shape", None, f"expected {monoid.order} maps, got {len(maps)}")
        return report
    for x, f in enumerate(maps):
        if not (same_group(f.source, source.groups[x]) and same_group(f.target, target.groups[x])):
            report.record(False, "shape", x, "map does not go source(x) -> target(x)")
            return report
    for x in monoid.elements():
        x1 = monoid.add(x, 1)
        for name in ("push1", "pull1"):
            if source.is_left:
                lhs = maps[x1] @ getattr(source, name)[x]
                rhs = getattr(target, name)[x] @ maps[x]
            else:
                lhs = maps[x] @ getattr(source, name)[x]
                rhs = getattr(target, name)[x] @ maps[x1]
            report.record(
                homs_equal(lhs, rhs),
                "naturality",
                x,
                f"square for {name} fails",
                first_difference(lhs, rhs),
            )
    return report


def module_from_matrices(
    monoid: CyclicMonoid,
    side: Side,
    groups: Sequence[AbGroup],
    push1: Sequence[IntMatrix],
    pull1: Sequence[IntMatrix],
) -> LeechModule:
    """Wrap raw generator matrices; each must already be a well-defined homomorphism."""
    shell = [AbGroup.of(g) for g in groups]
    homs: Dict[str, List[AbHom]] = {"push1": [], "pull1": []}
    for x in monoid.elements():
        here, there = shell[x], shell[monoid.add(x, 1)]
        source, target = (here, there) if Side(side) is Side.LEFT else (there, here)
        homs["push1"].append(AbHom(source, target, push1[x]))
        homs["pull1"].append(AbHom(source, target, pull1[x]))
    return LeechModule(monoid, Side(side), tuple(shell), tuple(homs["push1"]), tuple(homs["pull1"]))
