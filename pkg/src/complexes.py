"""Hom(F_*, A) and B (x) F_* as complexes of abelian groups, built two ways.

The fast path reads each spot off the adjunction: Hom(F_n, A) = A(pi_n) and
B (x) F_n = B(pi_n), with S and T as differentials. The oracle path solves for
natural transformations (resp. takes the coend quotient) directly on the bases
of F_n, using only the generating arrows 1_* and 1^*.

Raw coordinates of the oracle: one block per (x, basis element of F(x)),
each block carrying the coordinates of A(x) (resp. B(x)).
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .abelian import (
    AbGroup,
    AbHom,
    GroupDecomposition,
    IntMatrix,
    LatticePresentation,
    canonical_form,
    is_isomorphism,
    present_kernel,
    present_quotient,
    reduce_vector,
    same_group,
    subquotient,
    zero_hom,
)
from .leech.constructors import BasisTriple, free_basis
from .leech.module import LeechModule, act, first_difference, homs_equal
from .logging_utils import get_logger
from .models import Side, ValidationReport
from .monoid import Arrow
from .resolution import get_resolution
from .trace_maps import s_left, s_right, trace_left, trace_right
from .utils.exceptions import (
    CompositionNotZeroError,
    DimensionMismatchError,
    SpotOutOfRangeError,
)

logger = get_logger()


class Direction(str, Enum):

    CHAIN = "chain"
    COCHAIN = "cochain"


@dataclass(frozen=True)
class AbComplex:
    """Spots 0..N with differentials between neighbours.

    cochain: differentials[i] : spots[i] -> spots[i + 1]
    chain:   differentials[i] : spots[i + 1] -> spots[i]
    """

    direction: Direction
    spots: Tuple[AbGroup, ...]
    differentials: Tuple[AbHom, ...]

    def __post_init__(self) -> None:
        if len(self.differentials) != len(self.spots) - 1:
            raise DimensionMismatchError(
                "AbComplex", len(self.spots) - 1, len(self.differentials)
            )
        for i, d in enumerate(self.differentials):
            source, target = (i, i + 1) if self.direction is Direction.COCHAIN else (i + 1, i)
            if not (
                same_group(d.source, self.spots[source])
                and same_group(d.target, self.spots[target])
            ):
                raise DimensionMismatchError(
                    f"AbComplex differential {i}",
                    (str(self.spots[source]), str(self.spots[target])),
                    (str(d.source), str(d.target)),
                )
        for i in range(len(self.differentials) - 1):
            first, second = self.differentials[i], self.differentials[i + 1]
            composite = second @ first if self.direction is Direction.COCHAIN else first @ second
            if not composite.is_zero():
                raise CompositionNotZeroError(f"AbComplex at spot {i + 1}")

    @property
    def top(self) -> int:
        # highest spot whose (co)homology is computable
        return len(self.spots) - 2


def complex_homology(complex_: AbComplex, n: int) -> GroupDecomposition:
    """(Co)homology at spot n; spot 0 uses a zero map on its open side."""
    if n < 0 or n > complex_.top:
        raise SpotOutOfRangeError(n, complex_.top + 1)
    here = complex_.spots[n]
    trivial = AbGroup.trivial()
    if complex_.direction is Direction.COCHAIN:
        outgoing = complex_.differentials[n]
        incoming = complex_.differentials[n - 1] if n else zero_hom(trivial, here)
    else:
        outgoing = complex_.differentials[n - 1] if n else zero_hom(here, trivial)
        incoming = complex_.differentials[n]
    return subquotient(outgoing, incoming)


# fast path


def hom_complex_fast(module: LeechModule, max_degree: int) -> AbComplex:
    """A(0) -S-> A(1) -T-> A(m) -S-> A(m+1) -T-> A(2.m) ..."""
    module.require_side(Side.LEFT)
    resolution = get_resolution(module.monoid)
    spots = tuple(module.groups[resolution.pi(n)] for n in range(max_degree + 2))
    differentials = []
    for n in range(max_degree + 1):
        pi = resolution.pi(n)
        if n % 2 == 0:
            differentials.append(s_left(module, pi))
        else:
            differentials.append(trace_left(module, pi))
    return AbComplex(Direction.COCHAIN, spots, tuple(differentials))


def tensor_complex_fast(module: LeechModule, max_degree: int) -> AbComplex:
    """... B(2.m) -T-> B(m+1) -S-> B(m) -T-> B(1) -S-> B(0)."""
    module.require_side(Side.RIGHT)
    resolution = get_resolution(module.monoid)
    spots = tuple(module.groups[resolution.pi(n)] for n in range(max_degree + 2))
    differentials = []
    for n in range(max_degree + 1):
        # differentials[n] : spot n+1 -> spot n
        if n % 2 == 0:
            differentials.append(s_right(module, resolution.pi(n)))
        else:
            differentials.append(trace_right(module, resolution.pi(n)))
    return AbComplex(Direction.CHAIN, spots, tuple(differentials))


# oracle path


@dataclass(frozen=True)
class _Layout:
    """Raw coordinates: one block of the module's group at x for each basis element of F(x)."""

    pis: Tuple[int, ...]
    bases: Tuple[Tuple[BasisTriple, ...], ...]
    offsets: Dict[Tuple[int, int], int]
    orders: Tuple[int, ...]

    def block(self, x: int, b: int, size: int) -> range:
        start = self.offsets[(x, b)]
        return range(start, start + size)


def _layout(module: LeechModule, pis: Sequence[int]) -> _Layout:
    monoid = module.monoid
    bases = tuple(tuple(free_basis(monoid, pis, x)) for x in monoid.elements())
    offsets: Dict[Tuple[int, int], int] = {}
    orders: List[int] = []
    for x in monoid.elements():
        for b in range(len(bases[x])):
            offsets[(x, b)] = len(orders)
            orders.extend(module.groups[x].orders)
    return _Layout(tuple(pis), bases, offsets, tuple(orders))


def _translate(module: LeechModule, triple: BasisTriple, kind: str) -> BasisTriple:
    # the free module's 1_* or 1^* on a basis triple
    u, s, v = triple
    if kind == "push1":
        return (module.monoid.add(1, u), s, v)
    return (u, s, module.monoid.add(v, 1))


def _constraint_system(
    module: LeechModule, layout: _Layout, arrows: str
) -> Tuple[IntMatrix, Tuple[int, ...]]:
    """Rows f(alpha b) - alpha f(b), one block per (arrow, basis element)."""
    monoid = module.monoid
    rows: List[List[int]] = []
    target_orders: List[int] = []
    n = len(layout.orders)
    index = [{t: i for i, t in enumerate(basis)} for basis in layout.bases]

    def add_block(y: int, b: int, z: int, b_image: int, action: AbHom) -> None:
        size_y, size_z = module.groups[y].ngens, module.groups[z].ngens
        src, dst = layout.block(y, b, size_y), layout.block(z, b_image, size_z)
        for i in range(size_z):
            row = [0] * n
            row[dst[i]] += 1
            for j in range(size_y):
                row[src[j]] -= action.matrix[i, j]
            rows.append(row)
        target_orders.extend(module.groups[z].orders)

    for y in monoid.elements():
        for b, triple in enumerate(layout.bases[y]):
            if arrows == "generating":
                z = monoid.add(y, 1)
                for kind in ("push1", "pull1"):
                    image = index[z][_translate(module, triple, kind)]
                    add_block(y, b, z, image, getattr(module, kind)[y])
            else:
                for u in monoid.elements():
                    for v in monoid.elements():
                        z = monoid.project(u + y + v)
                        tu, s, tv = triple
                        image = index[z][(monoid.add(u, tu), s, monoid.add(tv, v))]
                        add_block(y, b, z, image, act(module, Arrow(u, y, v)))
    return IntMatrix.from_rows(rows, n), tuple(target_orders)


@dataclass(frozen=True)
class HomSpot:
    """Natural transformations F S -> A, presented inside the raw coordinates."""

    layout: _Layout
    presentation: LatticePresentation

    @property
    def group(self) -> AbGroup:
        return self.presentation.group


def free_hom_oracle(module: LeechModule, pis: Sequence[int], arrows: str = "generating") -> HomSpot:
    """Hom(F S, A) for the free module on points with the given pi-values."""
    module.require_side(Side.LEFT)
    layout = _layout(module, pis)
    matrix, target_orders = _constraint_system(module, layout, arrows)
    return HomSpot(layout, present_kernel(layout.orders, target_orders, matrix))


def free_hom_fast(module: LeechModule, pis: Sequence[int]) -> AbGroup:
    """Product of the groups A(pi_s)."""
    orders: Tuple[int, ...] = ()
    for pi in pis:
        orders += module.groups[module.monoid.project(pi)].orders
    return canonical_form(orders).group


@dataclass(frozen=True)
class TensorSpot:
    """B (x) F S as a quotient of the raw coordinates."""

    layout: _Layout
    presentation: LatticePresentation

    @property
    def group(self) -> AbGroup:
        return self.presentation.group


def free_tensor_oracle(module: LeechModule, pis: Sequence[int]) -> TensorSpot:
    """Coend relations g beta (x) b = beta (x) g b, for g = 1_*, 1^* and beta a generator."""
    module.require_side(Side.RIGHT)
    monoid = module.monoid
    layout = _layout(module, pis)
    index = [{t: i for i, t in enumerate(basis)} for basis in layout.bases]
    n = len(layout.orders)
    relations = []
    for y in monoid.elements():
        y1 = monoid.add(y, 1)
        size_y, size_y1 = module.groups[y].ngens, module.groups[y1].ngens
        for b, triple in enumerate(layout.bases[y]):
            for kind in ("push1", "pull1"):
                gen = getattr(module, kind)[y]
                moved = index[y1][_translate(module, triple, kind)]
                here, there = layout.block(y, b, size_y), layout.block(y1, moved, size_y1)
                for j in range(size_y1):
                    rel = [0] * n
                    for i in range(size_y):
                        rel[here[i]] += gen.matrix[i, j]
                    rel[there[j]] -= 1
                    relations.append(rel)
    return TensorSpot(layout, present_quotient(layout.orders, relations))


def _level_pis(module: LeechModule, n: int) -> Tuple[int]:
    return (get_resolution(module.monoid).pi(n),)


def _pairs_to_triples(boundary: Dict[Tuple[int, int], int]) -> Dict[BasisTriple, int]:
    return {(u, 0, v): c for (u, v), c in boundary.items() if c}


def _precompose(
    module: LeechModule, low: _Layout, high: _Layout, n_high: int, vector: Sequence[int]
) -> List[int]:
    # (f . d)(b') = sum_b d[b, b'] f(b), for f given on the blocks of low
    resolution = get_resolution(module.monoid)
    out = [0] * len(high.orders)
    for x in module.monoid.elements():
        size = module.groups[x].ngens
        low_index = {t: i for i, t in enumerate(low.bases[x])}
        for b_high, triple in enumerate(high.bases[x]):
            u, _, v = triple
            image = _pairs_to_triples(resolution.boundary_of(n_high, (u, v)))
            dst = high.block(x, b_high, size)
            for t, c in image.items():
                src = low.block(x, low_index[t], size)
                for i in range(size):
                    out[dst[i]] += c * vector[src[i]]
    return out


def _push_forward(
    module: LeechModule, high: _Layout, low: _Layout, n_high: int, vector: Sequence[int]
) -> List[int]:
    # (id (x) d)(beta (x) b') = sum_b d[b, b'] beta (x) b
    resolution = get_resolution(module.monoid)
    out = [0] * len(low.orders)
    for x in module.monoid.elements():
        size = module.groups[x].ngens
        low_index = {t: i for i, t in enumerate(low.bases[x])}
        for b_high, triple in enumerate(high.bases[x]):
            u, _, v = triple
            src = high.block(x, b_high, size)
            beta = [vector[k] for k in src]
            if not any(beta):
                continue
            for t, c in _pairs_to_triples(resolution.boundary_of(n_high, (u, v))).items():
                dst = low.block(x, low_index[t], size)
                for i in range(size):
                    out[dst[i]] += c * beta[i]
    return out


@dataclass(frozen=True)
class OracleComplex:
    """An oracle complex with its spot presentations and the comparison maps to the fast spots."""

    complex: AbComplex
    spots: Tuple[object, ...]
    comparisons: Tuple[AbHom, ...]


@lru_cache(maxsize=16)
def _hom_oracle(module: LeechModule, max_degree: int) -> OracleComplex:
    resolution = get_resolution(module.monoid)
    spots = [free_hom_oracle(module, _level_pis(module, n)) for n in range(max_degree + 2)]
    differentials = []
    for n in range(max_degree + 1):
        low, high = spots[n], spots[n + 1]
        columns = [
            high.presentation.coordinates(
                _precompose(module, low.layout, high.layout, n + 1, g)
            )
            for g in low.presentation.generators
        ]
        differentials.append(
            AbHom(low.group, high.group, IntMatrix.from_columns(columns, high.group.ngens))
        )

    comparisons = []
    for n, spot in enumerate(spots):
        pi = resolution.pi(n)
        target = module.groups[pi]
        at = spot.layout.block(pi, spot.layout.bases[pi].index((0, 0, 0)), target.ngens)
        columns = [reduce_vector(target, [g[k] for k in at]) for g in spot.presentation.generators]
        comparisons.append(AbHom(spot.group, target, IntMatrix.from_columns(columns, target.ngens)))

    complex_ = AbComplex(Direction.COCHAIN, tuple(s.group for s in spots), tuple(differentials))
    logger.debug(f"Hom oracle complex over {module.monoid} built to degree {max_degree}")
    return OracleComplex(complex_, tuple(spots), tuple(comparisons))


@lru_cache(maxsize=16)
def _tensor_oracle(module: LeechModule, max_degree: int) -> OracleComplex:
    resolution = get_resolution(module.monoid)
    monoid = module.monoid
    spots = [free_tensor_oracle(module, _level_pis(module, n)) for n in range(max_degree + 2)]
    differentials = []
    for n in range(max_degree + 1):
        low, high = spots[n], spots[n + 1]
        columns = [
            low.presentation.coordinates(_push_forward(module, high.layout, low.layout, n + 1, g))
            for g in high.presentation.generators
        ]
        differentials.append(
            AbHom(high.group, low.group, IntMatrix.from_columns(columns, low.group.ngens))
        )

    comparisons = []
    for n, spot in enumerate(spots):
        pi = resolution.pi(n)
        target = module.groups[pi]
        columns = []
        for g in spot.presentation.generators:
            total = [0] * target.ngens
            for x in monoid.elements():
                size = module.groups[x].ngens
                for b, (u, _, v) in enumerate(spot.layout.bases[x]):
                    beta = [g[k] for k in spot.layout.block(x, b, size)]
                    if any(beta):
                        image = act(module, Arrow(u, pi, v)).matrix.apply(beta)
                        total = [a + c for a, c in zip(total, image)]
            columns.append(reduce_vector(target, total))
        comparisons.append(AbHom(spot.group, target, IntMatrix.from_columns(columns, target.ngens)))

    complex_ = AbComplex(Direction.CHAIN, tuple(s.group for s in spots), tuple(differentials))
    logger.debug(f"tensor oracle complex over {monoid} built to degree {max_degree}")
    return OracleComplex(complex_, tuple(spots), tuple(comparisons))


def hom_complex_oracle(module: LeechModule, max_degree: int) -> AbComplex:
    module.require_side(Side.LEFT)
    return _hom_oracle(module, max_degree).complex


def tensor_complex_oracle(module: LeechModule, max_degree: int) -> AbComplex:
    module.require_side(Side.RIGHT)
    return _tensor_oracle(module, max_degree).complex


def comparison_hom(module: LeechModule, max_degree: int) -> List[AbHom]:
    """Evaluation at the generator, f -> f(0, g_n, 0), oracle spot n -> A(pi_n)."""
    module.require_side(Side.LEFT)
    return list(_hom_oracle(module, max_degree).comparisons)


def comparison_tensor(module: LeechModule, max_degree: int) -> List[AbHom]:
    """beta (x) (u, g_n, v) -> u_* v^* beta, oracle spot n -> B(pi_n)."""
    module.require_side(Side.RIGHT)
    return list(_tensor_oracle(module, max_degree).comparisons)


def compare_complexes(
    fast: AbComplex, oracle: AbComplex, comparisons: Sequence[AbHom]
) -> ValidationReport:
    """Every comparison is an isomorphism and the squares with the differentials commute."""
    report = ValidationReport(name=f"oracle vs fast {fast.direction.value} complex")
    if fast.direction is not oracle.direction or len(fast.spots) != len(oracle.spots):
        report.record(False, "shape", None, "complexes have different shapes")
        return report
    for n, c in enumerate(comparisons):
        report.record(is_isomorphism(c), "isomorphism", n, "comparison is not bijective")
    for n in range(len(fast.differentials)):
        if fast.direction is Direction.COCHAIN:
            lhs = fast.differentials[n] @ comparisons[n]
            rhs = comparisons[n + 1] @ oracle.differentials[n]
        else:
            lhs = fast.differentials[n] @ comparisons[n + 1]
            rhs = comparisons[n] @ oracle.differentials[n]
        report.record(
            homs_equal(lhs, rhs),
            "differential",
            n,
            "comparison square fails",
            first_difference(lhs, rhs),
        )
    return report


def naturality_all_arrows_check(module: LeechModule, n: int) -> ValidationReport:
    """Constraints from 1_* and 1^* alone cut out the same group as those from every arrow."""
    module.require_side(Side.LEFT)
    report = ValidationReport(name=f"generating vs all arrows, level {n}")
    pis = _level_pis(module, n)
    generating = free_hom_oracle(module, pis, arrows="generating")
    layout = generating.layout
    matrix, target_orders = _constraint_system(module, layout, "all")
    for k, g in enumerate(generating.presentation.generators):
        residual = [a % o if o else a for a, o in zip(matrix.apply(g), target_orders)]
        report.record(not any(residual), "all arrows", k, "generator violates a composite arrow")
    every = free_hom_oracle(module, pis, arrows="all")
    report.record(
        same_group(every.group, generating.group),
        "same group",
        None,
        f"{every.group} from all arrows, {generating.group} from generating arrows",
    )
    return report
