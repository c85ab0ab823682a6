"""Finitely generated abelian groups in normal form, and homomorphisms between them.

Every group carries coordinates: free generators first, then torsion generators
Z/d1, ..., Z/dk with d1 | d2 | ... | dk. A homomorphism is an integer matrix in
those coordinates (target x source); rows over torsion coordinates are stored as
residues in [0, d).

All subgroup arithmetic goes through the same lift: a subgroup of G is a lattice
in Z^n containing the relation lattice of G, and every quotient of such lattices
is read off a Smith normal form.
"""

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..utils.exceptions import (
    CompositionNotZeroError,
    DimensionMismatchError,
    IllDefinedHomError,
    InvalidGroupError,
)
from .elimination import reduce_kernel_system, reduce_quotient_system
from .matrix import IntMatrix, Vector
from .snf import integer_kernel, smith_decompose


class AbGroup(BaseModel):
    """Z^free_rank + Z/d1 + ... + Z/dk with the divisibility chain enforced."""

    model_config = ConfigDict(frozen=True)

    free_rank: int = Field(0, ge=0)
    torsion: Tuple[int, ...] = ()

    @field_validator("torsion")
    @classmethod
    def _check_chain(cls, torsion: Tuple[int, ...]) -> Tuple[int, ...]:
        for d in torsion:
            if d < 2:
                raise InvalidGroupError(torsion, "invariant factors must be >= 2")
        for a, b in zip(torsion, torsion[1:]):
            if b % a:
                raise InvalidGroupError(torsion, f"{a} does not divide {b}")
        return torsion

    @classmethod
    def trivial(cls) -> "AbGroup":
        return cls()

    @classmethod
    def free(cls, rank: int) -> "AbGroup":
        return cls(free_rank=rank)

    @classmethod
    def cyclic(cls, order: int) -> "AbGroup":
        # order 0 is Z, order 1 is the trivial group
        return cls.from_orders([order])

    @classmethod
    def from_orders(cls, orders: Sequence[int]) -> "AbGroup":
        """Canonical form of Z/o1 + Z/o2 + ... (an order of 0 stands for Z)."""
        return canonical_form(orders).group

    @classmethod
    def of(cls, group: "AbGroup") -> "AbGroup":
        if type(group) is cls:
            return group
        return cls(free_rank=group.free_rank, torsion=group.torsion)

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def orders(self) -> Tuple[int, ...]:
        return (0,) * self.free_rank + self.torsion

    def is_trivial(self) -> bool:
        return self.ngens == 0

    def order(self) -> Optional[int]:
        if self.free_rank:
            return None
        total = 1
        for d in self.torsion:
            total *= d
        return total

    def to_json(self) -> dict:
        return {"rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


class GroupDecomposition(AbGroup):
    """A computed (co)homology group in canonical form."""

    @classmethod
    def of(cls, group: AbGroup) -> "GroupDecomposition":
        if type(group) is cls:
            return group
        return cls(free_rank=group.free_rank, torsion=group.torsion)


def same_group(a: AbGroup, b: AbGroup) -> bool:
    return a.free_rank == b.free_rank and a.torsion == b.torsion


def groups_isomorphic(g: AbGroup, h: AbGroup) -> bool:
    # both canonical, so the structure theorem makes field equality complete
    return same_group(g, h)


def reduce_vector(group: AbGroup, vector: Sequence[int]) -> Vector:
    if len(vector) != group.ngens:
        raise DimensionMismatchError("reduce_vector", group.ngens, len(vector))
    return tuple(a % d if d else a for a, d in zip(vector, group.orders))


def relation_columns(group: AbGroup) -> List[Vector]:
    return raw_relations(group.orders)


@dataclass(frozen=True)
class AbHom:
    """A homomorphism source -> target given by a (target x source) matrix."""

    source: AbGroup
    target: AbGroup
    matrix: IntMatrix

    def __post_init__(self) -> None:
        source, target = AbGroup.of(self.source), AbGroup.of(self.target)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        if self.matrix.shape != (target.ngens, source.ngens):
            raise DimensionMismatchError(
                "AbHom", (target.ngens, source.ngens), self.matrix.shape
            )
        t_orders, s_orders = target.orders, source.orders
        rows = []
        for i, row in enumerate(self.matrix.entries):
            e = t_orders[i]
            if e:
                row = tuple(a % e for a in row)
            for j, a in enumerate(row):
                d = s_orders[j]
                if not d or not a:
                    continue
                if e == 0:
                    raise IllDefinedHomError(i, j, "torsion generator sent to a free coordinate")
                if (d * a) % e:
                    raise IllDefinedHomError(i, j, f"{e} does not divide {d} * {a}")
            rows.append(row)
        object.__setattr__(self, "matrix", IntMatrix(target.ngens, source.ngens, tuple(rows)))

    def apply(self, vector: Sequence[int]) -> Vector:
        return reduce_vector(self.target, self.matrix.apply(vector))

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def __matmul__(self, other: "AbHom") -> "AbHom":
        return compose(self, other)

    def __add__(self, other: "AbHom") -> "AbHom":
        return add(self, other)

    def __neg__(self) -> "AbHom":
        return scalar_mul(-1, self)

    def __sub__(self, other: "AbHom") -> "AbHom":
        return add(self, scalar_mul(-1, other))


def identity(group: AbGroup) -> AbHom:
    return AbHom(group, group, IntMatrix.identity(group.ngens))


def zero_hom(source: AbGroup, target: AbGroup) -> AbHom:
    return AbHom(source, target, IntMatrix.zeros(target.ngens, source.ngens))


def multiplication(group: AbGroup, c: int) -> AbHom:
    return scalar_mul(c, identity(group))


def compose(g: AbHom, f: AbHom) -> AbHom:
    """g after f."""
    if not same_group(g.source, f.target):
        raise DimensionMismatchError("compose", f.target, g.source)
    return AbHom(f.source, g.target, g.matrix @ f.matrix)


def add(f: AbHom, g: AbHom) -> AbHom:
    if not (same_group(f.source, g.source) and same_group(f.target, g.target)):
        raise DimensionMismatchError("add", (f.source, f.target), (g.source, g.target))
    return AbHom(f.source, f.target, f.matrix + g.matrix)


def scalar_mul(c: int, f: AbHom) -> AbHom:
    return AbHom(f.source, f.target, f.matrix.scale(c))


def cokernel(relations: IntMatrix, ambient_rank: int) -> GroupDecomposition:
    """Z^ambient_rank modulo the column span of relations."""
    if relations.rows != ambient_rank:
        raise DimensionMismatchError("cokernel", ambient_rank, relations.rows)
    diagonal = [d for d in smith_decompose(relations).diagonal if d]
    return GroupDecomposition(
        free_rank=ambient_rank - len(diagonal),
        torsion=tuple(d for d in diagonal if d >= 2),
    )


def _quotient(group: AbGroup, vectors: Sequence[Sequence[int]]) -> GroupDecomposition:
    columns = [tuple(v) for v in vectors] + relation_columns(group)
    return cokernel(IntMatrix.from_columns(columns, group.ngens), group.ngens)


def kernel_basis(f: AbHom) -> List[Vector]:
    """Generators (in source coordinates) of {a : f(a) = 0}.

    The target's torsion is lifted into the system, so a solves
    matrix @ a = sum of multiples of the target relations.
    """
    n = f.source.ngens
    target_relations = IntMatrix.from_columns(relation_columns(f.target), f.target.ngens)
    system = f.matrix.hstack(target_relations)
    gens = []
    for v in integer_kernel(system):
        a = reduce_vector(f.source, v[:n])
        if any(a):
            gens.append(a)
    return gens


@dataclass(frozen=True)
class Canonicalization:
    """Change of coordinates from Z/o1 + ... + Z/on (any orders) to its normal form."""

    group: AbGroup
    to_canonical: IntMatrix
    from_canonical: IntMatrix


@dataclass(frozen=True)
class SubgroupPresentation:
    """A subgroup K of an ambient group, presented in normal form."""

    group: AbGroup
    ambient: AbGroup
    inclusion: AbHom
    _coordinates: Callable[[Sequence[int]], Vector]

    def coordinates(self, vector: Sequence[int]) -> Vector:
        """K-coordinates of an ambient vector lying in the subgroup."""
        return self._coordinates(vector)


def _present_lattice_quotient(
    n: int,
    lattice: Sequence[Sequence[int]],
    relations: Sequence[Sequence[int]],
) -> Tuple[AbGroup, List[Vector], Callable[[Sequence[int]], Vector]]:
    # L / R for lattices R <= L <= Z^n given by spanning vectors
    dec = smith_decompose(IntMatrix.from_columns(list(lattice), n))
    d = [x for x in dec.diagonal if x]
    rho = len(d)

    def lattice_coords(y: Sequence[int]) -> List[int]:
        uy = dec.U.apply(y)
        if any(uy[i] % d[i] for i in range(rho)) or any(uy[rho:]):
            raise ValueError(f"vector {tuple(y)} is not in the subgroup")
        return [uy[i] // d[i] for i in range(rho)]

    rel = IntMatrix.from_columns([lattice_coords(r) for r in relations], rho)
    dec2 = smith_decompose(rel)
    e = list(dec2.diagonal) + [0] * (rho - len(dec2.diagonal))
    order = [i for i in range(rho) if e[i] == 0] + [i for i in range(rho) if e[i] >= 2]
    group = AbGroup(
        free_rank=sum(1 for i in order if e[i] == 0),
        torsion=tuple(e[i] for i in order if e[i]),
    )

    basis = [tuple(d[k] * a for a in dec.U_inv.column(k)) for k in range(rho)]
    embedding = []
    for i in order:
        c = dec2.U_inv.column(i)
        embedding.append(
            tuple(sum(c[k] * basis[k][r] for k in range(rho) if c[k]) for r in range(n))
        )

    def coordinates(y: Sequence[int]) -> Vector:
        z = dec2.U.apply(lattice_coords(y))
        return reduce_vector(group, [z[i] for i in order])

    return group, embedding, coordinates


def canonical_form(orders: Sequence[int]) -> Canonicalization:
    n = len(orders)
    unit = IntMatrix.identity(n).columns()
    relations = [tuple(o * a for a in unit[i]) for i, o in enumerate(orders) if o]
    group, embedding, coordinates = _present_lattice_quotient(n, unit, relations)
    to_canonical = IntMatrix.from_columns([coordinates(u) for u in unit], group.ngens)
    from_canonical = IntMatrix.from_columns(embedding, n)
    return Canonicalization(group, to_canonical, from_canonical)


def present_subgroup(ambient: AbGroup, generators: Sequence[Sequence[int]]) -> SubgroupPresentation:
    """Normal form of the subgroup generated by the given ambient vectors."""
    relations = relation_columns(ambient)
    gens = [reduce_vector(ambient, g) for g in generators]
    group, embedding, coordinates = _present_lattice_quotient(
        ambient.ngens, gens + relations, relations
    )
    inclusion = AbHom(group, ambient, IntMatrix.from_columns(embedding, ambient.ngens))
    return SubgroupPresentation(group, ambient, inclusion, coordinates)


def subgroup_quotient(
    ambient: AbGroup,
    numerator: Sequence[Sequence[int]],
    denominator: Sequence[Sequence[int]],
) -> GroupDecomposition:
    """K / I for subgroups I <= K of ambient, each given by generators."""
    presented = present_subgroup(ambient, numerator)
    return _quotient(presented.group, [presented.coordinates(v) for v in denominator])


def subquotient(g: AbHom, f: AbHom) -> GroupDecomposition:
    """ker g / im f at the middle of source(f) -> target(f) = source(g) -> target(g)."""
    if not same_group(f.target, g.source):
        raise DimensionMismatchError("subquotient", f.target, g.source)
    if not compose(g, f).is_zero():
        raise CompositionNotZeroError()
    return subgroup_quotient(g.source, kernel_basis(g), f.matrix.columns())


def kernel_group(f: AbHom) -> GroupDecomposition:
    return GroupDecomposition.of(present_subgroup(f.source, kernel_basis(f)).group)


def image_group(f: AbHom) -> GroupDecomposition:
    return GroupDecomposition.of(present_subgroup(f.target, f.matrix.columns()).group)


def cokernel_group(f: AbHom) -> GroupDecomposition:
    return _quotient(f.target, f.matrix.columns())


def is_isomorphism(f: AbHom) -> bool:
    return not kernel_basis(f) and cokernel_group(f).is_trivial()


def direct_sum(g: AbGroup, h: AbGroup) -> Canonicalization:
    """Normal form of g + h, with coordinate changes from and to the concatenation."""
    return canonical_form(g.orders + h.orders)


def block_sum(f: AbHom, g: AbHom) -> AbHom:
    """f + g : source(f) + source(g) -> target(f) + target(g), in normal-form coordinates."""
    src = direct_sum(f.source, g.source)
    tgt = direct_sum(f.target, g.target)
    raw = IntMatrix.block_diagonal([f.matrix, g.matrix])
    return AbHom(src.group, tgt.group, tgt.to_canonical @ raw @ src.from_canonical)


# raw coordinates: Z/o1 + ... + Z/on for arbitrary orders (0 for Z), no chain required


def raw_relations(orders: Sequence[int]) -> List[Vector]:
    n = len(orders)
    cols = []
    for i, o in enumerate(orders):
        if o:
            col = [0] * n
            col[i] = o
            cols.append(tuple(col))
    return cols


@dataclass(frozen=True)
class LatticePresentation:
    """A normal-form group realized as a subquotient of raw coordinates.

    generators[k] is a raw vector lifting the k-th normal-form generator;
    coordinates() sends a raw vector of the presented subquotient back.
    """

    group: AbGroup
    generators: Tuple[Vector, ...]
    _coordinates: Callable[[Sequence[int]], Vector]

    def coordinates(self, vector: Sequence[int]) -> Vector:
        return self._coordinates(vector)


def _reduce_raw(vector: Sequence[int], orders: Sequence[int]) -> Vector:
    return tuple(a % o if o else a for a, o in zip(vector, orders))


def _present_kernel_dense(
    source_orders: Sequence[int],
    target_orders: Sequence[int],
    matrix: IntMatrix,
) -> LatticePresentation:
    n = len(source_orders)
    target_rel = IntMatrix.from_columns(raw_relations(target_orders), len(target_orders))
    solutions = [
        _reduce_raw(v[:n], source_orders) for v in integer_kernel(matrix.hstack(target_rel))
    ]
    source_rel = raw_relations(source_orders)
    group, embedding, coordinates = _present_lattice_quotient(
        n, [s for s in solutions if any(s)] + source_rel, source_rel
    )
    return LatticePresentation(group, tuple(embedding), coordinates)


def _present_quotient_dense(
    orders: Sequence[int],
    relations: Sequence[Sequence[int]],
) -> LatticePresentation:
    n = len(orders)
    unit = IntMatrix.identity(n).columns()
    group, embedding, coordinates = _present_lattice_quotient(
        n, unit, [tuple(r) for r in relations] + raw_relations(orders)
    )
    return LatticePresentation(group, tuple(embedding), coordinates)


def present_kernel(
    source_orders: Sequence[int],
    target_orders: Sequence[int],
    matrix: IntMatrix,
) -> LatticePresentation:
    """Kernel of the map between raw groups given by matrix (target x source)."""
    n = len(source_orders)
    if matrix.shape != (len(target_orders), n):
        raise DimensionMismatchError("present_kernel", (len(target_orders), n), matrix.shape)
    reduction = reduce_kernel_system(source_orders, matrix, target_orders)
    small = _present_kernel_dense(
        reduction.free_orders(), reduction.residual_moduli, reduction.residual_matrix()
    )

    def coordinates(y: Sequence[int]) -> Vector:
        return small.coordinates(reduction.restrict(y))

    generators = tuple(reduction.lift(g) for g in small.generators)
    return LatticePresentation(small.group, generators, coordinates)


def present_quotient(
    orders: Sequence[int],
    relations: Sequence[Sequence[int]],
) -> LatticePresentation:
    """Raw group modulo the subgroup generated by relations."""
    reduction = reduce_quotient_system(orders, relations)
    small = _present_quotient_dense(reduction.kept_orders(), reduction.residual_columns())

    def coordinates(y: Sequence[int]) -> Vector:
        return small.coordinates(reduction.rewrite(y))

    generators = tuple(reduction.embed(g) for g in small.generators)
    return LatticePresentation(small.group, generators, coordinates)
