"""Seeded random modules that satisfy the axioms by construction.

A module is a direct sum of blocks, each lawful on its own:

- bi-action blocks (Z/d)^l, constant on objects, with 1_* = X^a and 1^* = X^b
  for X a cyclic permutation (l divides q), a nilpotent shift (l <= m) or the
  identity; optionally cut down to the ideal {x >= k} or its complement,
  which is a sub- or quotient module on either side;
- free modules on random points (their Z-duals on the right).

The blocks are assembled in raw coordinates, moved to normal form element by
element, and then conjugated by random automorphisms.
"""

import random
from dataclasses import dataclass
from math import gcd
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field, ValidationError

from ..abelian import IntMatrix, canonical_form
from ..logging_utils import get_logger
from ..models import Side
from ..monoid import CyclicMonoid
from ..utils.exceptions import FlagError
from .constructors import dual_module, free_module
from .module import LeechModule, module_from_matrices

logger = get_logger()


class RandomModuleBounds(BaseModel):

    max_blocks: int = Field(3, ge=1)
    max_rank: int = Field(2, ge=1)
    max_torsion: int = Field(6, ge=0)
    allow_free: bool = True
    conjugate: bool = True

    @classmethod
    def from_config(cls, config: Optional[Dict[str, Any]]) -> "RandomModuleBounds":
        try:
            return cls(**(config or {}))
        except ValidationError as e:
            raise FlagError(f"random_module config: {e.errors()[0]['msg']}")


@dataclass
class _RawBlock:
    # per element: coordinate orders (0 = Z) and generator matrices in those coordinates
    orders: List[Tuple[int, ...]]
    push1: List[IntMatrix]
    pull1: List[IntMatrix]


def _cycle(length: int) -> IntMatrix:
    # e_i -> e_{i+1 mod length}
    return IntMatrix.from_columns(
        [tuple(1 if r == (c + 1) % length else 0 for r in range(length)) for c in range(length)],
        length,
    )


def _shift(length: int) -> IntMatrix:
    # e_i -> e_{i+1}, e_last -> 0
    return IntMatrix.from_columns(
        [tuple(1 if r == c + 1 else 0 for r in range(length)) for c in range(length)],
        length,
    )


def _power(matrix: IntMatrix, k: int) -> IntMatrix:
    result = IntMatrix.identity(matrix.rows)
    for _ in range(k):
        result = matrix @ result
    return result


def _divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _draw_order(rng: random.Random, bounds: RandomModuleBounds) -> int:
    # 0 stands for Z
    choices = [0] + list(range(2, bounds.max_torsion + 1))
    return rng.choice(choices)


def _bi_action_block(
    rng: random.Random,
    monoid: CyclicMonoid,
    bounds: RandomModuleBounds,
    symmetric: bool,
    ordinary: Optional[Side] = None,
) -> _RawBlock:
    m, q = monoid.index, monoid.period
    kinds = ["identity", "cycle"]
    if m >= 1:
        kinds.append("shift")
    kind = rng.choice(kinds)
    if kind == "cycle":
        length = rng.choice([d for d in _divisors(q) if d <= bounds.max_rank] or [1])
        generator = _cycle(length)
        exponents = length
    elif kind == "shift":
        length = rng.randint(1, min(m, bounds.max_rank))
        generator = _shift(length)
        exponents = length + 1
    else:
        length = rng.randint(1, bounds.max_rank)
        generator = IntMatrix.identity(length)
        exponents = 1

    a = rng.randrange(exponents)
    b = a if symmetric else rng.randrange(exponents)
    if ordinary is Side.LEFT:
        b = 0
    elif ordinary is Side.RIGHT:
        a = 0
    P, Q = _power(generator, a), _power(generator, b)

    order = _draw_order(rng, bounds)
    orders = (order,) * length
    support = set(monoid.elements())
    if ordinary is None and rng.random() < 0.3:
        k = rng.randint(0, m)
        ideal = {x for x in monoid.elements() if x >= k}
        support = ideal if rng.random() < 0.5 else support - ideal

    block = _RawBlock([], [], [])
    for x in monoid.elements():
        x1 = monoid.add(x, 1)
        block.orders.append(orders if x in support else ())
        if x in support and x1 in support:
            block.push1.append(P)
            block.pull1.append(Q)
        else:
            rows = length if x1 in support else 0
            cols = length if x in support else 0
            block.push1.append(IntMatrix.zeros(rows, cols))
            block.pull1.append(IntMatrix.zeros(rows, cols))
    return block


def _free_block(rng: random.Random, monoid: CyclicMonoid, side: Side) -> _RawBlock:
    count = 1 if monoid.order > 3 else rng.randint(1, 2)
    points = [(f"s{i}", rng.randrange(monoid.order)) for i in range(count)]
    module = free_module(monoid, points)
    if side is Side.RIGHT:
        module = dual_module(module)
    return _RawBlock(
        [g.orders for g in module.groups],
        [h.matrix for h in module.push1],
        [h.matrix for h in module.pull1],
    )


def _transpose_shapes(block: _RawBlock, monoid: CyclicMonoid) -> _RawBlock:
    # a constant-on-objects block written A(x) -> A(x+1) read as B(x+1) -> B(x)
    push1, pull1 = [], []
    for x in monoid.elements():
        x1 = monoid.add(x, 1)
        for src, dst in ((block.push1, push1), (block.pull1, pull1)):
            mat = src[x]
            if mat.rows and mat.cols:
                dst.append(mat)
            else:
                dst.append(IntMatrix.zeros(len(block.orders[x]), len(block.orders[x1])))
    return _RawBlock(block.orders, push1, pull1)


def _random_automorphism(
    rng: random.Random, orders: Sequence[int], steps: int
) -> Tuple[IntMatrix, IntMatrix]:
    """(g, g^-1) built from elementary moves that are automorphisms of the group."""
    n = len(orders)
    g = IntMatrix.identity(n).to_lists()
    g_inv = IntMatrix.identity(n).to_lists()
    for _ in range(steps if n else 0):
        if rng.random() < 0.2:
            i = rng.randrange(n)
            g[i] = [-a for a in g[i]]
            for row in g_inv:
                row[i] = -row[i]
            continue
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        d_j, e_i = orders[j], orders[i]
        if d_j and not e_i:
            # a torsion coordinate cannot feed a free one
            continue
        step = e_i // gcd(e_i, d_j) if (d_j and e_i) else 1
        c = step * rng.choice([-2, -1, 1, 2])
        # coordinate i += c * coordinate j, i.e. g <- E g and g_inv <- g_inv E^-1
        for col in range(n):
            g[i][col] += c * g[j][col]
        for row in g_inv:
            row[j] -= c * row[i]
    return IntMatrix.from_rows(g, n), IntMatrix.from_rows(g_inv, n)


def _assemble(
    rng: random.Random,
    monoid: CyclicMonoid,
    side: Side,
    blocks: Sequence[_RawBlock],
    conjugate: bool,
) -> LeechModule:
    canon = []
    for x in monoid.elements():
        raw_orders: Tuple[int, ...] = ()
        for block in blocks:
            raw_orders += block.orders[x]
        canon.append(canonical_form(raw_orders))

    groups = [c.group for c in canon]
    autos = []
    for group in groups:
        if conjugate:
            autos.append(_random_automorphism(rng, group.orders, 3 * group.ngens))
        else:
            autos.append((IntMatrix.identity(group.ngens), IntMatrix.identity(group.ngens)))

    push1, pull1 = [], []
    for x in monoid.elements():
        x1 = monoid.add(x, 1)
        source, target = (x, x1) if side is Side.LEFT else (x1, x)
        for name, out in (("push1", push1), ("pull1", pull1)):
            raw = IntMatrix.block_diagonal([getattr(b, name)[x] for b in blocks])
            normal = canon[target].to_canonical @ raw @ canon[source].from_canonical
            out.append(autos[target][0] @ normal @ autos[source][1])
    return module_from_matrices(monoid, side, groups, push1, pull1)


def random_module(
    monoid: CyclicMonoid,
    side: Side,
    seed: int,
    bounds: Optional[RandomModuleBounds] = None,
    symmetric: bool = False,
) -> LeechModule:
    """A lawful module drawn deterministically from seed."""
    bounds = bounds or RandomModuleBounds()
    side = Side(side)
    rng = random.Random(f"{monoid.index}:{monoid.period}:{side.value}:{seed}")
    blocks = []
    for _ in range(rng.randint(1, bounds.max_blocks)):
        if bounds.allow_free and not symmetric and rng.random() < 0.3:
            blocks.append(_free_block(rng, monoid, side))
            continue
        block = _bi_action_block(rng, monoid, bounds, symmetric)
        blocks.append(block if side is Side.LEFT else _transpose_shapes(block, monoid))
    module = _assemble(rng, monoid, side, blocks, bounds.conjugate)
    logger.debug(f"random {side.value} module over {monoid}, seed {seed}: {module}")
    return module


def random_ordinary_module(
    monoid: CyclicMonoid,
    side: Side,
    seed: int,
    bounds: Optional[RandomModuleBounds] = None,
) -> LeechModule:
    """A random constant-on-objects module with the other generator acting trivially.

    No automorphism scrambling, so the result is literally of from_ordinary shape.
    """
    bounds = bounds or RandomModuleBounds()
    side = Side(side)
    rng = random.Random(f"ordinary:{monoid.index}:{monoid.period}:{side.value}:{seed}")
    blocks = [
        _bi_action_block(rng, monoid, bounds, symmetric=False, ordinary=side)
        for _ in range(rng.randint(1, bounds.max_blocks))
    ]
    return _assemble(rng, monoid, side, blocks, conjugate=False)
