"""Sparse elimination of unit pivots ahead of a Smith normal form.

Systems built on free modules are mostly rows of the form x_d = sum a_j x_j, one
per arrow and basis element. Solving those rows by substitution leaves a small
residual system for the dense routines in groups.py.

Variables are raw coordinates Z/o_j (o_j = 0 for Z). Rows are sparse dicts
{variable: coefficient}.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..logging_utils import get_logger
from .matrix import IntMatrix, Vector

logger = get_logger()

Sparse = Dict[int, int]


def _residue(c: int, modulus: int) -> int:
    # symmetric representative, so -1 stays visible as a unit
    if not modulus:
        return c
    r = c % modulus
    return r - modulus if 2 * r > modulus else r


def _reduced(row: Sparse, moduli: Sequence[int]) -> Sparse:
    out = {}
    for j, c in row.items():
        c = _residue(c, moduli[j])
        if c:
            out[j] = c
    return out


def _reduced_by(row: Sparse, modulus: int) -> Sparse:
    out = {}
    for j, c in row.items():
        c = _residue(c, modulus)
        if c:
            out[j] = c
    return out


def _substitute(row: Sparse, expressions: Dict[int, Sparse]) -> Sparse:
    out: Sparse = {}
    for j, c in row.items():
        expr = expressions.get(j)
        if expr is None:
            out[j] = out.get(j, 0) + c
            continue
        for k, a in expr.items():
            out[k] = out.get(k, 0) + c * a
    return out


def _rewrite(expressions: Dict[int, Sparse], j: int, expr: Sparse, moduli: Sequence[int]) -> None:
    # replace variable j by expr inside every stored expression
    for d, old in expressions.items():
        t = old.pop(j, 0)
        if not t:
            continue
        for k, a in expr.items():
            old[k] = old.get(k, 0) + t * a
        expressions[d] = _reduced_by(old, moduli[d])


def _sparse_rows(matrix: IntMatrix) -> List[Sparse]:
    return [{j: a for j, a in enumerate(row) if a} for row in matrix.entries]


def _dense(rows: Sequence[Sparse], columns: Sequence[int]) -> IntMatrix:
    position = {j: i for i, j in enumerate(columns)}
    data = []
    for row in rows:
        dense = [0] * len(columns)
        for j, c in row.items():
            dense[position[j]] = c
        data.append(dense)
    return IntMatrix.from_rows(data, len(columns))


@dataclass
class KernelReduction:
    """{x : rows(x) = 0} as the graph of x_dependent = expressions(x_free).

    The residual rows only involve free variables.
    """

    orders: Tuple[int, ...]
    free: Tuple[int, ...]
    expressions: Dict[int, Sparse]
    residual: List[Sparse]
    residual_moduli: List[int]

    def residual_matrix(self) -> IntMatrix:
        return _dense(self.residual, self.free)

    def free_orders(self) -> Tuple[int, ...]:
        return tuple(self.orders[j] for j in self.free)

    def lift(self, values: Sequence[int]) -> Vector:
        """The solution whose free coordinates are values."""
        x = [0] * len(self.orders)
        for j, a in zip(self.free, values):
            x[j] = a
        for d, expr in self.expressions.items():
            x[d] = sum(c * x[k] for k, c in expr.items())
        return tuple(_residue(a, o) if o else a for a, o in zip(x, self.orders))

    def restrict(self, vector: Sequence[int]) -> List[int]:
        return [vector[j] for j in self.free]


def reduce_kernel_system(
    orders: Sequence[int], matrix: IntMatrix, moduli: Sequence[int]
) -> KernelReduction:
    """Eliminate every variable that some row pins down with a unit coefficient.

    Row i reads sum_j matrix[i, j] x_j = 0 in Z/moduli[i]. A pivot on x_j needs
    coefficient +-1 and moduli[i] == orders[j], so the row fixes x_j exactly.
    """
    orders = tuple(orders)
    expressions: Dict[int, Sparse] = {}
    pending = list(zip(_sparse_rows(matrix), moduli))
    while True:
        progress = False
        leftover = []
        for row, e in pending:
            row = _reduced_by(_substitute(row, expressions), e)
            if not row:
                progress = True
                continue
            pivot = _kernel_pivot(row, e, orders)
            if pivot is None:
                leftover.append((row, e))
                continue
            c = row.pop(pivot)
            expr = _reduced_by({k: -c * a for k, a in row.items()}, orders[pivot])
            _rewrite(expressions, pivot, expr, orders)
            expressions[pivot] = expr
            progress = True
        pending = leftover
        if not progress:
            break
    free = tuple(j for j in range(len(orders)) if j not in expressions)
    logger.debug(
        f"kernel system: {len(orders)} variables, {len(free)} free, {len(pending)} residual rows"
    )
    return KernelReduction(
        orders, free, expressions, [r for r, _ in pending], [e for _, e in pending]
    )


def _kernel_pivot(row: Sparse, modulus: int, orders: Sequence[int]) -> Optional[int]:
    # the last qualifying variable, which for arrow rows is the image coordinate
    for j in sorted(row, reverse=True):
        if row[j] in (1, -1) and orders[j] == modulus:
            return j
    return None


@dataclass
class QuotientReduction:
    """Raw generators modulo relations, with the unit-pivot generators rewritten away.

    Every eliminated generator equals expressions[j] (a combination of kept
    generators) in the quotient; the residual relations involve kept ones only.
    """

    orders: Tuple[int, ...]
    kept: Tuple[int, ...]
    expressions: Dict[int, Sparse]
    residual: List[Sparse]

    def kept_orders(self) -> Tuple[int, ...]:
        return tuple(self.orders[j] for j in self.kept)

    def residual_columns(self) -> List[Vector]:
        return [tuple(r) for r in _dense(self.residual, self.kept).entries]

    def embed(self, values: Sequence[int]) -> Vector:
        """A raw vector with the given kept coordinates and zeros elsewhere."""
        x = [0] * len(self.orders)
        for j, a in zip(self.kept, values):
            x[j] = a
        return tuple(x)

    def rewrite(self, vector: Sequence[int]) -> List[int]:
        """Kept coordinates of a raw vector's class."""
        row = _substitute({j: a for j, a in enumerate(vector) if a}, self.expressions)
        return [row.get(j, 0) for j in self.kept]


def reduce_quotient_system(
    orders: Sequence[int], relations: Sequence[Sequence[int]]
) -> QuotientReduction:
    """Tietze moves: a relation with a unit coefficient on e_j expresses e_j.

    Eliminating e_j of order o_j turns its order relation into o_j * expression.
    """
    orders = tuple(orders)
    expressions: Dict[int, Sparse] = {}
    pending = [{j: a for j, a in enumerate(r) if a} for r in relations]
    while True:
        progress = False
        leftover = []
        for row in pending:
            row = _reduced(_substitute(row, expressions), orders)
            if not row:
                progress = True
                continue
            pivot = next((j for j in sorted(row, reverse=True) if row[j] in (1, -1)), None)
            if pivot is None:
                leftover.append(row)
                continue
            c = row.pop(pivot)
            expr = _reduced({k: -c * a for k, a in row.items()}, orders)
            _rewrite_quotient(expressions, pivot, expr, orders)
            expressions[pivot] = expr
            if orders[pivot]:
                leftover.append({k: orders[pivot] * a for k, a in expr.items()})
            progress = True
        pending = leftover
        if not progress:
            break
    kept = tuple(j for j in range(len(orders)) if j not in expressions)
    logger.debug(
        f"quotient system: {len(orders)} generators, {len(kept)} kept, {len(pending)} relations"
    )
    return QuotientReduction(orders, kept, expressions, pending)


def _rewrite_quotient(
    expressions: Dict[int, Sparse], j: int, expr: Sparse, orders: Sequence[int]
) -> None:
    for d, old in expressions.items():
        t = old.pop(j, 0)
        if not t:
            continue
        for k, a in expr.items():
            old[k] = old.get(k, 0) + t * a
        expressions[d] = _reduced(old, orders)
