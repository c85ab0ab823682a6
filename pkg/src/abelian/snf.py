"""Smith normal form over the integers, with both transforms and their inverses."""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..logging_utils import get_logger
from .matrix import IntMatrix, Vector

logger = get_logger()


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ M @ V == D, with U_inv @ U == I and V @ V_inv == I."""

    U: IntMatrix
    U_inv: IntMatrix
    D: IntMatrix
    V: IntMatrix
    V_inv: IntMatrix

    @property
    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.rows, self.D.cols)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


class _Reducer:
    # mutable working state; every elementary step is mirrored on the transforms

    def __init__(self, matrix: IntMatrix):
        self.m, self.n = matrix.rows, matrix.cols
        self.D = matrix.to_lists()
        self.U = IntMatrix.identity(self.m).to_lists()
        self.U_inv = IntMatrix.identity(self.m).to_lists()
        self.V = IntMatrix.identity(self.n).to_lists()
        self.V_inv = IntMatrix.identity(self.n).to_lists()

    def swap_rows(self, i: int, k: int) -> None:
        if i == k:
            return
        for mat in (self.D, self.U):
            mat[i], mat[k] = mat[k], mat[i]
        for row in self.U_inv:
            row[i], row[k] = row[k], row[i]

    def add_row(self, target: int, source: int, c: int) -> None:
        # row_target += c * row_source
        for mat in (self.D, self.U):
            src, dst = mat[source], mat[target]
            for j, a in enumerate(src):
                if a:
                    dst[j] += c * a
        for row in self.U_inv:
            row[source] -= c * row[target]

    def negate_row(self, i: int) -> None:
        for mat in (self.D, self.U):
            mat[i] = [-a for a in mat[i]]
        for row in self.U_inv:
            row[i] = -row[i]

    def swap_cols(self, j: int, l: int) -> None:
        if j == l:
            return
        for mat in (self.D, self.V):
            for row in mat:
                row[j], row[l] = row[l], row[j]
        self.V_inv[j], self.V_inv[l] = self.V_inv[l], self.V_inv[j]

    def add_col(self, target: int, source: int, c: int) -> None:
        # col_target += c * col_source
        for mat in (self.D, self.V):
            for row in mat:
                if row[source]:
                    row[target] += c * row[source]
        src, dst = self.V_inv[target], self.V_inv[source]
        for j, a in enumerate(src):
            if a:
                dst[j] -= c * a

    def smallest_entry(self, t: int) -> Optional[Tuple[int, int]]:
        # smallest nonzero magnitude in the trailing block, first hit in row-major order wins
        best: Optional[Tuple[int, int]] = None
        best_abs = 0
        for i in range(t, self.m):
            row = self.D[i]
            for j in range(t, self.n):
                a = row[j]
                if a and (best is None or abs(a) < best_abs):
                    best, best_abs = (i, j), abs(a)
                    if best_abs == 1:
                        return best
        return best

    def clear_cross(self, t: int) -> bool:
        # reduce column t and row t against the pivot; True when both are clear
        p = self.D[t][t]
        clear = True
        for i in range(t + 1, self.m):
            a = self.D[i][t]
            if a:
                self.add_row(i, t, -(a // p))
                if self.D[i][t]:
                    clear = False
        for j in range(t + 1, self.n):
            a = self.D[t][j]
            if a:
                self.add_col(j, t, -(a // p))
                if self.D[t][j]:
                    clear = False
        return clear

    def non_divisible_row(self, t: int) -> Optional[int]:
        p = self.D[t][t]
        for i in range(t + 1, self.m):
            if any(a % p for a in self.D[i][t + 1:]):
                return i
        return None

    def run(self) -> None:
        for t in range(min(self.m, self.n)):
            while True:
                pivot = self.smallest_entry(t)
                if pivot is None:
                    return
                self.swap_rows(t, pivot[0])
                self.swap_cols(t, pivot[1])
                if not self.clear_cross(t):
                    continue
                bad = self.non_divisible_row(t)
                if bad is None:
                    break
                self.add_row(t, bad, 1)
            if self.D[t][t] < 0:
                self.negate_row(t)

    def result(self) -> SmithDecomposition:
        return SmithDecomposition(
            U=IntMatrix.from_rows(self.U, self.m),
            U_inv=IntMatrix.from_rows(self.U_inv, self.m),
            D=IntMatrix.from_rows(self.D, self.n),
            V=IntMatrix.from_rows(self.V, self.n),
            V_inv=IntMatrix.from_rows(self.V_inv, self.n),
        )


def smith_decompose(matrix: IntMatrix) -> SmithDecomposition:
    """Full Smith decomposition; deterministic for a given input."""
    reducer = _Reducer(matrix)
    reducer.run()
    if matrix.rows * matrix.cols > 400:
        logger.debug(f"SNF of {matrix.rows}x{matrix.cols} matrix done")
    return reducer.result()


def smith_normal_form(matrix: IntMatrix) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, D, V) with U @ matrix @ V == D.

    U and V are unimodular, D is diagonal with a nonnegative divisibility chain.

    >>> U, D, V = smith_normal_form(IntMatrix.from_rows([[2, 4], [6, 8]]))
    >>> D.to_lists()
    [[2, 0], [0, 4]]
    """
    dec = smith_decompose(matrix)
    return dec.U, dec.D, dec.V


def invariant_factors(matrix: IntMatrix) -> List[int]:
    # nonzero diagonal of the SNF, units included
    return [d for d in smith_decompose(matrix).diagonal if d]


def integer_kernel(matrix: IntMatrix) -> List[Vector]:
    """A Z-basis of {x in Z^cols : matrix @ x == 0}."""
    dec = smith_decompose(matrix)
    return [dec.V.column(j) for j in range(dec.rank, matrix.cols)]
