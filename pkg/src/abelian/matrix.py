"""Immutable integer matrices with exact (unbounded) entries."""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from ..utils.exceptions import DimensionMismatchError

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """A rows x cols matrix of Python ints, stored row-major as nested tuples.

    Python ints never overflow, so every product and sum here is exact.
    Zero-row and zero-column matrices are legal and carry their shape.
    """

    rows: int
    cols: int
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatchError("IntMatrix", "nonnegative shape", (self.rows, self.cols))
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatchError(
                "IntMatrix", (self.rows, self.cols), [len(r) for r in self.entries]
            )

    # construction

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int = -1) -> "IntMatrix":
        data = tuple(tuple(int(a) for a in row) for row in rows)
        if cols < 0:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        if any(len(c) != rows for c in columns):
            raise DimensionMismatchError("from_columns", rows, [len(c) for c in columns])
        data = tuple(tuple(int(c[i]) for c in columns) for i in range(rows))
        return cls(rows, len(columns), data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: int = -1, cols: int = -1) -> "IntMatrix":
        rows = len(values) if rows < 0 else rows
        cols = len(values) if cols < 0 else cols
        data = [[0] * cols for _ in range(rows)]
        for i, v in enumerate(values):
            data[i][i] = int(v)
        return cls.from_rows(data, cols)

    @classmethod
    def block_diagonal(cls, blocks: Iterable["IntMatrix"]) -> "IntMatrix":
        blocks = list(blocks)
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        data = [[0] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i, row in enumerate(b.entries):
                data[r0 + i][c0:c0 + b.cols] = row
            r0 += b.rows
            c0 += b.cols
        return cls.from_rows(data, cols)

    # access

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def to_lists(self) -> List[List[int]]:
        return [list(r) for r in self.entries]

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.entries for a in r)

    # arithmetic

    def apply(self, vector: Sequence[int]) -> Vector:
        if len(vector) != self.cols:
            raise DimensionMismatchError("apply", self.cols, len(vector))
        return tuple(sum(a * b for a, b in zip(r, vector) if a) for r in self.entries)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError("matmul", self.cols, other.rows)
        other_cols = other.columns()
        data = tuple(
            tuple(sum(a * b for a, b in zip(r, c) if a) for c in other_cols)
            for r in self.entries
        )
        return IntMatrix(self.rows, other.cols, data)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise DimensionMismatchError("add", self.shape, other.shape)
        data = tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)
        )
        return IntMatrix(self.rows, self.cols, data)

    def __neg__(self) -> "IntMatrix":
        return self.scale(-1)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(tuple(c * a for a in r) for r in self.entries))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(self.columns()))

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise DimensionMismatchError("hstack", self.rows, other.rows)
        data = tuple(r + s for r, s in zip(self.entries, other.entries))
        return IntMatrix(self.rows, self.cols + other.cols, data)

    def vstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.cols:
            raise DimensionMismatchError("vstack", self.cols, other.cols)
        return IntMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def select_rows(self, indices: Sequence[int]) -> "IntMatrix":
        return IntMatrix(len(indices), self.cols, tuple(self.entries[i] for i in indices))

    def select_columns(self, indices: Sequence[int]) -> "IntMatrix":
        data = tuple(tuple(r[j] for j in indices) for r in self.entries)
        return IntMatrix(self.rows, len(indices), data)

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise DimensionMismatchError("determinant", "square", self.shape)
        n = self.rows
        a = self.to_lists()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1
