"""The finite cyclic monoid C_(m,q) and its category of factorizations."""

from dataclasses import dataclass
from math import gcd
from typing import List, NamedTuple

from .utils.exceptions import InvalidMonoidError, NotComposableError


class Arrow(NamedTuple):
    # (left, center, right) : center -> left + center + right
    left: int
    center: int
    right: int


@dataclass(frozen=True)
class CyclicMonoid:
    """C_(m,q) = N / (x ~ y iff x = y < m, or x, y >= m and x = y mod q).

    Elements are the canonical representatives 0, 1, ..., m + q - 1 and every
    operation re-normalizes through project().
    """

    index: int
    period: int

    def __post_init__(self) -> None:
        if self.index < 0 or self.period < 1 or self.index + self.period < 2:
            raise InvalidMonoidError(self.index, self.period)

    def __str__(self) -> str:
        return f"C_({self.index},{self.period})"

    @property
    def order(self) -> int:
        return self.index + self.period

    def elements(self) -> List[int]:
        return list(range(self.order))

    def project(self, x: int) -> int:
        if x < 0:
            raise ValueError(f"project() takes a natural number, got {x}")
        if x < self.order:
            return x
        return self.index + (x - self.index) % self.period

    def add(self, x: int, y: int) -> int:
        return self.project(x + y)

    def scalar(self, r: int, x: int) -> int:
        # r.x, computed in N and projected once
        return self.project(r * x)

    def orbit_period(self) -> int:
        """Period 2q / gcd(m, q) of the (co)homology from degree 3 on."""
        return 2 * self.period // gcd(self.index, self.period)

    # arrows of the factorization category

    def is_element(self, x: int) -> bool:
        return 0 <= x < self.order

    def arrow_source(self, arrow: Arrow) -> int:
        return arrow.center

    def arrow_target(self, arrow: Arrow) -> int:
        return self.project(arrow.left + arrow.center + arrow.right)

    def identity_arrow(self, x: int) -> Arrow:
        return Arrow(0, x, 0)

    def compose_arrows(self, g: Arrow, f: Arrow) -> Arrow:
        """g after f: (u, x+y+z, v)(x, y, z) = (u+x, y, z+v)."""
        if g.center != self.arrow_target(f):
            raise NotComposableError(g, f)
        return Arrow(self.add(g.left, f.left), f.center, self.add(f.right, g.right))

    def arrows_between(self, source: int, target: int) -> List[Arrow]:
        return [
            Arrow(u, source, v)
            for u in self.elements()
            for v in self.elements()
            if self.project(u + source + v) == target
        ]


def project(monoid: CyclicMonoid, x: int) -> int:
    return monoid.project(x)


def scalar(monoid: CyclicMonoid, r: int, x: int) -> int:
    return monoid.scalar(r, x)


def compose_arrows(monoid: CyclicMonoid, g: Arrow, f: Arrow) -> Arrow:
    return monoid.compose_arrows(g, f)
