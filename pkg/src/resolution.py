"""The free resolution F_* -> Z of the constant module over C_(m,q).

F_2r is free on one generator v_r with pi(v_r) = r.m and F_2r+1 is free on w_r
with pi(w_r) = r.m + 1. At an element x the group F_n(x) has basis the pairs
(u, v) with u + pi + v = x, standing for u_* v^* of the generator.

    d(u, w_r, v)     = (u+1, v_r, v) - (u, v_r, v+1)
    d(u, v_r+1, v)   = sum_{t < m+q} (u+t, w_r, v+(m+q-t-1)) - sum_{t < m} (u+t, w_r, v+(m-t-1))

Coincident terms are merged, so coefficients above 1 occur.
"""

from collections import defaultdict
from functools import lru_cache
from typing import Dict, List, Tuple

from pydantic import BaseModel

from .abelian import (
    AbGroup,
    AbHom,
    IntMatrix,
    identity,
    subquotient,
)
from .leech.module import first_difference, homs_equal
from .logging_utils import get_logger
from .models import ValidationReport
from .monoid import CyclicMonoid
from .utils.timing import measure_time

logger = get_logger()

Pair = Tuple[int, int]


class ResolutionLevel(BaseModel):

    degree: int
    generator: str
    r: int
    pi: int
    bases: List[List[Pair]]


class FreeResolution:
    """Bases, differentials and contracting homotopy of F_*, built on demand and cached."""

    def __init__(self, monoid: CyclicMonoid):
        self.monoid = monoid
        self._bases: Dict[Tuple[int, int], List[Pair]] = {}
        self._index: Dict[Tuple[int, int], Dict[Pair, int]] = {}
        self._differentials: Dict[Tuple[int, int], AbHom] = {}
        self._homotopies: Dict[Tuple[int, int], AbHom] = {}

    # bases

    def pi(self, n: int) -> int:
        r = n // 2
        base = self.monoid.scalar(r, self.monoid.index)
        return base if n % 2 == 0 else self.monoid.add(base, 1)

    def generator_name(self, n: int) -> str:
        return f"{'v' if n % 2 == 0 else 'w'}_{n // 2}"

    def basis(self, n: int, x: int) -> List[Pair]:
        key = (n, x)
        if key not in self._bases:
            monoid, pi = self.monoid, self.pi(n)
            pairs = [
                (u, v)
                for u in monoid.elements()
                for v in monoid.elements()
                if monoid.project(u + pi + v) == x
            ]
            self._bases[key] = pairs
            self._index[key] = {p: i for i, p in enumerate(pairs)}
        return self._bases[key]

    def position(self, n: int, x: int, pair: Pair) -> int:
        self.basis(n, x)
        return self._index[(n, x)][pair]

    def group(self, n: int, x: int) -> AbGroup:
        return AbGroup.free(len(self.basis(n, x)))

    def level(self, n: int) -> ResolutionLevel:
        return ResolutionLevel(
            degree=n,
            generator=self.generator_name(n),
            r=n // 2,
            pi=self.pi(n),
            bases=[self.basis(n, x) for x in self.monoid.elements()],
        )

    # maps

    def _from_images(self, target_n: int, x: int, images: List[Dict[Pair, int]]) -> IntMatrix:
        rows = len(self.basis(target_n, x))
        columns = []
        for image in images:
            col = [0] * rows
            for pair, c in image.items():
                col[self.position(target_n, x, pair)] += c
            columns.append(col)
        return IntMatrix.from_columns(columns, rows)

    def boundary_of(self, n: int, pair: Pair) -> Dict[Pair, int]:
        """d(u, g_n, v) as a formal sum over pairs of F_{n-1}."""
        monoid = self.monoid
        m, total = monoid.index, monoid.order
        u, v = pair
        image: Dict[Pair, int] = defaultdict(int)
        if n % 2:
            image[(monoid.add(u, 1), v)] += 1
            image[(u, monoid.add(v, 1))] -= 1
        else:
            for upper, sign in ((total, 1), (m, -1)):
                for t in range(upper):
                    image[(monoid.add(u, t), monoid.add(v, upper - t - 1))] += sign
        return image

    def differential(self, n: int, x: int) -> AbHom:
        """d_n : F_n(x) -> F_{n-1}(x)."""
        if n < 1:
            raise ValueError(f"differential needs n >= 1, got {n}")
        key = (n, x)
        if key not in self._differentials:
            source = self.basis(n, x)
            matrix = self._from_images(n - 1, x, [self.boundary_of(n, p) for p in source])
            self._differentials[key] = AbHom(self.group(n, x), self.group(n - 1, x), matrix)
        return self._differentials[key]

    def augmentation(self, x: int) -> AbHom:
        """epsilon : F_0(x) -> Z(x), every basis element to the generator (x)."""
        rank = len(self.basis(0, x))
        return AbHom(self.group(0, x), AbGroup.free(1), IntMatrix.from_rows([[1] * rank], rank))

    def homotopy_phi(self, x: int) -> AbHom:
        """phi : Z(x) -> F_0(x), (x) to (0, v_0, x)."""
        rank = len(self.basis(0, x))
        col = [0] * rank
        col[self.position(0, x, (0, x))] = 1
        return AbHom(AbGroup.free(1), self.group(0, x), IntMatrix.from_columns([col], rank))

    def homotopy_of(self, n: int, pair: Pair) -> Dict[Pair, int]:
        monoid = self.monoid
        u, v = pair
        image: Dict[Pair, int] = defaultdict(int)
        if n % 2:
            # odd to even: only u = m+q-1 survives
            if u == monoid.order - 1:
                image[(0, v)] += 1
        else:
            for t in range(u):
                image[(t, monoid.add(v, u - t - 1))] += 1
        return image

    def homotopy_Phi(self, n: int, x: int) -> AbHom:
        """Phi : F_n(x) -> F_{n+1}(x)."""
        key = (n, x)
        if key not in self._homotopies:
            source = self.basis(n, x)
            matrix = self._from_images(n + 1, x, [self.homotopy_of(n, p) for p in source])
            self._homotopies[key] = AbHom(self.group(n, x), self.group(n + 1, x), matrix)
        return self._homotopies[key]

    # checks

    def verify_exactness(self, max_degree: int) -> ValidationReport:
        """d.d = 0, the contracting homotopy identities and ker = im, for n <= max_degree."""
        monoid = self.monoid
        report = ValidationReport(name=f"exactness of F_* over {monoid} up to degree {max_degree}")

        def expect_equal(f: AbHom, g: AbHom, check: str, x: int, n: int) -> None:
            report.record(homs_equal(f, g), check, x, f"degree {n}", first_difference(f, g))

        with measure_time() as elapsed:
            for x in monoid.elements():
                eps, phi = self.augmentation(x), self.homotopy_phi(x)
                d_1 = self.differential(1, x)
                expect_equal(eps @ phi, identity(AbGroup.free(1)), "eps.phi = id", x, 0)
                expect_equal(
                    phi @ eps + d_1 @ self.homotopy_Phi(0, x),
                    identity(self.group(0, x)),
                    "phi.eps + d.Phi = id",
                    x,
                    0,
                )
                report.record((eps @ d_1).is_zero(), "eps.d = 0", x, "degree 1")
                report.record(subquotient(eps, d_1).is_trivial(), "ker eps = im d", x, "degree 0")

                for n in range(1, max_degree + 1):
                    d_n, d_next = self.differential(n, x), self.differential(n + 1, x)
                    report.record((d_n @ d_next).is_zero(), "d.d = 0", x, f"degree {n}")
                    expect_equal(
                        self.homotopy_Phi(n - 1, x) @ d_n + d_next @ self.homotopy_Phi(n, x),
                        identity(self.group(n, x)),
                        "Phi.d + d.Phi = id",
                        x,
                        n,
                    )
                    report.record(
                        subquotient(d_n, d_next).is_trivial(), "ker d = im d", x, f"degree {n}"
                    )
        logger.info(f"{report.summary().splitlines()[0]} in {elapsed():.1f} ms")
        return report

    def collapse_counts(self, u: int) -> Tuple[int, int]:
        """How many t in each sum of the even differential give u + t = m+q-1."""
        monoid = self.monoid
        top = monoid.order - 1
        first = sum(1 for t in range(monoid.order) if monoid.add(u, t) == top)
        second = sum(1 for t in range(monoid.index) if monoid.add(u, t) == top)
        return first, second

    def collapse_count_report(self) -> ValidationReport:
        """With l = u // q: l + 1 terms of the first sum and l of the second collapse."""
        monoid = self.monoid
        report = ValidationReport(name=f"collapse counts over {monoid}")
        for u in monoid.elements():
            laps = u // monoid.period
            expected = (laps + 1, laps)
            got = self.collapse_counts(u)
            report.record(got == expected, "collapse", u, f"expected {expected}, got {got}")
        return report


@lru_cache(maxsize=32)
def get_resolution(monoid: CyclicMonoid) -> FreeResolution:
    return FreeResolution(monoid)


def basis(monoid: CyclicMonoid, n: int, x: int) -> List[Pair]:
    return get_resolution(monoid).basis(n, x)


def resolution_level(monoid: CyclicMonoid, n: int) -> ResolutionLevel:
    return get_resolution(monoid).level(n)


def differential(monoid: CyclicMonoid, n: int, x: int) -> AbHom:
    return get_resolution(monoid).differential(n, x)


def augmentation(monoid: CyclicMonoid, x: int) -> AbHom:
    return get_resolution(monoid).augmentation(x)


def homotopy_phi(monoid: CyclicMonoid, x: int) -> AbHom:
    return get_resolution(monoid).homotopy_phi(x)


def homotopy_Phi(monoid: CyclicMonoid, n: int, x: int) -> AbHom:
    return get_resolution(monoid).homotopy_Phi(n, x)


def verify_exactness(monoid: CyclicMonoid, max_degree: int) -> ValidationReport:
    return get_resolution(monoid).verify_exactness(max_degree)


def collapse_count_report(monoid: CyclicMonoid) -> ValidationReport:
    return get_resolution(monoid).collapse_count_report()
