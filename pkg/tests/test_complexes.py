"""
Tests for the fast and first-principles (co)chain complexes.
"""

import pytest

from src.abelian import AbGroup, identity, multiplication, zero_hom
from src.complexes import (
    AbComplex,
    Direction,
    compare_complexes,
    comparison_hom,
    comparison_tensor,
    complex_homology,
    free_hom_fast,
    free_hom_oracle,
    free_tensor_oracle,
    hom_complex_fast,
    hom_complex_oracle,
    naturality_all_arrows_check,
    tensor_complex_fast,
    tensor_complex_oracle,
)
from src.leech import constant_Z, free_module, from_ordinary, random_module
from src.models import Side
from src.monoid import CyclicMonoid
from src.utils.exceptions import (
    CompositionNotZeroError,
    DimensionMismatchError,
    SpotOutOfRangeError,
    WrongSideError,
)

SMALL = [(0, 2), (1, 1), (1, 2), (2, 2)]


def test_complex_requires_zero_composites():
    z = AbGroup.free(1)
    with pytest.raises(CompositionNotZeroError):
        AbComplex(Direction.COCHAIN, (z, z, z), (identity(z), identity(z)))
    with pytest.raises(DimensionMismatchError):
        AbComplex(Direction.COCHAIN, (z, z), ())


def test_complex_homology_of_a_short_cochain():
    # Z -0-> Z -2-> Z -0-> Z
    z = AbGroup.free(1)
    complex_ = AbComplex(
        Direction.COCHAIN,
        (z, z, z, z),
        (zero_hom(z, z), multiplication(z, 2), zero_hom(z, z)),
    )
    assert complex_.top == 2
    assert str(complex_homology(complex_, 0)) == "Z"
    assert str(complex_homology(complex_, 1)) == "0"
    assert str(complex_homology(complex_, 2)) == "Z/2"
    with pytest.raises(SpotOutOfRangeError):
        complex_homology(complex_, 3)


def test_complex_homology_of_a_chain():
    # Z <-3- Z <-0- Z
    z = AbGroup.free(1)
    complex_ = AbComplex(Direction.CHAIN, (z, z, z), (multiplication(z, 3), zero_hom(z, z)))
    assert str(complex_homology(complex_, 0)) == "Z/3"
    assert str(complex_homology(complex_, 1)) == "0"


def test_fast_complex_of_constant_z():
    monoid = CyclicMonoid(index=1, period=2)
    complex_ = hom_complex_fast(constant_Z(monoid), 4)
    assert len(complex_.spots) == 6
    assert [d.matrix.to_lists() for d in complex_.differentials] == [
        [[0]], [[2]], [[0]], [[2]], [[0]]
    ]

    chain = tensor_complex_fast(constant_Z(monoid, Side.RIGHT), 2)
    assert chain.direction is Direction.CHAIN
    assert [d.matrix.to_lists() for d in chain.differentials] == [[[0]], [[2]], [[0]]]


def test_fast_complexes_check_the_side():
    monoid = CyclicMonoid(index=1, period=2)
    with pytest.raises(WrongSideError):
        hom_complex_fast(constant_Z(monoid, Side.RIGHT), 2)
    with pytest.raises(WrongSideError):
        tensor_complex_oracle(constant_Z(monoid, Side.LEFT), 2)


@pytest.mark.parametrize("m,q", SMALL)
def test_free_hom_matches_adjunction(m, q):
    monoid = CyclicMonoid(index=m, period=q)
    module = random_module(monoid, Side.LEFT, 1)
    for pis in ([0], [1], [0, m]):
        oracle = free_hom_oracle(module, pis)
        assert oracle.group == free_hom_fast(module, pis)


@pytest.mark.parametrize("m,q", SMALL)
def test_free_tensor_matches_adjunction(m, q):
    monoid = CyclicMonoid(index=m, period=q)
    module = random_module(monoid, Side.RIGHT, 2)
    for pi in (0, 1):
        spot = free_tensor_oracle(module, [pi])
        assert spot.group == AbGroup.of(module.groups[pi])


@pytest.mark.parametrize("m,q", SMALL)
@pytest.mark.parametrize("seed", range(3))
def test_hom_complexes_agree(m, q, seed):
    module = random_module(CyclicMonoid(index=m, period=q), Side.LEFT, seed)
    fast, oracle = hom_complex_fast(module, 3), hom_complex_oracle(module, 3)
    report = compare_complexes(fast, oracle, comparison_hom(module, 3))
    assert report.passed, report.summary()
    for n in range(4):
        assert str(complex_homology(fast, n)) == str(complex_homology(oracle, n))


@pytest.mark.parametrize("m,q", SMALL)
@pytest.mark.parametrize("seed", range(3))
def test_tensor_complexes_agree(m, q, seed):
    module = random_module(CyclicMonoid(index=m, period=q), Side.RIGHT, seed)
    fast, oracle = tensor_complex_fast(module, 3), tensor_complex_oracle(module, 3)
    report = compare_complexes(fast, oracle, comparison_tensor(module, 3))
    assert report.passed, report.summary()


def test_oracle_complex_of_an_ordinary_module():
    monoid = CyclicMonoid(index=1, period=2)
    z = AbGroup.free(1)
    module = from_ordinary(monoid, Side.LEFT, z, multiplication(z, -1))
    fast, oracle = hom_complex_fast(module, 4), hom_complex_oracle(module, 4)
    assert compare_complexes(fast, oracle, comparison_hom(module, 4)).passed


def test_compare_complexes_catches_a_wrong_comparison():
    monoid = CyclicMonoid(index=0, period=2)
    module = constant_Z(monoid)
    fast, oracle = hom_complex_fast(module, 2), hom_complex_oracle(module, 2)
    maps = comparison_hom(module, 2)
    doubled = [multiplication(c.target, 2) @ c for c in maps]
    report = compare_complexes(fast, oracle, doubled)
    assert not report.passed
    assert {v.check for v in report.violations} == {"isomorphism"}


def test_compare_complexes_rejects_different_shapes():
    monoid = CyclicMonoid(index=0, period=2)
    module = constant_Z(monoid)
    fast, oracle = hom_complex_fast(module, 2), hom_complex_oracle(module, 3)
    report = compare_complexes(fast, oracle, comparison_hom(module, 3))
    assert [v.check for v in report.violations] == ["shape"]


@pytest.mark.parametrize("m,q", [(0, 2), (1, 1), (1, 2), (2, 1), (0, 3)])
@pytest.mark.parametrize("n", [0, 1, 2])
def test_generating_arrows_suffice(m, q, n):
    module = random_module(CyclicMonoid(index=m, period=q), Side.LEFT, n)
    report = naturality_all_arrows_check(module, n)
    assert report.passed, report.summary()


def test_generating_arrows_suffice_for_free_modules():
    monoid = CyclicMonoid(index=1, period=2)
    module = free_module(monoid, [("v", 1)])
    assert naturality_all_arrows_check(module, 1).passed


@pytest.mark.slow
@pytest.mark.parametrize("m,q", [(2, 3), (3, 2), (1, 4)])
def test_larger_oracle_sweep(m, q):
    monoid = CyclicMonoid(index=m, period=q)
    for seed in range(4):
        module = random_module(monoid, Side.LEFT, seed)
        report = compare_complexes(
            hom_complex_fast(module, 5), hom_complex_oracle(module, 5), comparison_hom(module, 5)
        )
        assert report.passed, report.summary()


def test_tensor_spot_of_constant_z():
    # B (x) F{s} at pi = 0 for constant Z is Z, generated by the (0, s, 0) block
    monoid = CyclicMonoid(index=1, period=2)
    spot = free_tensor_oracle(constant_Z(monoid, Side.RIGHT), [0])
    assert spot.group == AbGroup.free(1)
    assert len(spot.presentation.generators) == 1
