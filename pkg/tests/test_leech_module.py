"""
Tests for left and right modules: axioms, constructors and morphisms.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.abelian import AbGroup, AbHom, IntMatrix, identity, multiplication
from src.leech import (
    RandomModuleBounds,
    act,
    constant_Z,
    direct_sum_modules,
    dual_module,
    free_basis,
    free_module,
    from_ordinary,
    is_morphism,
    is_symmetric,
    module_from_matrices,
    pull,
    push,
    random_module,
    random_ordinary_module,
    trivial_module,
    validate,
)
from src.leech.module import homs_equal
from src.models import Side
from src.monoid import Arrow, CyclicMonoid
from src.utils.exceptions import (
    ActionViolatesCongruenceError,
    DimensionMismatchError,
    InvalidGroupError,
    WrongSideError,
)

MONOIDS = [(0, 2), (1, 1), (1, 2), (2, 3), (3, 4)]


@pytest.fixture
def c12():
    return CyclicMonoid(index=1, period=2)


@pytest.mark.parametrize("m,q", MONOIDS)
@pytest.mark.parametrize("side", [Side.LEFT, Side.RIGHT])
def test_constant_z_is_lawful(m, q, side):
    module = constant_Z(CyclicMonoid(index=m, period=q), side)
    report = validate(module)
    assert report.passed, report.summary()
    assert is_symmetric(module)


@pytest.mark.parametrize("m,q", MONOIDS)
def test_free_modules_and_duals_are_lawful(m, q):
    monoid = CyclicMonoid(index=m, period=q)
    module = free_module(monoid, [("a", 0), ("b", 1)])
    assert validate(module).passed
    assert validate(dual_module(module)).passed


def test_free_module_ranks(c12):
    module = free_module(c12, [("v", 0)])
    # F(0) has only (0, v, 0)
    assert module.groups[0] == AbGroup.free(1)
    for x in c12.elements():
        assert module.groups[x].free_rank == len(free_basis(c12, [0], x))


def test_free_module_action_moves_basis_triples(c12):
    module = free_module(c12, [("v", 0)])
    basis = {x: free_basis(c12, [0], x) for x in c12.elements()}
    arrow = Arrow(1, 0, 1)
    moved = act(module, arrow)
    image = moved.apply((1,))
    target = c12.arrow_target(arrow)
    expected = [0] * len(basis[target])
    expected[basis[target].index((1, 0, 1))] = 1
    assert list(image) == expected


@pytest.mark.parametrize("m,q", MONOIDS)
@pytest.mark.parametrize("side", [Side.LEFT, Side.RIGHT])
def test_random_modules_are_lawful(m, q, side):
    monoid = CyclicMonoid(index=m, period=q)
    for seed in range(100):
        report = validate(random_module(monoid, side, seed))
        assert report.passed, f"seed {seed}: {report.summary()}"


@settings(max_examples=100, deadline=None)
@given(
    st.sampled_from(MONOIDS),
    st.sampled_from([Side.LEFT, Side.RIGHT]),
    st.integers(min_value=0, max_value=2**32),
)
def test_random_modules_are_lawful_for_any_seed(mq, side, seed):
    module = random_module(CyclicMonoid(index=mq[0], period=mq[1]), side, seed)
    report = validate(module)
    assert report.passed, report.summary()


def test_random_modules_are_reproducible(c12):
    bounds = RandomModuleBounds(max_blocks=2, max_torsion=4)
    first = random_module(c12, Side.LEFT, 7, bounds)
    second = random_module(c12, Side.LEFT, 7, bounds)
    assert first == second


@pytest.mark.parametrize("seed", range(5))
def test_symmetric_random_modules(seed):
    monoid = CyclicMonoid(index=2, period=3)
    for side in (Side.LEFT, Side.RIGHT):
        module = random_module(monoid, side, seed, symmetric=True)
        assert is_symmetric(module)
        assert validate(module).passed


def test_random_ordinary_modules_are_lawful():
    monoid = CyclicMonoid(index=2, period=2)
    for seed in range(4):
        assert validate(random_ordinary_module(monoid, Side.LEFT, seed)).passed
        assert validate(random_ordinary_module(monoid, Side.RIGHT, seed)).passed


def test_bounds_from_config():
    assert RandomModuleBounds.from_config(None) == RandomModuleBounds()
    bounds = RandomModuleBounds.from_config({"max_blocks": 1, "allow_free": False})
    assert bounds.max_blocks == 1
    assert not bounds.allow_free


@pytest.mark.parametrize("side", [Side.LEFT, Side.RIGHT])
def test_push_and_pull_iterates_compose(side):
    monoid = CyclicMonoid(index=2, period=3)
    module = random_module(monoid, side, 3)
    for x in monoid.elements():
        for k in range(4):
            for step in range(3):
                for op in (push, pull):
                    longer = op(module, k + step, x)
                    if side is Side.LEFT:
                        split = op(module, step, monoid.add(x, k)) @ op(module, k, x)
                    else:
                        split = op(module, k, x) @ op(module, step, monoid.add(x, k))
                    assert homs_equal(longer, split)


def test_iterate_zero_is_identity(c12):
    module = free_module(c12, [("v", 1)])
    for x in c12.elements():
        assert homs_equal(push(module, 0, x), identity(module.groups[x]))


def test_from_ordinary_checks_the_congruence(c12):
    z = AbGroup.free(1)
    with pytest.raises(ActionViolatesCongruenceError):
        # 2 . (4 - 1) != 0
        from_ordinary(c12, Side.LEFT, z, multiplication(z, 2))

    flip = from_ordinary(c12, Side.LEFT, z, multiplication(z, -1))
    assert validate(flip).passed
    assert not is_symmetric(flip)


def test_from_ordinary_right_side_acts_by_pull(c12):
    z = AbGroup.free(1)
    module = from_ordinary(c12, Side.RIGHT, z, multiplication(z, -1))
    assert all(homs_equal(h, identity(z)) for h in module.push1)
    assert all(h.matrix.to_lists() == [[-1]] for h in module.pull1)


def test_from_ordinary_rejects_wrong_shape(c12):
    with pytest.raises(DimensionMismatchError):
        from_ordinary(c12, Side.LEFT, AbGroup.free(1), identity(AbGroup.cyclic(2)))


def test_trivial_module_on_torsion(c12):
    module = trivial_module(c12, Side.LEFT, AbGroup.cyclic(6))
    assert validate(module).passed
    assert is_symmetric(module)


def test_validate_reports_periodicity_failures(c12):
    z = AbGroup.free(1)
    doubling = IntMatrix.from_rows([[2]])
    module = module_from_matrices(
        c12, Side.LEFT, [z] * 3, [doubling] * 3, [IntMatrix.identity(1)] * 3
    )
    report = validate(module)
    assert not report.passed
    assert {v.check for v in report.violations} == {"A"}


def test_validate_reports_non_commuting_generators():
    monoid = CyclicMonoid(index=0, period=2)
    z2 = AbGroup.free(2)
    upper = IntMatrix.from_rows([[1, 1], [0, 1]])
    lower = IntMatrix.from_rows([[1, 0], [1, 1]])
    module = module_from_matrices(monoid, Side.LEFT, [z2] * 2, [upper] * 2, [lower] * 2)
    report = validate(module)
    assert "B" in {v.check for v in report.violations}


def test_module_rejects_mismatched_shapes(c12):
    z = AbGroup.free(1)
    with pytest.raises(DimensionMismatchError):
        module_from_matrices(
            c12, Side.LEFT, [z, AbGroup.free(2), z], [IntMatrix.identity(1)] * 3,
            [IntMatrix.identity(1)] * 3,
        )


def test_dual_module_restrictions(c12):
    with pytest.raises(WrongSideError):
        dual_module(constant_Z(c12, Side.RIGHT))
    with pytest.raises(InvalidGroupError):
        dual_module(trivial_module(c12, Side.LEFT, AbGroup.cyclic(2)))


def test_direct_sum_of_modules(c12):
    z = AbGroup.free(1)
    flip = from_ordinary(c12, Side.LEFT, z, multiplication(z, -1))
    total = direct_sum_modules(constant_Z(c12), flip)
    assert validate(total).passed
    assert all(g == AbGroup.free(2) for g in total.groups)

    with pytest.raises(WrongSideError):
        direct_sum_modules(constant_Z(c12), constant_Z(c12, Side.RIGHT))


def test_is_morphism(c12):
    z = AbGroup.free(1)
    constant = constant_Z(c12)
    doubling = [multiplication(z, 2)] * c12.order
    assert is_morphism(doubling, constant, constant).passed

    flip = from_ordinary(c12, Side.LEFT, z, multiplication(z, -1))
    report = is_morphism([identity(z)] * c12.order, constant, flip)
    assert not report.passed
    assert report.violations[0].check == "naturality"

    elsewhere = constant_Z(CyclicMonoid(index=0, period=3))
    assert not is_morphism(doubling, constant, elsewhere).passed
    assert not is_morphism(doubling[:2], constant, constant).passed


def test_morphism_from_free_module_generator(c12):
    # F{v} at 0 -> Z picking out the generator is natural
    module = free_module(c12, [("v", 0)])
    constant = constant_Z(c12)
    maps = [
        AbHom(g, AbGroup.free(1), IntMatrix.from_rows([[1] * g.free_rank], g.free_rank))
        for g in module.groups
    ]
    assert is_morphism(maps, module, constant).passed
