"""Shared fixtures for weighted-core-ep tests."""

from __future__ import annotations

from dataclasses import dataclass

import pytest

from weighted_core_ep.classical import drazin, moore_penrose
from weighted_core_ep.core_ep import core_ep, dual_core_ep
from weighted_core_ep.matrix import Backend, Matrix, Tolerance
from weighted_core_ep.results import InverseResult
from weighted_core_ep.sampling import Instance, sample_instances
from weighted_core_ep.weights import Weight
from weighted_core_ep.worked_examples import EXAMPLE_ONE, EXAMPLE_TWO

POOL_SEED = 20240611


@dataclass(frozen=True)
class Example:
    a: Matrix
    e: Weight
    f: Weight | None
    golden: dict[str, Matrix]


def _example(source, backend: Backend) -> Example:
    def build(rows):
        return source.matrix(rows, backend)

    tol = Tolerance.for_backend(backend)
    return Example(
        a=build(source.a),
        e=Weight.validate(build(source.e), tol, "E"),
        f=None if source.f is None else Weight.validate(build(source.f), tol, "F"),
        golden={key: build(rows) for key, rows in source.golden.items()},
    )


@pytest.fixture
def float_tol() -> Tolerance:
    return Tolerance.floating()


@pytest.fixture
def ex1() -> Example:
    return _example(EXAMPLE_ONE, Backend.EXACT)


@pytest.fixture
def ex2() -> Example:
    return _example(EXAMPLE_TWO, Backend.EXACT)


@pytest.fixture
def ex1_float() -> Example:
    return _example(EXAMPLE_ONE, Backend.FLOAT)


@pytest.fixture
def ex2_float() -> Example:
    return _example(EXAMPLE_TWO, Backend.FLOAT)


@pytest.fixture
def indefinite_pair() -> tuple[Matrix, Weight]:
    """``A`` and an indefinite ``E`` with ``A{1,3^E}`` empty."""
    a = Matrix.from_rows([[1, 0], [0, 0]])
    e = Weight.validate(Matrix.from_rows([[0, 1], [1, 0]]), name="E")
    return a, e


@pytest.fixture(scope="session")
def instance_pool() -> list[Instance]:
    """Deterministic exact instances, n in 2..5, index in 0..3."""
    return list(sample_instances(POOL_SEED, 200))


@pytest.fixture(scope="session")
def small_pool() -> list[Instance]:
    return list(sample_instances(POOL_SEED + 1, 40, sizes=range(2, 5)))


@pytest.fixture(scope="session")
def gaussian_pool() -> list[Instance]:
    return list(
        sample_instances(POOL_SEED + 2, 24, sizes=range(2, 4), gaussian=True)
    )


@pytest.fixture(scope="session")
def index_one_pool() -> list[Instance]:
    return list(sample_instances(POOL_SEED + 3, 40, indices=range(1, 2)))


@dataclass(frozen=True)
class Solved:
    """A pool instance with the inverses most property checks start from."""

    instance: Instance
    core_ep: Matrix
    dual_core_ep: Matrix
    drazin: Matrix
    moore_penrose: Matrix

    @property
    def a(self) -> Matrix:
        return self.instance.a

    @property
    def e(self) -> Weight:
        return self.instance.e

    @property
    def f(self) -> Weight:
        return self.instance.f

    @property
    def k(self) -> int:
        return self.instance.index


def _solve(instance: Instance) -> Solved:
    x = core_ep(instance.a, instance.e)
    y = dual_core_ep(instance.a, instance.f)
    assert isinstance(x, InverseResult), x
    assert isinstance(y, InverseResult), y
    return Solved(
        instance=instance,
        core_ep=x.value,
        dual_core_ep=y.value,
        drazin=drazin(instance.a, cross_check=False),
        moore_penrose=moore_penrose(instance.a),
    )


@pytest.fixture(scope="session")
def solved_pool(instance_pool) -> list[Solved]:
    """``instance_pool`` with its core-EP, dual, Drazin and MP inverses."""
    return [_solve(instance) for instance in instance_pool]
