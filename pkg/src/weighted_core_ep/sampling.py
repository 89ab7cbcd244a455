"""Random test instances with a prescribed index.

A matrix of index ``j`` is built as ``S diag(C, N) S^{-1}``: ``C`` is an
invertible ``LU`` product, ``N`` is nilpotent with a Jordan block of size
``j`` and ``S`` is unimodular, so every entry stays an integer (or a
Gaussian integer) and the exact backend never leaves the rationals.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from weighted_core_ep.linalg import inverse
from weighted_core_ep.matrix import Backend, Matrix
from weighted_core_ep.scalars import ONE, ZERO, GaussianRational
from weighted_core_ep.weights import Weight

logger = logging.getLogger(__name__)

__all__ = [
    "Instance",
    "indefinite_weight",
    "invertible_block",
    "nilpotent_block",
    "positive_definite_weight",
    "random_instance",
    "sample_instances",
    "unimodular",
]

_ENTRY_BOUND = 3


@dataclass(frozen=True, slots=True)
class Instance:
    """A sampled matrix with its engineered index and two PD weights."""

    a: Matrix
    index: int
    e: Weight
    f: Weight
    seed: int

    def to_float(self) -> Instance:
        return Instance(
            self.a.to_float(),
            self.index,
            self.e.to_float(),
            self.f.to_float(),
            self.seed,
        )


def _entry(
    rng: np.random.Generator, gaussian: bool, nonzero: bool = False
) -> GaussianRational:
    while True:
        re = int(rng.integers(-_ENTRY_BOUND, _ENTRY_BOUND + 1))
        im = int(rng.integers(-1, 2)) if gaussian else 0
        if re or im or not nonzero:
            return GaussianRational(re, im)


def _triangular(
    rng: np.random.Generator,
    n: int,
    *,
    lower: bool,
    unit: bool,
    gaussian: bool,
) -> Matrix:
    rows: list[list[GaussianRational]] = []
    for i in range(n):
        row: list[GaussianRational] = []
        for j in range(n):
            if i == j:
                value = ONE if unit else _entry(rng, gaussian, nonzero=True)
            elif (i > j) == lower:
                value = _entry(rng, gaussian)
            else:
                value = ZERO
            row.append(value)
        rows.append(row)
    return Matrix.from_rows(rows, Backend.EXACT)


def unimodular(
    rng: np.random.Generator, n: int, *, gaussian: bool = False
) -> tuple[Matrix, Matrix]:
    """A random unimodular ``S`` and its inverse.

    ``S`` is a product of a unit lower and a unit upper triangular
    matrix, so its inverse has integer entries too.
    """
    lower = _triangular(rng, n, lower=True, unit=True, gaussian=gaussian)
    upper = _triangular(rng, n, lower=False, unit=True, gaussian=gaussian)
    s = lower @ upper
    return s, inverse(s)


def invertible_block(
    rng: np.random.Generator, n: int, *, gaussian: bool = False
) -> Matrix:
    """``LU`` with unit ``L`` and a nonzero diagonal in ``U``."""
    if n == 0:
        return Matrix.zeros(0, 0)
    lower = _triangular(rng, n, lower=True, unit=True, gaussian=gaussian)
    upper = _triangular(rng, n, lower=False, unit=False, gaussian=gaussian)
    return lower @ upper


def nilpotent_block(size: int, index: int) -> Matrix:
    """Jordan nilpotent matrix of nilpotency ``index``.

    The first block has size ``index``; the rest of ``size`` is filled
    with blocks no larger than it.
    """
    if size == 0:
        return Matrix.zeros(0, 0)
    if not 1 <= index <= size:
        raise ValueError(f"Nilpotency {index} impossible for size {size}")
    rows = [[0] * size for _ in range(size)]
    start = 0
    while start < size:
        block = min(index, size - start)
        for i in range(start, start + block - 1):
            rows[i][i + 1] = 1
        start += block
    return Matrix.from_rows(rows, Backend.EXACT)


def positive_definite_weight(
    rng: np.random.Generator, n: int, *, gaussian: bool = False, name: str = "E"
) -> Weight:
    """``M*M + I`` for a random integer ``M``."""
    m = Matrix.from_rows(
        [[_entry(rng, gaussian) for _ in range(n)] for _ in range(n)]
    )
    return Weight.validate(m.H @ m + Matrix.identity(n), name=name)


def indefinite_weight(
    rng: np.random.Generator, n: int, *, gaussian: bool = False, name: str = "E"
) -> Weight:
    """``S* D S`` with ``S`` unimodular and ``D`` a signed diagonal.

    For ``n >= 2`` the diagonal has entries of both signs.
    """
    signs = [1 if i % 2 == 0 else -1 for i in range(n)]
    rng.shuffle(signs)
    d = Matrix.diag(
        [sign * int(rng.integers(1, _ENTRY_BOUND + 1)) for sign in signs]
    )
    s, _ = unimodular(rng, n, gaussian=gaussian)
    return Weight.validate(s.H @ d @ s, name=name)


def random_instance(
    rng: np.random.Generator,
    n: int,
    index: int,
    *,
    gaussian: bool = False,
    seed: int = 0,
) -> Instance:
    """An ``n x n`` exact matrix of the given index with PD weights."""
    if not 0 <= index <= n:
        raise ValueError(f"Index {index} impossible for size {n}")
    nilpotent = 0 if index == 0 else int(rng.integers(index, n + 1))
    core = invertible_block(rng, n - nilpotent, gaussian=gaussian)
    parts = [p for p in (core, nilpotent_block(nilpotent, index)) if p.rows]
    s, s_inv = unimodular(rng, n, gaussian=gaussian)
    a = s @ Matrix.block_diag(*parts) @ s_inv
    logger.debug(
        "Sampled n=%d index=%d with a %dx%d nilpotent part",
        n,
        index,
        nilpotent,
        nilpotent,
    )
    return Instance(
        a=a,
        index=index,
        e=positive_definite_weight(rng, n, gaussian=gaussian, name="E"),
        f=positive_definite_weight(rng, n, gaussian=gaussian, name="F"),
        seed=seed,
    )


def sample_instances(
    seed: int,
    count: int,
    *,
    sizes: range = range(2, 6),
    indices: range = range(0, 4),
    gaussian: bool = False,
) -> Iterator[Instance]:
    """``count`` deterministic instances cycling over sizes and indices.

    Pairs with ``index > n`` are skipped.
    """
    pairs = [(n, k) for n in sizes for k in indices if k <= n]
    if not pairs:
        raise ValueError("No admissible (size, index) pair")
    for i in range(count):
        n, k = pairs[i % len(pairs)]
        rng = np.random.default_rng([seed, i])
        yield random_instance(rng, n, k, gaussian=gaussian, seed=seed)
