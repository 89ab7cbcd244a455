"""Backend vocabulary and the kernel protocol every backend implements."""

from __future__ import annotations

from collections.abc import Sequence
from enum import StrEnum
from typing import Any, Protocol, runtime_checkable

import numpy as np

__all__ = [
    "Backend",
    "LinearAlgebraKernel",
]


class Backend(StrEnum):
    """Scalar backend of a matrix."""

    EXACT = "exact"
    FLOAT = "float"


@runtime_checkable
class LinearAlgebraKernel(Protocol):
    """Array-level linear algebra for one scalar backend.

    Kernels work on 2-D numpy arrays: ``dtype=object`` arrays of
    ``GaussianRational`` for the exact backend, ``complex128`` arrays for
    the float backend. ``rank_rel`` is ignored by exact kernels.
    """

    backend: Backend

    def asarray(self, rows: Sequence[Sequence[Any]]) -> np.ndarray:
        """Convert nested rows of scalars into a kernel array."""
        ...

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        ...

    def identity(self, n: int) -> np.ndarray:
        ...

    def conj_transpose(self, a: np.ndarray) -> np.ndarray:
        ...

    def frobenius_norm(self, a: np.ndarray) -> float:
        ...

    def is_zero(self, a: np.ndarray) -> bool:
        """Exact zero test (every entry equal to zero)."""
        ...

    def rank(self, a: np.ndarray, rank_rel: float) -> int:
        ...

    def inverse(self, a: np.ndarray, rank_rel: float) -> np.ndarray:
        """Inverse of a square matrix; raise SingularMatrixError if none."""
        ...

    def solve(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Solve ``a @ x = b`` for a nonsingular ``a`` with no rank cutoff."""
        ...

    def pinv(self, a: np.ndarray, rank_rel: float) -> np.ndarray:
        """Moore-Penrose inverse."""
        ...

    def full_rank_factorization(
        self, a: np.ndarray, rank_rel: float
    ) -> tuple[np.ndarray, np.ndarray]:
        """Return ``(P, Q)`` with ``a = P @ Q`` and ``r = rank(a)`` columns/rows."""
        ...

    def is_positive_definite(self, a: np.ndarray) -> bool:
        """Positive definiteness of a Hermitian matrix."""
        ...
