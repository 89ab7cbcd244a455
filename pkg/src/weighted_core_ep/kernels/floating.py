"""Float kernel: ``complex128`` arrays, SVD rank decisions."""

from __future__ import annotations

from collections.abc import Sequence
from typing import Any

import numpy as np

from weighted_core_ep.exceptions import (
    BackendMismatchError,
    DimensionError,
    SingularMatrixError,
)
from weighted_core_ep.protocols import Backend
from weighted_core_ep.scalars import GaussianRational

__all__ = ["FloatKernel"]


def _to_complex(value: Any) -> complex:
    if isinstance(value, GaussianRational):
        raise BackendMismatchError(
            f"Exact value {value} cannot enter the float backend"
        )
    if isinstance(value, Sequence) and not isinstance(value, str):
        real, imag = value
        return complex(float(real), float(imag))
    return complex(value)


class FloatKernel:
    """Kernel for ``complex128`` arrays.

    Numerical rank counts singular values above
    ``rank_rel * sigma_max * max(rows, cols)``.
    """

    backend = Backend.FLOAT

    def asarray(self, rows: Sequence[Sequence[Any]]) -> np.ndarray:
        widths = {len(row) for row in rows}
        if len(widths) > 1:
            raise DimensionError("Rows have different lengths")
        cols = widths.pop() if widths else 0
        out = np.empty((len(rows), cols), dtype=np.complex128)
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                out[i, j] = _to_complex(value)
        return out

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return np.zeros((rows, cols), dtype=np.complex128)

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.complex128)

    def conj_transpose(self, a: np.ndarray) -> np.ndarray:
        return np.ascontiguousarray(a.conj().T)

    def frobenius_norm(self, a: np.ndarray) -> float:
        if a.size == 0:
            return 0.0
        return float(np.linalg.norm(a, "fro"))

    def is_zero(self, a: np.ndarray) -> bool:
        return not np.any(a)

    def _cutoff(self, a: np.ndarray, sigma: np.ndarray, rank_rel: float) -> float:
        if sigma.size == 0:
            return 0.0
        return rank_rel * float(sigma[0]) * max(a.shape)

    def _svd(
        self, a: np.ndarray, rank_rel: float
    ) -> tuple[np.ndarray, np.ndarray, np.ndarray, int]:
        u, sigma, vh = np.linalg.svd(a, full_matrices=False)
        cutoff = self._cutoff(a, sigma, rank_rel)
        r = int(np.count_nonzero(sigma > cutoff))
        return u, sigma, vh, r

    def rank(self, a: np.ndarray, rank_rel: float) -> int:
        if a.size == 0:
            return 0
        return self._svd(a, rank_rel)[3]

    def inverse(self, a: np.ndarray, rank_rel: float) -> np.ndarray:
        n, cols = a.shape
        if n != cols:
            raise DimensionError(f"Inverse needs a square matrix, got {a.shape}")
        if self.rank(a, rank_rel) < n:
            raise SingularMatrixError("Matrix is numerically singular")
        return np.linalg.inv(a)

    def solve(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        try:
            return np.linalg.solve(a, b)
        except np.linalg.LinAlgError as exc:
            raise SingularMatrixError("Matrix is singular") from exc

    def pinv(self, a: np.ndarray, rank_rel: float) -> np.ndarray:
        m, n = a.shape
        if a.size == 0:
            return self.zeros(n, m)
        u, sigma, vh, r = self._svd(a, rank_rel)
        if r == 0:
            return self.zeros(n, m)
        return (vh[:r].conj().T / sigma[:r]) @ u[:, :r].conj().T

    def full_rank_factorization(
        self, a: np.ndarray, rank_rel: float
    ) -> tuple[np.ndarray, np.ndarray]:
        m, n = a.shape
        if a.size == 0:
            return self.zeros(m, 0), self.zeros(0, n)
        u, sigma, vh, r = self._svd(a, rank_rel)
        return u[:, :r] * sigma[:r], vh[:r]

    def is_positive_definite(self, a: np.ndarray) -> bool:
        try:
            np.linalg.cholesky(a)
        except np.linalg.LinAlgError:
            return False
        return True

    def cholesky_upper(self, a: np.ndarray) -> np.ndarray:
        """Upper factor ``R`` with ``a = R* R``."""
        try:
            lower = np.linalg.cholesky(a)
        except np.linalg.LinAlgError as exc:
            raise SingularMatrixError("Matrix is not positive definite") from exc
        return self.conj_transpose(lower)
