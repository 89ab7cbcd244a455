"""Exact kernel: elimination over Gaussian rationals."""

from __future__ import annotations

import math
from collections.abc import Sequence
from fractions import Fraction
from typing import Any

import numpy as np

from weighted_core_ep.exceptions import DimensionError, SingularMatrixError
from weighted_core_ep.protocols import Backend
from weighted_core_ep.scalars import ONE, ZERO, GaussianRational

__all__ = ["ExactKernel", "row_reduce"]

Rows = list[list[GaussianRational]]

_conj = np.frompyfunc(GaussianRational.conjugate, 1, 1)


def _from_rows(rows: Rows, shape: tuple[int, int]) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            out[i, j] = value
    return out


def row_reduce(a: np.ndarray) -> tuple[Rows, list[int]]:
    """Reduced row echelon form of ``a`` and its pivot columns."""
    m, n = a.shape
    rows: Rows = [list(row) for row in a]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        pivot = next((i for i in range(r, m) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].reciprocal()
        if inv != ONE:
            rows[r] = [x * inv if x else x for x in rows[r]]
        lead = rows[r]
        for i in range(m):
            factor = rows[i][c]
            if i != r and factor:
                rows[i] = [
                    x - factor * y if y else x
                    for x, y in zip(rows[i], lead, strict=True)
                ]
        pivots.append(c)
        r += 1
    return rows, pivots


class ExactKernel:
    """Kernel for ``dtype=object`` arrays of ``GaussianRational``."""

    backend = Backend.EXACT

    def asarray(self, rows: Sequence[Sequence[Any]]) -> np.ndarray:
        converted = [[GaussianRational.coerce(x) for x in row] for row in rows]
        width = {len(row) for row in converted}
        if len(width) > 1:
            raise DimensionError("Rows have different lengths")
        shape = (len(converted), width.pop() if width else 0)
        return _from_rows(converted, shape)

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return np.full((rows, cols), ZERO, dtype=object)

    def identity(self, n: int) -> np.ndarray:
        out = self.zeros(n, n)
        for i in range(n):
            out[i, i] = ONE
        return out

    def conj_transpose(self, a: np.ndarray) -> np.ndarray:
        if a.size == 0:
            return np.empty((a.shape[1], a.shape[0]), dtype=object)
        return np.asarray(_conj(a.T), dtype=object)

    def frobenius_norm(self, a: np.ndarray) -> float:
        total = sum((z.abs2() for z in a.flat), Fraction(0))
        return math.sqrt(total)

    def is_zero(self, a: np.ndarray) -> bool:
        return not any(a.flat)

    def rank(self, a: np.ndarray, rank_rel: float = 0.0) -> int:
        if a.size == 0:
            return 0
        return len(row_reduce(a)[1])

    def inverse(self, a: np.ndarray, rank_rel: float = 0.0) -> np.ndarray:
        n, cols = a.shape
        if n != cols:
            raise DimensionError(f"Inverse needs a square matrix, got {a.shape}")
        augmented = np.hstack([a, self.identity(n)])
        rows, pivots = row_reduce(augmented)
        if pivots[:n] != list(range(n)):
            raise SingularMatrixError("Matrix is singular")
        return _from_rows([row[n:] for row in rows], (n, n))

    def solve(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        out: np.ndarray = self.inverse(a) @ b
        return out

    def full_rank_factorization(
        self, a: np.ndarray, rank_rel: float = 0.0
    ) -> tuple[np.ndarray, np.ndarray]:
        m, n = a.shape
        if a.size == 0:
            return self.zeros(m, 0), self.zeros(0, n)
        rows, pivots = row_reduce(a)
        r = len(pivots)
        left = np.asarray(a[:, pivots], dtype=object).reshape(m, r)
        right = _from_rows(rows[:r], (r, n))
        return left, right

    def pinv(self, a: np.ndarray, rank_rel: float = 0.0) -> np.ndarray:
        m, n = a.shape
        left, right = self.full_rank_factorization(a)
        r = left.shape[1]
        if r == 0:
            return self.zeros(n, m)
        # X = Q*(QQ*)^{-1}(P*P)^{-1}P*
        left_h = self.conj_transpose(left)
        right_h = self.conj_transpose(right)
        inner_right = self.inverse(right @ right_h)
        inner_left = self.inverse(left_h @ left)
        return right_h @ inner_right @ inner_left @ left_h

    def is_positive_definite(self, a: np.ndarray) -> bool:
        n = a.shape[0]
        rows: Rows = [list(row) for row in a]
        for i in range(n):
            pivot = rows[i][i]
            if not pivot.is_real() or pivot.real <= 0:
                return False
            lead = rows[i]
            for j in range(i + 1, n):
                if not rows[j][i]:
                    continue
                factor = rows[j][i] / pivot
                rows[j] = [
                    x - factor * y if y else x
                    for x, y in zip(rows[j], lead, strict=True)
                ]
        return True
