"""Hermitian invertible weight matrices."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from weighted_core_ep.exceptions import InvalidWeightError, SingularMatrixError
from weighted_core_ep.linalg import agrees, inverse
from weighted_core_ep.matrix import Backend, Matrix, Tolerance

logger = logging.getLogger(__name__)

__all__ = ["Weight", "weight_or_identity"]


@dataclass(frozen=True, slots=True)
class Weight:
    """A validated weight ``E`` or ``F``.

    Build instances with :meth:`validate`; the inverse and the positive
    definiteness flag are computed once there.
    """

    matrix: Matrix
    inverse: Matrix
    positive_definite: bool
    name: str = "W"

    @classmethod
    def validate(
        cls, matrix: Matrix, tol: Tolerance | None = None, name: str = "W"
    ) -> Weight:
        tol = tol or Tolerance.for_backend(matrix.backend)
        if not matrix.is_square:
            raise InvalidWeightError(
                f"Weight {name} must be square, got {matrix.shape}"
            )
        if not agrees(matrix, matrix.H, tol):
            raise InvalidWeightError(f"Weight {name} is not Hermitian")
        try:
            inv = inverse(matrix, tol)
        except SingularMatrixError as exc:
            raise InvalidWeightError(f"Weight {name} is singular") from exc
        positive = matrix.kernel.is_positive_definite(matrix.data)
        if not positive:
            logger.debug("Weight %s is Hermitian but not positive definite", name)
        return cls(matrix, inv, positive, name)

    @classmethod
    def identity(cls, n: int, backend: Backend | str = Backend.EXACT) -> Weight:
        eye = Matrix.identity(n, backend)
        return cls(eye, eye, True, "I")

    @property
    def size(self) -> int:
        return self.matrix.rows

    @property
    def backend(self) -> Backend:
        return self.matrix.backend

    def to_float(self) -> Weight:
        if not self.matrix.is_exact:
            return self
        return Weight(
            self.matrix.to_float(),
            self.inverse.to_float(),
            self.positive_definite,
            self.name,
        )


def weight_or_identity(weight: Weight | None, n: int, backend: Backend) -> Weight:
    return weight if weight is not None else Weight.identity(n, backend)
