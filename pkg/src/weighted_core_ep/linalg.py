"""Rank, index, factorizations and linear matrix equations.

Every decision takes a :class:`Tolerance`, defaulting to the one of the
matrix backend; exact matrices ignore it and decide by exact arithmetic.
"""

from __future__ import annotations

import logging

from weighted_core_ep.exceptions import DimensionError
from weighted_core_ep.matrix import Matrix, Tolerance
from weighted_core_ep.results import Inconsistent

logger = logging.getLogger(__name__)

__all__ = [
    "agrees",
    "conj_transpose",
    "full_rank_factorization",
    "index",
    "inverse",
    "is_zero",
    "matrix_power",
    "moore_penrose_inverse",
    "rank",
    "relative_residual",
    "require_square",
    "solve_left",
    "solve_nonsingular",
    "solve_right",
]


def _resolve(a: Matrix, tol: Tolerance | None) -> Tolerance:
    return tol or Tolerance.for_backend(a.backend)


def require_square(a: Matrix, what: str = "matrix") -> int:
    if not a.is_square:
        raise DimensionError(f"The {what} must be square, got {a.shape}")
    return a.rows


def conj_transpose(a: Matrix) -> Matrix:
    return a.conj_transpose()


def rank(a: Matrix, tol: Tolerance | None = None) -> int:
    return a.kernel.rank(a.data, _resolve(a, tol).rank_rel)


def index(a: Matrix, tol: Tolerance | None = None) -> int:
    """Smallest ``k >= 0`` with ``rank(A^k) == rank(A^{k+1})``."""
    tol = _resolve(a, tol)
    n = require_square(a)
    previous = n
    power = a
    chain = [n]
    for k in range(n + 1):
        current = rank(power, tol)
        chain.append(current)
        if current == previous:
            logger.debug("Rank chain %s gives index %d", chain, k)
            return k
        previous = current
        power = power @ a
    # rank(A^n) == rank(A^{n+1}) always holds
    return n


def matrix_power(a: Matrix, p: int) -> Matrix:
    require_square(a)
    return a.power(p)


def full_rank_factorization(
    a: Matrix, tol: Tolerance | None = None
) -> tuple[Matrix, Matrix]:
    """``(P, Q)`` with ``A = P Q``; empty inner dimension when ``A = 0``."""
    rank_rel = _resolve(a, tol).rank_rel
    left, right = a.kernel.full_rank_factorization(a.data, rank_rel)
    return Matrix(left, a.backend), Matrix(right, a.backend)


def moore_penrose_inverse(a: Matrix, tol: Tolerance | None = None) -> Matrix:
    return Matrix(a.kernel.pinv(a.data, _resolve(a, tol).rank_rel), a.backend)


def inverse(a: Matrix, tol: Tolerance | None = None) -> Matrix:
    require_square(a)
    return Matrix(a.kernel.inverse(a.data, _resolve(a, tol).rank_rel), a.backend)


def solve_nonsingular(a: Matrix, b: Matrix) -> Matrix:
    """Solve ``A X = B`` for a nonsingular ``A`` without a rank cutoff."""
    require_square(a)
    if a.rows != b.rows:
        raise DimensionError(
            f"A·X = B needs equal row counts, got {a.shape} and {b.shape}"
        )
    return Matrix(a.kernel.solve(a.data, b.data), a.backend)


def relative_residual(lhs: Matrix, rhs: Matrix) -> float:
    """``‖L - R‖_F / (1 + ‖L‖_F + ‖R‖_F)``."""
    if lhs.shape != rhs.shape:
        raise DimensionError(f"Cannot compare {lhs.shape} with {rhs.shape}")
    defect = (lhs - rhs).frobenius_norm()
    if not defect:
        return 0.0
    return defect / (1.0 + lhs.frobenius_norm() + rhs.frobenius_norm())


def agrees(lhs: Matrix, rhs: Matrix, tol: Tolerance | None = None) -> bool:
    """Exact equality, or relative residual within ``tol.residual_rel``."""
    if lhs.shape != rhs.shape:
        raise DimensionError(f"Cannot compare {lhs.shape} with {rhs.shape}")
    if lhs.is_exact:
        return lhs == rhs
    return relative_residual(lhs, rhs) <= _resolve(lhs, tol).residual_rel


def is_zero(a: Matrix, tol: Tolerance | None = None) -> bool:
    if a.is_exact:
        return a.is_zero()
    return agrees(a, Matrix.zeros(a.rows, a.cols, a.backend), tol)


def solve_right(
    b: Matrix, a: Matrix, tol: Tolerance | None = None
) -> Matrix | Inconsistent:
    """Solve ``Z B = A`` for ``Z``.

    The candidate is ``Z = A B†``; the system is consistent exactly when
    that candidate solves it.
    """
    if b.cols != a.cols:
        raise DimensionError(
            f"Z·B = A needs equal column counts, got {b.shape} and {a.shape}"
        )
    z = a @ moore_penrose_inverse(b, tol)
    reproduced = z @ b
    if agrees(reproduced, a, tol):
        return z
    residual = relative_residual(reproduced, a)
    logger.debug("Z·B = A is inconsistent (residual %.3g)", residual)
    return Inconsistent(residual)


def solve_left(
    b: Matrix, a: Matrix, tol: Tolerance | None = None
) -> Matrix | Inconsistent:
    """Solve ``B X = A`` for ``X`` with the candidate ``X = B† A``."""
    if b.rows != a.rows:
        raise DimensionError(
            f"B·X = A needs equal row counts, got {b.shape} and {a.shape}"
        )
    x = moore_penrose_inverse(b, tol) @ a
    reproduced = b @ x
    if agrees(reproduced, a, tol):
        return x
    residual = relative_residual(reproduced, a)
    logger.debug("B·X = A is inconsistent (residual %.3g)", residual)
    return Inconsistent(residual)
