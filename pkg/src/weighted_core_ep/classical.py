"""Moore-Penrose, Drazin, group, {1,3^E}, {1,4^F} and weighted MP inverses."""

from __future__ import annotations

import logging
from typing import Literal

from weighted_core_ep.exceptions import (
    BackendMismatchError,
    ConstructionError,
    DimensionError,
    PreconditionError,
)
from weighted_core_ep.kernels import FloatKernel
from weighted_core_ep.linalg import (
    full_rank_factorization,
    index,
    inverse,
    moore_penrose_inverse,
    rank,
    require_square,
    solve_left,
    solve_nonsingular,
    solve_right,
)
from weighted_core_ep.matrix import Matrix, Tolerance
from weighted_core_ep.results import Inconsistent, InverseKind, NoExist
from weighted_core_ep.verify import certify, ensure_certified
from weighted_core_ep.weights import Weight

logger = logging.getLogger(__name__)

__all__ = [
    "drazin",
    "group_inverse",
    "is_one_four_f_inverse",
    "is_one_three_e_inverse",
    "moore_penrose",
    "one_four_f",
    "one_four_f_member",
    "one_three_e",
    "one_three_e_member",
    "weighted_mp",
]

MoorePenroseMethod = Literal["auto", "factorization", "svd"]
DrazinMethod = Literal["power", "cline"]
WeightedMpPath = Literal["auto", "theorem", "product", "cholesky"]


def _tol(a: Matrix, tol: Tolerance | None) -> Tolerance:
    return tol or Tolerance.for_backend(a.backend)


def _check_weight(weight: Weight, size: int, side: str) -> None:
    if weight.size != size:
        raise DimensionError(
            f"Weight {side} is {weight.size}x{weight.size}, expected "
            f"{size}x{size}"
        )


def moore_penrose(
    a: Matrix,
    tol: Tolerance | None = None,
    *,
    method: MoorePenroseMethod = "auto",
) -> Matrix:
    """Moore-Penrose inverse ``A†``.

    ``factorization`` uses ``Q*(QQ*)^{-1}(P*P)^{-1}P*`` for a full-rank
    factorization ``A = PQ``; ``svd`` is available on the float backend
    only. ``auto`` is factorization for exact matrices and SVD for float.
    """
    tol = _tol(a, tol)
    if method == "auto":
        return moore_penrose_inverse(a, tol)
    if method == "svd":
        if a.is_exact:
            raise PreconditionError("The SVD path needs the float backend")
        return moore_penrose_inverse(a, tol)
    left, right = full_rank_factorization(a, tol)
    if left.cols == 0:
        return Matrix.zeros(a.cols, a.rows, a.backend)
    left_h, right_h = left.H, right.H
    # P*P and QQ* are nonsingular by construction; no rank cutoff applies.
    inner = solve_nonsingular(left_h @ left, left_h)
    return right_h @ solve_nonsingular(right @ right_h, inner)


def _drazin_power(a: Matrix, k: int, tol: Tolerance) -> Matrix:
    ak = a.power(k)
    return ak @ moore_penrose_inverse(a.power(2 * k + 1), tol) @ ak


def _drazin_cline(a: Matrix, tol: Tolerance) -> Matrix:
    # Repeated full-rank factorization M_i = B_{i+1} C_{i+1},
    # M_{i+1} = C_{i+1} B_{i+1}, until C_s B_s is invertible.
    lefts: list[Matrix] = []
    rights: list[Matrix] = []
    current = a
    while True:
        left, right = full_rank_factorization(current, tol)
        r = left.cols
        if r == 0:
            return Matrix.zeros(a.rows, a.cols, a.backend)
        lefts.append(left)
        rights.append(right)
        current = right @ left
        if rank(current, tol) == r:
            break
    result = inverse(current, tol).power(len(lefts) + 1)
    for left, right in zip(reversed(lefts), reversed(rights), strict=True):
        result = left @ result @ right
    return result


def drazin(
    a: Matrix,
    tol: Tolerance | None = None,
    *,
    method: DrazinMethod = "power",
    cross_check: bool = True,
) -> Matrix:
    """Drazin inverse ``A^D``.

    ``power`` computes ``A^l (A^{2l+1})† A^l`` with ``l = ind(A)``;
    ``cline`` uses the full-rank factorization recursion. On the exact
    backend the power route is checked against the recursion unless
    ``cross_check`` is false.
    """
    require_square(a)
    tol = _tol(a, tol)
    k = index(a, tol)
    if k == 0:
        return inverse(a, tol)
    if method == "cline":
        return _drazin_cline(a, tol)
    result = _drazin_power(a, k, tol)
    if a.is_exact and cross_check:
        other = _drazin_cline(a, tol)
        if result != other:
            logger.error("Drazin routes disagree for index-%d matrix", k)
            raise ConstructionError("Drazin power and recursion routes disagree")
    return result


def group_inverse(a: Matrix, tol: Tolerance | None = None) -> Matrix | NoExist:
    require_square(a)
    tol = _tol(a, tol)
    k = index(a, tol)
    if k > 1:
        return NoExist(f"group inverse needs index <= 1, got index {k}")
    return drazin(a, tol)


def one_three_e(
    a: Matrix, e: Weight, tol: Tolerance | None = None
) -> Matrix | NoExist:
    """A ``{1,3^E}`` inverse of ``A``, or ``NoExist`` when none exists.

    Solves ``Z (A*EA) = A``; a solution gives ``Y = Z*E``.
    """
    _check_weight(e, a.rows, "E")
    tol = _tol(a, tol)
    z = solve_right(a.H @ e.matrix @ a, a, tol)
    if isinstance(z, Inconsistent):
        logger.debug("A = Z A*EA has no solution: A{1,3^E} is empty")
        return NoExist("A{1,3^E} is empty: A = Z A*EA has no solution")
    y = z.H @ e.matrix
    report = certify(a, y, InverseKind.ONE_THREE_E, e=e, tol=tol)
    ensure_certified(report, "{1,3^E} inverse")
    return y


def one_four_f(
    a: Matrix, f: Weight, tol: Tolerance | None = None
) -> Matrix | NoExist:
    """A ``{1,4^F}`` inverse of ``A``, or ``NoExist`` when none exists.

    Solves ``(AF^{-1}A*) X = A``; a solution gives ``Y = F^{-1}X*``.
    """
    _check_weight(f, a.cols, "F")
    tol = _tol(a, tol)
    x = solve_left(a @ f.inverse @ a.H, a, tol)
    if isinstance(x, Inconsistent):
        logger.debug("A = AF^-1A* X has no solution: A{1,4^F} is empty")
        return NoExist("A{1,4^F} is empty: A = AF^-1A* X has no solution")
    y = f.inverse @ x.H
    report = certify(a, y, InverseKind.ONE_FOUR_F, f=f, tol=tol)
    ensure_certified(report, "{1,4^F} inverse")
    return y


def one_three_e_member(a: Matrix, y0: Matrix, w: Matrix) -> Matrix:
    """Another ``{1,3^E}`` inverse: ``Y0 + (I - Y0 A) W``."""
    eye = Matrix.identity(a.cols, a.backend)
    return y0 + (eye - y0 @ a) @ w


def one_four_f_member(a: Matrix, y0: Matrix, w: Matrix) -> Matrix:
    """Another ``{1,4^F}`` inverse: ``Y0 + W (I - A Y0)``."""
    eye = Matrix.identity(a.rows, a.backend)
    return y0 + w @ (eye - a @ y0)


def is_one_three_e_inverse(
    a: Matrix, y: Matrix, e: Weight, tol: Tolerance | None = None
) -> bool:
    return certify(a, y, InverseKind.ONE_THREE_E, e=e, tol=_tol(a, tol)).passed


def is_one_four_f_inverse(
    a: Matrix, y: Matrix, f: Weight, tol: Tolerance | None = None
) -> bool:
    return certify(a, y, InverseKind.ONE_FOUR_F, f=f, tol=_tol(a, tol)).passed


def _weighted_mp_theorem(
    a: Matrix, e: Weight, f: Weight, tol: Tolerance
) -> Matrix | NoExist:
    m = a @ f.inverse @ a.H @ e.matrix @ a
    y = solve_left(m, a, tol)
    if isinstance(y, Inconsistent):
        return NoExist("AF^-1A*EA Y = A has no solution")
    z = solve_right(m, a, tol)
    if isinstance(z, Inconsistent):
        return NoExist("Z AF^-1A*EA = A has no solution")
    left = f.inverse @ (e.matrix @ a @ y).H
    right = f.inverse @ (e.matrix @ z @ a).H
    return left @ a @ right


def _weighted_mp_product(
    a: Matrix, e: Weight, f: Weight, tol: Tolerance
) -> Matrix | NoExist:
    y = one_four_f(a, f, tol)
    if isinstance(y, NoExist):
        return y
    x = one_three_e(a, e, tol)
    if isinstance(x, NoExist):
        return x
    return y @ a @ x


def _weighted_mp_cholesky(a: Matrix, e: Weight, f: Weight, tol: Tolerance) -> Matrix:
    if a.is_exact:
        raise PreconditionError("The Cholesky path needs the float backend")
    if not (e.positive_definite and f.positive_definite):
        raise PreconditionError("The Cholesky path needs positive definite weights")
    kernel = a.kernel
    if not isinstance(kernel, FloatKernel):
        raise BackendMismatchError("The Cholesky path needs the float kernel")
    r = Matrix(kernel.cholesky_upper(e.matrix.data), a.backend)
    s = Matrix(kernel.cholesky_upper(f.matrix.data), a.backend)
    s_inv = inverse(s, tol)
    return s_inv @ moore_penrose_inverse(r @ a @ s_inv, tol) @ r


def weighted_mp(
    a: Matrix,
    e: Weight,
    f: Weight,
    tol: Tolerance | None = None,
    *,
    path: WeightedMpPath = "auto",
) -> Matrix | NoExist:
    """Generalized weighted Moore-Penrose inverse ``A†_{E,F}``.

    ``theorem`` decides existence by the consistency of
    ``AF^{-1}A*EA Y = A`` and ``Z AF^{-1}A*EA = A``; ``product`` builds
    ``YAX`` from a ``{1,4^F}`` inverse ``Y`` and a ``{1,3^E}`` inverse
    ``X``; ``cholesky`` needs float matrices and positive definite
    weights. ``auto`` takes cholesky when it applies, theorem otherwise.
    """
    _check_weight(e, a.rows, "E")
    _check_weight(f, a.cols, "F")
    tol = _tol(a, tol)
    if path == "auto":
        cholesky_ok = (
            not a.is_exact and e.positive_definite and f.positive_definite
        )
        path = "cholesky" if cholesky_ok else "theorem"
    if path == "cholesky":
        result: Matrix | NoExist = _weighted_mp_cholesky(a, e, f, tol)
    elif path == "product":
        result = _weighted_mp_product(a, e, f, tol)
    else:
        result = _weighted_mp_theorem(a, e, f, tol)
    if isinstance(result, NoExist):
        logger.debug("Weighted Moore-Penrose inverse: %s", result.reason)
        return result
    report = certify(a, result, InverseKind.WEIGHTED_MP, e=e, f=f, tol=tol)
    ensure_certified(report, f"weighted Moore-Penrose inverse ({path})")
    return result

