"""Weighted core-EP and dual core-EP inverses and the identities they obey.

``core_ep`` returns the E-weighted core-EP inverse: the unique ``X`` with
``XA^{k+1} = A^k``, ``AX^2 = X`` and ``(EAX)* = EAX`` where
``k = ind(A)``. ``dual_core_ep`` returns the F-weighted dual core-EP
inverse: ``A^{k+1}X = A^k``, ``X^2A = X`` and ``(FXA)* = FXA``.

Existence is not guaranteed for indefinite weights; such cases come back
as :class:`NoExist` rather than an exception.
"""

from __future__ import annotations

import logging

from weighted_core_ep.classical import (
    drazin,
    group_inverse,
    one_four_f,
    one_three_e,
    weighted_mp,
)
from weighted_core_ep.exceptions import (
    ConstructionError,
    DimensionError,
    PreconditionError,
)
from weighted_core_ep.linalg import (
    agrees,
    index,
    is_zero,
    require_square,
    solve_left,
    solve_right,
)
from weighted_core_ep.matrix import Matrix, Tolerance
from weighted_core_ep.results import (
    ConstructionPath,
    HypothesisFailed,
    Inconsistent,
    InverseKind,
    InverseResult,
    NoExist,
)
from weighted_core_ep.verify import certify, ensure_certified, range_equal
from weighted_core_ep.weights import Weight

logger = logging.getLogger(__name__)

__all__ = [
    "additive_core_ep",
    "additive_drazin",
    "additive_dual_core_ep",
    "core_ep",
    "core_ep_from_factorization",
    "core_ep_of_core_ep",
    "core_ep_power",
    "core_ep_via_weighted_mp",
    "drazin_from_core_ep",
    "drazin_from_dual_core_ep",
    "dual_core_ep",
    "dual_core_ep_from_factorization",
    "dual_core_ep_of_dual_core_ep",
    "dual_core_ep_power",
    "dual_factor_witness",
    "factor_witness",
    "is_core_ep_by_ranges",
    "is_dual_core_ep_by_ranges",
    "weighted_core",
    "weighted_dual_core",
]


def _prepare(
    a: Matrix, weight: Weight, side: str, tol: Tolerance | None
) -> Tolerance:
    n = require_square(a)
    if weight.size != n:
        raise DimensionError(
            f"Weight {side} is {weight.size}x{weight.size} but A is {n}x{n}"
        )
    return tol or Tolerance.for_backend(a.backend)


def _power_for(k: int, m: int | None) -> int:
    if m is None:
        return k
    if m < k:
        raise PreconditionError(f"Power m={m} is below the index k={k}")
    return m


def _unchecked_drazin(a: Matrix, tol: Tolerance) -> Matrix:
    # The core-EP certificate covers the product built from it.
    return drazin(a, tol, cross_check=False)


# Index-one weighted core inverses


def weighted_core(
    a: Matrix, e: Weight, tol: Tolerance | None = None
) -> Matrix | NoExist:
    """E-weighted core inverse ``A^# A Y`` with ``Y`` in ``A{1,3^E}``."""
    tol = _prepare(a, e, "E", tol)
    sharp = group_inverse(a, tol)
    if isinstance(sharp, NoExist):
        return sharp
    y = one_three_e(a, e, tol)
    if isinstance(y, NoExist):
        return y
    value = sharp @ a @ y
    report = certify(a, value, InverseKind.WEIGHTED_CORE, e=e, tol=tol)
    ensure_certified(report, "weighted core inverse")
    return value


def weighted_dual_core(
    a: Matrix, f: Weight, tol: Tolerance | None = None
) -> Matrix | NoExist:
    """F-weighted dual core inverse ``Y A A^#`` with ``Y`` in ``A{1,4^F}``."""
    tol = _prepare(a, f, "F", tol)
    sharp = group_inverse(a, tol)
    if isinstance(sharp, NoExist):
        return sharp
    y = one_four_f(a, f, tol)
    if isinstance(y, NoExist):
        return y
    value = y @ a @ sharp
    report = certify(a, value, InverseKind.WEIGHTED_DUAL_CORE, f=f, tol=tol)
    ensure_certified(report, "weighted dual core inverse")
    return value


# Factorization witnesses


def factor_witness(
    a: Matrix, e: Weight, tol: Tolerance | None = None
) -> Matrix | Inconsistent:
    """Solve ``A^k = X ((A^k)*)^2 E A^k`` for ``X``."""
    tol = _prepare(a, e, "E", tol)
    ak = a.power(index(a, tol))
    ak_h = ak.H
    return solve_right(ak_h @ ak_h @ e.matrix @ ak, ak, tol)


def dual_factor_witness(
    a: Matrix, f: Weight, tol: Tolerance | None = None
) -> Matrix | Inconsistent:
    """Solve ``A^k = A^k F^{-1} ((A^k)*)^2 Z`` for ``Z``."""
    tol = _prepare(a, f, "F", tol)
    ak = a.power(index(a, tol))
    ak_h = ak.H
    return solve_left(ak @ f.inverse @ ak_h @ ak_h, ak, tol)


def core_ep_from_factorization(
    a: Matrix, e: Weight, x: Matrix, tol: Tolerance | None = None
) -> Matrix:
    """``A^D A^{2k} X* E`` for a solution ``X`` of the factor equation."""
    tol = _prepare(a, e, "E", tol)
    k = index(a, tol)
    ak = a.power(k)
    ak_h = ak.H
    if not agrees(x @ ak_h @ ak_h @ e.matrix @ ak, ak, tol):
        raise PreconditionError("X does not solve A^k = X((A^k)*)^2 E A^k")
    value = drazin(a, tol) @ a.power(2 * k) @ x.H @ e.matrix
    report = certify(a, value, InverseKind.CORE_EP_E, e=e, k=k, tol=tol)
    ensure_certified(report, "core-EP inverse from factorization")
    return value


def dual_core_ep_from_factorization(
    a: Matrix, f: Weight, z: Matrix, tol: Tolerance | None = None
) -> Matrix:
    """``F^{-1} Z* A^{2k} A^D`` for a solution ``Z`` of the dual equation."""
    tol = _prepare(a, f, "F", tol)
    k = index(a, tol)
    ak = a.power(k)
    ak_h = ak.H
    if not agrees(ak @ f.inverse @ ak_h @ ak_h @ z, ak, tol):
        raise PreconditionError("Z does not solve A^k = A^k F^-1((A^k)*)^2 Z")
    value = f.inverse @ z.H @ a.power(2 * k) @ drazin(a, tol)
    report = certify(a, value, InverseKind.DUAL_CORE_EP_F, f=f, k=k, tol=tol)
    ensure_certified(report, "dual core-EP inverse from factorization")
    return value


# Core-EP inverses


def core_ep(
    a: Matrix,
    e: Weight,
    tol: Tolerance | None = None,
    *,
    m: int | None = None,
    path: ConstructionPath | str = ConstructionPath.THM_ONETHREE_POWER,
) -> InverseResult | NoExist:
    """E-weighted core-EP inverse of ``A``.

    ``m`` (default ``ind(A)``) is the power used by the construction;
    every ``m >= ind(A)`` and every path gives the same matrix.
    """
    tol = _prepare(a, e, "E", tol)
    path = ConstructionPath(path)
    k = index(a, tol)
    m = k if path is ConstructionPath.FACTOR_SUFFICIENT else _power_for(k, m)
    logger.debug("core_ep: k=%d m=%d path=%s", k, m, path)
    am = a.power(m)
    eye = Weight.identity(a.rows, a.backend)

    value: Matrix | NoExist
    if path is ConstructionPath.THM_ONETHREE_POWER:
        y = one_three_e(am, e, tol)
        value = y if isinstance(y, NoExist) else _unchecked_drazin(a, tol) @ am @ y
    elif path is ConstructionPath.COR_WEIGHTED_MP:
        w = weighted_mp(am, e, eye, tol)
        value = w if isinstance(w, NoExist) else _unchecked_drazin(a, tol) @ am @ w
    elif path is ConstructionPath.PROP_MP_OF_POWER:
        w = weighted_mp(a.power(m + 1), e, eye, tol)
        value = w if isinstance(w, NoExist) else am @ w
    else:
        x = factor_witness(a, e, tol)
        if isinstance(x, Inconsistent):
            value = NoExist("A^k = X((A^k)*)^2 E A^k has no solution")
        else:
            value = core_ep_from_factorization(a, e, x, tol)

    if isinstance(value, NoExist):
        logger.warning("E-weighted core-EP inverse does not exist: %s", value.reason)
        return value
    report = certify(a, value, InverseKind.CORE_EP_E, e=e, k=k, tol=tol)
    ensure_certified(report, f"core-EP inverse ({path})")
    return InverseResult(
        value=value,
        kind=InverseKind.CORE_EP_E,
        report=report,
        index_used=k,
        power_used=m,
        path=str(path),
    )


def dual_core_ep(
    a: Matrix,
    f: Weight,
    tol: Tolerance | None = None,
    *,
    m: int | None = None,
    path: ConstructionPath | str = ConstructionPath.THM_ONETHREE_POWER,
) -> InverseResult | NoExist:
    """F-weighted dual core-EP inverse of ``A``; mirror of :func:`core_ep`."""
    tol = _prepare(a, f, "F", tol)
    path = ConstructionPath(path)
    k = index(a, tol)
    m = k if path is ConstructionPath.FACTOR_SUFFICIENT else _power_for(k, m)
    logger.debug("dual_core_ep: k=%d m=%d path=%s", k, m, path)
    am = a.power(m)
    eye = Weight.identity(a.rows, a.backend)

    value: Matrix | NoExist
    if path is ConstructionPath.THM_ONETHREE_POWER:
        y = one_four_f(am, f, tol)
        value = y if isinstance(y, NoExist) else y @ am @ _unchecked_drazin(a, tol)
    elif path is ConstructionPath.COR_WEIGHTED_MP:
        w = weighted_mp(am, eye, f, tol)
        value = w if isinstance(w, NoExist) else w @ am @ _unchecked_drazin(a, tol)
    elif path is ConstructionPath.PROP_MP_OF_POWER:
        w = weighted_mp(a.power(m + 1), eye, f, tol)
        value = w if isinstance(w, NoExist) else w @ am
    else:
        z = dual_factor_witness(a, f, tol)
        if isinstance(z, Inconsistent):
            value = NoExist("A^k = A^k F^-1((A^k)*)^2 Z has no solution")
        else:
            value = dual_core_ep_from_factorization(a, f, z, tol)

    if isinstance(value, NoExist):
        logger.warning(
            "F-weighted dual core-EP inverse does not exist: %s", value.reason
        )
        return value
    report = certify(a, value, InverseKind.DUAL_CORE_EP_F, f=f, k=k, tol=tol)
    ensure_certified(report, f"dual core-EP inverse ({path})")
    return InverseResult(
        value=value,
        kind=InverseKind.DUAL_CORE_EP_F,
        report=report,
        index_used=k,
        power_used=m,
        path=str(path),
    )


def core_ep_via_weighted_mp(
    a: Matrix, e: Weight, tol: Tolerance | None = None, *, m: int | None = None
) -> Matrix | NoExist:
    """``A^D A^m (A^m)†_{E,I}``, cross-checked against the other routes.

    For positive definite ``E`` the result is also compared with
    ``A^m (A^{m+1})†_{E,I}``.
    """
    tol = _prepare(a, e, "E", tol)
    result = core_ep(a, e, tol, m=m, path=ConstructionPath.COR_WEIGHTED_MP)
    if isinstance(result, NoExist):
        return result
    others = [core_ep(a, e, tol, m=m)]
    if e.positive_definite:
        others.append(
            core_ep(a, e, tol, m=m, path=ConstructionPath.PROP_MP_OF_POWER)
        )
    for other in others:
        if not isinstance(other, InverseResult) or not agrees(
            result.value, other.value, tol
        ):
            raise ConstructionError(
                "Weighted Moore-Penrose route disagrees with the core-EP route"
            )
    return result.value


# Identities


def drazin_from_core_ep(
    a: Matrix, x: Matrix, m: int, tol: Tolerance | None = None
) -> Matrix:
    """``X^{m+1} A^m``, the Drazin inverse when ``X`` is a core-EP inverse."""
    require_square(a)
    k = index(a, tol or Tolerance.for_backend(a.backend))
    if m < k:
        raise PreconditionError(f"Power m={m} is below the index k={k}")
    return x.power(m + 1) @ a.power(m)


def drazin_from_dual_core_ep(
    a: Matrix, y: Matrix, m: int, tol: Tolerance | None = None
) -> Matrix:
    """``A^m Y^{m+1}``, the Drazin inverse when ``Y`` is a dual core-EP inverse."""
    require_square(a)
    k = index(a, tol or Tolerance.for_backend(a.backend))
    if m < k:
        raise PreconditionError(f"Power m={m} is below the index k={k}")
    return a.power(m) @ y.power(m + 1)


def core_ep_power(
    a: Matrix, e: Weight, l: int, tol: Tolerance | None = None
) -> Matrix | NoExist:
    """Core-EP inverse of ``A^l``, equal to the ``l``-th power of ``A``'s."""
    if l < 1:
        raise PreconditionError("The power l must be at least 1")
    tol = _prepare(a, e, "E", tol)
    base = core_ep(a, e, tol)
    if isinstance(base, NoExist):
        return base
    result = core_ep(a.power(l), e, tol)
    if isinstance(result, NoExist):
        raise ConstructionError("Core-EP inverse of A exists but not of A^l")
    x = base.value
    if not agrees(result.value, x.power(l), tol):
        raise ConstructionError("(A^l) core-EP differs from the l-th power")
    if not agrees(a.power(l - 1) @ result.value, x, tol):
        raise ConstructionError("A^(l-1) (A^l) core-EP differs from A's")
    return result.value


def dual_core_ep_power(
    a: Matrix, f: Weight, l: int, tol: Tolerance | None = None
) -> Matrix | NoExist:
    """Dual core-EP inverse of ``A^l``, equal to the ``l``-th power of ``A``'s."""
    if l < 1:
        raise PreconditionError("The power l must be at least 1")
    tol = _prepare(a, f, "F", tol)
    base = dual_core_ep(a, f, tol)
    if isinstance(base, NoExist):
        return base
    result = dual_core_ep(a.power(l), f, tol)
    if isinstance(result, NoExist):
        raise ConstructionError("Dual core-EP inverse of A exists but not of A^l")
    y = base.value
    if not agrees(result.value, y.power(l), tol):
        raise ConstructionError("(A^l) dual core-EP differs from the l-th power")
    if not agrees(result.value @ a.power(l - 1), y, tol):
        raise ConstructionError("(A^l) dual core-EP A^(l-1) differs from A's")
    return result.value


def core_ep_of_core_ep(
    a: Matrix, e: Weight, tol: Tolerance | None = None
) -> Matrix | NoExist:
    """Core-EP inverse of the core-EP inverse, which is ``A^2 X``."""
    tol = _prepare(a, e, "E", tol)
    base = core_ep(a, e, tol)
    if isinstance(base, NoExist):
        return base
    value = a.power(2) @ base.value
    again = core_ep(base.value, e, tol)
    if not isinstance(again, InverseResult) or not agrees(again.value, value, tol):
        raise ConstructionError("Core-EP of the core-EP inverse differs from A^2 X")
    return value


def dual_core_ep_of_dual_core_ep(
    a: Matrix, f: Weight, tol: Tolerance | None = None
) -> Matrix | NoExist:
    """Dual core-EP inverse of the dual core-EP inverse, which is ``Y A^2``."""
    tol = _prepare(a, f, "F", tol)
    base = dual_core_ep(a, f, tol)
    if isinstance(base, NoExist):
        return base
    value = base.value @ a.power(2)
    again = dual_core_ep(base.value, f, tol)
    if not isinstance(again, InverseResult) or not agrees(again.value, value, tol):
        raise ConstructionError(
            "Dual core-EP of the dual core-EP inverse differs from Y A^2"
        )
    return value


# Additive laws


def _failed_hypotheses(checks: dict[str, Matrix], tol: Tolerance) -> list[str]:
    return [name for name, product in checks.items() if not is_zero(product, tol)]


def _combine(x: Matrix, y: Matrix, subtract: bool) -> Matrix:
    return x - y if subtract else x + y


def _check_pair(a: Matrix, b: Matrix) -> None:
    require_square(a)
    if a.shape != b.shape:
        raise DimensionError(f"A is {a.shape} but B is {b.shape}")


def additive_core_ep(
    a: Matrix,
    b: Matrix,
    e: Weight,
    tol: Tolerance | None = None,
    *,
    subtract: bool = False,
) -> Matrix | HypothesisFailed | NoExist:
    """Core-EP inverse of ``A ± B`` as the sum or difference of the parts.

    Needs ``A*EB = 0`` and ``AB = 0 = BA``.
    """
    _check_pair(a, b)
    tol = _prepare(a, e, "E", tol)
    failed = _failed_hypotheses(
        {"A*EB = 0": a.H @ e.matrix @ b, "AB = 0": a @ b, "BA = 0": b @ a},
        tol,
    )
    if failed:
        return HypothesisFailed(tuple(failed))
    parts = [core_ep(a, e, tol), core_ep(b, e, tol)]
    for part in parts:
        if isinstance(part, NoExist):
            return part
    x, y = (p.value for p in parts if isinstance(p, InverseResult))
    value = _combine(x, y, subtract)
    whole = core_ep(_combine(a, b, subtract), e, tol)
    if not isinstance(whole, InverseResult) or not agrees(whole.value, value, tol):
        raise ConstructionError("Additive core-EP identity does not hold")
    return value


def additive_dual_core_ep(
    a: Matrix,
    b: Matrix,
    f: Weight,
    tol: Tolerance | None = None,
    *,
    subtract: bool = False,
) -> Matrix | HypothesisFailed | NoExist:
    """Dual core-EP inverse of ``A ± B``.

    Needs ``AF^{-1}B* = 0`` and ``AB = 0 = BA``.
    """
    _check_pair(a, b)
    tol = _prepare(a, f, "F", tol)
    failed = _failed_hypotheses(
        {"AF^-1B* = 0": a @ f.inverse @ b.H, "AB = 0": a @ b, "BA = 0": b @ a},
        tol,
    )
    if failed:
        return HypothesisFailed(tuple(failed))
    parts = [dual_core_ep(a, f, tol), dual_core_ep(b, f, tol)]
    for part in parts:
        if isinstance(part, NoExist):
            return part
    x, y = (p.value for p in parts if isinstance(p, InverseResult))
    value = _combine(x, y, subtract)
    whole = dual_core_ep(_combine(a, b, subtract), f, tol)
    if not isinstance(whole, InverseResult) or not agrees(whole.value, value, tol):
        raise ConstructionError("Additive dual core-EP identity does not hold")
    return value


def additive_drazin(
    a: Matrix,
    b: Matrix,
    tol: Tolerance | None = None,
    *,
    subtract: bool = False,
) -> Matrix | HypothesisFailed:
    """Drazin inverse of ``A ± B`` when ``AB = 0 = BA``."""
    _check_pair(a, b)
    tol = tol or Tolerance.for_backend(a.backend)
    failed = _failed_hypotheses({"AB = 0": a @ b, "BA = 0": b @ a}, tol)
    if failed:
        return HypothesisFailed(tuple(failed))
    value = _combine(drazin(a, tol), drazin(b, tol), subtract)
    if not agrees(drazin(_combine(a, b, subtract), tol), value, tol):
        raise ConstructionError("Additive Drazin identity does not hold")
    return value


# Range characterizations


def is_core_ep_by_ranges(
    a: Matrix, x: Matrix, e: Weight, tol: Tolerance | None = None
) -> bool:
    """``XAX = X``, ``R(X) = R(A^k)`` and ``R(X*) = R(EA^k)``."""
    tol = _prepare(a, e, "E", tol)
    ak = a.power(index(a, tol))
    return (
        agrees(x @ a @ x, x, tol)
        and range_equal(x, ak, tol)
        and range_equal(x.H, e.matrix @ ak, tol)
    )


def is_dual_core_ep_by_ranges(
    a: Matrix, x: Matrix, f: Weight, tol: Tolerance | None = None
) -> bool:
    """``XAX = X``, ``R(X*) = R((A^k)*)`` and ``R(FX) = R((A^k)*)``."""
    tol = _prepare(a, f, "F", tol)
    ak_h = a.power(index(a, tol)).H
    return (
        agrees(x @ a @ x, x, tol)
        and range_equal(x.H, ak_h, tol)
        and range_equal(f.matrix @ x, ak_h, tol)
    )
