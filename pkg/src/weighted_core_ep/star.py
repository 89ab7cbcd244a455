"""Star weighted core-EP matrices, their matrix systems and projectors.

The star E-weighted core-EP matrix of ``A`` is ``A*AX`` with ``X`` the
E-weighted core-EP inverse; the star F-weighted dual core-EP matrix is
``YAA*`` with ``Y`` the F-weighted dual core-EP inverse. Both are outer
inverses of ``(A†)*``. Here ``A†`` is always the unweighted Moore-Penrose
inverse.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from enum import StrEnum

from pydantic import BaseModel

from weighted_core_ep.core_ep import core_ep, dual_core_ep
from weighted_core_ep.linalg import (
    agrees,
    index,
    moore_penrose_inverse,
    relative_residual,
)
from weighted_core_ep.matrix import Matrix, Tolerance
from weighted_core_ep.results import InverseKind, NoExist
from weighted_core_ep.verify import (
    axiom_bundle,
    check_axioms,
    nullspace_equal,
    range_equal,
)
from weighted_core_ep.weights import Weight

logger = logging.getLogger(__name__)

__all__ = [
    "ProjectorReport",
    "StarSide",
    "StarSystemReport",
    "dual_core_ep_star",
    "dual_outer_inverse_identity",
    "dual_star_equivalences",
    "dual_star_projectors",
    "outer_inverse_identity",
    "star_core_ep",
    "star_equivalences",
    "star_projectors",
    "verify_dual_star_system",
    "verify_star_system",
]


class StarSide(StrEnum):
    STAR_CORE_EP = "star_core_ep"
    DUAL_CORE_EP_STAR = "dual_core_ep_star"


class StarSystemReport(BaseModel):
    """Residuals of the matrix system a star matrix uniquely solves."""

    side: StarSide
    residuals: dict[str, float]
    unique_solution: bool
    tolerance_used: float


@dataclass(frozen=True, slots=True)
class ProjectorReport:
    """An idempotent candidate with its range and nullspace checks."""

    projector: Matrix
    idempotency_residual: float
    idempotent: bool
    range_target_met: bool
    nullspace_target_met: bool

    @property
    def passed(self) -> bool:
        return (
            self.idempotent
            and self.range_target_met
            and self.nullspace_target_met
        )


@dataclass(frozen=True, slots=True)
class _Context:
    a: Matrix
    inverse: Matrix
    pinv: Matrix
    pinv_h: Matrix
    ak: Matrix
    tol: Tolerance


# Cached per matrix, weight, tolerance and side.
@lru_cache(maxsize=512)
def _context(
    a: Matrix, weight: Weight, tol: Tolerance | None, dual: bool
) -> _Context | NoExist:
    tol = tol or Tolerance.for_backend(a.backend)
    result = dual_core_ep(a, weight, tol) if dual else core_ep(a, weight, tol)
    if isinstance(result, NoExist):
        return result
    pinv = moore_penrose_inverse(a, tol)
    return _Context(
        a=a,
        inverse=result.value,
        pinv=pinv,
        pinv_h=pinv.H,
        ak=a.power(index(a, tol)),
        tol=tol,
    )


def star_core_ep(
    a: Matrix, e: Weight, tol: Tolerance | None = None
) -> Matrix | NoExist:
    """``A* A X`` with ``X`` the E-weighted core-EP inverse."""
    ctx = _context(a, e, tol, dual=False)
    if isinstance(ctx, NoExist):
        return ctx
    return a.H @ a @ ctx.inverse


def dual_core_ep_star(
    a: Matrix, f: Weight, tol: Tolerance | None = None
) -> Matrix | NoExist:
    """``Y A A*`` with ``Y`` the F-weighted dual core-EP inverse."""
    ctx = _context(a, f, tol, dual=True)
    if isinstance(ctx, NoExist):
        return ctx
    return ctx.inverse @ a @ a.H


def _system_report(
    side: StarSide,
    kind: InverseKind,
    a: Matrix,
    candidate: Matrix,
    tol: Tolerance | None,
    **weights: Weight,
) -> StarSystemReport:
    tol = tol or Tolerance.for_backend(a.backend)
    report = check_axioms(a, candidate, axiom_bundle(kind), tol=tol, **weights)
    return StarSystemReport(
        side=side,
        residuals={r.equation: r.residual for r in report.results},
        unique_solution=report.passed,
        tolerance_used=tol.residual_rel,
    )


def verify_star_system(
    a: Matrix, e: Weight, x: Matrix, tol: Tolerance | None = None
) -> StarSystemReport:
    """Check ``X(A†)*X = X``, ``XA^k = A*A^k`` and ``(A†)*X = AA^{core-EP}``."""
    return _system_report(
        StarSide.STAR_CORE_EP, InverseKind.STAR_CORE_EP, a, x, tol, e=e
    )


def verify_dual_star_system(
    a: Matrix, f: Weight, y: Matrix, tol: Tolerance | None = None
) -> StarSystemReport:
    """Check ``Y(A†)*Y = Y``, ``A^kY = A^kA*`` and ``Y(A†)* = A^{dual}A``."""
    return _system_report(
        StarSide.DUAL_CORE_EP_STAR,
        InverseKind.DUAL_CORE_EP_STAR,
        a,
        y,
        tol,
        f=f,
    )


def star_equivalences(
    a: Matrix, e: Weight, x: Matrix, tol: Tolerance | None = None
) -> list[bool] | NoExist:
    """Evaluate the ten characterizations of the star core-EP matrix.

    Each entry is computed independently; for a correct implementation
    they are all true exactly when ``X`` is the star matrix.
    """
    ctx = _context(a, e, tol, dual=False)
    if isinstance(ctx, NoExist):
        return ctx
    c, p, ph, ak, t = ctx.inverse, ctx.pinv, ctx.pinv_h, ctx.ak, ctx.tol
    ah = a.H
    ac = a @ c
    star = ah @ ac
    p_a = p @ a
    kernel = c @ a @ ph

    def eq(lhs: Matrix, rhs: Matrix) -> bool:
        return agrees(lhs, rhs, t)

    absorbs = eq(x @ ac, x)
    nine = (
        eq(x @ kernel @ x, x)
        and eq(kernel @ x, ac)
        and eq(x @ kernel, ah @ kernel)
    )
    conditions = [
        eq(x, star),
        absorbs and eq(x @ ak, ah @ ak),
        eq(p_a @ x @ ac, x) and eq(ph @ x @ ak, ak),
        absorbs and eq(x @ a, star @ a),
        absorbs and eq(x @ ph, star @ ph),
        eq(p_a @ x, x) and eq(ph @ x, ac),
        eq(p_a @ x, x) and eq(p @ ph @ x, p @ ac),
        eq(p_a @ x, x) and eq(a @ x, a @ star),
        nine,
        nine and eq(kernel @ x @ kernel, kernel),
    ]
    logger.debug("Star characterizations: %s", conditions)
    return conditions


def dual_star_equivalences(
    a: Matrix, f: Weight, y: Matrix, tol: Tolerance | None = None
) -> list[bool] | NoExist:
    """The ten characterizations of the star dual core-EP matrix."""
    ctx = _context(a, f, tol, dual=True)
    if isinstance(ctx, NoExist):
        return ctx
    d, p, ph, ak, t = ctx.inverse, ctx.pinv, ctx.pinv_h, ctx.ak, ctx.tol
    ah = a.H
    da = d @ a
    star = da @ ah
    a_p = a @ p
    kernel = ph @ a @ d

    def eq(lhs: Matrix, rhs: Matrix) -> bool:
        return agrees(lhs, rhs, t)

    absorbs = eq(da @ y, y)
    nine = (
        eq(y @ kernel @ y, y)
        and eq(y @ kernel, da)
        and eq(kernel @ y, kernel @ ah)
    )
    conditions = [
        eq(y, star),
        absorbs and eq(ak @ y, ak @ ah),
        eq(da @ y @ a_p, y) and eq(ak @ y @ ph, ak),
        absorbs and eq(a @ y, a @ star),
        absorbs and eq(ph @ y, ph @ star),
        eq(y @ a_p, y) and eq(y @ ph, da),
        eq(y @ a_p, y) and eq(y @ ph @ p, da @ p),
        eq(y @ a_p, y) and eq(y @ a, star @ a),
        nine,
        nine and eq(kernel @ y @ kernel, kernel),
    ]
    logger.debug("Dual star characterizations: %s", conditions)
    return conditions


def _projector_report(
    projector: Matrix,
    range_target: Matrix,
    nullspace_target: Matrix,
    tol: Tolerance,
) -> ProjectorReport:
    square = projector @ projector
    return ProjectorReport(
        projector=projector,
        idempotency_residual=relative_residual(square, projector),
        idempotent=agrees(square, projector, tol),
        range_target_met=range_equal(projector, range_target, tol),
        nullspace_target_met=nullspace_equal(projector, nullspace_target, tol),
    )


def star_projectors(
    a: Matrix, e: Weight, tol: Tolerance | None = None
) -> tuple[ProjectorReport, ProjectorReport] | NoExist:
    """Projectors ``(A†)*X`` and ``X(A†)*`` of the star core-EP matrix ``X``.

    The first projects onto ``R(A^k)`` along ``N(C)``, the second onto
    ``R(A*A^k)`` along ``N(C(A†)*)``, where ``C`` is the core-EP inverse.
    """
    ctx = _context(a, e, tol, dual=False)
    if isinstance(ctx, NoExist):
        return ctx
    c, ph, ak, t = ctx.inverse, ctx.pinv_h, ctx.ak, ctx.tol
    x = a.H @ a @ c
    first = _projector_report(ph @ x, ak, c, t)
    second = _projector_report(x @ ph, a.H @ ak, c @ ph, t)
    return first, second


def dual_star_projectors(
    a: Matrix, f: Weight, tol: Tolerance | None = None
) -> tuple[ProjectorReport, ProjectorReport] | NoExist:
    """Projectors ``Y(A†)*`` and ``(A†)*Y`` of the star dual matrix ``Y``.

    With ``D`` the dual core-EP inverse, ``Y(A†)* = DA`` projects onto
    ``R(D)`` along ``N(A^k)`` and ``(A†)*Y`` projects onto ``R((A†)*D)``
    along ``N(A^kA*)``.
    """
    ctx = _context(a, f, tol, dual=True)
    if isinstance(ctx, NoExist):
        return ctx
    d, ph, ak, t = ctx.inverse, ctx.pinv_h, ctx.ak, ctx.tol
    y = d @ a @ a.H
    first = _projector_report(y @ ph, d, ak, t)
    second = _projector_report(ph @ y, ph @ d, ak @ a.H, t)
    return first, second


def outer_inverse_identity(
    a: Matrix, e: Weight, tol: Tolerance | None = None
) -> bool | NoExist:
    """Whether the star matrix ``X`` is the outer inverse of ``(A†)*``
    with range ``R(A*A^k)`` and nullspace ``N(C)``."""
    ctx = _context(a, e, tol, dual=False)
    if isinstance(ctx, NoExist):
        return ctx
    c, b, ak, t = ctx.inverse, ctx.pinv_h, ctx.ak, ctx.tol
    x = a.H @ a @ c
    return (
        agrees(x @ b @ x, x, t)
        and range_equal(x, a.H @ ak, t)
        and nullspace_equal(x, c, t)
    )


def dual_outer_inverse_identity(
    a: Matrix, f: Weight, tol: Tolerance | None = None
) -> bool | NoExist:
    """Whether the star dual matrix ``Y`` is the outer inverse of ``(A†)*``
    with range ``R(D)`` and nullspace ``N(A^kA*)``."""
    ctx = _context(a, f, tol, dual=True)
    if isinstance(ctx, NoExist):
        return ctx
    d, b, ak, t = ctx.inverse, ctx.pinv_h, ctx.ak, ctx.tol
    y = d @ a @ a.H
    return (
        agrees(y @ b @ y, y, t)
        and range_equal(y, d, t)
        and nullspace_equal(y, ak @ a.H, t)
    )
