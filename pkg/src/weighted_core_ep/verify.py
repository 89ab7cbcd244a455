"""Axiom catalog and certification of candidate inverses."""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from enum import StrEnum
from functools import lru_cache

from pydantic import BaseModel

from weighted_core_ep.exceptions import (
    ConstructionError,
    DimensionError,
    MissingWeightError,
)
from weighted_core_ep.linalg import (
    agrees,
    index,
    moore_penrose_inverse,
    rank,
    relative_residual,
)
from weighted_core_ep.matrix import Backend, Matrix, Tolerance
from weighted_core_ep.results import InverseKind, InverseResult
from weighted_core_ep.weights import Weight, weight_or_identity

logger = logging.getLogger(__name__)

__all__ = [
    "Axiom",
    "AxiomReport",
    "AxiomResult",
    "AxiomTag",
    "axiom_bundle",
    "certify",
    "check_axioms",
    "classify_inverse",
    "ensure_certified",
    "nullspace_equal",
    "range_equal",
]


class AxiomTag(StrEnum):
    """Defining equations of the inverse families.

    ``STAR*`` tags are the matrix system solved by the star weighted
    core-EP matrix, ``DUAL_STAR*`` the one solved by its dual.
    """

    P1 = "P1"
    P2 = "P2"
    P3E = "P3E"
    P4F = "P4F"
    P5 = "P5"
    P6 = "P6"
    P6K = "P6k"
    P7 = "P7"
    P8 = "P8"
    P8K = "P8k"
    P9 = "P9"
    STAR1 = "S1"
    STAR2 = "S2"
    STAR3 = "S3"
    DUAL_STAR1 = "DS1"
    DUAL_STAR2 = "DS2"
    DUAL_STAR3 = "DS3"


_EQUATIONS: dict[AxiomTag, str] = {
    AxiomTag.P1: "AXA = A",
    AxiomTag.P2: "XAX = X",
    AxiomTag.P3E: "(EAX)* = EAX",
    AxiomTag.P4F: "(FXA)* = FXA",
    AxiomTag.P5: "AX = XA",
    AxiomTag.P6: "XA^2 = A",
    AxiomTag.P6K: "XA^(k+1) = A^k",
    AxiomTag.P7: "AX^2 = X",
    AxiomTag.P8: "A^2X = A",
    AxiomTag.P8K: "A^(k+1)X = A^k",
    AxiomTag.P9: "X^2A = X",
    AxiomTag.STAR1: "X(A†)*X = X",
    AxiomTag.STAR2: "XA^k = A*A^k",
    AxiomTag.STAR3: "(A†)*X = A·core_ep(A, E)",
    AxiomTag.DUAL_STAR1: "X(A†)*X = X",
    AxiomTag.DUAL_STAR2: "A^kX = A^kA*",
    AxiomTag.DUAL_STAR3: "X(A†)* = dual_core_ep(A, F)·A",
}

_INDEXED = frozenset({AxiomTag.P6K, AxiomTag.P8K})
_NEEDS_E = frozenset({AxiomTag.P3E, AxiomTag.STAR3})
_NEEDS_F = frozenset({AxiomTag.P4F, AxiomTag.DUAL_STAR3})
_RECTANGULAR_OK = frozenset(
    {AxiomTag.P1, AxiomTag.P2, AxiomTag.P3E, AxiomTag.P4F}
)


@dataclass(frozen=True, slots=True)
class Axiom:
    """One defining equation, with ``k`` for the indexed ones."""

    tag: AxiomTag
    k: int | None = None

    def __post_init__(self) -> None:
        if (self.k is not None) != (self.tag in _INDEXED):
            raise ValueError(f"Axiom {self.tag} takes k iff it is indexed")
        if self.k is not None and self.k < 0:
            raise ValueError("k must be nonnegative")

    @property
    def label(self) -> str:
        if self.k is None:
            return str(self.tag)
        return f"{self.tag}(k={self.k})"

    @property
    def equation(self) -> str:
        return _EQUATIONS[self.tag]


class AxiomResult(BaseModel):
    """Outcome of one axiom."""

    axiom: str
    equation: str
    residual: float
    passed: bool
    tolerance_used: float


class AxiomReport(BaseModel):
    """Per-axiom residuals of a candidate inverse."""

    backend: Backend
    results: list[AxiomResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failed(self) -> list[str]:
        return [r.axiom for r in self.results if not r.passed]

    def table(self) -> str:
        width = max((len(r.axiom) for r in self.results), default=5)
        lines = [f"{'axiom':<{width}}  {'residual':>10}  status  equation"]
        for r in self.results:
            status = "ok" if r.passed else "FAIL"
            lines.append(
                f"{r.axiom:<{width}}  {r.residual:>10.3g}  {status:<6}  "
                f"{r.equation}"
            )
        return "\n".join(lines)


def _sides(
    axiom: Axiom,
    a: Matrix,
    x: Matrix,
    e: Matrix | None,
    f: Matrix | None,
    tol: Tolerance,
) -> tuple[Matrix, Matrix] | None:
    tag = axiom.tag
    if tag is AxiomTag.P1:
        return a @ x @ a, a
    if tag is AxiomTag.P2:
        return x @ a @ x, x
    if tag is AxiomTag.P3E:
        assert e is not None
        eax = e @ a @ x
        return eax.H, eax
    if tag is AxiomTag.P4F:
        assert f is not None
        fxa = f @ x @ a
        return fxa.H, fxa
    if tag is AxiomTag.P5:
        return a @ x, x @ a
    if tag is AxiomTag.P6:
        return x @ a @ a, a
    if tag is AxiomTag.P6K:
        assert axiom.k is not None
        ak = a.power(axiom.k)
        return x @ ak @ a, ak
    if tag is AxiomTag.P7:
        return a @ x @ x, x
    if tag is AxiomTag.P8:
        return a @ a @ x, a
    if tag is AxiomTag.P8K:
        assert axiom.k is not None
        ak = a.power(axiom.k)
        return a @ ak @ x, ak
    if tag is AxiomTag.P9:
        return x @ x @ a, x
    return _star_sides(tag, a, x, e, f, tol)


def _star_sides(
    tag: AxiomTag,
    a: Matrix,
    x: Matrix,
    e: Matrix | None,
    f: Matrix | None,
    tol: Tolerance,
) -> tuple[Matrix, Matrix] | None:
    pinv_h, ak = _star_terms(a, tol)
    if tag in (AxiomTag.STAR1, AxiomTag.DUAL_STAR1):
        return x @ pinv_h @ x, x
    if tag is AxiomTag.STAR2:
        return x @ ak, a.H @ ak
    if tag is AxiomTag.DUAL_STAR2:
        return ak @ x, ak @ a.H
    if tag is AxiomTag.STAR3:
        assert e is not None
        target = _star_target(a, e, tol, dual=False)
        return None if target is None else (pinv_h @ x, target)
    assert f is not None
    target = _star_target(a, f, tol, dual=True)
    return None if target is None else (x @ pinv_h, target)


@lru_cache(maxsize=128)
def _star_terms(a: Matrix, tol: Tolerance) -> tuple[Matrix, Matrix]:
    """``(A†)*`` and ``A^k``."""
    return moore_penrose_inverse(a, tol).H, a.power(index(a, tol))


@lru_cache(maxsize=128)
def _star_target(
    a: Matrix, weight: Matrix, tol: Tolerance, dual: bool
) -> Matrix | None:
    """``A C`` for the core-EP inverse ``C``, or ``D A`` for the dual ``D``."""
    # Local import: core_ep builds on this module.
    from weighted_core_ep.core_ep import core_ep, dual_core_ep

    if dual:
        d = dual_core_ep(a, Weight.validate(weight, tol, "F"), tol)
        return d.value @ a if isinstance(d, InverseResult) else None
    c = core_ep(a, Weight.validate(weight, tol, "E"), tol)
    return a @ c.value if isinstance(c, InverseResult) else None


def check_axioms(
    a: Matrix,
    x: Matrix,
    axioms: Iterable[Axiom],
    *,
    e: Weight | Matrix | None = None,
    f: Weight | Matrix | None = None,
    tol: Tolerance | None = None,
) -> AxiomReport:
    """Evaluate each axiom's defect for the candidate ``X`` of ``A``."""
    tol = tol or Tolerance.for_backend(a.backend)
    e_matrix = e.matrix if isinstance(e, Weight) else e
    f_matrix = f.matrix if isinstance(f, Weight) else f
    if x.shape != (a.cols, a.rows):
        raise DimensionError(
            f"Candidate of shape {x.shape} cannot invert a {a.shape} matrix"
        )
    results: list[AxiomResult] = []
    for axiom in axioms:
        if axiom.tag in _NEEDS_E and e_matrix is None:
            raise MissingWeightError(axiom.label, "E")
        if axiom.tag in _NEEDS_F and f_matrix is None:
            raise MissingWeightError(axiom.label, "F")
        if axiom.tag not in _RECTANGULAR_OK and not a.is_square:
            raise DimensionError(f"Axiom {axiom.label} needs a square matrix")
        sides = _sides(axiom, a, x, e_matrix, f_matrix, tol)
        if sides is None:
            residual, passed = float("inf"), False
        else:
            lhs, rhs = sides
            residual = relative_residual(lhs, rhs)
            passed = agrees(lhs, rhs, tol)
        results.append(
            AxiomResult(
                axiom=axiom.label,
                equation=axiom.equation,
                residual=residual,
                passed=passed,
                tolerance_used=tol.residual_rel,
            )
        )
    return AxiomReport(backend=a.backend, results=results)


def axiom_bundle(kind: InverseKind, k: int = 0) -> tuple[Axiom, ...]:
    """The defining axioms of ``kind``; ``k`` is the index of ``A``."""
    p = AxiomTag
    bundles: dict[InverseKind, tuple[Axiom, ...]] = {
        InverseKind.MOORE_PENROSE: (
            Axiom(p.P1),
            Axiom(p.P2),
            Axiom(p.P3E),
            Axiom(p.P4F),
        ),
        InverseKind.DRAZIN: (Axiom(p.P6K, k), Axiom(p.P2), Axiom(p.P5)),
        InverseKind.GROUP: (Axiom(p.P1), Axiom(p.P2), Axiom(p.P5)),
        InverseKind.ONE_THREE_E: (Axiom(p.P1), Axiom(p.P3E)),
        InverseKind.ONE_FOUR_F: (Axiom(p.P1), Axiom(p.P4F)),
        InverseKind.WEIGHTED_MP: (
            Axiom(p.P1),
            Axiom(p.P2),
            Axiom(p.P3E),
            Axiom(p.P4F),
        ),
        InverseKind.WEIGHTED_CORE: (Axiom(p.P6), Axiom(p.P7), Axiom(p.P3E)),
        InverseKind.WEIGHTED_DUAL_CORE: (
            Axiom(p.P8),
            Axiom(p.P9),
            Axiom(p.P4F),
        ),
        InverseKind.CORE_EP_E: (Axiom(p.P6K, k), Axiom(p.P7), Axiom(p.P3E)),
        InverseKind.DUAL_CORE_EP_F: (
            Axiom(p.P8K, k),
            Axiom(p.P9),
            Axiom(p.P4F),
        ),
        InverseKind.STAR_CORE_EP: (
            Axiom(p.STAR1),
            Axiom(p.STAR2),
            Axiom(p.STAR3),
        ),
        InverseKind.DUAL_CORE_EP_STAR: (
            Axiom(p.DUAL_STAR1),
            Axiom(p.DUAL_STAR2),
            Axiom(p.DUAL_STAR3),
        ),
    }
    return bundles[InverseKind(kind)]


_INDEXED_KINDS = frozenset(
    {InverseKind.DRAZIN, InverseKind.CORE_EP_E, InverseKind.DUAL_CORE_EP_F}
)

_RECTANGULAR_KINDS = frozenset(
    {
        InverseKind.MOORE_PENROSE,
        InverseKind.ONE_THREE_E,
        InverseKind.ONE_FOUR_F,
        InverseKind.WEIGHTED_MP,
    }
)


def certify(
    a: Matrix,
    x: Matrix,
    kind: InverseKind,
    *,
    e: Weight | None = None,
    f: Weight | None = None,
    k: int | None = None,
    tol: Tolerance | None = None,
) -> AxiomReport:
    """Check ``X`` against the full bundle of ``kind``.

    Weights the bundle needs but were not given default to the identity;
    the Moore-Penrose bundle always uses identity weights.
    """
    tol = tol or Tolerance.for_backend(a.backend)
    if k is None:
        k = index(a, tol) if kind in _INDEXED_KINDS else 0
    if kind is InverseKind.MOORE_PENROSE:
        e = f = None
    e = weight_or_identity(e, a.rows, a.backend)
    f = weight_or_identity(f, a.cols, a.backend)
    return check_axioms(a, x, axiom_bundle(kind, k), e=e, f=f, tol=tol)


def classify_inverse(
    a: Matrix,
    x: Matrix,
    *,
    e: Weight | None = None,
    f: Weight | None = None,
    tol: Tolerance | None = None,
) -> set[InverseKind]:
    """Every inverse kind whose full axiom bundle ``X`` satisfies."""
    tol = tol or Tolerance.for_backend(a.backend)
    k = index(a, tol) if a.is_square else 0
    kinds: set[InverseKind] = set()
    for kind in InverseKind:
        if not a.is_square and kind not in _RECTANGULAR_KINDS:
            continue
        report = certify(a, x, kind, e=e, f=f, k=k, tol=tol)
        if report.passed:
            kinds.add(kind)
    logger.debug("Candidate classified as %s", sorted(kinds))
    return kinds


def ensure_certified(report: AxiomReport, what: str) -> None:
    """Raise ``ConstructionError`` if a constructed inverse fails its bundle."""
    if report.passed:
        return
    logger.error("%s failed its certificate: %s", what, report.failed)
    raise ConstructionError(
        f"{what} failed axioms {', '.join(report.failed)}"
    )


def range_equal(m: Matrix, n: Matrix, tol: Tolerance | None = None) -> bool:
    """``R(M) == R(N)`` via ``rank([M | N]) == rank(M) == rank(N)``."""
    if m.rows != n.rows:
        raise DimensionError(
            f"Column spaces of {m.shape} and {n.shape} live in different spaces"
        )
    tol = tol or Tolerance.for_backend(m.backend)
    r = rank(m, tol)
    return r == rank(n, tol) == rank(Matrix.hstack(m, n), tol)


def nullspace_equal(m: Matrix, n: Matrix, tol: Tolerance | None = None) -> bool:
    """``N(M) == N(N)`` via ``rank([M ; N]) == rank(M) == rank(N)``."""
    if m.cols != n.cols:
        raise DimensionError(
            f"Nullspaces of {m.shape} and {n.shape} live in different spaces"
        )
    tol = tol or Tolerance.for_backend(m.backend)
    r = rank(m, tol)
    return r == rank(n, tol) == rank(Matrix.vstack(m, n), tol)
