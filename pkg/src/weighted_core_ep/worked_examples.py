"""Two worked examples with known inverses, recomputed as golden tests.

Example one: ``A`` of index 2 with positive definite weights ``E`` and
``F``; its core-EP and dual core-EP inverses are known. Example two: an
index-2 ``A`` with a positive definite ``E``; its Drazin inverse, a
``{1,3^E}`` inverse of ``A^2``, its core-EP inverse and the core-EP
inverse of that are known.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from pydantic import BaseModel

from weighted_core_ep.classical import drazin
from weighted_core_ep.core_ep import core_ep, core_ep_of_core_ep, dual_core_ep
from weighted_core_ep.linalg import agrees, relative_residual
from weighted_core_ep.matrix import Backend, Matrix, Tolerance
from weighted_core_ep.results import InverseKind, InverseResult, NoExist
from weighted_core_ep.scalars import GaussianRational
from weighted_core_ep.verify import certify
from weighted_core_ep.weights import Weight

logger = logging.getLogger(__name__)

__all__ = [
    "EXAMPLE_ONE",
    "EXAMPLE_TWO",
    "Comparison",
    "WorkedExample",
    "run_worked_examples",
]

Rows = list[list[str]]


@dataclass(frozen=True)
class WorkedExample:
    """Input matrices and golden outputs, as rational strings."""

    name: str
    a: Rows
    e: Rows
    f: Rows | None = None
    golden: dict[str, Rows] = field(default_factory=dict)

    def matrix(self, rows: Rows, backend: Backend) -> Matrix:
        exact = Matrix.from_rows(rows, Backend.EXACT)
        return exact if backend is Backend.EXACT else exact.to_float()


EXAMPLE_ONE = WorkedExample(
    name="example-1",
    a=[["4", "3", "0"], ["0", "0", "0"], ["-1", "4", "0"]],
    e=[["3", "1", "2"], ["1", "1", "1"], ["2", "1", "2"]],
    f=[["2", "1", "0"], ["1", "2", "1"], ["0", "1", "2"]],
    golden={
        "core_ep": [
            ["5/17", "3/34", "3/17"],
            ["0", "0", "0"],
            ["-5/68", "-3/136", "-3/68"],
        ],
        "dual_core_ep": [
            ["1/6", "1/8", "0"],
            ["1/9", "1/12", "0"],
            ["-1/18", "-1/24", "0"],
        ],
    },
)

EXAMPLE_TWO = WorkedExample(
    name="example-2",
    a=[["-1", "4", "-5"], ["1", "-4", "5"], ["1", "-2", "3"]],
    e=[["34/25", "0", "3/5"], ["0", "1", "0"], ["3/5", "0", "2"]],
    golden={
        "drazin": [
            ["0", "5/4", "-5/4"],
            ["0", "-5/4", "5/4"],
            ["0", "-3/4", "3/4"],
        ],
        "one_three_e_of_square": [
            ["0", "0", "0"],
            ["-5/236", "5/236", "3/236"],
            ["5/236", "-5/236", "-3/236"],
        ],
        "core_ep": [
            ["-25/118", "25/118", "15/118"],
            ["25/118", "-25/118", "-15/118"],
            ["15/118", "-15/118", "-9/118"],
        ],
        "core_ep_of_core_ep": [
            ["-50/59", "50/59", "30/59"],
            ["50/59", "-50/59", "-30/59"],
            ["30/59", "-30/59", "-18/59"],
        ],
    },
)


class Comparison(BaseModel):
    """One golden comparison."""

    name: str
    passed: bool
    residual: float
    detail: str = ""


def _corrupted(rows: Rows) -> Rows:
    copy = [list(row) for row in rows]
    copy[0][0] = str(GaussianRational.parse(rows[0][0]) + Fraction(1, 1000))
    return copy


def _compare(
    name: str,
    computed: Matrix | NoExist,
    golden: Matrix,
    tol: Tolerance,
) -> Comparison:
    if isinstance(computed, NoExist):
        return Comparison(
            name=name, passed=False, residual=float("inf"), detail=computed.reason
        )
    return Comparison(
        name=name,
        passed=agrees(computed, golden, tol),
        residual=relative_residual(computed, golden),
    )


def run_worked_examples(
    backend: Backend | str = Backend.EXACT,
    tol: Tolerance | None = None,
    *,
    corrupt: bool = False,
) -> list[Comparison]:
    """Recompute every known matrix of both examples.

    On the float backend the default residual tolerance is ``1e-10``.
    ``corrupt`` perturbs one golden value so the run must fail.
    """
    backend = Backend(backend)
    if tol is None:
        tol = (
            Tolerance.exact()
            if backend is Backend.EXACT
            else Tolerance.floating(residual_rel=1e-10)
        )

    def golden(example: WorkedExample, key: str, first: bool = False) -> Matrix:
        rows = example.golden[key]
        if corrupt and first:
            rows = _corrupted(rows)
        return example.matrix(rows, backend)

    one, two = EXAMPLE_ONE, EXAMPLE_TWO
    a1 = one.matrix(one.a, backend)
    e1 = Weight.validate(one.matrix(one.e, backend), tol, "E")
    assert one.f is not None
    f1 = Weight.validate(one.matrix(one.f, backend), tol, "F")
    a2 = two.matrix(two.a, backend)
    e2 = Weight.validate(two.matrix(two.e, backend), tol, "E")

    def value(result: InverseResult | NoExist) -> Matrix | NoExist:
        return result if isinstance(result, NoExist) else result.value

    comparisons = [
        _compare(
            "example-1 core-EP",
            value(core_ep(a1, e1, tol)),
            golden(one, "core_ep", first=True),
            tol,
        ),
        _compare(
            "example-1 dual core-EP",
            value(dual_core_ep(a1, f1, tol)),
            golden(one, "dual_core_ep"),
            tol,
        ),
        _compare("example-2 Drazin", drazin(a2, tol), golden(two, "drazin"), tol),
        _compare(
            "example-2 core-EP",
            value(core_ep(a2, e2, tol)),
            golden(two, "core_ep"),
            tol,
        ),
    ]

    x = golden(two, "one_three_e_of_square")
    report = certify(a2.power(2), x, InverseKind.ONE_THREE_E, e=e2, tol=tol)
    comparisons.append(
        Comparison(
            name="example-2 {1,3^E} inverse of A^2",
            passed=report.passed,
            residual=max(r.residual for r in report.results),
            detail="membership",
        )
    )

    twice = core_ep_of_core_ep(a2, e2, tol)
    comparison = _compare(
        "example-2 core-EP of core-EP",
        twice,
        golden(two, "core_ep_of_core_ep"),
        tol,
    )
    if isinstance(twice, Matrix) and agrees(twice, a2, tol):
        comparison = comparison.model_copy(
            update={"passed": False, "detail": "equals A"}
        )
    comparisons.append(comparison)

    for c in comparisons:
        logger.info("%s: %s", c.name, "ok" if c.passed else "FAIL")
    return comparisons
